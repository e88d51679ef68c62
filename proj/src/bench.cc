#include "qsat/bench.h"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <exception>
#include <map>
#include <stdexcept>
#include <thread>

#include "qsat/encoder.h"
#include "qsat/equivalence.h"
#include "qsat/solver.h"

namespace qsat {

std::string_view bench_series_name(BenchSeries s) {
    switch (s) {
        case BenchSeries::scaling:
            return "scaling";
        case BenchSeries::generators:
            return "generators";
        case BenchSeries::equivalence:
            return "equivalence";
    }
    return "?";
}

BenchSeries parse_bench_series(std::string_view text) {
    for (BenchSeries s : {BenchSeries::scaling, BenchSeries::generators, BenchSeries::equivalence}) {
        if (text == bench_series_name(s)) {
            return s;
        }
    }
    throw std::invalid_argument(
        "unknown bench series '" + std::string(text) + "' (expected scaling, generators or equivalence)");
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

BenchRecord record_for(std::string series, uint32_t n, size_t gates, uint64_t seed, unsigned rep) {
    BenchRecord r;
    r.series = std::move(series);
    r.n = n;
    r.num_gates = gates;
    r.seed = seed;
    r.rep = rep;
    return r;
}

BenchRecord run_encoding(const BenchConfig &cfg, std::string_view series, uint32_t n, size_t gates, uint64_t seed,
                         unsigned rep, KeyMode mode) {
    Circuit c = random_clifford_circuit(n, gates, seed);
    BenchRecord r = record_for(std::string(series), n, gates, seed, rep);
    auto inputs = all_zero_input(n);
    auto t0 = Clock::now();
    AnalysisResult analysis = structural_analysis(c, inputs, mode);
    Encoding e = encode_circuit(analysis);
    if (cfg.series == BenchSeries::scaling) {
        auto solver = make_solver(cfg.solver);
        solver->add_formula(e.formula);
    }
    r.t_prep_ms = ms_since(t0);
    r.num_vars = e.formula.num_vars();
    r.num_clauses = static_cast<double>(e.formula.num_clauses());
    r.num_states = static_cast<double>(analysis.num_states());
    return r;
}

void fill_check(BenchRecord &r, const EquivalenceResult &res) {
    r.t_prep_ms = res.stats.t_prep_ms;
    r.t_solve_ms = res.stats.t_solve_ms;
    r.num_vars = res.stats.num_vars;
    r.num_clauses = static_cast<double>(res.stats.num_clauses);
    r.num_states = static_cast<double>(res.stats.num_states);
    r.verdict = std::string(verdict_name(res.verdict));
    if (res.stats.conflicts.has_value()) {
        r.conflicts = static_cast<double>(*res.stats.conflicts);
    }
}

std::vector<BenchRecord> run_point(const BenchConfig &cfg, size_t point_index, uint32_t n, size_t gates) {
    std::vector<BenchRecord> rows;
    std::vector<BenchRecord> same_rows;
    for (unsigned rep = 0; rep < cfg.reps; rep++) {
        uint64_t seed = derive_seed(cfg.seed, point_index * cfg.reps + rep);
        switch (cfg.series) {
            case BenchSeries::scaling:
                rows.push_back(run_encoding(cfg, "scaling", n, gates, seed, rep, KeyMode::canonical));
                break;
            case BenchSeries::generators:
                rows.push_back(run_encoding(
                    cfg, "generators-" + std::string(key_mode_name(cfg.mode)), n, gates, seed, rep, cfg.mode));
                break;
            case BenchSeries::equivalence: {
                Circuit a = random_clifford_circuit(n, gates, seed);
                Circuit b = gates > 0 ? remove_random_gate(a, derive_seed(seed, 1)) : a;
                size_t v = cfg.num_inputs;
                if (n < 63) {
                    v = std::min<uint64_t>(v, uint64_t{1} << n);
                }
                auto inputs = generate_inputs(n, v, InputKind::random_basis, derive_seed(seed, 2));
                for (int which = 0; which < 2; which++) {
                    auto solver = make_solver(cfg.solver);
                    EquivalenceResult res = check_equivalence(a, which == 0 ? a : b, inputs, *solver);
                    BenchRecord r = record_for(which == 0 ? "equivalence-same" : "equivalence-removed", n, gates, seed, rep);
                    fill_check(r, res);
                    (which == 0 ? same_rows : rows).push_back(std::move(r));
                }
                break;
            }
        }
    }
    std::vector<BenchRecord> out;
    for (auto *group : {&same_rows, &rows}) {
        if (group->empty()) {
            continue;
        }
        out.insert(out.end(), group->begin(), group->end());
        BenchRecord mean = mean_record(*group);
        mean.seed = cfg.seed;
        out.push_back(std::move(mean));
    }
    return out;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

}  // namespace

BenchRecord mean_record(std::span<const BenchRecord> rows) {
    if (rows.empty()) {
        throw std::invalid_argument("mean_record: no rows");
    }
    BenchRecord m;
    m.series = rows.front().series;
    m.n = rows.front().n;
    m.num_gates = rows.front().num_gates;
    m.seed = rows.front().seed;
    double count = static_cast<double>(rows.size());
    double solve = 0;
    double confl = 0;
    bool have_solve = true;
    bool have_confl = true;
    std::map<std::string, size_t> verdicts;
    for (const auto &r : rows) {
        m.t_prep_ms += r.t_prep_ms;
        m.num_vars += r.num_vars;
        m.num_clauses += r.num_clauses;
        m.num_states += r.num_states;
        have_solve = have_solve && r.t_solve_ms.has_value();
        have_confl = have_confl && r.conflicts.has_value();
        solve += r.t_solve_ms.value_or(0);
        confl += r.conflicts.value_or(0);
        if (r.verdict.has_value()) {
            verdicts[*r.verdict]++;
        }
    }
    m.t_prep_ms /= count;
    m.num_vars /= count;
    m.num_clauses /= count;
    m.num_states /= count;
    if (have_solve) {
        m.t_solve_ms = solve / count;
    }
    if (have_confl) {
        m.conflicts = confl / count;
    }
    if (verdicts.size() == 1 && verdicts.begin()->second == rows.size()) {
        m.verdict = verdicts.begin()->first;
    } else if (!verdicts.empty()) {
        std::string v;
        for (const auto &[name, k] : verdicts) {
            if (!v.empty()) {
                v += ';';
            }
            v += name + "=" + format_double(static_cast<double>(k) / count);
        }
        m.verdict = v;
    }
    return m;
}

std::vector<BenchRecord> run_bench(const BenchConfig &cfg) {
    if (cfg.qubits.empty() || cfg.gates.empty()) {
        throw std::invalid_argument("bench needs at least one qubit count and one gate count");
    }
    if (cfg.reps == 0) {
        throw std::invalid_argument("bench needs at least one repetition");
    }
    for (uint32_t n : cfg.qubits) {
        if (n == 0) {
            throw std::invalid_argument("bench qubit counts must be positive");
        }
    }
    struct Point {
        uint32_t n;
        size_t gates;
    };
    std::vector<Point> points;
    for (uint32_t n : cfg.qubits) {
        for (size_t g : cfg.gates) {
            points.push_back({n, g});
        }
    }
    std::vector<std::vector<BenchRecord>> results(points.size());
    std::vector<std::exception_ptr> errors(points.size());
    std::atomic<size_t> next{0};
    auto work = [&] {
        for (size_t i = next++; i < points.size(); i = next++) {
            try {
                results[i] = run_point(cfg, i, points[i].n, points[i].gates);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    unsigned workers = std::max(1u, std::min<unsigned>(cfg.workers, static_cast<unsigned>(points.size())));
    if (workers == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; w++) {
            pool.emplace_back(work);
        }
    }
    std::vector<BenchRecord> out;
    for (size_t i = 0; i < points.size(); i++) {
        if (errors[i]) {
            std::rethrow_exception(errors[i]);
        }
        out.insert(out.end(), results[i].begin(), results[i].end());
    }
    return out;
}

std::string_view csv_header() {
    return "series,n,num_gates,seed,rep,t_prep_ms,t_solve_ms,num_vars,num_clauses,num_states,verdict,conflicts";
}

std::string csv_row(const BenchRecord &r) {
    std::string s;
    s += r.series + ",";
    s += std::to_string(r.n) + ",";
    s += std::to_string(r.num_gates) + ",";
    s += std::to_string(r.seed) + ",";
    s += (r.rep.has_value() ? std::to_string(*r.rep) : std::string("mean")) + ",";
    s += format_double(r.t_prep_ms) + ",";
    s += (r.t_solve_ms.has_value() ? format_double(*r.t_solve_ms) : std::string()) + ",";
    s += format_double(r.num_vars) + ",";
    s += format_double(r.num_clauses) + ",";
    s += format_double(r.num_states) + ",";
    s += r.verdict.value_or("") + ",";
    s += r.conflicts.has_value() ? format_double(*r.conflicts) : std::string();
    return s;
}

void write_csv(std::ostream &out, std::span<const BenchRecord> records) {
    out << csv_header() << "\n";
    for (const auto &r : records) {
        out << csv_row(r) << "\n";
    }
}

}  // namespace qsat
