#include "qsat/equivalence.h"

#include <chrono>
#include <cmath>
#include <random>
#include <stdexcept>
#include <unordered_set>

namespace qsat {

std::string_view input_kind_name(InputKind kind) {
    switch (kind) {
        case InputKind::all_zero:
            return "all-zero";
        case InputKind::random_basis:
            return "random-basis";
        case InputKind::random_stabilizer:
            return "random-stabilizer";
    }
    return "?";
}

InputKind parse_input_kind(std::string_view text) {
    std::string t(text);
    for (char &c : t) {
        if (c == '_') {
            c = '-';
        }
    }
    for (InputKind k : {InputKind::all_zero, InputKind::random_basis, InputKind::random_stabilizer}) {
        if (t == input_kind_name(k)) {
            return k;
        }
    }
    throw std::invalid_argument(
        "unknown input kind '" + std::string(text) + "' (expected all-zero, random-basis or random-stabilizer)");
}

std::string_view verdict_name(Verdict v) {
    return v == Verdict::equivalent ? "equivalent" : "not_equivalent";
}

uint64_t derive_seed(uint64_t seed, uint64_t stream) {
    uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::vector<Tableau> generate_inputs(uint32_t num_qubits, size_t count, InputKind kind, uint64_t seed) {
    if (num_qubits == 0) {
        throw std::invalid_argument("generate_inputs: need at least one qubit");
    }
    if (count == 0) {
        throw std::invalid_argument("generate_inputs: need at least one input");
    }
    if (kind == InputKind::all_zero) {
        if (count != 1) {
            throw std::invalid_argument("all-zero inputs supply exactly one state, " + std::to_string(count) + " requested");
        }
        return all_zero_input(num_qubits);
    }
    if (kind == InputKind::random_basis && num_qubits < 63 && (uint64_t{1} << num_qubits) < count) {
        throw std::invalid_argument(
            "only " + std::to_string(uint64_t{1} << num_qubits) + " basis states exist, " + std::to_string(count) +
            " requested");
    }

    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(0.5);
    size_t prefix_len = 8 * size_t{num_qubits} + 16;
    size_t max_attempts = 100 * count + 100;
    std::vector<Tableau> out;
    std::unordered_set<std::string> seen;
    for (size_t attempt = 0; attempt < max_attempts && out.size() < count; attempt++) {
        Tableau t = [&] {
            if (kind == InputKind::random_basis) {
                std::string bits(num_qubits, '0');
                for (char &c : bits) {
                    c = coin(rng) ? '1' : '0';
                }
                return Tableau::from_basis_state(bits);
            }
            Tableau s = Tableau::from_basis_state(std::string(num_qubits, '0'));
            s.apply(random_clifford_circuit(num_qubits, prefix_len, rng()));
            return s;
        }();
        if (seen.insert(canonicalize(t).key()).second) {
            out.push_back(std::move(t));
        }
    }
    if (out.size() < count) {
        throw std::invalid_argument(
            "could only draw " + std::to_string(out.size()) + " distinct " + std::string(input_kind_name(kind)) +
            " inputs of " + std::to_string(count) + " requested");
    }
    return out;
}

MiterEncoding build_miter(const Circuit &a, const Circuit &b, std::span<const Tableau> inputs, KeyMode mode) {
    if (mode != KeyMode::canonical) {
        throw std::invalid_argument(
            "miters require canonical state keys; raw keys give one state several ids and make every miter satisfiable");
    }
    if (a.num_qubits != b.num_qubits) {
        throw std::invalid_argument(
            "qubit-count mismatch: " + std::to_string(a.num_qubits) + " vs " + std::to_string(b.num_qubits));
    }
    auto [ra, rb] = joint_analysis(a, b, inputs, mode);
    return MiterEncoding{a, b, encode_miter(ra, rb)};
}

Counterexample decode_counterexample(const SolverInterface &solver, const MiterEncoding &miter) {
    auto value = [&](Literal v) {
        return solver.model_value(v);
    };
    const SignalGroup &ga = miter.group_a();
    const SignalGroup &gb = miter.group_b();
    const StateRegistry &reg = miter.registry();
    Counterexample cx{
        decode_signal(ga, 0, value),
        Tableau::from_basis_state("0"),
        decode_signal(ga, ga.num_signals - 1, value),
        decode_signal(gb, gb.num_signals - 1, value),
    };
    StateId input_b = decode_signal(gb, 0, value);
    if (input_b != cx.input_id) {
        throw std::logic_error("miter model gives the two circuits different inputs");
    }
    if (cx.input_id >= miter.encoding.analyses[0].num_inputs) {
        throw std::logic_error("miter model input id " + std::to_string(cx.input_id) + " is not an input state");
    }
    if (cx.output_id_a >= reg.size() || cx.output_id_b >= reg.size()) {
        throw std::logic_error("miter model output id outside the registry");
    }
    if (cx.output_id_a == cx.output_id_b) {
        throw std::logic_error("miter model has equal outputs");
    }
    cx.input_tableau = reg.state(cx.input_id);

    Tableau out_a = cx.input_tableau;
    out_a.apply(miter.a);
    Tableau out_b = cx.input_tableau;
    out_b.apply(miter.b);
    out_a = canonicalize(std::move(out_a));
    out_b = canonicalize(std::move(out_b));
    if (out_a != reg.state(cx.output_id_a) || out_b != reg.state(cx.output_id_b)) {
        throw std::logic_error("counterexample replay does not reproduce the decoded output states");
    }
    if (out_a == out_b) {
        throw std::logic_error("counterexample replay gives equal output states");
    }
    return cx;
}

namespace {

double ms_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

EquivalenceResult check_equivalence(
    const Circuit &a, const Circuit &b, std::span<const Tableau> inputs, SolverInterface &solver) {
    auto t0 = std::chrono::steady_clock::now();
    MiterEncoding miter = build_miter(a, b, inputs);
    solver.add_formula(miter.encoding.formula);
    EquivalenceResult result{Verdict::equivalent, std::nullopt, {}};
    result.stats.t_prep_ms = ms_since(t0);
    result.stats.num_vars = miter.encoding.formula.num_vars();
    result.stats.num_clauses = miter.encoding.formula.num_clauses();
    result.stats.num_states = miter.registry().size();
    miter.encoding.formula = CnfFormula{};

    auto t1 = std::chrono::steady_clock::now();
    SolveResult sr = solver.solve();
    if (sr == SolveResult::sat) {
        result.verdict = Verdict::not_equivalent;
        result.counterexample = decode_counterexample(solver, miter);
    } else {
        // The transition tables must agree on every input, independently of the solver.
        const auto &ra = miter.encoding.analyses[0];
        const auto &rb = miter.encoding.analyses[1];
        for (StateId in : ra.domains.front()) {
            if (ra.final_state(in) != rb.final_state(in)) {
                throw std::logic_error("solver reported UNSAT but input " + std::to_string(in) + " distinguishes the circuits");
            }
        }
    }
    result.stats.t_solve_ms = ms_since(t1);
    result.stats.conflicts = solver.conflicts();
    return result;
}

EquivalenceResult check_equivalence(const Circuit &a, const Circuit &b, const CheckOptions &options) {
    if (a.num_qubits != b.num_qubits) {
        throw std::invalid_argument(
            "qubit-count mismatch: " + std::to_string(a.num_qubits) + " vs " + std::to_string(b.num_qubits));
    }
    auto t0 = std::chrono::steady_clock::now();
    auto inputs = generate_inputs(a.num_qubits, options.num_inputs, options.input_kind, options.seed);
    double t_inputs = ms_since(t0);
    auto solver = make_solver(options.solver);
    EquivalenceResult result = check_equivalence(a, b, inputs, *solver);
    result.stats.t_prep_ms += t_inputs;
    return result;
}

}  // namespace qsat
