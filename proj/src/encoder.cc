#include "qsat/encoder.h"

#include <algorithm>
#include <stdexcept>

namespace qsat {

std::string_view clause_category_name(ClauseCategory c) {
    switch (c) {
        case ClauseCategory::blocking:
            return "blocking";
        case ClauseCategory::functional:
            return "functional";
        case ClauseCategory::input_link:
            return "input_link";
        case ClauseCategory::miter_xor:
            return "miter_xor";
        case ClauseCategory::miter_or:
            return "miter_or";
    }
    return "?";
}

std::vector<std::string> Encoding::symbol_comments() const {
    std::vector<std::string> out;
    for (const SignalGroup &g : symbols) {
        out.push_back(
            "group " + g.name + ": " + std::to_string(g.num_signals) + " signals x " + std::to_string(g.bits) +
            " bits, var(signal, bit) = " + std::to_string(g.first_var) + " + signal*" + std::to_string(g.bits) +
            " + bit, bit 0 = LSB of state id");
        for (size_t s = 0; s < g.num_signals; s++) {
            out.push_back(
                g.name + std::to_string(s) + " -> vars " + std::to_string(g.var(s, 0)) + ".." +
                std::to_string(g.var(s, g.bits - 1)));
        }
    }
    if (is_miter()) {
        out.push_back(
            "diff vars d_0..d_" + std::to_string(diff_vars.size() - 1) + " -> vars " +
            std::to_string(diff_vars.front()) + ".." + std::to_string(diff_vars.back()));
    }
    return out;
}

namespace {

void cover_complement(
    std::span<const StateId> ids, int bit, uint64_t mask, uint64_t value,
    std::vector<std::pair<uint64_t, uint64_t>> &out) {
    if (ids.empty()) {
        out.emplace_back(mask, value);
        return;
    }
    if (bit < 0) {
        return;
    }
    uint64_t b = uint64_t{1} << bit;
    auto split = std::partition_point(ids.begin(), ids.end(), [&](StateId id) {
        return (id & b) == 0;
    });
    size_t k = static_cast<size_t>(split - ids.begin());
    cover_complement(ids.subspan(0, k), bit - 1, mask | b, value, out);
    cover_complement(ids.subspan(k), bit - 1, mask | b, value | b, out);
}

class Builder {
   public:
    explicit Builder(Encoding &e) : e_(e) {
    }

    void add(ClauseCategory category, std::span<const Literal> clause) {
        e_.formula.add_clause(clause);
        e_.clause_counts[static_cast<size_t>(category)]++;
    }

    void blocking(const SignalGroup &g, const AnalysisResult &a) {
        for (size_t s = 0; s < g.num_signals; s++) {
            for (auto [mask, value] : forbidden_cubes(a.domains[s], g.bits)) {
                clause_.clear();
                for (unsigned b = 0; b < g.bits; b++) {
                    if ((mask >> b) & 1) {
                        Literal v = g.var(s, b);
                        clause_.push_back(((value >> b) & 1) ? -v : v);
                    }
                }
                add(ClauseCategory::blocking, clause_);
            }
        }
    }

    void functional(const SignalGroup &g, const AnalysisResult &a) {
        for (size_t i = 0; i < a.transitions.size(); i++) {
            for (const Transition &t : a.transitions[i]) {
                implication(g, i, t.from, i + 1, t.to);
                implication(g, i + 1, t.to, i, t.from);
            }
        }
    }

   private:
    // [s_from = k] -> [s_to = l], one clause per consequent bit.
    void implication(const SignalGroup &g, size_t from_signal, StateId k, size_t to_signal, StateId l) {
        for (unsigned out_bit = 0; out_bit < g.bits; out_bit++) {
            clause_.clear();
            for (unsigned b = 0; b < g.bits; b++) {
                Literal v = g.var(from_signal, b);
                clause_.push_back(((k >> b) & 1) ? -v : v);
            }
            Literal w = g.var(to_signal, out_bit);
            clause_.push_back(((l >> out_bit) & 1) ? w : -w);
            add(ClauseCategory::functional, clause_);
        }
    }

    Encoding &e_;
    std::vector<Literal> clause_;
};

SignalGroup make_group(std::string name, Literal first_var, const AnalysisResult &a) {
    if (a.bits_per_signal == 0 || a.bits_per_signal > 31) {
        throw std::invalid_argument("bits per signal must be in 1..31");
    }
    if ((uint64_t{1} << a.bits_per_signal) < a.num_states()) {
        throw std::invalid_argument("bits per signal too small for the registry");
    }
    if (a.domains.size() != a.transitions.size() + 1) {
        throw std::invalid_argument("analysis has inconsistent signal and gate counts");
    }
    return SignalGroup{std::move(name), first_var, a.num_signals(), a.bits_per_signal};
}

}  // namespace

std::vector<std::pair<uint64_t, uint64_t>> forbidden_cubes(std::span<const StateId> domain, unsigned bits) {
    if (domain.empty()) {
        throw std::invalid_argument("forbidden_cubes: empty domain");
    }
    if (!std::is_sorted(domain.begin(), domain.end())) {
        throw std::invalid_argument("forbidden_cubes: domain must be sorted");
    }
    if (bits < 64 && (uint64_t{domain.back()} >> bits) != 0) {
        throw std::invalid_argument("forbidden_cubes: id does not fit in the signal width");
    }
    std::vector<std::pair<uint64_t, uint64_t>> out;
    cover_complement(domain, static_cast<int>(bits) - 1, 0, 0, out);
    return out;
}

Encoding encode_circuit(const AnalysisResult &analysis) {
    Encoding e;
    SignalGroup g = make_group("s", 1, analysis);
    e.formula.reserve_vars(static_cast<uint32_t>(g.last_var()));
    Builder b(e);
    b.blocking(g, analysis);
    b.functional(g, analysis);
    e.symbols.push_back(std::move(g));
    e.analyses.push_back(analysis);
    return e;
}

Encoding encode_miter(const AnalysisResult &a, const AnalysisResult &b) {
    if (a.registry != b.registry) {
        throw std::invalid_argument("encode_miter: analyses must share one state registry");
    }
    if (a.bits_per_signal != b.bits_per_signal) {
        throw std::invalid_argument("encode_miter: analyses disagree on bits per signal");
    }
    if (a.domains.front() != b.domains.front()) {
        throw std::invalid_argument("encode_miter: analyses start from different inputs");
    }
    Encoding e;
    SignalGroup ga = make_group("a_s", 1, a);
    SignalGroup gb = make_group("b_s", ga.last_var() + 1, b);
    unsigned m = ga.bits;
    for (unsigned j = 0; j < m; j++) {
        e.diff_vars.push_back(gb.last_var() + 1 + static_cast<Literal>(j));
    }
    e.formula.reserve_vars(static_cast<uint32_t>(e.diff_vars.back()));

    Builder builder(e);
    builder.blocking(ga, a);
    builder.functional(ga, a);
    builder.blocking(gb, b);
    builder.functional(gb, b);

    for (unsigned j = 0; j < m; j++) {
        Literal x = ga.var(0, j), y = gb.var(0, j);
        builder.add(ClauseCategory::input_link, std::array{-x, y});
        builder.add(ClauseCategory::input_link, std::array{x, -y});
    }
    size_t out_a = ga.num_signals - 1, out_b = gb.num_signals - 1;
    for (unsigned j = 0; j < m; j++) {
        Literal d = e.diff_vars[j], x = ga.var(out_a, j), y = gb.var(out_b, j);
        builder.add(ClauseCategory::miter_xor, std::array{-d, x, y});
        builder.add(ClauseCategory::miter_xor, std::array{-d, -x, -y});
        builder.add(ClauseCategory::miter_xor, std::array{d, -x, y});
        builder.add(ClauseCategory::miter_xor, std::array{d, x, -y});
    }
    builder.add(ClauseCategory::miter_or, e.diff_vars);

    e.symbols.push_back(std::move(ga));
    e.symbols.push_back(std::move(gb));
    e.analyses.push_back(a);
    e.analyses.push_back(b);
    return e;
}

std::string emit_dimacs(const Encoding &e) {
    auto comments = e.symbol_comments();
    std::string counts = "clauses by category:";
    for (size_t c = 0; c < kNumClauseCategories; c++) {
        counts += " " + std::string(clause_category_name(static_cast<ClauseCategory>(c))) + "=" +
                  std::to_string(e.clause_counts[c]);
    }
    comments.insert(comments.begin(), counts);
    return emit_dimacs(e.formula, comments);
}

}  // namespace qsat
