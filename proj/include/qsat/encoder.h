#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qsat/analysis.h"
#include "qsat/cnf.h"

namespace qsat {

enum class ClauseCategory : uint8_t {
    blocking,
    functional,
    input_link,
    miter_xor,
    miter_or,
};
inline constexpr size_t kNumClauseCategories = 5;
std::string_view clause_category_name(ClauseCategory c);

/// Variables of one circuit's signals, numbered signal-major, bit-minor:
/// var(s, b) = first_var + s * bits + b, with bit 0 the least significant bit
/// of the state id.
struct SignalGroup {
    /// Prefix for the group's signal names: "s" for a lone circuit, "a_s" and
    /// "b_s" in a miter.
    std::string name;
    Literal first_var = 1;
    size_t num_signals = 0;
    unsigned bits = 1;

    Literal var(size_t signal, unsigned bit) const {
        return first_var + static_cast<Literal>(signal * bits + bit);
    }
    Literal last_var() const {
        return var(num_signals - 1, bits - 1);
    }
};

/// An encoded circuit (or miter of two circuits) with the structure it came
/// from, so the formula can be decoded or re-emitted in other syntaxes.
struct Encoding {
    CnfFormula formula;
    /// One group per encoded circuit, in variable order.
    std::vector<SignalGroup> symbols;
    /// analyses[i] belongs to symbols[i].
    std::vector<AnalysisResult> analyses;
    std::array<size_t, kNumClauseCategories> clause_counts{};
    /// Miter only: d_j <-> (bit j of A's output) xor (bit j of B's output).
    std::vector<Literal> diff_vars;

    bool is_miter() const {
        return !diff_vars.empty();
    }
    size_t count(ClauseCategory c) const {
        return clause_counts[static_cast<size_t>(c)];
    }

    /// Human-readable symbol table, one line per signal.
    std::vector<std::string> symbol_comments() const;
};

/// Clauses forbidding every id in [0, 2^bits) outside `domain`. Each clause
/// negates one cube of a prefix cover of the complement, so at most
/// |domain| * bits clauses are produced and every clause has <= bits literals.
/// `domain` must be sorted and non-empty. Returned as (fixed-bit mask, value).
std::vector<std::pair<uint64_t, uint64_t>> forbidden_cubes(std::span<const StateId> domain, unsigned bits);

/// Signal variables, per-signal blocking clauses, and for every transition
/// (k -> l) of gate i the biconditional [s_i = k] <-> [s_{i+1} = l] as 2m
/// clauses of width m + 1. No auxiliary variables.
Encoding encode_circuit(const AnalysisResult &analysis);

/// Both circuits over one variable space (A first, then B, then d_0..d_{m-1}),
/// input bits tied together, XOR definitions for the d_j and the clause
/// (d_0 or ... or d_{m-1}). The analyses must share a registry.
Encoding encode_miter(const AnalysisResult &a, const AnalysisResult &b);

std::string emit_dimacs(const Encoding &e);

/// SMT-LIB 2 (QF_BV): one bit-vector constant per signal, blocking as
/// membership disjunctions, functional constraints as biconditionals between
/// equalities, and for miters an input equality plus an output disequality.
std::string emit_smt2(const Encoding &e);

/// Reads the id held by a signal under a model. value(v) gives variable v.
template <class ValueFn>
StateId decode_signal(const SignalGroup &g, size_t signal, ValueFn &&value) {
    StateId id = 0;
    for (unsigned b = 0; b < g.bits; b++) {
        if (value(g.var(signal, b))) {
            id |= StateId{1} << b;
        }
    }
    return id;
}

}  // namespace qsat
