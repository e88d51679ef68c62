#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qsat {

/// DIMACS-style literal: +v or -v for variable v >= 1.
using Literal = int32_t;

/// Clause list in flat storage. Variables are numbered from 1.
class CnfFormula {
   public:
    uint32_t num_vars() const {
        return num_vars_;
    }
    size_t num_clauses() const {
        return starts_.size() - 1;
    }
    size_t num_literals() const {
        return lits_.size();
    }

    /// Grows the variable count to at least `n`.
    void reserve_vars(uint32_t n) {
        num_vars_ = std::max(num_vars_, n);
    }

    /// Appends a clause. Throws std::invalid_argument for an empty clause or a
    /// zero literal; grows num_vars to cover every literal.
    void add_clause(std::span<const Literal> clause);
    void add_clause(std::initializer_list<Literal> clause) {
        add_clause(std::span<const Literal>(clause.begin(), clause.size()));
    }

    std::span<const Literal> clause(size_t i) const {
        return {lits_.data() + starts_[i], starts_[i + 1] - starts_[i]};
    }

    /// True if every clause has a true literal. assignment[v] is variable v's
    /// value; index 0 is unused.
    bool satisfied_by(const std::vector<bool> &assignment) const;

    /// Throws std::logic_error if a clause holds both v and -v or a literal
    /// exceeds num_vars.
    void validate() const;

   private:
    uint32_t num_vars_ = 0;
    std::vector<Literal> lits_;
    std::vector<size_t> starts_{0};
};

/// `p cnf` header, then one zero-terminated clause per line. Each comment line
/// is emitted as `c <text>` before the header.
std::string emit_dimacs(const CnfFormula &f, std::span<const std::string> comments = {});

/// Reads DIMACS CNF. Comment lines and a trailing `%` line are skipped.
/// Throws std::invalid_argument on malformed input or a header mismatch.
CnfFormula parse_dimacs(std::string_view text);

}  // namespace qsat
