#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qsat/cnf.h"

namespace qsat {

enum class SolveResult { sat, unsat };

/// Clause sink plus decision procedure. model_value is defined after solve()
/// returned sat and until the next add_clause or solve. Instances are not
/// thread-safe; use one per check.
class SolverInterface {
   public:
    virtual ~SolverInterface() = default;

    virtual void add_clause(std::span<const Literal> clause) = 0;
    virtual SolveResult solve() = 0;
    virtual bool model_value(Literal var) const = 0;
    virtual uint32_t num_vars() const = 0;
    /// Conflicts seen by the last solve(), if the backend reports them.
    virtual std::optional<uint64_t> conflicts() const {
        return std::nullopt;
    }
    virtual std::string name() const = 0;

    void add_formula(const CnfFormula &f);
};

/// Conflict-driven clause learning: two watched literals, first-UIP learning
/// with local minimization, VSIDS, phase saving and Luby restarts. Clauses may
/// be added between solve() calls, which makes model enumeration cheap.
class CdclSolver final : public SolverInterface {
   public:
    CdclSolver();
    ~CdclSolver() override;
    CdclSolver(CdclSolver &&) noexcept;
    CdclSolver &operator=(CdclSolver &&) noexcept;

    void add_clause(std::span<const Literal> clause) override;
    void add_clause(std::initializer_list<Literal> clause) {
        add_clause(std::span<const Literal>(clause.begin(), clause.size()));
    }
    SolveResult solve() override;
    bool model_value(Literal var) const override;
    uint32_t num_vars() const override;
    std::optional<uint64_t> conflicts() const override;
    std::string name() const override {
        return "cdcl";
    }

    uint64_t decisions() const;
    uint64_t propagations() const;

   private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// Runs a SAT-competition style solver executable. The formula is written to a
/// temporary DIMACS file passed as the last argument; the solver's stdout must
/// contain `s SATISFIABLE` or `s UNSATISFIABLE` and, when satisfiable, `v`
/// lines with the model. Exit statuses 10/20 are accepted alongside 0.
class ExternalSolver final : public SolverInterface {
   public:
    /// `command` is a shell command prefix, e.g. "kissat -q".
    explicit ExternalSolver(std::string command);

    void add_clause(std::span<const Literal> clause) override;
    void add_clause(std::initializer_list<Literal> clause) {
        add_clause(std::span<const Literal>(clause.begin(), clause.size()));
    }
    SolveResult solve() override;
    bool model_value(Literal var) const override;
    uint32_t num_vars() const override {
        return formula_.num_vars();
    }
    std::string name() const override {
        return "external:" + command_;
    }

   private:
    std::string command_;
    CnfFormula formula_;
    std::vector<bool> model_;
    bool have_model_ = false;
};

/// Result of parsing solver output in the SAT-competition format.
struct SolverOutput {
    SolveResult result;
    /// model[v] for v in 1..num_vars; unmentioned variables default to false.
    std::vector<bool> model;
};

/// Throws std::runtime_error if no `s` line is present or the status is UNKNOWN.
SolverOutput parse_solver_output(std::string_view text, uint32_t num_vars);

/// Formats a result the way SAT-competition solvers print it.
std::string format_solver_output(SolveResult result, const SolverInterface &solver);

/// "internal"/"cdcl" gives a CdclSolver; "external:<command>" an ExternalSolver.
std::unique_ptr<SolverInterface> make_solver(std::string_view spec);

}  // namespace qsat
