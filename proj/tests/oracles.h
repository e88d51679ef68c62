#pragma once

// Independent reference implementations used only by tests. Nothing here calls
// into the tableau, encoder or solver code.

#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "qsat/circuit.h"
#include "qsat/cnf.h"

namespace qsat::oracle {

using Complex = std::complex<double>;
using Dense = std::vector<Complex>;

/// Dense simulation of a basis input. Amplitude index bit j is qubit j.
Dense dense_basis_state(uint32_t n, uint64_t basis_index);
void dense_apply(Dense &psi, uint32_t n, const Gate &g);
Dense dense_run(const Circuit &c, uint64_t basis_index);
bool dense_equal_up_to_phase(const Dense &a, const Dense &b, double tol);

/// Matrix of a Pauli string (letters qubit 0 first), 2^n x 2^n, row-major,
/// with the same index convention.
std::vector<Complex> pauli_matrix(const std::string &letters, bool negative);
std::vector<Complex> matmul(const std::vector<Complex> &a, const std::vector<Complex> &b, size_t dim);

/// Every satisfying assignment by exhaustive backtracking, each clause checked
/// once its highest variable is assigned. model[v] for v in 1..num_vars.
std::vector<std::vector<bool>> enumerate_models(const CnfFormula &f, size_t limit = 1u << 20);

/// Evaluates the QF_BV subset emitted by the SMT-LIB writer: declare-const of
/// bit-vectors, assert with and/or/not/=/distinct over constants and #b
/// literals, check-sat. Decides satisfiability by backtracking over the
/// constants in declaration order.
struct SmtResult {
    bool sat = false;
    std::map<std::string, unsigned> widths;
    size_t num_asserts = 0;
};
SmtResult smt2_decide(const std::string &text);

}  // namespace qsat::oracle
