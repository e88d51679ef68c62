#pragma once

#include <complex>
#include <vector>

#include "qsat/tableau.h"

namespace qsat {

using Amplitudes = std::vector<std::complex<double>>;

inline constexpr size_t kMaxStatevectorQubits = 10;

/// Reconstructs the state stabilized by `t` by projecting a basis probe vector
/// onto the +1 eigenspace of every generator. Amplitude index bit j is qubit j.
/// The result is normalized and its first nonzero amplitude is real positive.
///
/// Throws std::invalid_argument for more than kMaxStatevectorQubits qubits and
/// std::logic_error if every probe projects to zero.
Amplitudes to_statevector(const Tableau &t);

/// Applies a signed Pauli row of `t` to a state vector.
Amplitudes apply_pauli_row(const Tableau &t, size_t row, const Amplitudes &psi);

/// Equality up to a global phase factor, amplitude-wise within `tolerance`.
bool equal_up_to_global_phase(const Amplitudes &a, const Amplitudes &b, double tolerance = 1e-9);

}  // namespace qsat
