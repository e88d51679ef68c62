#include "qsat/statevector.h"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace qsat {

Amplitudes apply_pauli_row(const Tableau &t, size_t row, const Amplitudes &psi) {
    size_t n = t.num_qubits();
    uint64_t flip = 0;
    uint64_t zmask = 0;
    unsigned num_y = 0;
    for (size_t q = 0; q < n; q++) {
        bool xb = t.x(row, q);
        bool zb = t.z(row, q);
        flip |= uint64_t{xb} << q;
        zmask |= uint64_t{zb} << q;
        num_y += xb && zb;
    }
    // Per qubit: X|b> = |1-b>, Z|b> = (-1)^b |b>, Y|b> = i (-1)^b |1-b>.
    static const std::complex<double> kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    std::complex<double> base = kIPow[num_y % 4];
    if (t.sign(row)) {
        base = -base;
    }
    Amplitudes out(psi.size());
    for (uint64_t k = 0; k < psi.size(); k++) {
        double s = (std::popcount(k & zmask) & 1) ? -1.0 : 1.0;
        out[k ^ flip] = base * s * psi[k];
    }
    return out;
}

Amplitudes to_statevector(const Tableau &t) {
    size_t n = t.num_qubits();
    if (n > kMaxStatevectorQubits) {
        throw std::invalid_argument("to_statevector: at most " + std::to_string(kMaxStatevectorQubits) + " qubits");
    }
    size_t dim = size_t{1} << n;
    for (size_t probe = 0; probe < dim; probe++) {
        Amplitudes psi(dim, 0.0);
        psi[probe] = 1.0;
        for (size_t row = 0; row < n; row++) {
            Amplitudes g = apply_pauli_row(t, row, psi);
            for (size_t k = 0; k < dim; k++) {
                psi[k] = 0.5 * (psi[k] + g[k]);
            }
        }
        double norm2 = 0;
        for (const auto &a : psi) {
            norm2 += std::norm(a);
        }
        if (norm2 < 1e-12) {
            continue;
        }
        double inv = 1.0 / std::sqrt(norm2);
        std::complex<double> phase = 1.0;
        for (const auto &a : psi) {
            if (std::abs(a) > 1e-9) {
                phase = std::conj(a) / std::abs(a);
                break;
            }
        }
        for (auto &a : psi) {
            a *= inv * phase;
        }
        return psi;
    }
    throw std::logic_error("to_statevector: projector annihilates every probe; tableau is not a valid stabilizer state");
}

bool equal_up_to_global_phase(const Amplitudes &a, const Amplitudes &b, double tolerance) {
    if (a.size() != b.size()) {
        return false;
    }
    // Align phases on the largest amplitude of a.
    size_t best = 0;
    for (size_t k = 1; k < a.size(); k++) {
        if (std::abs(a[k]) > std::abs(a[best])) {
            best = k;
        }
    }
    if (std::abs(b[best]) < 1e-12) {
        return std::abs(a[best]) <= tolerance && std::abs(b[best]) <= tolerance;
    }
    std::complex<double> phase = a[best] / b[best];
    phase /= std::abs(phase);
    for (size_t k = 0; k < a.size(); k++) {
        if (std::abs(a[k] - phase * b[k]) > tolerance) {
            return false;
        }
    }
    return true;
}

}  // namespace qsat
