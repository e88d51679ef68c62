#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qsat/circuit.h"
#include "qsat/kernels.h"

namespace qsat {

/// One tableau row in text form: a sign and one letter per qubit, qubit 0 first.
/// Rendered as e.g. "+ZZ" or "-IX".
struct PauliLabel {
    bool negative = false;
    std::string letters;

    static PauliLabel parse(std::string_view text);
    std::string str() const;
    bool operator==(const PauliLabel &other) const = default;
};

/// Stabilizer tableau of an n-qubit stabilizer state: n generator rows, each an
/// x bit row, a z bit row and a sign bit r. Column j of both blocks is qubit j.
///
/// Rows are bit-packed, 64 qubits per word, and unused high bits stay zero so
/// that byte-wise comparison and hashing are exact. No destabilizer rows are
/// kept, so measurement is not supported; global phase is not representable.
class Tableau {
   public:
    /// Tableau of a computational basis state. bits[j] is the value of qubit j,
    /// so row j is (-1)^bits[j] Z_j.
    static Tableau from_basis_state(std::string_view bits);
    static Tableau from_basis_state(std::span<const bool> bits);

    /// Builds a tableau from generator labels. Does not validate; call validate().
    static Tableau from_labels(std::span<const std::string> labels);
    static Tableau from_labels(std::initializer_list<std::string_view> labels);

    size_t num_qubits() const {
        return n_;
    }
    size_t words_per_row() const {
        return words_;
    }

    bool x(size_t row, size_t qubit) const {
        return (xs_[row * words_ + qubit / 64] >> (qubit % 64)) & 1;
    }
    bool z(size_t row, size_t qubit) const {
        return (zs_[row * words_ + qubit / 64] >> (qubit % 64)) & 1;
    }
    bool sign(size_t row) const {
        return (signs_[row / 64] >> (row % 64)) & 1;
    }
    void set_x(size_t row, size_t qubit, bool v);
    void set_z(size_t row, size_t qubit, bool v);
    void set_sign(size_t row, bool v);

    PauliLabel row_label(size_t row) const;
    std::vector<std::string> labels() const;
    /// Row labels, one per line.
    std::string str() const;

    void apply_h(size_t q);
    void apply_s(size_t q);
    void apply_x(size_t q);
    void apply_y(size_t q);
    void apply_z(size_t q);
    void apply_cnot(size_t control, size_t target);
    void apply(const Gate &g);
    /// Applies every gate of `c` in order. Qubit counts must match.
    void apply(const Circuit &c);

    /// Row a becomes the group product (row a)(row b). Requires a != b and the
    /// two rows to commute.
    void row_multiply(size_t a, size_t b, const kernels::RowKernels &k = kernels::active());
    void swap_rows(size_t a, size_t b);

    bool rows_commute(const kernels::RowKernels &k = kernels::active()) const;
    bool rows_independent() const;
    /// Throws std::logic_error if rows are dependent or some pair anticommutes.
    void validate() const;

    /// Exact byte image of the tableau (x block, z block, signs) for use as a
    /// hash key.
    std::string key() const;

    bool operator==(const Tableau &other) const = default;

    std::span<const uint64_t> x_row(size_t row) const {
        return {xs_.data() + row * words_, words_};
    }
    std::span<const uint64_t> z_row(size_t row) const {
        return {zs_.data() + row * words_, words_};
    }

   private:
    explicit Tableau(size_t num_qubits);

    void check_qubit(size_t q) const;

    size_t n_;
    size_t words_;
    std::vector<uint64_t> xs_;
    std::vector<uint64_t> zs_;
    std::vector<uint64_t> signs_;
};

Tableau apply_gate(Tableau t, const Gate &g);

/// Reduced row echelon form of the (x | z) matrix over GF(2), reached with row
/// swaps and group products only, so signs stay correct. Two tableaux have the
/// same canonical form iff they stabilize the same state.
///
/// Throws std::logic_error if the rows turn out to be dependent.
Tableau canonicalize(Tableau t, const kernels::RowKernels &k = kernels::active());

}  // namespace qsat
