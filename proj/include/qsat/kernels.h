#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

/// Inner loops over bit-packed Pauli rows. A row over n qubits is a pair of
/// word arrays (x bits, z bits) of ceil(n / 64) words each, qubit j stored at
/// bit j % 64 of word j / 64. Unused high bits must be zero.
///
/// Every kernel has a scalar reference and word-parallel variants. All variants
/// of a kernel return identical results; tests/kernels_test.cc checks this.
namespace qsat::kernels {

enum class Isa : uint8_t {
    /// One qubit at a time through the 16-entry phase table.
    scalar,
    /// 64 qubits per step with popcounts on plain uint64_t.
    words,
    /// 256 qubits per step with AVX2.
    avx2,
};

std::string_view isa_name(Isa isa);

/// Phase exponent (power of i) of the single-qubit product P_a * P_b, indexed by
/// (x_a << 3) | (z_a << 2) | (x_b << 1) | z_b. Values are -1, 0 or +1.
extern const int8_t kPhaseTable[16];

/// Replaces row a with the product (row a)(row b), ignoring signs, and returns
/// the exponent of i picked up by that product, reduced mod 4.
using RowMulFn = unsigned (*)(uint64_t *ax, uint64_t *az, const uint64_t *bx, const uint64_t *bz, size_t words);

/// Symplectic inner product of two rows: parity of sum_j (x_a z_b + x_b z_a).
/// Zero iff the two Paulis commute.
using AnticommuteFn = bool (*)(const uint64_t *ax, const uint64_t *az, const uint64_t *bx, const uint64_t *bz, size_t words);

struct RowKernels {
    Isa isa;
    RowMulFn row_mul;
    AnticommuteFn anticommutes;
};

unsigned row_mul_scalar(uint64_t *ax, uint64_t *az, const uint64_t *bx, const uint64_t *bz, size_t words);
unsigned row_mul_words(uint64_t *ax, uint64_t *az, const uint64_t *bx, const uint64_t *bz, size_t words);
bool anticommutes_scalar(const uint64_t *ax, const uint64_t *az, const uint64_t *bx, const uint64_t *bz, size_t words);
bool anticommutes_words(const uint64_t *ax, const uint64_t *az, const uint64_t *bx, const uint64_t *bz, size_t words);
#ifdef QSAT_HAVE_AVX2
unsigned row_mul_avx2(uint64_t *ax, uint64_t *az, const uint64_t *bx, const uint64_t *bz, size_t words);
bool anticommutes_avx2(const uint64_t *ax, const uint64_t *az, const uint64_t *bx, const uint64_t *bz, size_t words);
#endif

/// True if this build contains the variant and the running CPU can execute it.
bool isa_available(Isa isa);

/// Variants runnable here, scalar first.
std::span<const Isa> available_isas();

const RowKernels &kernels_for(Isa isa);

/// The best available variant, chosen once per process. The environment
/// variable QSAT_ISA (scalar|words|avx2) overrides the choice if available.
const RowKernels &active();

}  // namespace qsat::kernels
