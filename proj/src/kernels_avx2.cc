// Compiled with -mavx2 -mpopcnt; only called after a runtime CPU check.
#include <immintrin.h>

#include <bit>

#include "qsat/kernels.h"

namespace qsat::kernels {

namespace {

inline unsigned popcount256(__m256i v) {
    return static_cast<unsigned>(
        _mm_popcnt_u64(static_cast<uint64_t>(_mm256_extract_epi64(v, 0))) +
        _mm_popcnt_u64(static_cast<uint64_t>(_mm256_extract_epi64(v, 1))) +
        _mm_popcnt_u64(static_cast<uint64_t>(_mm256_extract_epi64(v, 2))) +
        _mm_popcnt_u64(static_cast<uint64_t>(_mm256_extract_epi64(v, 3))));
}

inline __m256i load(const uint64_t *p) {
    return _mm256_loadu_si256(reinterpret_cast<const __m256i *>(p));
}

inline void store(uint64_t *p, __m256i v) {
    _mm256_storeu_si256(reinterpret_cast<__m256i *>(p), v);
}

}  // namespace

unsigned row_mul_avx2(uint64_t *ax, uint64_t *az, const uint64_t *bx, const uint64_t *bz, size_t words) {
    unsigned plus = 0;
    unsigned minus = 0;
    size_t w = 0;
    for (; w + 4 <= words; w += 4) {
        __m256i x1 = load(ax + w);
        __m256i z1 = load(az + w);
        __m256i x2 = load(bx + w);
        __m256i z2 = load(bz + w);
        // andnot(a, b) = ~a & b
        __m256i x1_only = _mm256_andnot_si256(z1, x1);  // X in a
        __m256i y1 = _mm256_and_si256(x1, z1);          // Y in a
        __m256i z1_only = _mm256_andnot_si256(x1, z1);  // Z in a
        __m256i x2_only = _mm256_andnot_si256(z2, x2);
        __m256i y2 = _mm256_and_si256(x2, z2);
        __m256i z2_only = _mm256_andnot_si256(x2, z2);
        __m256i p = _mm256_or_si256(
            _mm256_or_si256(_mm256_and_si256(x1_only, y2), _mm256_and_si256(y1, z2_only)),
            _mm256_and_si256(z1_only, x2_only));
        __m256i m = _mm256_or_si256(
            _mm256_or_si256(_mm256_and_si256(x1_only, z2_only), _mm256_and_si256(y1, x2_only)),
            _mm256_and_si256(z1_only, y2));
        plus += popcount256(p);
        minus += popcount256(m);
        store(ax + w, _mm256_xor_si256(x1, x2));
        store(az + w, _mm256_xor_si256(z1, z2));
    }
    unsigned tail = 0;
    if (w < words) {
        tail = row_mul_words(ax + w, az + w, bx + w, bz + w, words - w);
    }
    return (plus - minus + tail) & 3;
}

bool anticommutes_avx2(const uint64_t *ax, const uint64_t *az, const uint64_t *bx, const uint64_t *bz, size_t words) {
    __m256i acc = _mm256_setzero_si256();
    size_t w = 0;
    for (; w + 4 <= words; w += 4) {
        __m256i t = _mm256_xor_si256(
            _mm256_and_si256(load(ax + w), load(bz + w)), _mm256_and_si256(load(bx + w), load(az + w)));
        acc = _mm256_xor_si256(acc, t);
    }
    unsigned parity = popcount256(acc) & 1;
    if (w < words) {
        parity ^= anticommutes_words(ax + w, az + w, bx + w, bz + w, words - w) ? 1 : 0;
    }
    return parity != 0;
}

}  // namespace qsat::kernels
