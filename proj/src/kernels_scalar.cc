#include <bit>

#include "qsat/kernels.h"

namespace qsat::kernels {

// Row-major over (x_a, z_a, x_b, z_b); I=(0,0), X=(1,0), Z=(0,1), Y=(1,1).
//   X*Y = iZ, Y*Z = iX, Z*X = iY  -> +1
//   X*Z = -iY, Y*X = -iZ, Z*Y = -iX -> -1
const int8_t kPhaseTable[16] = {
    // a = I
    0, 0, 0, 0,
    // a = Z: b = I, Z, X, Y
    0, 0, +1, -1,
    // a = X: b = I, Z, X, Y
    0, -1, 0, +1,
    // a = Y: b = I, Z, X, Y
    0, +1, -1, 0,
};

unsigned row_mul_scalar(uint64_t *ax, uint64_t *az, const uint64_t *bx, const uint64_t *bz, size_t words) {
    int exponent = 0;
    for (size_t w = 0; w < words; w++) {
        for (unsigned bit = 0; bit < 64; bit++) {
            unsigned xa = (ax[w] >> bit) & 1;
            unsigned za = (az[w] >> bit) & 1;
            unsigned xb = (bx[w] >> bit) & 1;
            unsigned zb = (bz[w] >> bit) & 1;
            exponent += kPhaseTable[(xa << 3) | (za << 2) | (xb << 1) | zb];
        }
        ax[w] ^= bx[w];
        az[w] ^= bz[w];
    }
    return static_cast<unsigned>(exponent) & 3;
}

unsigned row_mul_words(uint64_t *ax, uint64_t *az, const uint64_t *bx, const uint64_t *bz, size_t words) {
    unsigned plus = 0;
    unsigned minus = 0;
    for (size_t w = 0; w < words; w++) {
        uint64_t x1 = ax[w], z1 = az[w], x2 = bx[w], z2 = bz[w];
        uint64_t p = (x1 & ~z1 & x2 & z2) | (x1 & z1 & ~x2 & z2) | (~x1 & z1 & x2 & ~z2);
        uint64_t m = (x1 & ~z1 & ~x2 & z2) | (x1 & z1 & x2 & ~z2) | (~x1 & z1 & x2 & z2);
        plus += static_cast<unsigned>(std::popcount(p));
        minus += static_cast<unsigned>(std::popcount(m));
        ax[w] = x1 ^ x2;
        az[w] = z1 ^ z2;
    }
    return (plus - minus) & 3;
}

bool anticommutes_scalar(const uint64_t *ax, const uint64_t *az, const uint64_t *bx, const uint64_t *bz, size_t words) {
    unsigned parity = 0;
    for (size_t w = 0; w < words; w++) {
        for (unsigned bit = 0; bit < 64; bit++) {
            parity ^= ((ax[w] >> bit) & (bz[w] >> bit) & 1) ^ ((bx[w] >> bit) & (az[w] >> bit) & 1);
        }
    }
    return parity != 0;
}

bool anticommutes_words(const uint64_t *ax, const uint64_t *az, const uint64_t *bx, const uint64_t *bz, size_t words) {
    uint64_t acc = 0;
    for (size_t w = 0; w < words; w++) {
        acc ^= (ax[w] & bz[w]) ^ (bx[w] & az[w]);
    }
    return (std::popcount(acc) & 1) != 0;
}

}  // namespace qsat::kernels
