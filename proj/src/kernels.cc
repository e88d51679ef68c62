#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsat/kernels.h"

namespace qsat::kernels {

std::string_view isa_name(Isa isa) {
    switch (isa) {
        case Isa::scalar:
            return "scalar";
        case Isa::words:
            return "words";
        case Isa::avx2:
            return "avx2";
    }
    return "?";
}

bool isa_available(Isa isa) {
    switch (isa) {
        case Isa::scalar:
        case Isa::words:
            return true;
        case Isa::avx2:
#if defined(QSAT_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
            return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
            return false;
#endif
    }
    return false;
}

std::span<const Isa> available_isas() {
    static const std::vector<Isa> isas = [] {
        std::vector<Isa> out;
        for (Isa isa : {Isa::scalar, Isa::words, Isa::avx2}) {
            if (isa_available(isa)) {
                out.push_back(isa);
            }
        }
        return out;
    }();
    return isas;
}

const RowKernels &kernels_for(Isa isa) {
    static const RowKernels scalar{Isa::scalar, row_mul_scalar, anticommutes_scalar};
    static const RowKernels words{Isa::words, row_mul_words, anticommutes_words};
#ifdef QSAT_HAVE_AVX2
    static const RowKernels avx2{Isa::avx2, row_mul_avx2, anticommutes_avx2};
#endif
    switch (isa) {
        case Isa::scalar:
            return scalar;
        case Isa::words:
            return words;
        case Isa::avx2:
#ifdef QSAT_HAVE_AVX2
            if (isa_available(Isa::avx2)) {
                return avx2;
            }
#endif
            break;
    }
    throw std::invalid_argument("row kernels for '" + std::string(isa_name(isa)) + "' are not available");
}

const RowKernels &active() {
    static const RowKernels &chosen = []() -> const RowKernels & {
        if (const char *env = std::getenv("QSAT_ISA")) {
            for (Isa isa : available_isas()) {
                if (isa_name(isa) == env) {
                    return kernels_for(isa);
                }
            }
        }
        return kernels_for(available_isas().back());
    }();
    return chosen;
}

}  // namespace qsat::kernels
