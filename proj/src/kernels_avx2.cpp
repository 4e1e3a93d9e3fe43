// AVX2 variants of the batch kernels.  This translation unit is compiled
// with -mavx2 when the toolchain supports it; the dispatcher only hands the
// table out after a runtime cpuid check, so the rest of the binary stays
// runnable on older x86 cores.

#include "fgeom/kernels.hpp"

#if defined(__AVX2__) && defined(__x86_64__)

#include <immintrin.h>

namespace fgeom::kern {

namespace {

// Parity of each 32-bit lane: fold the lane onto its low nibble, then look
// up the nibble parity (0x6996 is the 16-entry parity table read as bits).
inline __m256i parity32(__m256i x) {
    x = _mm256_xor_si256(x, _mm256_srli_epi32(x, 16));
    x = _mm256_xor_si256(x, _mm256_srli_epi32(x, 8));
    x = _mm256_xor_si256(x, _mm256_srli_epi32(x, 4));
    x = _mm256_and_si256(x, _mm256_set1_epi32(0x0f));
    const __m256i lut = _mm256_setr_epi8(0, 1, 1, 0, 1, 0, 0, 1, 1, 0, 0, 1, 0, 1, 1, 0,
                                         0, 1, 1, 0, 1, 0, 0, 1, 1, 0, 0, 1, 0, 1, 1, 0);
    return _mm256_shuffle_epi8(lut, x);
}

void dot_parity_avx2(uint32_t mask, const uint32_t* v, size_t n, uint8_t* out) {
    const __m256i m = _mm256_set1_epi32(int(mask));
    size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + i));
        __m256i p = parity32(_mm256_and_si256(x, m));
        alignas(32) uint32_t lanes[8];
        _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), p);
        for (int k = 0; k < 8; ++k) out[i + k] = uint8_t(lanes[k]);
    }
    for (; i < n; ++i) {
        uint32_t r = mask & v[i];
        r ^= r >> 16; r ^= r >> 8; r ^= r >> 4;
        out[i] = uint8_t((0x6996u >> (r & 0xf)) & 1u);
    }
}

void quad_eval_avx2(const uint32_t* rows, int dim, const uint32_t* v, size_t n, uint8_t* out) {
    const __m256i one = _mm256_set1_epi32(1);
    size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + i));
        __m256i acc = _mm256_setzero_si256();
        for (int j = 0; j < dim; ++j) {
            __m256i row = _mm256_set1_epi32(int(rows[j]));
            __m256i p = parity32(_mm256_and_si256(x, row));
            __m256i xj = _mm256_and_si256(_mm256_srli_epi32(x, j), one);
            acc = _mm256_xor_si256(acc, _mm256_and_si256(p, xj));
        }
        alignas(32) uint32_t lanes[8];
        _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
        for (int k = 0; k < 8; ++k) out[i + k] = uint8_t(lanes[k]);
    }
    if (i < n) scalar_table().quad_eval(rows, dim, v + i, n - i, out + i);
}

void matvec_avx2(const uint32_t* cols, int dim, const uint32_t* v, size_t n, uint32_t* out) {
    const __m256i one = _mm256_set1_epi32(1);
    size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + i));
        __m256i acc = _mm256_setzero_si256();
        for (int j = 0; j < dim; ++j) {
            __m256i bit = _mm256_and_si256(_mm256_srli_epi32(x, j), one);
            __m256i sel = _mm256_cmpeq_epi32(bit, one);
            acc = _mm256_xor_si256(acc, _mm256_and_si256(sel, _mm256_set1_epi32(int(cols[j]))));
        }
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), acc);
    }
    if (i < n) scalar_table().matvec(cols, dim, v + i, n - i, out + i);
}

constexpr KernelTable kAvx2{"avx2", dot_parity_avx2, quad_eval_avx2, matvec_avx2};

}  // namespace

const KernelTable* avx2_table() {
#if defined(__GNUC__) || defined(__clang__)
    static const bool supported = __builtin_cpu_supports("avx2");
#else
    static const bool supported = false;
#endif
    return supported ? &kAvx2 : nullptr;
}

}  // namespace fgeom::kern

#else  // no AVX2 code in this build

namespace fgeom::kern {
const KernelTable* avx2_table() { return nullptr; }
}  // namespace fgeom::kern

#endif
