// AVX2 variant of the u16 equality-mask kernel. This translation unit is the
// only one compiled with -mavx2; callers reach it through the runtime
// dispatcher in kernels.cpp.

#include "ringlab/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <cstring>

namespace ringlab::kernels {

bool avx2_supported() {
    return __builtin_cpu_supports("avx2");
}

#if defined(__AVX2__)

// 16 comparison lanes -> 16 bits. movemask gives 2 identical bits per u16
// lane; fold the even bits together.
static inline uint64_t mask16(__m256i va, __m256i vb) {
    __m256i eq = _mm256_cmpeq_epi16(va, vb);
    uint32_t m = static_cast<uint32_t>(_mm256_movemask_epi8(eq));
    uint32_t x = m & 0x55555555u;
    x = (x | (x >> 1)) & 0x33333333u;
    x = (x | (x >> 2)) & 0x0F0F0F0Fu;
    x = (x | (x >> 4)) & 0x00FF00FFu;
    x = (x | (x >> 8)) & 0x0000FFFFu;
    return x;
}

void eq_mask_u16_avx2(const uint16_t* a, const uint16_t* b, size_t n, uint64_t* out) {
    size_t words = (n + 63) / 64;
    if (!words) return;
    std::memset(out, 0, words * sizeof(uint64_t));
    size_t i = 0;
    for (; i + 64 <= n; i += 64) {
        uint64_t w = 0;
        for (int k = 0; k < 4; ++k) {
            __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i + 16 * k));
            __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i + 16 * k));
            w |= mask16(va, vb) << (16 * k);
        }
        out[i >> 6] = w;
    }
    for (; i < n; ++i) {
        if (a[i] == b[i]) out[i >> 6] |= uint64_t(1) << (i & 63);
    }
}

#else

void eq_mask_u16_avx2(const uint16_t* a, const uint16_t* b, size_t n, uint64_t* out) {
    eq_mask_u16_scalar(a, b, n, out);
}

#endif // __AVX2__

} // namespace ringlab::kernels

#endif // x86_64
