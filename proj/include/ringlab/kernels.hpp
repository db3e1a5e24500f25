#pragma once

#include <cstddef>
#include <cstdint>

// Data-parallel inner loops shared by the ring scans: element-wise equality
// of u16 rows compressed to a bitmask, plus counting forms. A scalar
// reference kernel is always available; an AVX2 variant is selected at
// runtime when the CPU supports it. The two are equivalence-tested.
//
// Contract for eq_mask: out holds ceil(n/64) words; bit i of out is
// (a[i] == b[i]); bits at positions >= n are zero.

namespace ringlab::kernels {

using EqMaskFn = void (*)(const uint16_t*, const uint16_t*, size_t, uint64_t*);

void eq_mask_u16_scalar(const uint16_t* a, const uint16_t* b, size_t n, uint64_t* out);
#if defined(__x86_64__) || defined(_M_X64)
void eq_mask_u16_avx2(const uint16_t* a, const uint16_t* b, size_t n, uint64_t* out);
bool avx2_supported();
#endif

// Dispatched entry points.
void eq_mask_u16(const uint16_t* a, const uint16_t* b, size_t n, uint64_t* out);
size_t eq_count_u16(const uint16_t* a, const uint16_t* b, size_t n);
// Counts positions i with a[i]==b[i] and bit i set in mask (ceil(n/64) words).
size_t eq_count_masked_u16(const uint16_t* a, const uint16_t* b, size_t n, const uint64_t* mask);

// "scalar", "avx2" or "auto"; returns false if the requested variant is
// unavailable on this machine. RINGLAB_KERNEL in the environment is applied
// on first use.
bool select_kernel(const char* name);
const char* active_kernel_name();

} // namespace ringlab::kernels
