#include "ringlab/kernels.hpp"

#include <cstring>

namespace ringlab::kernels {

void eq_mask_u16_scalar(const uint16_t* a, const uint16_t* b, size_t n, uint64_t* out) {
    size_t words = (n + 63) / 64;
    if (!words) return;
    std::memset(out, 0, words * sizeof(uint64_t));
    for (size_t i = 0; i < n; ++i) {
        if (a[i] == b[i]) out[i >> 6] |= uint64_t(1) << (i & 63);
    }
}

} // namespace ringlab::kernels
