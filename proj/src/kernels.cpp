#include "ringlab/kernels.hpp"

#include <atomic>
#include <bit>
#include <cstdlib>
#include <cstring>
#include <string>

namespace ringlab::kernels {

namespace {

struct Dispatch {
    EqMaskFn fn;
    const char* name;
};

Dispatch pick(const char* req) {
    std::string want = req && *req ? req : "auto";
    if (want == "scalar") return {eq_mask_u16_scalar, "scalar"};
#if defined(__x86_64__) || defined(_M_X64)
    if (want == "avx2")
        return avx2_supported() ? Dispatch{eq_mask_u16_avx2, "avx2"} : Dispatch{nullptr, nullptr};
    if (want == "auto")
        return avx2_supported() ? Dispatch{eq_mask_u16_avx2, "avx2"}
                                : Dispatch{eq_mask_u16_scalar, "scalar"};
#else
    if (want == "auto") return {eq_mask_u16_scalar, "scalar"};
#endif
    return {nullptr, nullptr};
}

Dispatch& current() {
    static Dispatch d = pick(std::getenv("RINGLAB_KERNEL"));
    return d;
}

} // namespace

bool select_kernel(const char* name) {
    Dispatch d = pick(name);
    if (!d.fn) return false;
    current() = d;
    return true;
}

const char* active_kernel_name() { return current().name; }

void eq_mask_u16(const uint16_t* a, const uint16_t* b, size_t n, uint64_t* out) {
    current().fn(a, b, n, out);
}

namespace {
constexpr size_t kChunk = 4096; // elements per buffered pass
}

size_t eq_count_u16(const uint16_t* a, const uint16_t* b, size_t n) {
    uint64_t buf[kChunk / 64];
    size_t total = 0;
    for (size_t off = 0; off < n; off += kChunk) {
        size_t len = n - off < kChunk ? n - off : kChunk;
        eq_mask_u16(a + off, b + off, len, buf);
        size_t words = (len + 63) / 64;
        for (size_t i = 0; i < words; ++i) total += std::popcount(buf[i]);
    }
    return total;
}

size_t eq_count_masked_u16(const uint16_t* a, const uint16_t* b, size_t n, const uint64_t* mask) {
    uint64_t buf[kChunk / 64];
    size_t total = 0;
    for (size_t off = 0; off < n; off += kChunk) {
        size_t len = n - off < kChunk ? n - off : kChunk;
        eq_mask_u16(a + off, b + off, len, buf);
        size_t words = (len + 63) / 64;
        for (size_t i = 0; i < words; ++i) total += std::popcount(buf[i] & mask[off / 64 + i]);
    }
    return total;
}

} // namespace ringlab::kernels
