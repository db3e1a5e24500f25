#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace ringlab {

// Fixed-size bitset with the word array exposed, so kernel output can be
// written straight into it. Bits at positions >= size() are always zero.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int n) : n_(n), w_((n + 63) / 64, 0) {}

    int size() const { return n_; }
    int words() const { return static_cast<int>(w_.size()); }
    uint64_t* data() { return w_.data(); }
    const uint64_t* data() const { return w_.data(); }

    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    void set(int i) { w_[i >> 6] |= uint64_t(1) << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }
    void clear() { for (auto& x : w_) x = 0; }

    void set_all() {
        for (auto& x : w_) x = ~uint64_t(0);
        trim();
    }

    int count() const {
        int c = 0;
        for (uint64_t x : w_) c += std::popcount(x);
        return c;
    }
    bool any() const {
        for (uint64_t x : w_) if (x) return true;
        return false;
    }
    bool none() const { return !any(); }

    Bitset& operator&=(const Bitset& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    // this \ o
    Bitset& subtract(const Bitset& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }
    Bitset complement() const {
        Bitset r(*this);
        for (auto& x : r.w_) x = ~x;
        r.trim();
        return r;
    }

    bool intersects(const Bitset& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }
    bool is_subset_of(const Bitset& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    int find_first() const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return static_cast<int>(i * 64 + std::countr_zero(w_[i]));
        return -1;
    }

    std::vector<int> to_vector() const {
        std::vector<int> v;
        v.reserve(count());
        for (size_t i = 0; i < w_.size(); ++i) {
            uint64_t x = w_[i];
            while (x) {
                v.push_back(static_cast<int>(i * 64 + std::countr_zero(x)));
                x &= x - 1;
            }
        }
        return v;
    }

    static Bitset from_members(int n, const std::vector<int>& members) {
        Bitset b(n);
        for (int m : members) b.set(m);
        return b;
    }

    // Masks out bits beyond size(); call after writing raw words.
    void trim() {
        if (n_ % 64 != 0 && !w_.empty())
            w_.back() &= (~uint64_t(0)) >> (64 - n_ % 64);
    }

    bool operator==(const Bitset&) const = default;

private:
    int n_ = 0;
    std::vector<uint64_t> w_;
};

} // namespace ringlab
