#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace axg {

// Fixed-capacity bitset over 64-bit words. Capacity is set at construction;
// all binary operations require equal capacity.
class Bits {
public:
    Bits() = default;
    explicit Bits(int n) : n_(n), w_((n + 63) / 64, 0) {}

    int capacity() const { return n_; }

    void set(int i) { w_[i >> 6] |= word(1) << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(word(1) << (i & 63)); }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    int count() const {
        int c = 0;
        for (word w : w_) c += std::popcount(w);
        return c;
    }

    bool any() const {
        for (word w : w_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    // Lowest set index, -1 when empty.
    int first() const {
        for (size_t k = 0; k < w_.size(); ++k)
            if (w_[k]) return int(k * 64) + std::countr_zero(w_[k]);
        return -1;
    }

    Bits& operator|=(const Bits& o) {
        for (size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
        return *this;
    }
    Bits& operator&=(const Bits& o) {
        for (size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
        return *this;
    }
    // this &= ~o
    Bits& remove(const Bits& o) {
        for (size_t k = 0; k < w_.size(); ++k) w_[k] &= ~o.w_[k];
        return *this;
    }

    friend Bits operator|(Bits a, const Bits& b) { return a |= b; }
    friend Bits operator&(Bits a, const Bits& b) { return a &= b; }
    friend Bits minus(Bits a, const Bits& b) { return a.remove(b); }

    bool intersects(const Bits& o) const {
        for (size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & o.w_[k]) return true;
        return false;
    }

    bool contains(const Bits& o) const {
        for (size_t k = 0; k < w_.size(); ++k)
            if (o.w_[k] & ~w_[k]) return false;
        return true;
    }

    int count_and(const Bits& o) const {
        int c = 0;
        for (size_t k = 0; k < w_.size(); ++k) c += std::popcount(w_[k] & o.w_[k]);
        return c;
    }

    template <class F>
    void for_each(F f) const {
        for (size_t k = 0; k < w_.size(); ++k) {
            word w = w_[k];
            while (w) {
                f(int(k * 64) + std::countr_zero(w));
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for_each([&](int i) { out.push_back(i); });
        return out;
    }

    static Bits full(int n) {
        Bits b(n);
        for (int i = 0; i < n; ++i) b.set(i);
        return b;
    }

    static Bits of(int n, const std::vector<int>& idx) {
        Bits b(n);
        for (int i : idx) b.set(i);
        return b;
    }

    friend bool operator==(const Bits&, const Bits&) = default;

private:
    using word = std::uint64_t;
    int n_ = 0;
    std::vector<word> w_;
};

} // namespace axg
