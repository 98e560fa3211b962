#pragma once

#include <cstdint>
#include <vector>
#include <cassert>
#include <bit>

namespace spexlab {

// Fixed-capacity dynamic bitset sized at construction.  Used for adjacency
// rows and vertex subsets; graphs never grow after construction so neither
// do these.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int n) : n_(n), w_((n + 63) / 64, 0) {}

    int size() const { return n_; }

    bool test(int i) const {
        assert(i >= 0 && i < n_);
        return (w_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(int i) {
        assert(i >= 0 && i < n_);
        w_[i >> 6] |= uint64_t(1) << (i & 63);
    }
    void reset(int i) {
        assert(i >= 0 && i < n_);
        w_[i >> 6] &= ~(uint64_t(1) << (i & 63));
    }

    int count() const {
        int c = 0;
        for (uint64_t w : w_) c += std::popcount(w);
        return c;
    }
    bool any() const {
        for (uint64_t w : w_) if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    bool intersects(const Bitset& o) const {
        assert(n_ == o.n_);
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }
    bool is_subset_of(const Bitset& o) const {
        assert(n_ == o.n_);
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    Bitset& operator&=(const Bitset& o) {
        assert(n_ == o.n_);
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        assert(n_ == o.n_);
        for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    Bitset& operator-=(const Bitset& o) {  // set difference
        assert(n_ == o.n_);
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }
    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }

    Bitset complemented() const {  // within [0, n)
        Bitset r(*this);
        for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = ~w_[i];
        r.trim();
        return r;
    }

    // index of lowest set bit, or -1
    int lowest() const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return int(i * 64 + std::countr_zero(w_[i]));
        return -1;
    }

    // next set bit at index >= i, or -1
    int next(int i) const {
        if (i >= n_) return -1;
        size_t word = size_t(i) >> 6;
        uint64_t w = w_[word] & (~uint64_t(0) << (i & 63));
        while (true) {
            if (w) return int(word * 64 + std::countr_zero(w));
            if (++word >= w_.size()) return -1;
            w = w_[word];
        }
    }

    template <class F>
    void for_each(F&& f) const {
        for (int i = lowest(); i != -1; i = next(i + 1)) f(i);
    }

    std::vector<int> to_vector() const {
        std::vector<int> v;
        for_each([&](int i) { v.push_back(i); });
        return v;
    }

    bool operator==(const Bitset& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator!=(const Bitset& o) const { return !(*this == o); }

private:
    void trim() {
        if (n_ & 63) w_.back() &= (~uint64_t(0)) >> (64 - (n_ & 63));
    }
    int n_ = 0;
    std::vector<uint64_t> w_;
};

}  // namespace spexlab
