#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace fgeom {

// Fixed-size bit set used for point-set bookkeeping (cover, disjointness,
// candidate filtering).  Indices are packed vector codes.
class BitVec {
  public:
    BitVec() = default;
    explicit BitVec(size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    size_t size() const { return n_; }

    bool test(size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(size_t i) { w_[i >> 6] |= uint64_t(1) << (i & 63); }
    void reset(size_t i) { w_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }

    size_t count() const {
        size_t c = 0;
        for (uint64_t w : w_) c += size_t(std::popcount(w));
        return c;
    }

    bool none() const {
        for (uint64_t w : w_)
            if (w) return false;
        return true;
    }

    bool intersects(const BitVec& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    BitVec& operator&=(const BitVec& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    BitVec& operator|=(const BitVec& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    BitVec& andnot(const BitVec& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

    friend bool operator==(const BitVec& a, const BitVec& b) {
        return a.n_ == b.n_ && a.w_ == b.w_;
    }

    // First set index >= from, or size() if none.
    size_t next_set(size_t from) const {
        if (from >= n_) return n_;
        size_t word = from >> 6;
        uint64_t cur = w_[word] & (~uint64_t(0) << (from & 63));
        while (true) {
            if (cur) {
                size_t i = (word << 6) + size_t(std::countr_zero(cur));
                return i < n_ ? i : n_;
            }
            if (++word >= w_.size()) return n_;
            cur = w_[word];
        }
    }

  private:
    size_t n_ = 0;
    std::vector<uint64_t> w_;
};

}  // namespace fgeom
