#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fgeom {

// Coordinate vectors are packed into a single 32-bit word, so dimensions are
// capped at 32 GF(2) coordinates (16 GF(4) components).
inline constexpr int kMaxCoords = 32;

// GF(4) = {0, 1, w, w^2} with w^2 = w + 1.  A scalar is a 2-bit code
// v0 | v1 << 1 for v = v0 + v1*w, so 0 -> 00, 1 -> 01, w -> 10, w^2 -> 11.
// Addition is XOR of codes; multiplication is a 4x4 table.
class Gf4 {
  public:
    constexpr Gf4() = default;
    constexpr explicit Gf4(uint8_t code) : code_(code & 3u) {}

    static constexpr Gf4 zero() { return Gf4(0); }
    static constexpr Gf4 one() { return Gf4(1); }
    static constexpr Gf4 omega() { return Gf4(2); }
    static constexpr Gf4 omega_sq() { return Gf4(3); }

    constexpr uint8_t code() const { return code_; }
    constexpr bool is_zero() const { return code_ == 0; }

    friend constexpr Gf4 operator+(Gf4 a, Gf4 b) { return Gf4(a.code_ ^ b.code_); }
    friend constexpr Gf4 operator*(Gf4 a, Gf4 b) { return Gf4(kMul[a.code_][b.code_]); }
    friend constexpr bool operator==(Gf4 a, Gf4 b) { return a.code_ == b.code_; }
    friend constexpr bool operator!=(Gf4 a, Gf4 b) { return a.code_ != b.code_; }

    // Frobenius conjugation x -> x^2; swaps w and w^2, fixes the subfield.
    constexpr Gf4 conj() const { return Gf4(code_ ^ (code_ >> 1)); }

    // Trace x + x^2 into GF(2); 1 exactly for w and w^2.
    constexpr uint8_t trace() const { return (code_ >> 1) & 1u; }

    constexpr Gf4 inv() const {
        if (code_ == 0) throw std::domain_error("Gf4: inverse of zero");
        return Gf4(kInv[code_]);
    }

    std::string str() const {
        static const char* names[4] = {"0", "1", "w", "w2"};
        return names[code_];
    }

  private:
    static constexpr uint8_t kMul[4][4] = {
        {0, 0, 0, 0},
        {0, 1, 2, 3},
        {0, 2, 3, 1},
        {0, 3, 1, 2},
    };
    static constexpr uint8_t kInv[4] = {0, 1, 3, 2};

    uint8_t code_ = 0;
};

// Bit mask with the low n bits set, safe for n == 32.
constexpr uint32_t low_bits(int n) {
    return n >= 32 ? 0xffffffffu : ((1u << n) - 1u);
}

// Vector over GF(2), coordinate i stored in bit i.  Addition is XOR.
struct F2Vec {
    uint32_t bits = 0;
    int len = 0;

    constexpr F2Vec() = default;
    constexpr F2Vec(uint32_t b, int n) : bits(b & low_bits(n)), len(n) {}

    constexpr bool bit(int i) const { return (bits >> i) & 1u; }
    constexpr bool is_zero() const { return bits == 0; }

    friend F2Vec operator+(F2Vec a, F2Vec b) {
        if (a.len != b.len) throw std::invalid_argument("F2Vec: dimension mismatch");
        return F2Vec(a.bits ^ b.bits, a.len);
    }
    friend constexpr bool operator==(F2Vec a, F2Vec b) { return a.len == b.len && a.bits == b.bits; }
    friend constexpr bool operator<(F2Vec a, F2Vec b) {
        return a.len != b.len ? a.len < b.len : a.bits < b.bits;
    }

    std::string str() const;
};

// Vector over GF(4), component i stored as a 2-bit code in bits 2i, 2i+1.
// The layout agrees with F2Vec after field reduction: component i's GF(2)
// pair (v0, v1) lands in bit positions 2i and 2i+1.
struct F4Vec {
    uint32_t packed = 0;
    int len = 0;

    constexpr F4Vec() = default;
    constexpr F4Vec(uint32_t p, int n) : packed(p & low_bits(2 * n)), len(n) {}

    constexpr Gf4 at(int i) const { return Gf4((packed >> (2 * i)) & 3u); }
    void set(int i, Gf4 c) {
        packed = (packed & ~(3u << (2 * i))) | (uint32_t(c.code()) << (2 * i));
    }
    constexpr bool is_zero() const { return packed == 0; }

    friend F4Vec operator+(F4Vec a, F4Vec b) {
        if (a.len != b.len) throw std::invalid_argument("F4Vec: dimension mismatch");
        return F4Vec(a.packed ^ b.packed, a.len);
    }
    friend constexpr bool operator==(F4Vec a, F4Vec b) { return a.len == b.len && a.packed == b.packed; }
    friend constexpr bool operator<(F4Vec a, F4Vec b) {
        return a.len != b.len ? a.len < b.len : a.packed < b.packed;
    }

    std::string str() const;
};

namespace detail {
template <class W> inline constexpr W kEvenBits = W(0x5555555555555555ull);
template <class W> inline constexpr W kOddBits = W(0xaaaaaaaaaaaaaaaaull);
}  // namespace detail

// Componentwise multiplication of a packed GF(4) word by w:
// (v0, v1) -> (v1, v0 + v1), done on all components at once.
template <class W>
constexpr W f4_word_mul_omega(W packed) {
    W lo = packed & detail::kEvenBits<W>;
    W hi = packed & detail::kOddBits<W>;
    return W((hi >> 1) | ((lo << 1) ^ hi));
}

// Componentwise Frobenius conjugation: (v0, v1) -> (v0 + v1, v1).
template <class W>
constexpr W f4_word_conj(W packed) {
    return W(packed ^ ((packed & detail::kOddBits<W>) >> 1));
}

F4Vec scale(F4Vec v, Gf4 c);
F4Vec conj(F4Vec v);

constexpr uint32_t code_of(F2Vec v) { return v.bits; }
constexpr uint32_t code_of(F4Vec v) { return v.packed; }

// GF(4)^N -> GF(2)^{2N}: component x = x0 + x1*w emits the pair (x0, x1).
// With the packed layouts above this is a relabelling of the same bits.
F2Vec field_reduce(F4Vec v);
// Inverse of field_reduce; the length must be even.
F4Vec field_lift(F2Vec w);

// Swaps bits 2i and 2i+1 in every adjacent pair; turns the symplectic
// pairing <(a|b),(a'|b')> = a.b' + a'.b into a plain dot-parity.
constexpr uint32_t swap_pair_bits(uint32_t x) {
    return ((x & detail::kEvenBits<uint32_t>) << 1) | ((x & detail::kOddBits<uint32_t>) >> 1);
}

// Square GF(2) matrix, column j packed into a word.
struct Gf2Mat {
    int n = 0;
    std::vector<uint32_t> cols;

    Gf2Mat() = default;
    Gf2Mat(int dim, std::vector<uint32_t> c) : n(dim), cols(std::move(c)) {}

    static Gf2Mat identity(int n);

    // Matrix-vector product over GF(2).
    uint32_t apply(uint32_t x) const;
    Gf2Mat operator*(const Gf2Mat& rhs) const;
    std::optional<Gf2Mat> inverse() const;

    friend bool operator==(const Gf2Mat& a, const Gf2Mat& b) {
        return a.n == b.n && a.cols == b.cols;
    }
};

}  // namespace fgeom
