#include "fgeom/galois.hpp"

#include <bit>

namespace fgeom {

std::string F2Vec::str() const {
    std::string s = "(";
    for (int i = 0; i < len; ++i) {
        if (i) s += ':';
        s += bit(i) ? '1' : '0';
    }
    s += ')';
    return s;
}

std::string F4Vec::str() const {
    std::string s = "(";
    for (int i = 0; i < len; ++i) {
        if (i) s += ':';
        s += at(i).str();
    }
    s += ')';
    return s;
}

F4Vec scale(F4Vec v, Gf4 c) {
    switch (c.code()) {
        case 0: return F4Vec(0, v.len);
        case 1: return v;
        case 2: return F4Vec(f4_word_mul_omega(v.packed), v.len);
        default: return F4Vec(f4_word_mul_omega(f4_word_mul_omega(v.packed)), v.len);
    }
}

F4Vec conj(F4Vec v) {
    return F4Vec(f4_word_conj(v.packed), v.len);
}

F2Vec field_reduce(F4Vec v) {
    // Component i's code already sits at bits 2i, 2i+1 with the GF(2)
    // pair in the prescribed order, so only the type changes.
    return F2Vec(v.packed, 2 * v.len);
}

F4Vec field_lift(F2Vec w) {
    if (w.len % 2 != 0) throw std::invalid_argument("field_lift: odd dimension");
    return F4Vec(w.bits, w.len / 2);
}

Gf2Mat Gf2Mat::identity(int n) {
    std::vector<uint32_t> cols(n);
    for (int j = 0; j < n; ++j) cols[j] = 1u << j;
    return Gf2Mat(n, std::move(cols));
}

uint32_t Gf2Mat::apply(uint32_t x) const {
    uint32_t y = 0;
    for (int j = 0; j < n; ++j) {
        if ((x >> j) & 1u) y ^= cols[j];
    }
    return y;
}

Gf2Mat Gf2Mat::operator*(const Gf2Mat& rhs) const {
    if (n != rhs.n) throw std::invalid_argument("Gf2Mat: dimension mismatch");
    std::vector<uint32_t> out(n);
    for (int j = 0; j < n; ++j) out[j] = apply(rhs.cols[j]);
    return Gf2Mat(n, std::move(out));
}

std::optional<Gf2Mat> Gf2Mat::inverse() const {
    // Gauss-Jordan on [A | I], columns as words.
    std::vector<uint32_t> a = cols;
    std::vector<uint32_t> inv = identity(n).cols;
    // Work row-wise: rows of A are bit i across columns; easier to transpose.
    auto transpose = [&](const std::vector<uint32_t>& m) {
        std::vector<uint32_t> t(n, 0);
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i)
                if ((m[j] >> i) & 1u) t[i] |= 1u << j;
        return t;
    };
    std::vector<uint32_t> rows = transpose(a);
    std::vector<uint32_t> irows = transpose(inv);
    int rank = 0;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = rank; r < n; ++r) {
            if ((rows[r] >> col) & 1u) { piv = r; break; }
        }
        if (piv < 0) return std::nullopt;
        std::swap(rows[rank], rows[piv]);
        std::swap(irows[rank], irows[piv]);
        for (int r = 0; r < n; ++r) {
            if (r != rank && ((rows[r] >> col) & 1u)) {
                rows[r] ^= rows[rank];
                irows[r] ^= irows[rank];
            }
        }
        ++rank;
    }
    return Gf2Mat(n, transpose(irows));
}

}  // namespace fgeom
