#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "fgeom/galois.hpp"

namespace fgeom {

// Enumerations refuse to produce more than this many objects.
inline constexpr uint64_t kEnumBudget = 1000000;

// Field traits for the generic echelon code.  Vectors are packed words;
// the trait knows how to read, scale and pivot them.  Projective points
// are canonical packed codes: over GF(2) any nonzero code, over GF(4) the
// representative scaled so its first nonzero component is 1.
struct F2Field {
    using Vec = F2Vec;
    static constexpr int q = 2;
    static constexpr int coord_bits = 1;

    template <class W> static uint8_t coord(W w, int i) { return uint8_t((w >> i) & 1u); }
    template <class W> static W scale(W w, uint8_t c) { return c ? w : W(0); }
    template <class W> static int first_coord(W w) {
        return w ? std::countr_zero(w) : -1;
    }
    static uint8_t inv_scalar(uint8_t) { return 1; }
    static Vec make(uint32_t code, int ambient) { return F2Vec(code, ambient); }
};

struct F4Field {
    using Vec = F4Vec;
    static constexpr int q = 4;
    static constexpr int coord_bits = 2;

    template <class W> static uint8_t coord(W w, int i) { return uint8_t((w >> (2 * i)) & 3u); }
    template <class W> static W scale(W w, uint8_t c) {
        switch (c) {
            case 0: return W(0);
            case 1: return w;
            case 2: return f4_word_mul_omega(w);
            default: return f4_word_mul_omega(f4_word_mul_omega(w));
        }
    }
    template <class W> static int first_coord(W w) {
        return w ? std::countr_zero(w) / 2 : -1;
    }
    static uint8_t inv_scalar(uint8_t c) { return Gf4(c).inv().code(); }
    static Vec make(uint32_t code, int ambient) { return F4Vec(code, ambient); }
};

// Scale so the first nonzero component becomes 1.
uint32_t f4_canonical_code(uint32_t packed);
F4Vec canonical_point(F4Vec v);

// Linear subspace in reduced row echelon form: rows are nonzero, pivot
// coordinates strictly increase, each pivot coordinate is 1 and is zero in
// every other row.  Equal subspaces have equal rows, so comparison is
// memberwise.  Projective dimension is one less than the row count.
template <class F>
struct Subspace {
    std::vector<uint32_t> rows;
    int ambient = 0;

    int vdim() const { return int(rows.size()); }
    int pdim() const { return vdim() - 1; }
    bool is_zero() const { return rows.empty(); }

    bool contains(uint32_t v) const {
        for (uint32_t b : rows) {
            uint8_t c = F::coord(v, F::first_coord(b));
            if (c) v ^= F::scale(b, c);
        }
        return v == 0;
    }
    bool contains_subspace(const Subspace& o) const {
        for (uint32_t r : o.rows)
            if (!contains(r)) return false;
        return true;
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient == b.ambient && a.rows == b.rows;
    }
    friend bool operator<(const Subspace& a, const Subspace& b) {
        if (a.ambient != b.ambient) return a.ambient < b.ambient;
        return a.rows < b.rows;
    }
};

using SubspaceF2 = Subspace<F2Field>;
using SubspaceF4 = Subspace<F4Field>;

template <class F>
Subspace<F> span(const std::vector<uint32_t>& gens, int ambient);

template <class F>
Subspace<F> intersect(const Subspace<F>& a, const Subspace<F>& b);

// Rank of a set of packed vectors.
template <class F>
int rank_of(const std::vector<uint32_t>& vecs, int ambient);

// Canonical point codes of a subspace, ascending.
template <class F>
std::vector<uint32_t> points_of(const Subspace<F>& s);

// All (q^{d+1}-1)/(q-1) canonical points of PG(d,q), ascending by code.
template <class F>
std::vector<typename F::Vec> enumerate_points(int d);

// All projective lines of PG(d,q), each exactly once, sorted by basis.
template <class F>
std::vector<Subspace<F>> enumerate_lines(int d);

extern template Subspace<F2Field> span<F2Field>(const std::vector<uint32_t>&, int);
extern template Subspace<F4Field> span<F4Field>(const std::vector<uint32_t>&, int);
extern template Subspace<F2Field> intersect<F2Field>(const SubspaceF2&, const SubspaceF2&);
extern template Subspace<F4Field> intersect<F4Field>(const SubspaceF4&, const SubspaceF4&);
extern template int rank_of<F2Field>(const std::vector<uint32_t>&, int);
extern template int rank_of<F4Field>(const std::vector<uint32_t>&, int);
extern template std::vector<uint32_t> points_of<F2Field>(const SubspaceF2&);
extern template std::vector<uint32_t> points_of<F4Field>(const SubspaceF4&);
extern template std::vector<F2Vec> enumerate_points<F2Field>(int);
extern template std::vector<F4Vec> enumerate_points<F4Field>(int);
extern template std::vector<SubspaceF2> enumerate_lines<F2Field>(int);
extern template std::vector<SubspaceF4> enumerate_lines<F4Field>(int);

}  // namespace fgeom
