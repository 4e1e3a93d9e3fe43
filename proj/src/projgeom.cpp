#include "fgeom/projgeom.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace fgeom {

namespace {

// Reduced row echelon form over F on 64-bit working words.
template <class F>
std::vector<uint64_t> rref(const std::vector<uint64_t>& input) {
    std::vector<uint64_t> basis;
    for (uint64_t r : input) {
        for (uint64_t b : basis) {
            uint8_t c = F::coord(r, F::first_coord(b));
            if (c) r ^= F::scale(b, c);
        }
        if (!r) continue;
        int p = F::first_coord(r);
        r = F::scale(r, F::inv_scalar(F::coord(r, p)));
        for (uint64_t& b : basis) {
            uint8_t c = F::coord(b, p);
            if (c) b ^= F::scale(r, c);
        }
        auto pos = std::find_if(basis.begin(), basis.end(), [&](uint64_t b) {
            return F::first_coord(b) > p;
        });
        basis.insert(pos, r);
    }
    return basis;
}

uint64_t ipow(uint64_t base, int e) {
    uint64_t r = 1;
    while (e-- > 0) r *= base;
    return r;
}

template <class F>
void check_ambient(int ncoords) {
    if (ncoords < 1 || ncoords * F::coord_bits > kMaxCoords)
        throw std::invalid_argument("projgeom: ambient dimension out of range");
}

}  // namespace

uint32_t f4_canonical_code(uint32_t packed) {
    if (!packed) return 0;
    int p = F4Field::first_coord(packed);
    return F4Field::scale(packed, Gf4(F4Field::coord(packed, p)).inv().code());
}

F4Vec canonical_point(F4Vec v) {
    return F4Vec(f4_canonical_code(v.packed), v.len);
}

template <class F>
Subspace<F> span(const std::vector<uint32_t>& gens, int ambient) {
    check_ambient<F>(ambient);
    uint32_t mask = low_bits(ambient * F::coord_bits);
    std::vector<uint64_t> rows;
    rows.reserve(gens.size());
    for (uint32_t g : gens) {
        if (g & ~mask) throw std::invalid_argument("span: vector exceeds ambient dimension");
        rows.push_back(g);
    }
    std::vector<uint64_t> basis = rref<F>(rows);
    Subspace<F> s;
    s.ambient = ambient;
    s.rows.assign(basis.begin(), basis.end());
    return s;
}

template <class F>
Subspace<F> intersect(const Subspace<F>& a, const Subspace<F>& b) {
    if (a.ambient != b.ambient)
        throw std::invalid_argument("intersect: mismatched ambient spaces");
    // Zassenhaus: rows (r | r) for a and (r | 0) for b; after elimination the
    // right halves of rows with zero left half span the intersection.
    const int shift = a.ambient * F::coord_bits;
    std::vector<uint64_t> rows;
    for (uint32_t r : a.rows) rows.push_back((uint64_t(r) << shift) | r);
    for (uint32_t r : b.rows) rows.push_back(uint64_t(r) << shift);
    std::vector<uint64_t> red = rref<F>(rows);
    std::vector<uint32_t> right;
    const uint64_t left_mask = ~uint64_t(0) << shift;
    for (uint64_t r : red) {
        if ((r & left_mask) == 0 && r != 0) right.push_back(uint32_t(r));
    }
    return span<F>(right, a.ambient);
}

template <class F>
int rank_of(const std::vector<uint32_t>& vecs, int ambient) {
    check_ambient<F>(ambient);
    std::vector<uint64_t> rows(vecs.begin(), vecs.end());
    return int(rref<F>(rows).size());
}

template <class F>
std::vector<uint32_t> points_of(const Subspace<F>& s) {
    // Walk coefficient tuples whose first nonzero coefficient is 1; with an
    // echelon basis these hit each projective point exactly once and the
    // leading coordinate of the result is already 1.
    const int k = s.vdim();
    std::vector<uint32_t> pts;
    if (k == 0) return pts;
    const uint64_t total = ipow(F::q, k);
    for (uint64_t t = 1; t < total; ++t) {
        bool lead_seen = false, ok = true;
        uint32_t v = 0;
        uint64_t rest = t;
        for (int i = 0; i < k; ++i, rest /= F::q) {
            uint8_t c = uint8_t(rest % F::q);
            if (!lead_seen && c != 0) {
                if (c != 1) { ok = false; break; }
                lead_seen = true;
            }
            v ^= uint32_t(F::scale(uint64_t(s.rows[i]), c));
        }
        if (ok) pts.push_back(v);
    }
    std::sort(pts.begin(), pts.end());
    return pts;
}

template <class F>
std::vector<typename F::Vec> enumerate_points(int d) {
    check_ambient<F>(d + 1);
    const uint64_t count = (ipow(F::q, d + 1) - 1) / (F::q - 1);
    if (count > kEnumBudget)
        throw std::invalid_argument("enumerate_points: budget exceeded");
    std::vector<typename F::Vec> pts;
    pts.reserve(count);
    const uint64_t codes = ipow(2, (d + 1) * F::coord_bits);
    for (uint64_t c = 1; c < codes; ++c) {
        uint32_t code = uint32_t(c);
        if constexpr (F::q == 4) {
            if (f4_canonical_code(code) != code) continue;
        }
        pts.push_back(F::make(code, d + 1));
    }
    return pts;
}

template <class F>
std::vector<Subspace<F>> enumerate_lines(int d) {
    check_ambient<F>(d + 1);
    const uint64_t np1 = ipow(F::q, d + 1) - 1;
    const uint64_t np0 = ipow(F::q, d) - 1;
    const uint64_t count = (np1 * np0) / ((uint64_t(F::q) * F::q - 1) * (F::q - 1));
    if (count > kEnumBudget)
        throw std::invalid_argument("enumerate_lines: budget exceeded");
    auto pts = enumerate_points<F>(d);
    std::set<std::pair<uint32_t, uint32_t>> keys;
    for (size_t i = 0; i < pts.size(); ++i) {
        for (size_t j = i + 1; j < pts.size(); ++j) {
            uint32_t ci = code_of(pts[i]), cj = code_of(pts[j]);
            Subspace<F> l = span<F>({ci, cj}, d + 1);
            keys.emplace(l.rows[0], l.rows[1]);
        }
    }
    std::vector<Subspace<F>> lines;
    lines.reserve(keys.size());
    for (const auto& [r0, r1] : keys) {
        Subspace<F> l;
        l.ambient = d + 1;
        l.rows = {r0, r1};
        lines.push_back(std::move(l));
    }
    return lines;
}

template Subspace<F2Field> span<F2Field>(const std::vector<uint32_t>&, int);
template Subspace<F4Field> span<F4Field>(const std::vector<uint32_t>&, int);
template Subspace<F2Field> intersect<F2Field>(const SubspaceF2&, const SubspaceF2&);
template Subspace<F4Field> intersect<F4Field>(const SubspaceF4&, const SubspaceF4&);
template int rank_of<F2Field>(const std::vector<uint32_t>&, int);
template int rank_of<F4Field>(const std::vector<uint32_t>&, int);
template std::vector<uint32_t> points_of<F2Field>(const SubspaceF2&);
template std::vector<uint32_t> points_of<F4Field>(const SubspaceF4&);
template std::vector<F2Vec> enumerate_points<F2Field>(int);
template std::vector<F4Vec> enumerate_points<F4Field>(int);
template std::vector<SubspaceF2> enumerate_lines<F2Field>(int);
template std::vector<SubspaceF4> enumerate_lines<F4Field>(int);

}  // namespace fgeom
