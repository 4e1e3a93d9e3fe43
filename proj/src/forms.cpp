#include "fgeom/forms.hpp"

#include <algorithm>
#include <numeric>

#include "fgeom/bitvec.hpp"
#include "fgeom/kernels.hpp"
#include "maximal_subspaces.hpp"

namespace fgeom {

std::string to_string(QuadricKind k) {
    switch (k) {
        case QuadricKind::hyperbolic: return "hyperbolic";
        case QuadricKind::elliptic: return "elliptic";
        default: return "degenerate";
    }
}

QuadraticForm::QuadraticForm(int dim) : dim_(dim), upper_(dim, 0), polar_(dim, 0) {
    if (dim < 1 || dim > kMaxCoords)
        throw std::invalid_argument("QuadraticForm: dimension out of range");
}

QuadraticForm::QuadraticForm(int dim, std::vector<uint32_t> upper_rows)
    : dim_(dim), upper_(std::move(upper_rows)) {
    if (dim < 1 || dim > kMaxCoords)
        throw std::invalid_argument("QuadraticForm: dimension out of range");
    if (int(upper_.size()) != dim)
        throw std::invalid_argument("QuadraticForm: row count mismatch");
    for (int i = 0; i < dim; ++i) {
        if (upper_[i] & ~(low_bits(dim) & ~low_bits(i)))
            throw std::invalid_argument("QuadraticForm: rows must be upper triangular");
    }
    rebuild_polar();
}

void QuadraticForm::set_coeff(int i, int j, uint8_t c) {
    if (i > j || j >= dim_) throw std::invalid_argument("QuadraticForm: bad coefficient index");
    upper_[i] = (upper_[i] & ~(1u << j)) | (uint32_t(c & 1u) << j);
    rebuild_polar();
}

void QuadraticForm::rebuild_polar() {
    polar_.assign(dim_, 0);
    for (int i = 0; i < dim_; ++i) {
        uint32_t off = upper_[i] & ~(1u << i);
        polar_[i] ^= off;
        for (int j = i + 1; j < dim_; ++j) {
            if ((off >> j) & 1u) polar_[j] ^= 1u << i;
        }
    }
}

void QuadraticForm::eval_batch(const uint32_t* xs, size_t n, uint8_t* out) const {
    kern::active().quad_eval(upper_.data(), dim_, xs, n, out);
}

QuadraticForm standard_form(QuadricKind kind, int half_dim) {
    if (kind == QuadricKind::degenerate)
        throw std::invalid_argument("standard_form: no degenerate standard form");
    if (half_dim < 1 || 2 * half_dim > kMaxCoords)
        throw std::invalid_argument("standard_form: dimension out of range");
    const int n = 2 * half_dim;
    std::vector<uint32_t> rows(n, 0);
    for (int i = 0; i < half_dim; ++i) rows[2 * i] = 1u << (2 * i + 1);
    if (kind == QuadricKind::elliptic) {
        rows[n - 2] |= 1u << (n - 2);
        rows[n - 1] |= 1u << (n - 1);
    }
    return QuadraticForm(n, std::move(rows));
}

std::vector<uint32_t> quadric_point_codes(const QuadraticForm& q) {
    const size_t ncodes = size_t(1) << q.dim();
    if (ncodes - 1 > kEnumBudget)
        throw std::invalid_argument("quadric_point_codes: budget exceeded");
    std::vector<uint32_t> codes(ncodes - 1);
    std::iota(codes.begin(), codes.end(), 1u);
    std::vector<uint8_t> vals(codes.size());
    q.eval_batch(codes.data(), codes.size(), vals.data());
    std::vector<uint32_t> pts;
    for (size_t i = 0; i < codes.size(); ++i) {
        if (!vals[i]) pts.push_back(codes[i]);
    }
    return pts;
}

QuadricKind classify_quadric(const QuadraticForm& q) {
    const int n = q.dim();
    if (n % 2) throw std::invalid_argument("classify_quadric: dimension must be even");
    if (rank_of<F2Field>(q.polar_rows(), n) < n) return QuadricKind::degenerate;
    const int half = n / 2;
    const uint64_t count = quadric_point_codes(q).size();
    const uint64_t hyp = (uint64_t(1) << (n - 1)) + (uint64_t(1) << (half - 1)) - 1;
    const uint64_t ell = (uint64_t(1) << (n - 1)) - (uint64_t(1) << (half - 1)) - 1;
    if (count == hyp) return QuadricKind::hyperbolic;
    if (count == ell) return QuadricKind::elliptic;
    throw std::logic_error("classify_quadric: nondegenerate form with impossible point count");
}

HermitianForm::HermitianForm(int n, std::vector<Gf4> gram) : n_(n), gram_(std::move(gram)) {
    if (n < 1 || 2 * n > kMaxCoords)
        throw std::invalid_argument("HermitianForm: dimension out of range");
    if (gram_.size() != size_t(n) * size_t(n))
        throw std::invalid_argument("HermitianForm: gram size mismatch");
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (gram(i, j) != gram(j, i).conj())
                throw std::invalid_argument("HermitianForm: matrix not conjugate-symmetric");
        }
    }
}

HermitianForm HermitianForm::standard(int n) {
    std::vector<Gf4> gram(size_t(n) * size_t(n), Gf4::zero());
    for (int i = 0; i < n; ++i) gram[size_t(i) * n + i] = Gf4::one();
    return HermitianForm(n, std::move(gram));
}

Gf4 HermitianForm::sesqui(const F4Vec& u, const F4Vec& v) const {
    if (u.len != n_ || v.len != n_)
        throw std::invalid_argument("HermitianForm: dimension mismatch");
    Gf4 acc = Gf4::zero();
    for (int i = 0; i < n_; ++i) {
        Gf4 ui = u.at(i);
        if (ui.is_zero()) continue;
        for (int j = 0; j < n_; ++j) {
            acc = acc + ui * gram(i, j) * v.at(j).conj();
        }
    }
    return acc;
}

uint8_t HermitianForm::norm(const F4Vec& v) const {
    Gf4 val = sesqui(v, v);
    if (val.code() > 1)
        throw std::logic_error("HermitianForm: h(v,v) outside the prime subfield");
    return val.code();
}

bool HermitianForm::nonsingular() const {
    std::vector<uint32_t> rows(n_);
    for (int i = 0; i < n_; ++i) {
        uint32_t w = 0;
        for (int j = 0; j < n_; ++j) w |= uint32_t(gram(i, j).code()) << (2 * j);
        rows[i] = w;
    }
    return rank_of<F4Field>(rows, n_) == n_;
}

std::vector<uint32_t> hermitian_variety_codes(const HermitianForm& h) {
    if (!h.nonsingular())
        throw std::invalid_argument("hermitian_variety: singular form");
    std::vector<uint32_t> pts;
    for (const F4Vec& p : enumerate_points<F4Field>(h.dim() - 1)) {
        if (h.norm(p) == 0) pts.push_back(p.packed);
    }
    return pts;
}

QuadraticForm pullback_quadratic(const HermitianForm& h) {
    const int n = 2 * h.dim();
    auto value = [&](uint32_t w) {
        return h.norm(field_lift(F2Vec(w, n)));
    };
    // h(v,v) is a quadratic function of the GF(2) coordinates, so it is
    // pinned down by its values on basis vectors and their pairwise sums.
    std::vector<uint32_t> rows(n, 0);
    std::vector<uint8_t> diag(n);
    for (int i = 0; i < n; ++i) {
        diag[i] = value(1u << i);
        rows[i] |= uint32_t(diag[i]) << i;
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            uint8_t c = uint8_t(value((1u << i) | (1u << j)) ^ diag[i] ^ diag[j]);
            rows[i] |= uint32_t(c) << j;
        }
    }
    QuadraticForm q(n, std::move(rows));
    for (uint64_t w = 0; w < (uint64_t(1) << n); ++w) {
        if (q(uint32_t(w)) != value(uint32_t(w)))
            throw std::logic_error("pullback_quadratic: interpolation mismatch");
    }
    return q;
}

namespace {

// Basis (u1,v1,u2,v2,...) with Q(u_i)=Q(v_i)=0 and B(u_i,v_i)=1 blockwise;
// an elliptic form ends with a block where Q(u)=Q(v)=B(u,v)=1.  Expressed in
// this basis the form becomes standard_form(kind, dim/2).
std::vector<uint32_t> witt_basis(const QuadraticForm& q) {
    const int n = q.dim();
    std::vector<uint32_t> remaining;
    for (int i = 0; i < n; ++i) remaining.push_back(1u << i);
    std::vector<uint32_t> basis;

    while (!remaining.empty()) {
        const int k = int(remaining.size());
        uint32_t u = 0;
        for (uint32_t m = 1; m < (1u << k) && !u; ++m) {
            uint32_t v = 0;
            for (int i = 0; i < k; ++i)
                if ((m >> i) & 1u) v ^= remaining[i];
            if (q(v) == 0) u = v;
        }
        if (u == 0) {
            // No singular vector: the leftover plane is the elliptic block.
            if (k != 2 || q.polar(remaining[0], remaining[1]) != 1)
                throw std::logic_error("witt_basis: anisotropic part is not a plane");
            basis.push_back(remaining[0]);
            basis.push_back(remaining[1]);
            break;
        }
        uint32_t v = 0;
        for (uint32_t r : remaining) {
            if (q.polar(u, r)) { v = r; break; }
        }
        if (v == 0) throw std::logic_error("witt_basis: polar form degenerate on complement");
        if (q(v)) v ^= u;
        basis.push_back(u);
        basis.push_back(v);

        std::vector<uint32_t> projected;
        for (uint32_t r : remaining) {
            uint32_t rp = r;
            if (q.polar(rp, v)) rp ^= u;
            if (q.polar(rp, u)) rp ^= v;
            if (rp) projected.push_back(rp);
        }
        SubspaceF2 comp = span<F2Field>(projected, n);
        if (comp.vdim() != k - 2)
            throw std::logic_error("witt_basis: complement has unexpected dimension");
        remaining = comp.rows;
    }
    return basis;
}

}  // namespace

Gf2Mat form_equivalence_map(const QuadraticForm& from, const QuadraticForm& to) {
    if (from.dim() != to.dim())
        throw std::invalid_argument("form_equivalence_map: dimension mismatch");
    QuadricKind k1 = classify_quadric(from);
    QuadricKind k2 = classify_quadric(to);
    if (k1 == QuadricKind::degenerate || k2 == QuadricKind::degenerate)
        throw std::invalid_argument("form_equivalence_map: degenerate form");
    if (k1 != k2)
        throw std::invalid_argument("form_equivalence_map: forms of different kind");

    const int n = from.dim();
    Gf2Mat m1(n, witt_basis(from));
    Gf2Mat m2(n, witt_basis(to));
    auto m1_inv = m1.inverse();
    if (!m1_inv) throw std::logic_error("form_equivalence_map: Witt basis not invertible");
    Gf2Mat t = m2 * *m1_inv;

    const size_t ncodes = size_t(1) << n;
    std::vector<uint32_t> codes(ncodes);
    std::iota(codes.begin(), codes.end(), 0u);
    std::vector<uint32_t> mapped(ncodes);
    kern::active().matvec(t.cols.data(), n, codes.data(), ncodes, mapped.data());
    std::vector<uint8_t> lhs(ncodes), rhs(ncodes);
    to.eval_batch(mapped.data(), ncodes, lhs.data());
    from.eval_batch(codes.data(), ncodes, rhs.data());
    if (lhs != rhs) throw std::logic_error("form_equivalence_map: post-check failed");
    return t;
}

std::vector<SubspaceF2> enumerate_generators(const QuadraticForm& q) {
    if (q.dim() > 8)
        throw std::invalid_argument("enumerate_generators: dimension budget exceeded");
    if (classify_quadric(q) == QuadricKind::degenerate)
        throw std::invalid_argument("enumerate_generators: degenerate form");
    const size_t ncodes = size_t(1) << q.dim();
    BitVec allowed(ncodes);
    for (uint32_t c : quadric_point_codes(q)) allowed.set(c);
    return detail::maximal_orthogonal_subspaces(
        q.dim(), allowed, [&](uint32_t p) { return q.polar_mask(p); });
}

std::pair<std::vector<int>, std::vector<int>> generator_families(
    const std::vector<SubspaceF2>& gens) {
    if (gens.empty())
        throw std::invalid_argument("generator_families: empty generator list");
    const int ambient = gens[0].ambient;
    auto same_family = [&](const SubspaceF2& a, const SubspaceF2& b) {
        std::vector<uint32_t> stacked = a.rows;
        stacked.insert(stacked.end(), b.rows.begin(), b.rows.end());
        int meet = a.vdim() + b.vdim() - rank_of<F2Field>(stacked, ambient);
        return (meet & 1) == (a.vdim() & 1);
    };

    std::pair<std::vector<int>, std::vector<int>> fam;
    std::vector<int> cls(gens.size());
    for (size_t i = 0; i < gens.size(); ++i) {
        cls[i] = i == 0 ? 0 : (same_family(gens[0], gens[i]) ? 0 : 1);
        (cls[i] == 0 ? fam.first : fam.second).push_back(int(i));
    }
    for (size_t i = 0; i < gens.size(); ++i) {
        for (size_t j = i + 1; j < gens.size(); ++j) {
            if (same_family(gens[i], gens[j]) != (cls[i] == cls[j]))
                throw std::logic_error("generator_families: relation is not an equivalence");
        }
    }
    return fam;
}

}  // namespace fgeom
