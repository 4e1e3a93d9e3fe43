#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fgeom/galois.hpp"
#include "fgeom/projgeom.hpp"

namespace fgeom {

enum class QuadricKind { hyperbolic, elliptic, degenerate };

std::string to_string(QuadricKind k);

// Quadratic form over GF(2) given by an upper-triangular coefficient
// matrix: Q(x) = sum_{i<=j} U[i][j] x_i x_j.  The attached polar form
// B(x,y) = Q(x+y)+Q(x)+Q(y) is alternating; the diagonal of U does not
// contribute to it.
class QuadraticForm {
  public:
    explicit QuadraticForm(int dim);
    QuadraticForm(int dim, std::vector<uint32_t> upper_rows);

    int dim() const { return dim_; }
    const std::vector<uint32_t>& upper_rows() const { return upper_; }

    uint8_t coeff(int i, int j) const { return uint8_t((upper_[i] >> j) & 1u); }
    void set_coeff(int i, int j, uint8_t c);

    uint8_t operator()(uint32_t x) const {
        uint32_t acc = 0;
        for (int i = 0; i < dim_; ++i) {
            acc ^= ((x >> i) & 1u) & uint32_t(std::popcount(upper_[i] & x));
        }
        return uint8_t(acc & 1u);
    }

    void eval_batch(const uint32_t* xs, size_t n, uint8_t* out) const;

    // Rows of the symmetric polar matrix P = U + U^T (zero diagonal).
    const std::vector<uint32_t>& polar_rows() const { return polar_; }

    // Word u with B(x, y) = parity(u & y).
    uint32_t polar_mask(uint32_t x) const {
        uint32_t u = 0;
        for (int i = 0; i < dim_; ++i)
            if ((x >> i) & 1u) u ^= polar_[i];
        return u;
    }

    uint8_t polar(uint32_t x, uint32_t y) const {
        return uint8_t(std::popcount(polar_mask(x) & y) & 1u);
    }

    friend bool operator==(const QuadraticForm& a, const QuadraticForm& b) {
        return a.dim_ == b.dim_ && a.upper_ == b.upper_;
    }

  private:
    void rebuild_polar();

    int dim_ = 0;
    std::vector<uint32_t> upper_;
    std::vector<uint32_t> polar_;
};

// The nondegenerate alternating pairing on GF(2)^{2N} with coordinates in
// (a_i, b_i) pairs: <(a|b),(a'|b')> = a.b' + a'.b.
struct SymplecticForm {
    int dim = 0;

    explicit SymplecticForm(int d) : dim(d) {
        if (d < 2 || d % 2) throw std::invalid_argument("SymplecticForm: dimension must be even");
    }
    static uint8_t pair(uint32_t v, uint32_t w) {
        return uint8_t(std::popcount(v & swap_pair_bits(w)) & 1u);
    }
};

// x_1x_2 + x_3x_4 + ... for the hyperbolic kind; the elliptic kind replaces
// the last block by x^2 + xy + y^2.
QuadraticForm standard_form(QuadricKind kind, int half_dim);

// Canonical codes of projective points with Q = 0, ascending.
std::vector<uint32_t> quadric_point_codes(const QuadraticForm& q);

// Degenerate iff the polar form has a nonzero radical; otherwise decided by
// the point count 2^{2N-1} +- 2^{N-1} - 1.
QuadricKind classify_quadric(const QuadraticForm& q);

// Sesquilinear form over GF(4) with conjugation on the second argument:
// h(u,v) = sum u_i M[i][j] conj(v_j), M equal to its conjugate transpose.
class HermitianForm {
  public:
    HermitianForm(int n, std::vector<Gf4> gram);
    static HermitianForm standard(int n);

    int dim() const { return n_; }
    Gf4 gram(int i, int j) const { return gram_[size_t(i) * n_ + j]; }

    Gf4 sesqui(const F4Vec& u, const F4Vec& v) const;
    // h(v,v) is fixed by conjugation, hence 0 or 1.
    uint8_t norm(const F4Vec& v) const;
    bool nonsingular() const;

  private:
    int n_ = 0;
    std::vector<Gf4> gram_;
};

// Canonical GF(4) point codes with h(v,v) = 0, ascending.  Requires a
// nonsingular form.
std::vector<uint32_t> hermitian_variety_codes(const HermitianForm& h);

// The GF(2) quadratic form w -> h(lift(w), lift(w)) on GF(2)^{2n}.
QuadraticForm pullback_quadratic(const HermitianForm& h);

// Invertible T with to(T x) = from(x) for all x, built by mapping a Witt
// basis of `from` onto one of `to`.  Throws if the kinds differ or either
// form is degenerate.  The result is verified on all 2^dim vectors.
Gf2Mat form_equivalence_map(const QuadraticForm& from, const QuadraticForm& to);

// All maximal totally singular subspaces of a nondegenerate quadric,
// sorted by canonical basis.  Dimension capped at 8.
std::vector<SubspaceF2> enumerate_generators(const QuadraticForm& q);

// Splits hyperbolic-quadric generators into the two systems by intersection
// parity: G, H lie together iff vdim(G meet H) = vdim(G) (mod 2).  Verifies
// on every pair that the relation is an equivalence with two classes.
std::pair<std::vector<int>, std::vector<int>> generator_families(
    const std::vector<SubspaceF2>& gens);

}  // namespace fgeom
