#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "fgeom/forms.hpp"
#include "fgeom/pauli.hpp"
#include "fgeom/spreads.hpp"

namespace fgeom {

using Detail = std::variant<int64_t, bool, std::string>;

// One named check with ordered numeric/string details; a failing report
// carries a witness describing the violation.
struct VerificationReport {
    std::string name;
    bool pass = false;
    std::vector<std::pair<std::string, Detail>> details;
    std::string witness;

    void add(std::string key, int64_t v) { details.emplace_back(std::move(key), v); }
    void add(std::string key, bool v) { details.emplace_back(std::move(key), v); }
    void add(std::string key, std::string v) { details.emplace_back(std::move(key), std::move(v)); }

    void fail(std::string why) {
        pass = false;
        witness = std::move(why);
    }
};

// Indices of the spread lines fully contained in the quadric, provided they
// partition its point set; otherwise empty.
std::optional<std::vector<int>> induced_spread_on_quadric(const Spread& s,
                                                          const QuadraticForm& q);

// |quadric| mod 3 decides whether any partition into lines can exist.  The
// report passes when the residue matches the parity rule: remainder 2 (no
// partition) exactly for hyperbolic/odd-N and elliptic/even-N.
VerificationReport counting_obstruction(int N, QuadricKind kind);

// Pipeline: pull the standard Hermitian form back to a quadric, classify it
// (hyperbolic iff N even), partition it by Desarguesian spread lines, and
// match the Segre image of the partition against the Hermitian variety.
VerificationReport dye_verify(int N);

// The even/odd dichotomy for symmetric operators.  Even N: transport the
// spread onto the symmetric-operator quadric by a form equivalence and
// exhibit the three-to-one mapping onto H(N-1,4).  Odd N: certify
// impossibility by the counting obstruction.
VerificationReport main_observation(int N);

struct ThreeToOneRow {
    F4Vec point;                        // canonical point of PG(N-1,4)
    std::array<PauliOperator, 3> ops;   // the collinear operator triple
};

// One row per Hermitian-variety point, sorted by point code; the rows
// partition the symmetric operators.  N must be even.
std::vector<ThreeToOneRow> three_to_one_table(int N);

// Abstract point-line incidence structure.
struct PointLineGeometry {
    std::vector<std::string> points;        // opaque labels
    std::vector<std::vector<int>> lines;    // sorted point indices, no repeats
    std::optional<std::pair<int, int>> st;  // (s, t) when known
};

// The 45 points of H(3,4) together with the 27 fully contained GF(4) lines.
PointLineGeometry gq_from_hermitian_surface();

// Checks the generalized-quadrangle axioms: constant line size s+1, constant
// point degree t+1, two points on at most one line, and a unique collinear
// point on every non-incident point/line pair.
VerificationReport verify_gq_axioms(const PointLineGeometry& g);

// Points and lines interchanged, incidence transposed.
PointLineGeometry dual_geometry(const PointLineGeometry& g);

}  // namespace fgeom
