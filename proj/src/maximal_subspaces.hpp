#pragma once

#include <functional>
#include <vector>

#include "fgeom/bitvec.hpp"
#include "fgeom/projgeom.hpp"

namespace fgeom::detail {

// Enumerates every subspace S of GF(2)^dim that is maximal with respect to:
//   - the code of every nonzero vector of S lies in `allowed`, and
//   - B(u, v) = 0 for all u, v in S, where B(p, x) = parity(perp_mask(p) & x).
//
// `allowed` must be closed under addition of B-orthogonal members (true for
// singular points of a quadric and for the full point set), so the span of
// a pairwise-orthogonal allowed set stays inside `allowed`.
//
// Each subspace is visited exactly once via its canonical generating chain
// (repeatedly append the smallest point outside the current span), so the
// output is duplicate-free and deterministic; it is returned sorted by
// canonical basis.
std::vector<SubspaceF2> maximal_orthogonal_subspaces(
    int dim, const BitVec& allowed,
    const std::function<uint32_t(uint32_t)>& perp_mask);

}  // namespace fgeom::detail
