#include "maximal_subspaces.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "fgeom/kernels.hpp"

namespace fgeom::detail {

namespace {

struct Search {
    size_t ncodes;
    int dim;
    std::vector<BitVec> perp;  // perp[p], indexed by code, only for allowed p
    std::vector<SubspaceF2>* out;

    // span_pts: nonzero vectors of the current subspace; chain: its canonical
    // generating sequence; cand: allowed points orthogonal to the whole
    // subspace and outside it.
    void visit(std::vector<uint32_t>& chain, std::vector<uint32_t>& span_pts,
               const BitVec& cand) {
        if (cand.none()) {
            out->push_back(span<F2Field>(chain, dim));
            return;
        }
        const uint32_t last = chain.empty() ? 0 : chain.back();
        for (size_t p = cand.next_set(last + 1); p < ncodes; p = cand.next_set(p + 1)) {
            // p must be the smallest point of the coset p + span, otherwise
            // this subspace is reached through a different chain.
            bool coset_min = true;
            for (uint32_t s : span_pts) {
                if ((uint32_t(p) ^ s) < p) { coset_min = false; break; }
            }
            if (!coset_min) continue;

            BitVec next_cand = cand;
            next_cand &= perp[p];
            size_t base = span_pts.size();
            span_pts.push_back(uint32_t(p));
            next_cand.reset(p);
            for (size_t i = 0; i < base; ++i) {
                uint32_t t = span_pts[i] ^ uint32_t(p);
                span_pts.push_back(t);
                next_cand.reset(t);
            }
            chain.push_back(uint32_t(p));
            visit(chain, span_pts, next_cand);
            chain.pop_back();
            span_pts.resize(base);
        }
    }
};

}  // namespace

std::vector<SubspaceF2> maximal_orthogonal_subspaces(
    int dim, const BitVec& allowed,
    const std::function<uint32_t(uint32_t)>& perp_mask) {
    if (dim < 1 || dim > 16)
        throw std::invalid_argument("maximal_orthogonal_subspaces: dimension out of range");
    const size_t ncodes = size_t(1) << dim;
    if (allowed.size() != ncodes)
        throw std::invalid_argument("maximal_orthogonal_subspaces: bitset size mismatch");

    std::vector<uint32_t> codes(ncodes - 1);
    std::iota(codes.begin(), codes.end(), 1u);
    std::vector<uint8_t> pairings(codes.size());

    Search s;
    s.ncodes = ncodes;
    s.dim = dim;
    s.perp.resize(ncodes);
    const auto& k = kern::active();
    for (size_t p = allowed.next_set(1); p < ncodes; p = allowed.next_set(p + 1)) {
        k.dot_parity(perp_mask(uint32_t(p)), codes.data(), codes.size(), pairings.data());
        BitVec b(ncodes);
        for (size_t i = 0; i < codes.size(); ++i) {
            if (!pairings[i] && allowed.test(codes[i])) b.set(codes[i]);
        }
        s.perp[p] = std::move(b);
    }

    std::vector<SubspaceF2> result;
    s.out = &result;
    std::vector<uint32_t> chain, span_pts;
    BitVec cand = allowed;
    cand.reset(0);
    s.visit(chain, span_pts, cand);
    std::sort(result.begin(), result.end());
    return result;
}

}  // namespace fgeom::detail
