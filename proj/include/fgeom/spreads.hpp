#pragma once

#include <map>
#include <utility>
#include <vector>

#include "fgeom/galois.hpp"
#include "fgeom/projgeom.hpp"

namespace fgeom {

// A line spread of PG(2N-1,2): pairwise disjoint lines covering every
// point, (2^{2N}-1)/3 of them.
struct Spread {
    int n = 0;  // half-dimension parameter N
    std::vector<SubspaceF2> lines;

    int ambient() const { return 2 * n; }
};

// PG(d,q) possesses a t-spread iff (t+1) | (d+1).
bool spread_admissible(int d, int t);

// The Desarguesian line spread by field reduction: each point of PG(N-1,4)
// turns into the GF(2) line of its nonzero scalar multiples.
Spread desarguesian_line_spread(int N);

bool is_spread(const std::vector<SubspaceF2>& lines, int d);

// Geometric (normal) spread: the solid spanned by any two spread lines is
// itself partitioned by the spread lines inside it.
bool is_geometric(const Spread& s);

// Segre's correspondence for a geometric line spread: spread lines are the
// points of PG(N-1,4) and pair-spanned solids are its lines.
struct SegreModel {
    Spread spread;
    // point_map[i] is the canonical PG(N-1,4) point of spread line i.
    std::vector<F4Vec> point_map;
    // Pair-spanned solids with their GF(4) image lines, sorted by solid.
    std::vector<std::pair<SubspaceF2, SubspaceF4>> line_map;

    // Index of a spread line by its canonical basis, -1 if absent.
    int line_index(const SubspaceF2& line) const;

    std::map<std::vector<uint32_t>, int> index_of_line;
};

SegreModel segre_model(const Spread& s);

}  // namespace fgeom
