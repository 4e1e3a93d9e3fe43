#include "fgeom/spreads.hpp"

#include <algorithm>
#include <set>

#include "fgeom/bitvec.hpp"

namespace fgeom {

bool spread_admissible(int d, int t) {
    if (d < 1 || t < 0 || t >= d)
        throw std::invalid_argument("spread_admissible: require 0 <= t < d, d >= 1");
    return (d + 1) % (t + 1) == 0;
}

Spread desarguesian_line_spread(int N) {
    if (N < 2 || N > 6)
        throw std::invalid_argument("desarguesian_line_spread: N must be in 2..6");
    Spread s;
    s.n = N;
    for (const F4Vec& p : enumerate_points<F4Field>(N - 1)) {
        const F4Vec po = scale(p, Gf4::omega());
        s.lines.push_back(span<F2Field>(
            {field_reduce(p).bits, field_reduce(po).bits}, 2 * N));
    }
    return s;
}

bool is_spread(const std::vector<SubspaceF2>& lines, int d) {
    const int ncoords = d + 1;
    const size_t ncodes = size_t(1) << ncoords;
    BitVec covered(ncodes);
    size_t total = 0;
    for (const SubspaceF2& l : lines) {
        if (l.ambient != ncoords || l.vdim() != 2) return false;
        for (uint32_t c : points_of(l)) {
            if (covered.test(c)) return false;  // two lines meet
            covered.set(c);
            ++total;
        }
    }
    return total == ncodes - 1;
}

bool is_geometric(const Spread& s) {
    if (!is_spread(s.lines, s.ambient() - 1)) return false;
    const size_t nlines = s.lines.size();
    std::set<std::vector<uint32_t>> seen;
    for (size_t i = 0; i < nlines; ++i) {
        for (size_t j = i + 1; j < nlines; ++j) {
            std::vector<uint32_t> gens = s.lines[i].rows;
            gens.insert(gens.end(), s.lines[j].rows.begin(), s.lines[j].rows.end());
            SubspaceF2 solid = span<F2Field>(gens, s.ambient());
            if (!seen.insert(solid.rows).second) continue;

            // The 15 points of the solid must be exactly covered by the
            // spread lines lying inside it.
            std::set<uint32_t> remaining;
            for (uint32_t c : points_of(solid)) remaining.insert(c);
            int contained = 0;
            for (const SubspaceF2& l : s.lines) {
                if (!solid.contains(l.rows[0]) || !solid.contains(l.rows[1])) continue;
                ++contained;
                for (uint32_t c : points_of(l)) {
                    if (!remaining.erase(c)) return false;
                }
            }
            if (contained != 5 || !remaining.empty()) return false;
        }
    }
    return true;
}

int SegreModel::line_index(const SubspaceF2& line) const {
    auto it = index_of_line.find(line.rows);
    return it == index_of_line.end() ? -1 : it->second;
}

SegreModel segre_model(const Spread& s) {
    if (!is_spread(s.lines, s.ambient() - 1))
        throw std::invalid_argument("segre_model: input is not a spread");
    if (!is_geometric(s))
        throw std::invalid_argument("segre_model: spread is not geometric");

    SegreModel m;
    m.spread = s;
    for (size_t i = 0; i < s.lines.size(); ++i) {
        const uint32_t rep = points_of(s.lines[i]).front();
        m.point_map.push_back(canonical_point(field_lift(F2Vec(rep, s.ambient()))));
        m.index_of_line[s.lines[i].rows] = int(i);
    }

    // The images must exhaust the points of PG(N-1,4).
    std::vector<uint32_t> image;
    for (const F4Vec& p : m.point_map) image.push_back(p.packed);
    std::sort(image.begin(), image.end());
    std::vector<uint32_t> all;
    for (const F4Vec& p : enumerate_points<F4Field>(s.n - 1)) all.push_back(p.packed);
    if (image != all)
        throw std::logic_error("segre_model: point map is not a bijection onto PG(N-1,4)");

    // Solids spanned by line pairs; a solid reached from two different
    // pairs must receive the same GF(4) line.
    std::map<std::vector<uint32_t>, SubspaceF4> solids;
    for (size_t i = 0; i < s.lines.size(); ++i) {
        for (size_t j = i + 1; j < s.lines.size(); ++j) {
            std::vector<uint32_t> gens = s.lines[i].rows;
            gens.insert(gens.end(), s.lines[j].rows.begin(), s.lines[j].rows.end());
            SubspaceF2 solid = span<F2Field>(gens, s.ambient());
            SubspaceF4 f4line = span<F4Field>(
                {m.point_map[i].packed, m.point_map[j].packed}, s.n);
            auto [it, inserted] = solids.emplace(solid.rows, f4line);
            if (!inserted && !(it->second == f4line))
                throw std::logic_error("segre_model: solid maps to two distinct GF(4) lines");
        }
    }
    const uint64_t q_to_n = uint64_t(1) << (2 * s.n);
    const uint64_t q_to_nm1 = uint64_t(1) << (2 * (s.n - 1));
    const uint64_t expected_lines = (q_to_n - 1) * (q_to_nm1 - 1) / 45;
    if (solids.size() != expected_lines)
        throw std::logic_error("segre_model: wrong number of pair-spanned solids");

    for (auto& [rows, f4line] : solids) {
        SubspaceF2 solid;
        solid.ambient = s.ambient();
        solid.rows = rows;
        m.line_map.emplace_back(std::move(solid), f4line);
    }
    return m;
}

}  // namespace fgeom
