#include "conewalls/chamber.hpp"

#include <algorithm>

#include "conewalls/errors.hpp"

namespace conewalls {

namespace {

bool strictly_splits(const RationalCone& c, const IntVec& w) {
    const Lattice& lat = *c.lattice();
    bool pos = false, neg = false;
    for (const auto& g : c.generators()) {
        Int s = lat.pair(w, g);
        if (s > 0) pos = true;
        if (s < 0) neg = true;
        if (pos && neg) return true;
    }
    return false;
}

bool generators_less(const std::vector<IntVec>& a, const std::vector<IntVec>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), lex_less);
}

}  // namespace

Subdivision subdivide(const RationalCone& cone, const std::vector<IntVec>& walls) {
    Subdivision s;
    s.base = cone;
    const Lattice& lat = *cone.lattice();
    for (const auto& w : walls) s.walls.push_back(lat.normalize_wall(w));
    std::sort(s.walls.begin(), s.walls.end(), lex_less);
    s.walls.erase(std::unique(s.walls.begin(), s.walls.end()), s.walls.end());

    std::vector<RationalCone> pieces{cone};
    for (const auto& w : s.walls) {
        std::vector<RationalCone> next;
        for (const auto& piece : pieces) {
            if (strictly_splits(piece, w)) {
                next.push_back(intersect_halfspace(piece, w, HalfspaceSign::NonNegative));
                next.push_back(intersect_halfspace(piece, w, HalfspaceSign::NonPositive));
            } else {
                next.push_back(piece);
            }
        }
        pieces = std::move(next);
    }

    std::sort(pieces.begin(), pieces.end(), [](const RationalCone& a, const RationalCone& b) {
        return generators_less(a.generators(), b.generators());
    });
    for (size_t i = 0; i < pieces.size(); ++i) {
        Chamber ch;
        ch.id = static_cast<int>(i);
        ch.cone = pieces[i];
        IntVec p = pieces[i].relative_interior_point();
        for (const auto& w : s.walls) {
            Int v = lat.pair(w, p);
            ch.wall_signs.push_back(v > 0 ? 1 : (v < 0 ? -1 : 0));
        }
        s.chambers.push_back(std::move(ch));
    }
    return s;
}

LocateResult locate(const Subdivision& s, const RatVec& x) {
    if (!s.base.contains(x, Strictness::Closed))
        throw NotInConeError("point lies outside the subdivided cone");
    for (const auto& ch : s.chambers)
        if (ch.cone.contains(x, Strictness::RelativeInterior)) return {false, ch.id};
    return {true, -1};
}

std::vector<AdjacencyEdge> adjacency(const Subdivision& s) {
    std::vector<AdjacencyEdge> edges;
    const Lattice& lat = *s.base.lattice();
    int d = s.base.dim();
    for (size_t i = 0; i < s.chambers.size(); ++i)
        for (size_t j = i + 1; j < s.chambers.size(); ++j) {
            RationalCone inter = intersect(s.chambers[i].cone, s.chambers[j].cone);
            if (inter.dim() != d - 1) continue;
            AdjacencyEdge e;
            e.a = s.chambers[i].id;
            e.b = s.chambers[j].id;
            for (size_t k = 0; k < s.walls.size(); ++k) {
                if (s.chambers[i].wall_signs[k] * s.chambers[j].wall_signs[k] != -1) continue;
                bool vanishes = true;
                for (const auto& g : inter.generators())
                    if (lat.pair(s.walls[k], g) != 0) {
                        vanishes = false;
                        break;
                    }
                for (const auto& l : inter.lineality())
                    if (lat.pair(s.walls[k], l) != 0) {
                        vanishes = false;
                        break;
                    }
                if (vanishes) {
                    e.wall = s.walls[k];
                    break;
                }
            }
            if (!e.wall.empty()) edges.push_back(std::move(e));
        }
    return edges;
}

}  // namespace conewalls
