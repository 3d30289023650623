#pragma once

#include <vector>

#include "conewalls/walls.hpp"

namespace conewalls {

/// Closed chamber of a wall subdivision.  wall_signs[k] records the side of
/// the k-th wall: +1 or -1 for the strict side of the relative interior, 0
/// when the wall contains the whole chamber.
struct Chamber {
    int id = -1;
    RationalCone cone;
    std::vector<int> wall_signs;
};

struct Subdivision {
    RationalCone base;
    std::vector<IntVec> walls;  // normalized, deduplicated, sorted
    std::vector<Chamber> chambers;
};

/// Splits the cone along every wall hyperplane that strictly separates a
/// piece.  Chamber ids follow the lexicographic order of the canonical
/// generator lists, so the result is independent of the input wall order.
Subdivision subdivide(const RationalCone& cone, const std::vector<IntVec>& walls);

struct LocateResult {
    bool on_boundary = false;
    int chamber_id = -1;  // valid when !on_boundary
};

/// Chamber whose relative interior contains x, or a boundary indicator.
/// Throws NotInConeError when x lies outside the subdivided cone.
LocateResult locate(const Subdivision& s, const RatVec& x);

struct AdjacencyEdge {
    int a = -1;
    int b = -1;
    IntVec wall;
};

/// Pairs of chambers sharing a full facet, labelled by the wall vanishing on
/// the shared facet with opposite signs on the two sides.
std::vector<AdjacencyEdge> adjacency(const Subdivision& s);

}  // namespace conewalls
