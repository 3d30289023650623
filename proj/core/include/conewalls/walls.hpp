#pragma once

#include <vector>

#include "conewalls/cone.hpp"

namespace conewalls {

/// Wall of bounded negative square: hyperplane v-perp identified by a
/// primitive sign-normalized lattice vector.  source_i/source_j record the
/// generator pair whose enumeration produced the wall (diagnostic only,
/// -1 when not applicable).
struct Wall {
    IntVec v;
    Int square;
    int source_i = -1;
    int source_j = -1;
};

bool operator==(const Wall& a, const Wall& b);
bool wall_less(const Wall& a, const Wall& b);

/// Query: walls v with (v,v) > -N whose hyperplane meets the cone inside
/// the open positive cone.
struct WallQuery {
    RationalCone cone;
    Int max_neg_square;  // N >= 1
};

/// All walls with (v,v) > -N vanishing somewhere on the closed segment from
/// x1 to x2.  Both endpoints must be integral interior vectors, linearly
/// independent.  Enumeration runs over the exact coefficient ranges of the
/// orthogonal decomposition v = a x1 + b x2 + xi; every candidate passes
/// exact final checks, so over-generous interval endpoints cannot leak in.
std::vector<Wall> walls_on_segment(const LatticePtr& L, const IntVec& x1, const IntVec& x2,
                                   const Int& N);

/// All walls with (v,v) > -N whose hyperplane meets span{x,y} inside the
/// open positive cone, for isotropic x (with (x,h) > 0) and interior
/// rational y independent of x.  Works with the isotropic pair (x, z) where
/// z spans the second isotropic ray of the plane.
std::vector<Wall> walls_on_isotropic_plane(const LatticePtr& L, const IntVec& x, const RatVec& y,
                                           const Int& N);

/// All walls with (v,v) > -N meeting the cone inside the open positive
/// cone.  Dispatches generator pairs to the segment or isotropic-plane
/// enumerations and filters the union by the exact separation predicate.
std::vector<Wall> walls_meeting_cone(const WallQuery& q);

/// Exhaustive box-scan oracle: same result as walls_meeting_cone whenever
/// box >= brute_force_box(q).
std::vector<Wall> brute_force_walls(const WallQuery& q, const Int& box);

/// Coordinate bound covering every enumeration candidate of
/// walls_meeting_cone for this query; makes the box oracle complete.
Int brute_force_box(const WallQuery& q);

}  // namespace conewalls
