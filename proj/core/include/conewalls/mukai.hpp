#pragma once

#include <vector>

#include "conewalls/walls.hpp"

namespace conewalls {

/// Mukai-lattice data: a nondegenerate symmetric ambient pairing together
/// with a primitive vector v of even square at least 2, and the saturated
/// orthogonal complement of v with its induced pairing.
struct MukaiSetup {
    IntMat ambient_gram;
    IntVec v;
    Int vv;           // (v, v)
    Sublattice vperp;  // basis rows are ambient vectors spanning v-perp
};

/// Validates and completes the setup.  Throws ValidationError when the
/// pairing is not symmetric or v fails its conditions, DegenerateError when
/// the pairing is singular, ZeroVectorError on v = 0.
MukaiSetup make_mukai_setup(IntMat ambient_gram, IntVec v);

/// Orthogonal projection x - ((v,x)/(v,v)) v, returned in v-perp basis
/// coordinates.
RatVec project(const MukaiSetup& ms, const IntVec& x);

/// The lower bound -2 - (v,v)/4 on squares of projected wall classes.
Rat wall_bound(const MukaiSetup& ms);

/// A wall class of the projected set, together with the canonical witness
/// showing it lifts: witness = direction * lift_t / (v,v) + v * lift_k / (v,v)
/// is an ambient integer vector of square >= -2 with pairing lift_k against v.
struct SigmaWall {
    IntVec direction;  // primitive, in v-perp basis coordinates, sign-normalized
    Int square;        // (direction, direction) under the induced pairing
    Rat sigma_square;  // square of the witness projection lambda = lift_t/(v,v) * direction
    Int lift_t;
    Int lift_k;        // 0 <= lift_k <= (v,v)/2
    IntVec witness;    // ambient coordinates
};

struct MukaiResult {
    Rat bound;
    std::vector<SigmaWall> walls;  // canonical wall order
};

/// Projected wall classes whose hyperplanes meet the given cone inside the
/// open positive cone of v-perp.  Cone generators are given in v-perp basis
/// coordinates and must lie in one closed positive cone; PreconditionError
/// otherwise.  Works in the lattice rescaled by (v,v), where every projected
/// class is integral, then keeps exactly the directions with a liftable
/// multiple.
MukaiResult sigma_walls_meeting_cone(const MukaiSetup& ms, const std::vector<IntVec>& cone_gens);

}  // namespace conewalls
