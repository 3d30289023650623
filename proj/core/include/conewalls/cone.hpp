#pragma once

#include <vector>

#include "conewalls/lattice.hpp"

namespace conewalls {

/// Output of the double description method on a homogeneous system
/// {x : row . x >= 0 for each row}: a lineality basis plus the extreme rays
/// of the pointed quotient.  All vectors are primitive integral.
struct DdResult {
    std::vector<IntVec> lineality;
    std::vector<IntVec> rays;
};

/// Double description with exact arithmetic.  Rows act by the plain
/// coordinate dot product.  Extreme-ray adjacency during insertion uses the
/// rank of the common tight constraints.
DdResult dd_rays(int n, const std::vector<IntVec>& rows);

enum class Strictness { Closed, RelativeInterior };
enum class HalfspaceSign { NonNegative, NonPositive, Zero };

/// Rational polyhedral cone inside a lattice, kept in a canonical joint
/// description: minimal primitive generators (extreme rays, sorted), a
/// Hermite-reduced lineality basis, and facet/equation functionals stored as
/// primitive lattice vectors acting through the Gram pairing.  Cones of any
/// dimension are first class; facets are relative to the span.
class RationalCone {
public:
    /// An empty placeholder; real cones come from the factory functions.
    RationalCone() = default;

    static RationalCone from_generators(LatticePtr L, const std::vector<IntVec>& gens);
    static RationalCone from_generators(LatticePtr L, const std::vector<RatVec>& gens);

    const LatticePtr& lattice() const { return lat_; }
    const std::vector<IntVec>& generators() const { return generators_; }
    const std::vector<IntVec>& lineality() const { return lineality_; }
    const std::vector<IntVec>& facet_normals() const { return facets_; }
    const std::vector<IntVec>& equations() const { return equations_; }
    const std::vector<IntVec>& span_basis() const { return span_basis_; }
    int dim() const { return dim_; }
    bool pointed() const { return lineality_.empty(); }
    bool is_zero() const { return dim_ == 0; }

    bool contains(const RatVec& x, Strictness s) const;
    bool contains(const IntVec& x, Strictness s) const;
    bool span_contains(const RatVec& x) const;

    /// Sum of the extreme rays: an integral point of the relative interior
    /// (the zero vector for the zero cone).
    IntVec relative_interior_point() const;

private:
    LatticePtr lat_;
    std::vector<IntVec> generators_;
    std::vector<IntVec> lineality_;
    std::vector<IntVec> facets_;
    std::vector<IntVec> equations_;
    std::vector<IntVec> span_basis_;
    int dim_ = 0;
};

/// Canonical descriptions make equality a structural comparison.
bool cone_eq(const RationalCone& a, const RationalCone& b);

RationalCone intersect_halfspace(const RationalCone& c, const IntVec& w, HalfspaceSign sign);
RationalCone intersect(const RationalCone& a, const RationalCone& b);

/// Image of the cone under an integral matrix acting on coordinates.
RationalCone transform(const RationalCone& c, const IntMat& m);

/// The facet cut out by facet_normals()[index].
RationalCone facet_cone(const RationalCone& c, int index);

/// Whether the hyperplane orthogonal to v meets c in a point of the open
/// positive cone.  Requires every generator of c to lie in the closed
/// positive cone (PreconditionError otherwise) and v != 0.  Decided by
/// classifying generator pairings against v; no sampling involved.
bool wall_separates(const RationalCone& c, const IntVec& v);

/// An integral point of v-perp meeting c in the open positive cone, when one
/// exists.  Exact witness for wall_separates.
std::optional<IntVec> separation_witness(const RationalCone& c, const IntVec& v);

}  // namespace conewalls
