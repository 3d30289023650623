#pragma once

#include <memory>
#include <vector>

#include "conewalls/linalg.hpp"

namespace conewalls {

/// Position of a vector relative to the positive cone selected by the
/// reference vector h.
enum class ConePosition {
    InteriorPositive,  // (x,x) > 0 and (x,h) > 0
    BoundaryPositive,  // (x,x) = 0, x != 0 and (x,h) > 0
    Zero,
    Outside,
};

/// Integral lattice of signature (1, n-1) with a fixed interior reference
/// vector h selecting one of the two components of {x : (x,x) > 0}.
class Lattice {
public:
    /// Validates the data: gram must be symmetric, nonsingular, of
    /// signature (1, n-1), and h must satisfy (h,h) > 0.  Throws
    /// SignatureError, DegenerateError or BadReferenceError.
    Lattice(IntMat gram, IntVec h);

    int rank() const { return gram_.rows; }
    const IntMat& gram() const { return gram_; }
    const IntVec& h() const { return h_; }
    const RatMat& gram_inverse() const { return gram_inv_; }

    Int pair(const IntVec& x, const IntVec& y) const;
    Rat pair(const RatVec& x, const RatVec& y) const;
    Rat pair(const IntVec& x, const RatVec& y) const;
    Int square(const IntVec& x) const { return pair(x, x); }
    Rat square(const RatVec& x) const { return pair(x, x); }

    ConePosition cone_position(const IntVec& x) const;
    ConePosition cone_position(const RatVec& x) const;

    /// Primitive generator of the ray through v with a canonical sign:
    /// (v,h) > 0 when possible, otherwise first nonzero coordinate positive.
    /// Used to identify walls with their hyperplanes.
    IntVec normalize_wall(const IntVec& v) const;
    IntVec normalize_wall(const RatVec& v) const;

private:
    IntMat gram_;
    IntVec h_;
    RatMat gram_inv_;
};

using LatticePtr = std::shared_ptr<const Lattice>;

LatticePtr make_lattice(IntMat gram, IntVec h);

/// Sublattice of the ambient lattice presented by a basis (rows are ambient
/// coordinate vectors) together with the induced Gram matrix.
struct Sublattice {
    std::vector<IntVec> basis;
    IntMat gram;
    int ambient = 0;

    int rank() const { return static_cast<int>(basis.size()); }

    /// Ambient vector of the element with the given basis coordinates.
    IntVec to_ambient(const IntVec& coords) const;
    RatVec to_ambient(const RatVec& coords) const;
};

/// Saturated orthogonal complement of the span of the given vectors, with a
/// canonical (Hermite normal form) basis and the induced Gram matrix.  The
/// first form works against any symmetric integer pairing.
Sublattice orthogonal_complement(const IntMat& gram, const std::vector<IntVec>& span);
Sublattice orthogonal_complement(const Lattice& L, const std::vector<IntVec>& span);

/// All vectors x with x^t (-neg_gram) x <= bound on a negative definite
/// form, one per {x, -x} pair (first nonzero coordinate positive), plus the
/// zero vector, sorted lexicographically.  Throws NotNegativeDefiniteError
/// when neg_gram is not negative definite.
std::vector<IntVec> short_vectors(const IntMat& neg_gram, const Rat& bound);

/// All integral x with Q(x + center) <= bound where Q is the positive
/// definite form -neg_gram.  No sign folding: the shifted problem has no
/// symmetry.  Sorted lexicographically.
std::vector<IntVec> shifted_short_vectors(const IntMat& neg_gram, const RatVec& center,
                                          const Rat& bound);

}  // namespace conewalls
