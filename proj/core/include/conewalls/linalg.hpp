#pragma once

#include <optional>
#include <vector>

#include "conewalls/exact.hpp"

namespace conewalls {

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

template <typename T>
struct Mat {
    int rows = 0;
    int cols = 0;
    std::vector<T> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

    T& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const T& operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    bool operator==(const Mat&) const = default;

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }
};

using IntMat = Mat<Int>;
using RatMat = Mat<Rat>;

// -- vector helpers ---------------------------------------------------------

bool is_zero(const IntVec& v);
bool is_zero(const RatVec& v);
IntVec vec_add(const IntVec& u, const IntVec& v);
IntVec vec_sub(const IntVec& u, const IntVec& v);
IntVec vec_scale(const Int& c, const IntVec& v);
RatVec vec_add(const RatVec& u, const RatVec& v);
RatVec vec_sub(const RatVec& u, const RatVec& v);
RatVec vec_scale(const Rat& c, const RatVec& v);
RatVec to_rat(const IntVec& v);
Int dot(const IntVec& u, const IntVec& v);
Rat dot(const RatVec& u, const RatVec& v);

/// True if v is integral; writes the integer vector to out when provided.
bool rat_vec_is_integral(const RatVec& v, IntVec* out = nullptr);

/// Divides an integer vector by the gcd of its entries.  The sign is kept.
/// Throws ZeroVectorError on the zero vector.
IntVec primitive_part(const IntVec& v);

/// Scales a rational vector to the primitive integer vector on the same ray.
/// Throws ZeroVectorError on the zero vector.
IntVec primitive_part(const RatVec& v);

/// Lexicographic comparison, used for all canonical orderings of vectors.
bool lex_less(const IntVec& u, const IntVec& v);

// -- matrix helpers ---------------------------------------------------------

IntMat mat_from_rows(const std::vector<IntVec>& rows, int cols);
std::vector<IntVec> rows_of(const IntMat& m);
IntMat transpose(const IntMat& m);
IntMat mat_mul(const IntMat& x, const IntMat& y);
IntVec mat_vec(const IntMat& m, const IntVec& v);
RatVec mat_vec(const IntMat& m, const RatVec& v);
RatVec mat_vec(const RatMat& m, const RatVec& v);
RatMat to_rat(const IntMat& m);

// -- exact linear algebra ---------------------------------------------------

int rank(RatMat m);
int rank(const IntMat& m);

/// One solution of A x = b over the rationals (free variables set to zero),
/// or nullopt when the system is inconsistent.
std::optional<RatVec> solve(const RatMat& A, const RatVec& b);

/// Inverse of a square rational matrix, or nullopt when singular.
std::optional<RatMat> inverse(const RatMat& A);

struct Inertia {
    int pos = 0;
    int neg = 0;
    int zero = 0;
    bool operator==(const Inertia&) const = default;
};

/// Sylvester inertia of a symmetric rational matrix, computed by exact
/// congruence diagonalization.
Inertia inertia(const RatMat& S);
Inertia inertia(const IntMat& S);

/// Row-style Hermite normal form with positive pivots and reduced entries
/// above each pivot.  Zero rows are dropped.
IntMat row_hnf(const IntMat& m);

/// Basis of the integer kernel {x : A x = 0}, canonicalized by Hermite
/// normal form.  The kernel of an integer matrix is a saturated sublattice,
/// so the basis extends to no finer lattice inside the rational kernel.
std::vector<IntVec> kernel_basis(const IntMat& A);

/// Repeated integer linear solving against a fixed matrix.
class IntegerSolver {
public:
    explicit IntegerSolver(const IntMat& A);

    /// One x with A x = b over the integers, or nullopt.
    std::optional<IntVec> solve(const IntVec& b) const;

private:
    int n_;
    int r_;
    IntMat h_;                 // column echelon form of A (first r_ columns)
    IntMat u_;                 // unimodular, A * u_ = [h_ | 0]
    std::vector<int> pivot_row_;
};

}  // namespace conewalls
