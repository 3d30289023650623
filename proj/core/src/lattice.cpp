#include "conewalls/lattice.hpp"

#include <algorithm>
#include <cassert>

#include "conewalls/errors.hpp"

namespace conewalls {

Lattice::Lattice(IntMat gram, IntVec h) : gram_(std::move(gram)), h_(std::move(h)) {
    if (gram_.rows != gram_.cols || gram_.rows == 0)
        throw SignatureError("gram matrix must be square and nonempty");
    for (int i = 0; i < gram_.rows; ++i)
        for (int j = i + 1; j < gram_.cols; ++j)
            if (gram_(i, j) != gram_(j, i)) throw SignatureError("gram matrix is not symmetric");
    Inertia in = inertia(gram_);
    if (in.zero > 0) throw DegenerateError("gram matrix is singular");
    if (in.pos != 1 || in.neg != gram_.rows - 1)
        throw SignatureError("gram matrix does not have signature (1, n-1)");
    if (static_cast<int>(h_.size()) != gram_.rows)
        throw BadReferenceError("reference vector has wrong length");
    if (pair(h_, h_) <= 0) throw BadReferenceError("reference vector must have positive square");
    gram_inv_ = *inverse(to_rat(gram_));
}

Int Lattice::pair(const IntVec& x, const IntVec& y) const {
    assert(static_cast<int>(x.size()) == rank() && static_cast<int>(y.size()) == rank());
    Int s = 0;
    for (int i = 0; i < rank(); ++i) {
        if (x[i] == 0) continue;
        Int row = 0;
        for (int j = 0; j < rank(); ++j) row += gram_(i, j) * y[j];
        s += x[i] * row;
    }
    return s;
}

Rat Lattice::pair(const RatVec& x, const RatVec& y) const {
    assert(static_cast<int>(x.size()) == rank() && static_cast<int>(y.size()) == rank());
    Rat s = 0;
    for (int i = 0; i < rank(); ++i) {
        if (x[i] == 0) continue;
        Rat row = 0;
        for (int j = 0; j < rank(); ++j) row += Rat(gram_(i, j)) * y[j];
        s += x[i] * row;
    }
    return s;
}

Rat Lattice::pair(const IntVec& x, const RatVec& y) const { return pair(to_rat(x), y); }

ConePosition Lattice::cone_position(const IntVec& x) const { return cone_position(to_rat(x)); }

ConePosition Lattice::cone_position(const RatVec& x) const {
    if (is_zero(x)) return ConePosition::Zero;
    Rat sq = square(x);
    Rat xh = pair(x, to_rat(h_));
    if (sq > 0 && xh > 0) return ConePosition::InteriorPositive;
    if (sq == 0 && xh > 0) return ConePosition::BoundaryPositive;
    return ConePosition::Outside;
}

IntVec Lattice::normalize_wall(const IntVec& v) const {
    IntVec p = primitive_part(v);
    Int vh = pair(p, h_);
    if (vh > 0) return p;
    if (vh < 0) {
        for (auto& c : p) c = -c;
        return p;
    }
    for (const auto& c : p) {
        if (c > 0) return p;
        if (c < 0) {
            for (auto& d : p) d = -d;
            return p;
        }
    }
    return p;
}

IntVec Lattice::normalize_wall(const RatVec& v) const { return normalize_wall(primitive_part(v)); }

LatticePtr make_lattice(IntMat gram, IntVec h) {
    return std::make_shared<Lattice>(std::move(gram), std::move(h));
}

IntVec Sublattice::to_ambient(const IntVec& coords) const {
    assert(coords.size() == basis.size());
    size_t n = basis.empty() ? static_cast<size_t>(ambient) : basis[0].size();
    IntVec r(n, Int(0));
    for (size_t k = 0; k < basis.size(); ++k)
        for (size_t i = 0; i < n; ++i) r[i] += coords[k] * basis[k][i];
    return r;
}

RatVec Sublattice::to_ambient(const RatVec& coords) const {
    assert(coords.size() == basis.size());
    size_t n = basis.empty() ? static_cast<size_t>(ambient) : basis[0].size();
    RatVec r(n, Rat(0));
    for (size_t k = 0; k < basis.size(); ++k)
        for (size_t i = 0; i < n; ++i) r[i] += coords[k] * Rat(basis[k][i]);
    return r;
}

Sublattice orthogonal_complement(const IntMat& gram, const std::vector<IntVec>& span) {
    int n = gram.rows;
    std::vector<IntVec> rows;
    for (const auto& s : span) rows.push_back(mat_vec(gram, s));
    Sublattice sub;
    sub.ambient = n;
    sub.basis = kernel_basis(mat_from_rows(rows, n));
    int m = sub.rank();
    sub.gram = IntMat(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) sub.gram(i, j) = dot(sub.basis[i], mat_vec(gram, sub.basis[j]));
    return sub;
}

Sublattice orthogonal_complement(const Lattice& L, const std::vector<IntVec>& span) {
    return orthogonal_complement(L.gram(), span);
}

namespace {

// LDL^t data of a positive definite rational matrix: q(x) = sum_i d_i
// (x_i + sum_{j>i} u_ij x_j)^2.
struct Ldl {
    int n;
    std::vector<Rat> d;
    RatMat u;
};

Ldl ldl_decompose(const IntMat& neg_gram) {
    int n = neg_gram.rows;
    if (neg_gram.cols != n) throw NotNegativeDefiniteError("form matrix must be square");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (neg_gram(i, j) != neg_gram(j, i))
                throw NotNegativeDefiniteError("form matrix is not symmetric");
    RatMat a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = -neg_gram(i, j);
    Ldl ldl;
    ldl.n = n;
    ldl.d.assign(n, Rat(0));
    ldl.u = RatMat(n, n);
    for (int i = 0; i < n; ++i) {
        if (a(i, i) <= 0) throw NotNegativeDefiniteError("form is not negative definite");
        ldl.d[i] = a(i, i);
        for (int j = i + 1; j < n; ++j) ldl.u(i, j) = a(i, j) / a(i, i);
        for (int k = i + 1; k < n; ++k)
            for (int l = i + 1; l < n; ++l) a(k, l) -= a(i, k) * a(i, l) / a(i, i);
    }
    return ldl;
}

// Enumerates all integral x with q(x + center) <= bound by descending
// coordinate recursion over the LDL data.  Exact interval endpoints come
// from floor/ceil-with-square-root helpers.
void enumerate(const Ldl& ldl, const RatVec& center, const Rat& bound, int i, RatVec& shift,
               Rat used, IntVec& x, std::vector<IntVec>& out) {
    if (i < 0) {
        out.push_back(x);
        return;
    }
    // coordinate i contributes d_i * (x_i + center_i + sum_{j>i} u_ij (x_j +
    // center_j))^2; shift[i] holds the inner tail sum.
    Rat rem = bound - used;
    if (rem < 0) return;
    Rat c = -(center[i] + shift[i]);
    Rat radius2 = rem / ldl.d[i];
    Int lo = ceil_sub_sqrt(c, radius2);
    Int hi = floor_add_sqrt(c, radius2);
    for (Int t = lo; t <= hi; ++t) {
        x[i] = t;
        Rat lin = Rat(t) + center[i] + shift[i];
        Rat used2 = used + ldl.d[i] * lin * lin;
        if (used2 > bound) continue;  // guards endpoint rounding
        RatVec saved;
        for (int j = 0; j < i; ++j) {
            Rat contrib = ldl.u(j, i) * (Rat(t) + center[i]);
            saved.push_back(shift[j]);
            shift[j] += contrib;
        }
        enumerate(ldl, center, bound, i - 1, shift, used2, x, out);
        for (int j = 0; j < i; ++j) shift[j] = saved[static_cast<size_t>(j)];
    }
    x[i] = 0;
}

std::vector<IntVec> enumerate_all(const IntMat& neg_gram, const RatVec& center,
                                  const Rat& bound) {
    Ldl ldl = ldl_decompose(neg_gram);
    std::vector<IntVec> out;
    if (bound < 0) return out;
    if (ldl.n == 0) {
        out.push_back(IntVec{});
        return out;
    }
    RatVec shift(ldl.n, Rat(0));
    IntVec x(ldl.n, Int(0));
    enumerate(ldl, center, bound, ldl.n - 1, shift, Rat(0), x, out);
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

bool sign_canonical(const IntVec& v) {
    for (const auto& c : v) {
        if (c > 0) return true;
        if (c < 0) return false;
    }
    return true;  // zero vector
}

}  // namespace

std::vector<IntVec> short_vectors(const IntMat& neg_gram, const Rat& bound) {
    RatVec center(neg_gram.rows, Rat(0));
    std::vector<IntVec> all = enumerate_all(neg_gram, center, bound);
    std::vector<IntVec> out;
    for (auto& v : all)
        if (sign_canonical(v)) out.push_back(std::move(v));
    return out;
}

std::vector<IntVec> shifted_short_vectors(const IntMat& neg_gram, const RatVec& center,
                                          const Rat& bound) {
    assert(static_cast<int>(center.size()) == neg_gram.rows);
    return enumerate_all(neg_gram, center, bound);
}

}  // namespace conewalls
