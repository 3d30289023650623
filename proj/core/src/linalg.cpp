#include "conewalls/linalg.hpp"

#include <cassert>
#include <stdexcept>
#include <utility>

#include "conewalls/errors.hpp"

namespace conewalls {

bool is_zero(const IntVec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

bool is_zero(const RatVec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

IntVec vec_add(const IntVec& u, const IntVec& v) {
    assert(u.size() == v.size());
    IntVec r(u.size());
    for (size_t i = 0; i < u.size(); ++i) r[i] = u[i] + v[i];
    return r;
}

IntVec vec_sub(const IntVec& u, const IntVec& v) {
    assert(u.size() == v.size());
    IntVec r(u.size());
    for (size_t i = 0; i < u.size(); ++i) r[i] = u[i] - v[i];
    return r;
}

IntVec vec_scale(const Int& c, const IntVec& v) {
    IntVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
    return r;
}

RatVec vec_add(const RatVec& u, const RatVec& v) {
    assert(u.size() == v.size());
    RatVec r(u.size());
    for (size_t i = 0; i < u.size(); ++i) r[i] = u[i] + v[i];
    return r;
}

RatVec vec_sub(const RatVec& u, const RatVec& v) {
    assert(u.size() == v.size());
    RatVec r(u.size());
    for (size_t i = 0; i < u.size(); ++i) r[i] = u[i] - v[i];
    return r;
}

RatVec vec_scale(const Rat& c, const RatVec& v) {
    RatVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
    return r;
}

RatVec to_rat(const IntVec& v) {
    RatVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = v[i];
    return r;
}

Int dot(const IntVec& u, const IntVec& v) {
    assert(u.size() == v.size());
    Int s = 0;
    for (size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
    return s;
}

Rat dot(const RatVec& u, const RatVec& v) {
    assert(u.size() == v.size());
    Rat s = 0;
    for (size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
    return s;
}

bool rat_vec_is_integral(const RatVec& v, IntVec* out) {
    IntVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        Rat c(v[i]);
        c.canonicalize();
        if (c.get_den() != 1) return false;
        r[i] = c.get_num();
    }
    if (out) *out = std::move(r);
    return true;
}

IntVec primitive_part(const IntVec& v) {
    Int g = 0;
    for (const auto& x : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    }
    if (g == 0) throw ZeroVectorError("primitive_part: zero vector");
    IntVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
    return r;
}

IntVec primitive_part(const RatVec& v) {
    Int den = 1;
    for (const auto& x : v) {
        Rat c(x);
        c.canonicalize();
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    }
    IntVec scaled(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        Rat c = v[i] * Rat(den);
        c.canonicalize();
        assert(c.get_den() == 1);
        scaled[i] = c.get_num();
    }
    return primitive_part(scaled);
}

bool lex_less(const IntVec& u, const IntVec& v) {
    if (u.size() != v.size()) return u.size() < v.size();
    for (size_t i = 0; i < u.size(); ++i) {
        int c = cmp(u[i], v[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

IntMat mat_from_rows(const std::vector<IntVec>& rows, int cols) {
    IntMat m(static_cast<int>(rows.size()), cols);
    for (size_t i = 0; i < rows.size(); ++i) {
        assert(static_cast<int>(rows[i].size()) == cols);
        for (int j = 0; j < cols; ++j) m(static_cast<int>(i), j) = rows[i][j];
    }
    return m;
}

std::vector<IntVec> rows_of(const IntMat& m) {
    std::vector<IntVec> rows(m.rows);
    for (int i = 0; i < m.rows; ++i) {
        rows[i].resize(m.cols);
        for (int j = 0; j < m.cols; ++j) rows[i][j] = m(i, j);
    }
    return rows;
}

IntMat transpose(const IntMat& m) {
    IntMat t(m.cols, m.rows);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) t(j, i) = m(i, j);
    return t;
}

IntMat mat_mul(const IntMat& x, const IntMat& y) {
    assert(x.cols == y.rows);
    IntMat r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            if (x(i, k) == 0) continue;
            for (int j = 0; j < y.cols; ++j) r(i, j) += x(i, k) * y(k, j);
        }
    return r;
}

IntVec mat_vec(const IntMat& m, const IntVec& v) {
    assert(m.cols == static_cast<int>(v.size()));
    IntVec r(m.rows);
    for (int i = 0; i < m.rows; ++i) {
        Int s = 0;
        for (int j = 0; j < m.cols; ++j) s += m(i, j) * v[j];
        r[i] = s;
    }
    return r;
}

RatVec mat_vec(const IntMat& m, const RatVec& v) {
    assert(m.cols == static_cast<int>(v.size()));
    RatVec r(m.rows);
    for (int i = 0; i < m.rows; ++i) {
        Rat s = 0;
        for (int j = 0; j < m.cols; ++j) s += Rat(m(i, j)) * v[j];
        r[i] = s;
    }
    return r;
}

RatVec mat_vec(const RatMat& m, const RatVec& v) {
    assert(m.cols == static_cast<int>(v.size()));
    RatVec r(m.rows);
    for (int i = 0; i < m.rows; ++i) {
        Rat s = 0;
        for (int j = 0; j < m.cols; ++j) s += m(i, j) * v[j];
        r[i] = s;
    }
    return r;
}

RatMat to_rat(const IntMat& m) {
    RatMat r(m.rows, m.cols);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) r(i, j) = m(i, j);
    return r;
}

int rank(RatMat m) {
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int piv = -1;
        for (int i = r; i < m.rows; ++i)
            if (m(i, c) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < m.cols; ++j) std::swap(m(r, j), m(piv, j));
        for (int i = r + 1; i < m.rows; ++i) {
            if (m(i, c) == 0) continue;
            Rat f = m(i, c) / m(r, c);
            for (int j = c; j < m.cols; ++j) m(i, j) -= f * m(r, j);
        }
        ++r;
    }
    return r;
}

int rank(const IntMat& m) { return rank(to_rat(m)); }

std::optional<RatVec> solve(const RatMat& A, const RatVec& b) {
    assert(A.rows == static_cast<int>(b.size()));
    RatMat m(A.rows, A.cols + 1);
    for (int i = 0; i < A.rows; ++i) {
        for (int j = 0; j < A.cols; ++j) m(i, j) = A(i, j);
        m(i, A.cols) = b[i];
    }
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < A.cols && r < m.rows; ++c) {
        int piv = -1;
        for (int i = r; i < m.rows; ++i)
            if (m(i, c) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j <= A.cols; ++j) std::swap(m(r, j), m(piv, j));
        Rat inv = 1 / m(r, c);
        for (int j = c; j <= A.cols; ++j) m(r, j) *= inv;
        for (int i = 0; i < m.rows; ++i) {
            if (i == r || m(i, c) == 0) continue;
            Rat f = m(i, c);
            for (int j = c; j <= A.cols; ++j) m(i, j) -= f * m(r, j);
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (int i = r; i < m.rows; ++i)
        if (m(i, A.cols) != 0) return std::nullopt;
    RatVec x(A.cols, Rat(0));
    for (int k = 0; k < r; ++k) x[pivot_col[k]] = m(k, A.cols);
    return x;
}

std::optional<RatMat> inverse(const RatMat& A) {
    assert(A.rows == A.cols);
    int n = A.rows;
    RatMat m(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m(i, j) = A(i, j);
        m(i, n + i) = 1;
    }
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int i = c; i < n; ++i)
            if (m(i, c) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) return std::nullopt;
        if (piv != c)
            for (int j = 0; j < 2 * n; ++j) std::swap(m(c, j), m(piv, j));
        Rat inv = 1 / m(c, c);
        for (int j = 0; j < 2 * n; ++j) m(c, j) *= inv;
        for (int i = 0; i < n; ++i) {
            if (i == c || m(i, c) == 0) continue;
            Rat f = m(i, c);
            for (int j = 0; j < 2 * n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    RatMat r(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r(i, j) = m(i, n + j);
    return r;
}

Inertia inertia(const RatMat& S) {
    assert(S.rows == S.cols);
    int n = S.rows;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (S(i, j) != S(j, i)) throw std::invalid_argument("inertia: matrix not symmetric");
    RatMat m = S;
    Inertia res;
    for (int k = 0; k < n; ++k) {
        if (m(k, k) == 0) {
            int d = -1;
            for (int i = k + 1; i < n; ++i)
                if (m(i, i) != 0) {
                    d = i;
                    break;
                }
            if (d >= 0) {
                for (int j = 0; j < n; ++j) std::swap(m(k, j), m(d, j));
                for (int i = 0; i < n; ++i) std::swap(m(i, k), m(i, d));
            } else {
                int o = -1;
                for (int j = k + 1; j < n; ++j)
                    if (m(k, j) != 0) {
                        o = j;
                        break;
                    }
                if (o < 0) {
                    // Row k is zero on the remaining block; with a zero
                    // diagonal the whole remaining block pairs this index to
                    // nothing, so it contributes a radical direction.
                    ++res.zero;
                    continue;
                }
                // All remaining diagonal entries vanish: adding row/column o
                // makes m(k,k) = 2 m(k,o) != 0.
                for (int j = 0; j < n; ++j) m(k, j) += m(o, j);
                for (int i = 0; i < n; ++i) m(i, k) += m(i, o);
            }
        }
        if (m(k, k) == 0) {
            ++res.zero;
            continue;
        }
        for (int i = k + 1; i < n; ++i) {
            if (m(i, k) == 0) continue;
            Rat f = m(i, k) / m(k, k);
            for (int j = 0; j < n; ++j) m(i, j) -= f * m(k, j);
            for (int j = 0; j < n; ++j) m(j, i) -= f * m(j, k);
        }
        if (m(k, k) > 0)
            ++res.pos;
        else
            ++res.neg;
    }
    return res;
}

Inertia inertia(const IntMat& S) { return inertia(to_rat(S)); }

IntMat row_hnf(const IntMat& m0) {
    IntMat m = m0;
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int piv = -1;
        for (int i = r; i < m.rows; ++i)
            if (m(i, c) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < m.cols; ++j) std::swap(m(r, j), m(piv, j));
        for (int i = r + 1; i < m.rows; ++i) {
            while (m(i, c) != 0) {
                Int q = m(r, c) / m(i, c);  // truncated division
                for (int j = 0; j < m.cols; ++j) m(r, j) -= q * m(i, j);
                for (int j = 0; j < m.cols; ++j) std::swap(m(r, j), m(i, j));
                if (m(i, c) == 0) break;
            }
        }
        if (m(r, c) < 0)
            for (int j = 0; j < m.cols; ++j) m(r, j) = -m(r, j);
        for (int i = 0; i < r; ++i) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), m(i, c).get_mpz_t(), m(r, c).get_mpz_t());
            if (q != 0)
                for (int j = 0; j < m.cols; ++j) m(i, j) -= q * m(r, j);
        }
        ++r;
    }
    IntMat out(r, m.cols);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < m.cols; ++j) out(i, j) = m(i, j);
    return out;
}

namespace {

// Column echelon form by unimodular column operations: A * u = [h | 0].
// Returns the number of nonzero columns of h and the pivot row of each.
struct ColumnEchelon {
    IntMat h;
    IntMat u;
    int r = 0;
    std::vector<int> pivot_row;
};

ColumnEchelon column_echelon(const IntMat& A) {
    ColumnEchelon ce;
    ce.h = A;
    ce.u = IntMat::identity(A.cols);
    IntMat& h = ce.h;
    IntMat& u = ce.u;
    int n = A.cols;
    int r = 0;
    for (int i = 0; i < A.rows && r < n; ++i) {
        int piv = -1;
        for (int j = r; j < n; ++j)
            if (h(i, j) != 0) {
                piv = j;
                break;
            }
        if (piv < 0) continue;
        if (piv != r) {
            for (int k = 0; k < A.rows; ++k) std::swap(h(k, r), h(k, piv));
            for (int k = 0; k < n; ++k) std::swap(u(k, r), u(k, piv));
        }
        for (int j = r + 1; j < n; ++j) {
            if (h(i, j) == 0) continue;
            Int g, p, q;
            mpz_gcdext(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t(), h(i, r).get_mpz_t(),
                       h(i, j).get_mpz_t());
            Int s = h(i, r) / g;
            Int t = h(i, j) / g;
            // [col_r, col_j] <- [p*col_r + q*col_j, -t*col_r + s*col_j],
            // a determinant-one transform that puts g in position (i, r).
            for (int k = 0; k < A.rows; ++k) {
                Int cr = h(k, r), cj = h(k, j);
                h(k, r) = p * cr + q * cj;
                h(k, j) = -t * cr + s * cj;
            }
            for (int k = 0; k < n; ++k) {
                Int cr = u(k, r), cj = u(k, j);
                u(k, r) = p * cr + q * cj;
                u(k, j) = -t * cr + s * cj;
            }
        }
        if (h(i, r) < 0) {
            for (int k = 0; k < A.rows; ++k) h(k, r) = -h(k, r);
            for (int k = 0; k < n; ++k) u(k, r) = -u(k, r);
        }
        ce.pivot_row.push_back(i);
        ++r;
    }
    ce.r = r;
    return ce;
}

}  // namespace

std::vector<IntVec> kernel_basis(const IntMat& A) {
    ColumnEchelon ce = column_echelon(A);
    int n = A.cols;
    std::vector<IntVec> raw;
    for (int j = ce.r; j < n; ++j) {
        IntVec v(n);
        for (int k = 0; k < n; ++k) v[k] = ce.u(k, j);
        raw.push_back(std::move(v));
    }
    if (raw.empty()) return raw;
    IntMat canon = row_hnf(mat_from_rows(raw, n));
    return rows_of(canon);
}

IntegerSolver::IntegerSolver(const IntMat& A) {
    ColumnEchelon ce = column_echelon(A);
    n_ = A.cols;
    r_ = ce.r;
    h_ = std::move(ce.h);
    u_ = std::move(ce.u);
    pivot_row_ = std::move(ce.pivot_row);
}

std::optional<IntVec> IntegerSolver::solve(const IntVec& b) const {
    assert(static_cast<int>(b.size()) == h_.rows);
    IntVec rem = b;
    IntVec y(r_);
    for (int k = 0; k < r_; ++k) {
        int i = pivot_row_[k];
        if (rem[i] % h_(i, k) != 0) return std::nullopt;
        y[k] = rem[i] / h_(i, k);
        if (y[k] != 0)
            for (int t = 0; t < h_.rows; ++t) rem[t] -= y[k] * h_(t, k);
    }
    if (!is_zero(rem)) return std::nullopt;
    IntVec x(n_, Int(0));
    for (int k = 0; k < r_; ++k)
        for (int t = 0; t < n_; ++t) x[t] += u_(t, k) * y[k];
    return x;
}

}  // namespace conewalls
