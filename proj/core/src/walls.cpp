#include "conewalls/walls.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <type_traits>

#include "conewalls/errors.hpp"

namespace conewalls {

bool operator==(const Wall& a, const Wall& b) { return a.v == b.v; }

bool wall_less(const Wall& a, const Wall& b) { return lex_less(a.v, b.v); }

namespace {

struct WallSet {
    std::map<IntVec, Wall, bool (*)(const IntVec&, const IntVec&)> byv{lex_less};

    void insert(const Lattice& lat, const IntVec& v, int si, int sj) {
        IntVec n = lat.normalize_wall(v);
        Int sq = lat.square(n);
        auto it = byv.find(n);
        if (it == byv.end()) byv.emplace(n, Wall{n, sq, si, sj});
    }

    std::vector<Wall> sorted() const {
        std::vector<Wall> out;
        for (const auto& [k, w] : byv) out.push_back(w);
        return out;
    }
};

RatVec rat_coords_in(const Sublattice& M, const RatVec& x) {
    int m = M.rank();
    if (m == 0) return {};
    size_t n = M.basis[0].size();
    RatMat bt(static_cast<int>(n), m);
    for (size_t i = 0; i < n; ++i)
        for (int k = 0; k < m; ++k) bt(static_cast<int>(i), k) = M.basis[static_cast<size_t>(k)][i];
    auto c = solve(bt, x);
    if (!c) throw PreconditionError("vector not in the rational span of the sublattice");
    return *c;
}

// Coordinate bound for rational vectors xi in the span of M with
// -(xi,xi) <= budget: |coord_k(xi)| <= sqrt(budget * inv_kk) via the
// Cauchy-Schwarz bound on the positive definite form -gram.
IntVec definite_coordinate_bounds(const Sublattice& M, const Rat& budget, int ambient_dim) {
    IntVec out(static_cast<size_t>(ambient_dim), Int(0));
    int m = M.rank();
    if (m == 0 || budget < 0) return out;
    RatMat a(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) a(i, j) = -M.gram(i, j);
    auto inv = inverse(a);
    if (!inv) throw NotNegativeDefiniteError("complement form is degenerate");
    IntVec cb(static_cast<size_t>(m));
    for (int k = 0; k < m; ++k) cb[static_cast<size_t>(k)] = rat_sqrt_floor(budget * (*inv)(k, k)) + 1;
    for (int i = 0; i < ambient_dim; ++i) {
        Int s = 0;
        for (int k = 0; k < m; ++k) s += cb[static_cast<size_t>(k)] * abs(M.basis[static_cast<size_t>(k)][static_cast<size_t>(i)]);
        out[static_cast<size_t>(i)] = s;
    }
    return out;
}

struct SegmentData {
    Int g11, g12, g22, D;
    Rat lam_lo, lam_hi;
    Rat inv_n1;
    Int b_max;
};

SegmentData segment_ranges(const Lattice& lat, const IntVec& x1, const IntVec& x2, const Int& N) {
    SegmentData s;
    s.g11 = lat.pair(x1, x1);
    s.g12 = lat.pair(x1, x2);
    s.g22 = lat.pair(x2, x2);
    s.D = s.g12 * s.g12 - s.g11 * s.g22;
    if (s.D <= 0 || s.g12 <= 0)
        throw PreconditionError("segment endpoints do not span a hyperbolic plane");
    Rat lam0 = Rat(s.g22) / Rat(s.g12);
    Rat lam1 = Rat(s.g12) / Rat(s.g11);
    s.lam_lo = std::min(lam0, lam1);
    s.lam_hi = std::max(lam0, lam1);
    Rat inv_a = Rat(s.D) / Rat(s.g11);
    Rat inv_b = Rat(s.D) * Rat(s.g22) / Rat(s.g12 * s.g12);
    s.inv_n1 = std::min(inv_a, inv_b);
    s.b_max = rat_sqrt_floor(Rat(N) * Rat(s.D) * Rat(s.D) / s.inv_n1);
    return s;
}

// Integers a in [lo, hi] with a*c == r (mod d), d > 0.
std::vector<Int> congruence_range(const Int& c, const Int& r, const Int& d, const Rat& lo,
                                  const Rat& hi) {
    std::vector<Int> out;
    Int g, cinv;
    mpz_gcd(g.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
    if (r % g != 0) return out;
    Int d2 = d / g;
    Int a0 = 0;
    if (d2 != 1) {
        Int c2 = (c / g) % d2;
        if (mpz_invert(cinv.get_mpz_t(), c2.get_mpz_t(), d2.get_mpz_t()) == 0) return out;
        a0 = ((r / g) % d2) * cinv % d2;
        if (a0 < 0) a0 += d2;
    }
    Int first = rat_ceil(lo);
    Int shift = (a0 - first) % d2;
    if (shift < 0) shift += d2;
    Int last = rat_floor(hi);
    for (Int a = first + shift; a <= last; a += d2) out.push_back(a);
    return out;
}

}  // namespace

std::vector<Wall> walls_on_segment(const LatticePtr& L, const IntVec& x1, const IntVec& x2,
                                   const Int& N) {
    const Lattice& lat = *L;
    if (N < 1) throw PreconditionError("wall bound N must be at least 1");
    if (lat.cone_position(x1) != ConePosition::InteriorPositive ||
        lat.cone_position(x2) != ConePosition::InteriorPositive)
        throw PreconditionError("segment endpoints must be interior vectors");
    if (rank(mat_from_rows({x1, x2}, lat.rank())) != 2)
        throw PreconditionError("segment endpoints must be independent");

    SegmentData s = segment_ranges(lat, x1, x2, N);
    Sublattice M = orthogonal_complement(lat, {x1, x2});
    IntegerSolver pair_solver(mat_from_rows({mat_vec(lat.gram(), x1), mat_vec(lat.gram(), x2)},
                                            lat.rank()));
    WallSet walls;

    for (Int b = -s.b_max; b <= s.b_max; ++b) {
        // a ranges over -b [lam_lo, lam_hi]; congruence stepping keeps only
        // values with an integral pairing (v, x1).
        Rat lo = -Rat(b) * s.lam_hi;
        Rat hi = -Rat(b) * s.lam_lo;
        if (lo > hi) std::swap(lo, hi);
        Int rhs = -b * s.g12;
        for (const Int& a : congruence_range(s.g11, rhs, s.D, lo, hi)) {
            Int pn = a * s.g11 + b * s.g12;
            Int qn = a * s.g12 + b * s.g22;
            if (pn % s.D != 0 || qn % s.D != 0) continue;
            Int p = pn / s.D;
            Int q = qn / s.D;
            if (p * q > 0) continue;
            Rat qproj = Rat(a * a * s.g11 + 2 * a * b * s.g12 + b * b * s.g22) / Rat(s.D * s.D);
            Rat budget = Rat(N) + qproj;
            if (budget <= 0) continue;
            auto v1 = pair_solver.solve({p, q});
            if (!v1) continue;
            RatVec v0(static_cast<size_t>(lat.rank()));
            for (int i = 0; i < lat.rank(); ++i)
                v0[static_cast<size_t>(i)] =
                    (Rat(a) * Rat(x1[static_cast<size_t>(i)]) + Rat(b) * Rat(x2[static_cast<size_t>(i)])) / Rat(s.D);
            RatVec zeta = vec_sub(to_rat(*v1), v0);
            RatVec center = rat_coords_in(M, zeta);
            for (const IntVec& mu : shifted_short_vectors(M.gram, center, budget)) {
                IntVec v = vec_add(*v1, M.to_ambient(mu));
                if (is_zero(v)) continue;
                if (lat.square(v) <= -N) continue;
                Int pv = lat.pair(v, x1);
                Int qv = lat.pair(v, x2);
                if (pv * qv > 0) continue;
                walls.insert(lat, v, -1, -1);
            }
        }
    }
    return walls.sorted();
}

std::vector<Wall> walls_on_isotropic_plane(const LatticePtr& L, const IntVec& x, const RatVec& y,
                                           const Int& N) {
    const Lattice& lat = *L;
    if (N < 1) throw PreconditionError("wall bound N must be at least 1");
    if (lat.cone_position(x) != ConePosition::BoundaryPositive)
        throw PreconditionError("x must be a nonzero isotropic vector with (x,h) > 0");
    if (lat.cone_position(y) != ConePosition::InteriorPositive)
        throw PreconditionError("y must be an interior vector");

    Rat xy = lat.pair(x, y);
    if (xy <= 0) throw PreconditionError("(x,y) must be positive");
    Rat yy = lat.square(y);
    // Second isotropic direction of the plane: z ~ y - ((y,y)/2(x,y)) x,
    // scaled by the least positive integer making it integral.
    RatVec z0(y.size());
    Rat f = yy / (2 * xy);
    for (size_t i = 0; i < y.size(); ++i) z0[i] = y[i] - f * Rat(x[i]);
    Int den = 1;
    for (auto c : z0) {
        c.canonicalize();
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    }
    IntVec z(y.size());
    for (size_t i = 0; i < y.size(); ++i) {
        Rat c = z0[i] * Rat(den);
        c.canonicalize();
        z[i] = c.get_num();
    }
    if (lat.square(z) != 0)
        throw PreconditionError("plane is degenerate");  // cannot happen for valid input
    Int e = lat.pair(x, z);
    if (e <= 0) throw PreconditionError("x and y must be independent");

    Sublattice M = orthogonal_complement(lat, {x, z});
    RationalCone quadrant = RationalCone::from_generators(L, std::vector<IntVec>{x, z});
    IntegerSolver pair_solver(
        mat_from_rows({mat_vec(lat.gram(), x), mat_vec(lat.gram(), z)}, lat.rank()));
    WallSet walls;

    auto try_pair = [&](const Int& vx, const Int& vz) {
        Rat qproj = Rat(2 * vx * vz) / Rat(e);
        Rat budget = Rat(N) + qproj;
        if (budget <= 0) return;
        auto v1 = pair_solver.solve({vx, vz});
        if (!v1) return;
        RatVec v0(static_cast<size_t>(lat.rank()));
        for (int i = 0; i < lat.rank(); ++i)
            v0[static_cast<size_t>(i)] =
                (Rat(vz) * Rat(x[static_cast<size_t>(i)]) + Rat(vx) * Rat(z[static_cast<size_t>(i)])) / Rat(e);
        RatVec zeta = vec_sub(to_rat(*v1), v0);
        RatVec center = rat_coords_in(M, zeta);
        for (const IntVec& mu : shifted_short_vectors(M.gram, center, budget)) {
            IntVec v = vec_add(*v1, M.to_ambient(mu));
            if (is_zero(v)) continue;
            if (lat.square(v) <= -N) continue;
            if (!wall_separates(quadrant, v)) continue;
            walls.insert(lat, v, -1, -1);
        }
    };

    try_pair(0, 0);
    Int ab_max = rat_ceil(Rat(N) * Rat(e) / 2) - 1;
    for (Int m = 1; m <= ab_max; ++m)
        for (Int d = 1; d <= m; ++d) {
            if (m % d != 0) continue;
            try_pair(d, -m / d);
            try_pair(-d, m / d);
        }
    return walls.sorted();
}

namespace {

void validate_query(const WallQuery& q) {
    if (q.max_neg_square < 1) throw PreconditionError("wall bound N must be at least 1");
    const Lattice& lat = *q.cone.lattice();
    if (!q.cone.lineality().empty())
        throw PreconditionError("cone not contained in the closed positive cone");
    for (const auto& g : q.cone.generators()) {
        ConePosition p = lat.cone_position(g);
        if (p != ConePosition::InteriorPositive && p != ConePosition::BoundaryPositive)
            throw PreconditionError("cone not contained in the closed positive cone");
    }
}

}  // namespace

std::vector<Wall> walls_meeting_cone(const WallQuery& q) {
    validate_query(q);
    const LatticePtr& L = q.cone.lattice();
    const Lattice& lat = *L;
    const Int& N = q.max_neg_square;
    const auto& gens = q.cone.generators();

    WallSet walls;
    if (gens.empty()) return {};
    if (gens.size() == 1) {
        const IntVec& g = gens[0];
        if (lat.square(g) > 0) {
            Sublattice M = orthogonal_complement(lat, {g});
            for (const IntVec& mu : short_vectors(M.gram, Rat(N - 1))) {
                if (is_zero(mu)) continue;
                walls.insert(lat, M.to_ambient(mu), 0, 0);
            }
        }
        return walls.sorted();
    }

    for (size_t i = 0; i < gens.size(); ++i)
        for (size_t j = i + 1; j < gens.size(); ++j) {
            IntVec sum = vec_add(gens[i], gens[j]);
            if (lat.square(sum) <= 0)
                throw PreconditionError("generator pair sums must be interior vectors");
            bool iso_i = lat.square(gens[i]) == 0;
            bool iso_j = lat.square(gens[j]) == 0;
            std::vector<Wall> part;
            if (!iso_i && !iso_j) {
                part = walls_on_segment(L, gens[i], gens[j], N);
            } else {
                const IntVec& x = iso_i ? gens[i] : gens[j];
                part = walls_on_isotropic_plane(L, x, to_rat(sum), N);
            }
            for (const auto& w : part)
                walls.insert(lat, w.v, static_cast<int>(i), static_cast<int>(j));
        }

    std::vector<Wall> out;
    for (const auto& w : walls.sorted())
        if (wall_separates(q.cone, w.v)) out.push_back(w);
    return out;
}

namespace {

template <typename T>
T to_scalar(const Int& x) {
    if constexpr (std::is_same_v<T, Int>)
        return x;
    else
        return static_cast<T>(x.get_si());
}

Int from_scalar(const Int& x) { return x; }
Int from_scalar(long long x) { return Int(static_cast<long>(x)); }

// Box scan over a signed integer scalar; T = Int gives the arbitrary
// precision fallback, long long the fast path (used only when a precomputed
// bound shows no intermediate can overflow).
template <typename T>
void box_scan(const WallQuery& q, const Int& box, WallSet& walls) {
    const Lattice& lat = *q.cone.lattice();
    int n = lat.rank();
    if (n == 0) return;
    const auto& gens = q.cone.generators();
    int k = static_cast<int>(gens.size());

    std::vector<std::vector<T>> gram(static_cast<size_t>(n), std::vector<T>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) gram[i][j] = to_scalar<T>(lat.gram()(i, j));
    // Pairing with generator j is the dot product with row gcols[j].
    std::vector<std::vector<T>> gcols(static_cast<size_t>(k), std::vector<T>(static_cast<size_t>(n)));
    std::vector<int> gen_sq_pos(static_cast<size_t>(k));
    for (int j = 0; j < k; ++j) {
        IntVec col = mat_vec(lat.gram(), gens[j]);
        for (int i = 0; i < n; ++i) gcols[j][i] = to_scalar<T>(col[i]);
        gen_sq_pos[j] = lat.square(gens[j]) > 0 ? 1 : 0;
    }
    T bound = to_scalar<T>(box);
    T minus_n = to_scalar<T>(-q.max_neg_square);

    std::vector<T> v(static_cast<size_t>(n), -bound);
    for (;;) {
        bool zero = true;
        for (const T& c : v)
            if (c != 0) {
                zero = false;
                break;
            }
        if (!zero) {
            T sq = 0;
            for (int i = 0; i < n; ++i) {
                if (v[i] == 0) continue;
                T row = 0;
                for (int j = 0; j < n; ++j) row += gram[i][j] * v[j];
                sq += v[i] * row;
            }
            if (sq > minus_n) {
                int pos = 0, neg = 0, zero_cnt = 0;
                bool zero_interior = false;
                for (int j = 0; j < k; ++j) {
                    T s = 0;
                    for (int i = 0; i < n; ++i) s += gcols[j][i] * v[i];
                    if (s > 0)
                        ++pos;
                    else if (s < 0)
                        ++neg;
                    else {
                        ++zero_cnt;
                        if (gen_sq_pos[j]) zero_interior = true;
                    }
                }
                if ((pos > 0 && neg > 0) || zero_interior || zero_cnt >= 2) {
                    IntVec vi(static_cast<size_t>(n));
                    for (int i = 0; i < n; ++i) vi[i] = from_scalar(v[i]);
                    walls.insert(lat, vi, -1, -1);
                }
            }
        }
        int i = 0;
        while (i < n && v[i] == bound) {
            v[i] = -bound;
            ++i;
        }
        if (i == n) break;
        ++v[i];
    }
}

}  // namespace

std::vector<Wall> brute_force_walls(const WallQuery& q, const Int& box) {
    validate_query(q);
    WallSet walls;
    if (box < 0) throw PreconditionError("box must be nonnegative");
    if (box == 0 || q.cone.generators().empty()) return {};

    // Exact overflow audit for the fast path: the largest intermediate is a
    // dot product of n terms bounded by box * maxcoef.
    Int maxcoef = 0;
    const Lattice& lat = *q.cone.lattice();
    for (int i = 0; i < lat.rank(); ++i)
        for (int j = 0; j < lat.rank(); ++j) {
            Int entry = abs(lat.gram()(i, j));
            maxcoef = std::max(maxcoef, entry);
        }
    for (const auto& g : q.cone.generators()) {
        IntVec col = mat_vec(lat.gram(), g);
        for (const auto& c : col) {
            Int entry = abs(c);
            maxcoef = std::max(maxcoef, entry);
        }
    }
    Int worst = Int(lat.rank()) * Int(lat.rank()) * box * maxcoef * box + box;
    if (worst < Int("2000000000000000000"))
        box_scan<long long>(q, box, walls);
    else
        box_scan<Int>(q, box, walls);
    return walls.sorted();
}

Int brute_force_box(const WallQuery& q) {
    validate_query(q);
    const Lattice& lat = *q.cone.lattice();
    const Int& N = q.max_neg_square;
    const auto& gens = q.cone.generators();
    if (gens.empty()) return 0;
    Int box = 0;

    auto fold_definite = [&](const Sublattice& M, const Rat& budget) {
        IntVec b = definite_coordinate_bounds(M, budget, lat.rank());
        for (const auto& c : b) box = std::max(box, c);
    };

    if (gens.size() == 1) {
        if (lat.square(gens[0]) > 0) fold_definite(orthogonal_complement(lat, {gens[0]}), Rat(N - 1));
        return box;
    }

    for (size_t i = 0; i < gens.size(); ++i)
        for (size_t j = i + 1; j < gens.size(); ++j) {
            bool iso_i = lat.square(gens[i]) == 0;
            bool iso_j = lat.square(gens[j]) == 0;
            if (!iso_i && !iso_j) {
                SegmentData s = segment_ranges(lat, gens[i], gens[j], N);
                Int a_max = rat_floor(Rat(s.b_max) * s.lam_hi) + 1;
                Sublattice M = orthogonal_complement(lat, {gens[i], gens[j]});
                IntVec xi_b = definite_coordinate_bounds(M, Rat(N), lat.rank());
                for (int t = 0; t < lat.rank(); ++t) {
                    Rat coord = (Rat(a_max) * Rat(abs(gens[i][static_cast<size_t>(t)])) +
                                 Rat(s.b_max) * Rat(abs(gens[j][static_cast<size_t>(t)]))) /
                                    Rat(s.D) +
                                Rat(xi_b[static_cast<size_t>(t)]);
                    box = std::max(box, rat_ceil(coord));
                }
            } else {
                const IntVec& x = iso_i ? gens[i] : gens[j];
                RatVec y = to_rat(vec_add(gens[i], gens[j]));
                Rat xy = lat.pair(x, y);
                Rat yy = lat.square(y);
                RatVec z0(y.size());
                Rat f = yy / (2 * xy);
                for (size_t t = 0; t < y.size(); ++t) z0[t] = y[t] - f * Rat(x[t]);
                IntVec z = primitive_part(z0);  // any positive multiple gives a valid bound
                Int e = lat.pair(x, z);
                Int ab_max = rat_ceil(Rat(N) * Rat(e) / 2) - 1;
                if (ab_max < 0) ab_max = 0;
                Sublattice M = orthogonal_complement(lat, {x, z});
                IntVec xi_b = definite_coordinate_bounds(M, Rat(N), lat.rank());
                for (int t = 0; t < lat.rank(); ++t) {
                    Rat coord = Rat(ab_max) *
                                    (Rat(abs(x[static_cast<size_t>(t)])) + Rat(abs(z[static_cast<size_t>(t)]))) / Rat(e) +
                                Rat(xi_b[static_cast<size_t>(t)]);
                    box = std::max(box, rat_ceil(coord));
                }
            }
        }
    return box;
}

}  // namespace conewalls
