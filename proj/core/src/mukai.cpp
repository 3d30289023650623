#include "conewalls/mukai.hpp"

#include <cassert>

#include "conewalls/errors.hpp"

namespace conewalls {

MukaiSetup make_mukai_setup(IntMat ambient_gram, IntVec v) {
    int n = ambient_gram.rows;
    if (n == 0 || ambient_gram.cols != n)
        throw ValidationError("mukai pairing must be a nonempty square matrix");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (ambient_gram(i, j) != ambient_gram(j, i))
                throw ValidationError("mukai pairing must be symmetric");
    if (rank(ambient_gram) != n) throw DegenerateError("mukai pairing is singular");
    if (static_cast<int>(v.size()) != n)
        throw ValidationError("mukai vector length must match the pairing");
    if (is_zero(v)) throw ZeroVectorError("mukai vector is zero");
    if (primitive_part(v) != v) throw ValidationError("mukai vector must be primitive");
    Int vv = dot(v, mat_vec(ambient_gram, v));
    if (vv < 2 || vv % 2 != 0)
        throw ValidationError("mukai vector must have even square at least 2");

    MukaiSetup ms;
    ms.vperp = orthogonal_complement(ambient_gram, {v});
    ms.ambient_gram = std::move(ambient_gram);
    ms.v = std::move(v);
    ms.vv = std::move(vv);
    return ms;
}

RatVec project(const MukaiSetup& ms, const IntVec& x) {
    int n = ms.ambient_gram.rows;
    Int k = dot(ms.v, mat_vec(ms.ambient_gram, x));
    Rat c = Rat(k) / Rat(ms.vv);
    RatVec p(n);
    for (int i = 0; i < n; ++i) p[i] = Rat(x[i]) - c * Rat(ms.v[i]);
    int m = ms.vperp.rank();
    RatMat basis_cols(n, m);
    for (int j = 0; j < m; ++j)
        for (int i = 0; i < n; ++i) basis_cols(i, j) = Rat(ms.vperp.basis[j][i]);
    auto coords = solve(basis_cols, p);
    assert(coords);  // the projection lies in the span of v-perp by construction
    return *coords;
}

Rat wall_bound(const MukaiSetup& ms) { return Rat(-2) - Rat(ms.vv) / 4; }

MukaiResult sigma_walls_meeting_cone(const MukaiSetup& ms, const std::vector<IntVec>& cone_gens) {
    const Int& s = ms.vv;
    const IntMat& gb = ms.vperp.gram;
    int r1 = ms.vperp.rank();

    MukaiResult out;
    out.bound = wall_bound(ms);

    std::vector<IntVec> gens;
    for (const IntVec& g : cone_gens) {
        if (static_cast<int>(g.size()) != r1)
            throw ValidationError("cone generator length must match the rank of v-perp");
        if (!is_zero(g)) gens.push_back(g);
    }
    if (gens.empty()) return out;

    IntVec h(r1, Int(0));
    for (const IntVec& g : gens) h = vec_add(h, g);
    Int hh = dot(h, mat_vec(gb, h));
    if (hh <= 0) {
        // Every generator must still sit in one closed positive cone; the sum
        // of such vectors is interior unless all lie on a single isotropic
        // ray, and then no hyperplane meets the cone's open-cone part.
        for (size_t i = 0; i < gens.size(); ++i) {
            for (size_t j = i; j < gens.size(); ++j) {
                if (dot(gens[i], mat_vec(gb, gens[j])) < 0)
                    throw PreconditionError("cone generators must lie in one closed positive cone");
            }
        }
        return out;
    }

    LatticePtr lp = make_lattice(gb, h);
    for (const IntVec& g : gens) {
        ConePosition pos = lp->cone_position(g);
        if (pos != ConePosition::InteriorPositive && pos != ConePosition::BoundaryPositive)
            throw PreconditionError("cone generators must lie in the closed positive cone of v-perp");
    }

    RationalCone cone = RationalCone::from_generators(lp, gens);
    Rat scaled = Rat(s * s) * (Rat(2) + Rat(s) / 4);
    Int nprime = rat_ceil(scaled) + 1;
    std::vector<Wall> candidates = walls_meeting_cone(WallQuery{cone, nprime});

    Int half = s / 2;
    for (const Wall& w : candidates) {
        const IntVec& u = w.v;
        const Int& uu = w.square;
        Int tmax = rat_sqrt_floor(scaled / Rat(-uu));
        IntVec u_amb = ms.vperp.to_ambient(u);

        bool lifted = false;
        SigmaWall sw;
        for (Int a = 1; a <= tmax && !lifted; ++a) {
            for (int sign = 0; sign < 2 && !lifted; ++sign) {
                Int t = sign == 0 ? a : -a;
                IntVec num = vec_scale(t, u_amb);
                for (Int k = 0; k <= half && !lifted; ++k) {
                    bool integral = true;
                    for (size_t i = 0; i < num.size(); ++i) {
                        if ((num[i] + k * ms.v[i]) % s != 0) {
                            integral = false;
                            break;
                        }
                    }
                    if (!integral) continue;
                    Rat sigma_sq = Rat(t * t * uu) / Rat(s * s);
                    if (sigma_sq + Rat(k * k) / Rat(s) < -2) continue;
                    sw.direction = u;
                    sw.square = uu;
                    sw.sigma_square = sigma_sq;
                    sw.lift_t = t;
                    sw.lift_k = k;
                    sw.witness.resize(num.size());
                    for (size_t i = 0; i < num.size(); ++i)
                        sw.witness[i] = (num[i] + k * ms.v[i]) / s;
                    lifted = true;
                }
            }
        }
        if (lifted) out.walls.push_back(std::move(sw));
    }
    return out;
}

}  // namespace conewalls
