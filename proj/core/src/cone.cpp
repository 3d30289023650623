#include "conewalls/cone.hpp"

#include <algorithm>
#include <cassert>

#include "conewalls/errors.hpp"

namespace conewalls {

namespace {

struct TrackedRay {
    IntVec v;
    std::vector<char> tight;
};

bool rank_adjacent(const std::vector<IntVec>& rows, const TrackedRay& p, const TrackedRay& m,
                   int n, int lineality_dim) {
    std::vector<IntVec> common;
    for (size_t k = 0; k < rows.size(); ++k)
        if (p.tight[k] && m.tight[k]) common.push_back(rows[k]);
    int want = n - lineality_dim - 2;
    if (static_cast<int>(common.size()) < want) return false;
    if (want < 0) return false;
    return rank(mat_from_rows(common, n)) == want;
}

}  // namespace

DdResult dd_rays(int n, const std::vector<IntVec>& rows) {
    std::vector<IntVec> lineality;
    for (int i = 0; i < n; ++i) {
        IntVec e(n, Int(0));
        e[i] = 1;
        lineality.push_back(std::move(e));
    }
    std::vector<TrackedRay> rays;
    std::vector<IntVec> processed;

    for (const IntVec& a : rows) {
        assert(static_cast<int>(a.size()) == n);
        size_t idx = processed.size();

        int l0 = -1;
        for (size_t i = 0; i < lineality.size(); ++i)
            if (dot(a, lineality[i]) != 0) {
                l0 = static_cast<int>(i);
                break;
            }
        if (l0 >= 0) {
            IntVec pivot = lineality[static_cast<size_t>(l0)];
            Int ap = dot(a, pivot);
            if (ap < 0) {
                for (auto& c : pivot) c = -c;
                ap = -ap;
            }
            std::vector<IntVec> new_lin;
            for (size_t i = 0; i < lineality.size(); ++i) {
                if (static_cast<int>(i) == l0) continue;
                Int al = dot(a, lineality[i]);
                IntVec adj = vec_sub(vec_scale(ap, lineality[i]), vec_scale(al, pivot));
                new_lin.push_back(primitive_part(adj));
            }
            for (auto& r : rays) {
                Int ar = dot(a, r.v);
                if (ar != 0) r.v = primitive_part(vec_sub(vec_scale(ap, r.v), vec_scale(ar, pivot)));
                r.tight.push_back(1);
            }
            TrackedRay nr;
            nr.v = primitive_part(pivot);
            nr.tight.assign(idx, 1);
            nr.tight.push_back(0);
            rays.push_back(std::move(nr));
            lineality = std::move(new_lin);
            processed.push_back(a);
            continue;
        }

        std::vector<int> pos, zer, neg;
        std::vector<Int> val(rays.size());
        for (size_t i = 0; i < rays.size(); ++i) {
            val[i] = dot(a, rays[i].v);
            int s = sgn(val[i]);
            if (s > 0)
                pos.push_back(static_cast<int>(i));
            else if (s < 0)
                neg.push_back(static_cast<int>(i));
            else
                zer.push_back(static_cast<int>(i));
        }
        if (neg.empty()) {
            for (size_t i = 0; i < rays.size(); ++i) rays[i].tight.push_back(val[i] == 0 ? 1 : 0);
            processed.push_back(a);
            continue;
        }
        std::vector<TrackedRay> next;
        for (int i : pos) {
            TrackedRay r = rays[static_cast<size_t>(i)];
            r.tight.push_back(0);
            next.push_back(std::move(r));
        }
        for (int i : zer) {
            TrackedRay r = rays[static_cast<size_t>(i)];
            r.tight.push_back(1);
            next.push_back(std::move(r));
        }
        int lin_dim = static_cast<int>(lineality.size());
        for (int pi : pos)
            for (int mi : neg) {
                const TrackedRay& p = rays[static_cast<size_t>(pi)];
                const TrackedRay& m = rays[static_cast<size_t>(mi)];
                if (!rank_adjacent(processed, p, m, n, lin_dim)) continue;
                IntVec w =
                    vec_sub(vec_scale(val[static_cast<size_t>(pi)], m.v),
                            vec_scale(val[static_cast<size_t>(mi)], p.v));
                TrackedRay nr;
                nr.v = primitive_part(w);
                nr.tight.resize(idx + 1);
                for (size_t k = 0; k < idx; ++k) nr.tight[k] = p.tight[k] && m.tight[k];
                nr.tight[idx] = 1;
                next.push_back(std::move(nr));
            }
        rays = std::move(next);
        processed.push_back(a);
    }

    DdResult res;
    res.lineality = std::move(lineality);
    for (auto& r : rays) res.rays.push_back(std::move(r.v));
    std::sort(res.rays.begin(), res.rays.end(), lex_less);
    return res;
}

namespace {

std::vector<IntVec> lattice_functionals(const Lattice& lat, const std::vector<IntVec>& coord_rows) {
    std::vector<IntVec> out;
    for (const auto& e : coord_rows) {
        RatVec w = mat_vec(lat.gram_inverse(), to_rat(e));
        out.push_back(primitive_part(w));
    }
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

IntVec coordinate_row(const Lattice& lat, const IntVec& w) { return mat_vec(lat.gram(), w); }

}  // namespace

RationalCone RationalCone::from_generators(LatticePtr L, const std::vector<IntVec>& gens) {
    assert(L);
    int n = L->rank();
    RationalCone c;
    c.lat_ = L;

    std::vector<IntVec> prim;
    for (const auto& g : gens) {
        assert(static_cast<int>(g.size()) == n);
        if (conewalls::is_zero(g)) continue;
        prim.push_back(primitive_part(g));
    }
    std::sort(prim.begin(), prim.end(), lex_less);
    prim.erase(std::unique(prim.begin(), prim.end()), prim.end());

    std::vector<IntVec> eq_rows = kernel_basis(mat_from_rows(prim, n));
    c.equations_ = lattice_functionals(*L, eq_rows);
    c.span_basis_ = kernel_basis(mat_from_rows(eq_rows, n));
    c.dim_ = static_cast<int>(c.span_basis_.size());
    if (prim.empty()) {
        assert(c.dim_ == 0);
        return c;
    }

    int r = c.dim_;
    IntMat bt(n, r);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < r; ++k) bt(i, k) = c.span_basis_[static_cast<size_t>(k)][static_cast<size_t>(i)];
    IntegerSolver span_solver(bt);
    std::vector<IntVec> gens_b;
    for (const auto& g : prim) {
        auto cb = span_solver.solve(g);
        assert(cb.has_value());
        gens_b.push_back(*cb);
    }

    // Facets: extreme rays of the coordinate dual cone within the span.
    DdResult dual = dd_rays(r, gens_b);
    assert(dual.lineality.empty());
    std::vector<IntVec> facet_rows_b = dual.rays;

    // Extreme rays and lineality from the facet description.
    DdResult prym = dd_rays(r, facet_rows_b);
    for (const auto& l : prym.lineality) {
        IntVec amb(n, Int(0));
        for (int k = 0; k < r; ++k)
            for (int i = 0; i < n; ++i) amb[static_cast<size_t>(i)] += l[static_cast<size_t>(k)] * bt(i, k);
        c.lineality_.push_back(amb);
    }
    if (!c.lineality_.empty()) c.lineality_ = rows_of(row_hnf(mat_from_rows(c.lineality_, n)));
    for (const auto& ray : prym.rays) {
        IntVec amb(n, Int(0));
        for (int k = 0; k < r; ++k)
            for (int i = 0; i < n; ++i)
                amb[static_cast<size_t>(i)] += ray[static_cast<size_t>(k)] * bt(i, k);
        c.generators_.push_back(primitive_part(amb));
    }
    std::sort(c.generators_.begin(), c.generators_.end(), lex_less);

    // Lift each facet functional from span coordinates to the canonical
    // ambient representative in the row space of the span basis.
    if (!facet_rows_b.empty()) {
        RatMat bbt(r, r);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j)
                bbt(i, j) = dot(c.span_basis_[static_cast<size_t>(i)], c.span_basis_[static_cast<size_t>(j)]);
        RatMat bbt_inv = *inverse(bbt);
        std::vector<IntVec> facet_rows_amb;
        for (const auto& alpha : facet_rows_b) {
            RatVec u = mat_vec(bbt_inv, to_rat(alpha));
            RatVec amb(n, Rat(0));
            for (int k = 0; k < r; ++k)
                for (int i = 0; i < n; ++i)
                    amb[static_cast<size_t>(i)] += u[static_cast<size_t>(k)] * Rat(bt(i, k));
            facet_rows_amb.push_back(primitive_part(amb));
        }
        c.facets_ = lattice_functionals(*L, facet_rows_amb);
    }
    return c;
}

RationalCone RationalCone::from_generators(LatticePtr L, const std::vector<RatVec>& gens) {
    std::vector<IntVec> prim;
    for (const auto& g : gens)
        if (!conewalls::is_zero(g)) prim.push_back(primitive_part(g));
    return from_generators(std::move(L), prim);
}

bool RationalCone::contains(const RatVec& x, Strictness s) const {
    for (const auto& e : equations_)
        if (lat_->pair(e, x) != 0) return false;
    for (const auto& f : facets_) {
        Rat v = lat_->pair(f, x);
        if (s == Strictness::Closed ? v < 0 : v <= 0) return false;
    }
    return true;
}

bool RationalCone::contains(const IntVec& x, Strictness s) const { return contains(to_rat(x), s); }

bool RationalCone::span_contains(const RatVec& x) const {
    for (const auto& e : equations_)
        if (lat_->pair(e, x) != 0) return false;
    return true;
}

IntVec RationalCone::relative_interior_point() const {
    IntVec p(lat_->rank(), Int(0));
    for (const auto& g : generators_) p = vec_add(p, g);
    return p;
}

bool cone_eq(const RationalCone& a, const RationalCone& b) {
    if (a.lattice() != b.lattice()) {
        if (!(a.lattice()->gram() == b.lattice()->gram() && a.lattice()->h() == b.lattice()->h()))
            return false;
    }
    return a.dim() == b.dim() && a.generators() == b.generators() && a.lineality() == b.lineality();
}

namespace {

RationalCone from_h_description(const LatticePtr& lat, const std::vector<IntVec>& eq_rows,
                                const std::vector<IntVec>& ineq_rows) {
    int n = lat->rank();
    std::vector<IntVec> rows;
    for (const auto& e : eq_rows) {
        rows.push_back(e);
        IntVec ne(e.size());
        for (size_t i = 0; i < e.size(); ++i) ne[i] = -e[i];
        rows.push_back(std::move(ne));
    }
    for (const auto& r : ineq_rows) rows.push_back(r);
    DdResult dd = dd_rays(n, rows);
    std::vector<IntVec> gens = dd.rays;
    for (const auto& l : dd.lineality) {
        gens.push_back(l);
        IntVec nl(l.size());
        for (size_t i = 0; i < l.size(); ++i) nl[i] = -l[i];
        gens.push_back(std::move(nl));
    }
    return RationalCone::from_generators(lat, gens);
}

void append_h_description(const RationalCone& c, std::vector<IntVec>& eq_rows,
                          std::vector<IntVec>& ineq_rows) {
    const Lattice& lat = *c.lattice();
    for (const auto& e : c.equations()) eq_rows.push_back(coordinate_row(lat, e));
    for (const auto& f : c.facet_normals()) ineq_rows.push_back(coordinate_row(lat, f));
}

}  // namespace

RationalCone intersect_halfspace(const RationalCone& c, const IntVec& w, HalfspaceSign sign) {
    std::vector<IntVec> eq_rows, ineq_rows;
    append_h_description(c, eq_rows, ineq_rows);
    IntVec row = coordinate_row(*c.lattice(), w);
    if (sign == HalfspaceSign::Zero) {
        eq_rows.push_back(row);
    } else {
        if (sign == HalfspaceSign::NonPositive)
            for (auto& x : row) x = -x;
        ineq_rows.push_back(row);
    }
    return from_h_description(c.lattice(), eq_rows, ineq_rows);
}

RationalCone intersect(const RationalCone& a, const RationalCone& b) {
    assert(a.lattice()->gram() == b.lattice()->gram());
    std::vector<IntVec> eq_rows, ineq_rows;
    append_h_description(a, eq_rows, ineq_rows);
    append_h_description(b, eq_rows, ineq_rows);
    return from_h_description(a.lattice(), eq_rows, ineq_rows);
}

RationalCone transform(const RationalCone& c, const IntMat& m) {
    std::vector<IntVec> gens;
    for (const auto& g : c.generators()) gens.push_back(mat_vec(m, g));
    for (const auto& l : c.lineality()) {
        IntVec img = mat_vec(m, l);
        gens.push_back(img);
        for (auto& x : img) x = -x;
        gens.push_back(img);
    }
    return RationalCone::from_generators(c.lattice(), gens);
}

RationalCone facet_cone(const RationalCone& c, int index) {
    assert(index >= 0 && index < static_cast<int>(c.facet_normals().size()));
    return intersect_halfspace(c, c.facet_normals()[static_cast<size_t>(index)], HalfspaceSign::Zero);
}

namespace {

std::vector<IntVec> closed_cone_generators(const RationalCone& c) {
    std::vector<IntVec> gens = c.generators();
    for (const auto& l : c.lineality()) {
        gens.push_back(l);
        IntVec nl(l.size());
        for (size_t i = 0; i < l.size(); ++i) nl[i] = -l[i];
        gens.push_back(std::move(nl));
    }
    return gens;
}

}  // namespace

std::optional<IntVec> separation_witness(const RationalCone& c, const IntVec& v) {
    if (is_zero(v)) throw ZeroVectorError("wall_separates: zero wall vector");
    const Lattice& lat = *c.lattice();
    std::vector<IntVec> gens = closed_cone_generators(c);
    for (const auto& g : gens) {
        ConePosition p = lat.cone_position(g);
        if (p != ConePosition::InteriorPositive && p != ConePosition::BoundaryPositive)
            throw PreconditionError("wall_separates: cone not contained in the closed positive cone");
    }
    std::vector<const IntVec*> zero;
    const IntVec* plus = nullptr;
    const IntVec* minus = nullptr;
    Int vp, vm;
    for (const auto& g : gens) {
        Int s = lat.pair(v, g);
        if (s > 0) {
            if (!plus) {
                plus = &g;
                vp = s;
            }
        } else if (s < 0) {
            if (!minus) {
                minus = &g;
                vm = s;
            }
        } else {
            zero.push_back(&g);
        }
    }
    // A zero-pairing generator of positive square is itself a witness; two
    // independent zero-pairing generators sum to one; a strict sign change
    // combines to a zero-pairing interior point.
    for (const IntVec* z : zero)
        if (lat.square(*z) > 0) return *z;
    if (zero.size() >= 2) return vec_add(*zero[0], *zero[1]);
    if (plus && minus) return vec_sub(vec_scale(vp, *minus), vec_scale(vm, *plus));
    return std::nullopt;
}

bool wall_separates(const RationalCone& c, const IntVec& v) {
    auto w = separation_witness(c, v);
    if (!w) return false;
    assert(c.lattice()->cone_position(*w) == ConePosition::InteriorPositive);
    assert(c.lattice()->pair(v, *w) == 0);
    assert(c.contains(*w, Strictness::Closed));
    return true;
}

}  // namespace conewalls
