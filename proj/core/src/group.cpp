#include "conewalls/group.hpp"

#include <algorithm>
#include <cassert>
#include <random>
#include <utility>

#include "conewalls/errors.hpp"

namespace conewalls {

namespace {

std::optional<IntMat> integer_inverse(const IntMat& m) {
    auto inv = inverse(to_rat(m));
    if (!inv) return std::nullopt;
    IntMat out(m.rows, m.cols);
    for (int i = 0; i < m.rows; ++i) {
        for (int j = 0; j < m.cols; ++j) {
            const Rat& e = (*inv)(i, j);
            if (e.get_den() != 1) return std::nullopt;
            out(i, j) = e.get_num();
        }
    }
    return out;
}

bool rat_lex_less(const RatVec& u, const RatVec& v) {
    for (size_t i = 0; i < u.size() && i < v.size(); ++i) {
        int c = cmp(u[i], v[i]);
        if (c != 0) return c < 0;
    }
    return u.size() < v.size();
}

/// Layered breadth-first enumeration, deduplicated by matrix.  Letter 2i is
/// generator i, letter 2i+1 its inverse; new words extend old ones on the
/// right, so elements come out in word-length order with ties broken by
/// discovery order, which is deterministic.
struct Bfs {
    std::vector<IntMat> letters;
    std::vector<GroupElement> elems;
    std::map<std::vector<Int>, int> seen;
    std::vector<int> frontier;
    bool closed = false;
    int layer = 0;

    explicit Bfs(const IsometryGroup& g) {
        int n = g.lattice->rank();
        for (const IntMat& m : g.generators) {
            letters.push_back(m);
            auto inv = integer_inverse(m);
            assert(inv);
            letters.push_back(*inv);
        }
        IntMat id = IntMat::identity(n);
        seen.emplace(id.a, 0);
        elems.push_back(GroupElement{id, {}});
        frontier.push_back(0);
        if (letters.empty()) closed = true;
    }

    void advance() {
        if (closed) return;
        std::vector<int> next;
        for (int idx : frontier) {
            for (size_t j = 0; j < letters.size(); ++j) {
                IntMat m = mat_mul(elems[idx].m, letters[j]);
                auto [it, fresh] = seen.emplace(m.a, static_cast<int>(elems.size()));
                if (!fresh) continue;
                Word w = elems[idx].word;
                w.push_back(static_cast<int>(j));
                next.push_back(static_cast<int>(elems.size()));
                elems.push_back(GroupElement{std::move(m), std::move(w)});
            }
        }
        if (next.empty()) {
            closed = true;
        } else {
            frontier = std::move(next);
            ++layer;
        }
    }
};

/// Lattice functional of the halfspace (x, g(y) - y) >= 0, primitive.
/// Returns nullopt when g fixes y.
std::optional<IntVec> cut_functional(const Lattice&, const IntMat& m, const RatVec& y) {
    RatVec gy = mat_vec(m, y);
    RatVec diff = vec_sub(gy, y);
    if (is_zero(diff)) return std::nullopt;
    return primitive_part(diff);
}

/// True when the functional w (acting through the pairing) vanishes on every
/// generator and lineality vector of the cone.
bool supports_cone(const Lattice& lat, const IntVec& w, const RationalCone& c) {
    for (const IntVec& x : c.generators())
        if (lat.pair(w, x) != 0) return false;
    for (const IntVec& x : c.lineality())
        if (lat.pair(w, x) != 0) return false;
    return true;
}

}  // namespace

bool check_isometry(const Lattice& L, const IntMat& m) {
    int n = L.rank();
    if (m.rows != n || m.cols != n) return false;
    if (mat_mul(mat_mul(transpose(m), L.gram()), m) != L.gram()) return false;
    return L.cone_position(mat_vec(m, L.h())) == ConePosition::InteriorPositive;
}

IsometryGroup make_group(LatticePtr L, std::vector<IntMat> gens) {
    for (const IntMat& m : gens) {
        if (!check_isometry(*L, m))
            throw PreconditionError("generator is not an isometry preserving the positive cone");
    }
    return IsometryGroup{std::move(L), std::move(gens)};
}

std::string word_string(const Word& w) {
    if (w.empty()) return "e";
    std::string out;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i > 0) out += "*";
        out += "g" + std::to_string(w[i] / 2);
        if (w[i] % 2 == 1) out += "^-1";
    }
    return out;
}

GroupBfs group_elements(const IsometryGroup& g, int depth) {
    Bfs b(g);
    while (!b.closed && b.layer < depth) b.advance();
    return GroupBfs{std::move(b.elems), b.closed, b.layer};
}

OrbitResult orbit(const IsometryGroup& g, const RatVec& y, int depth) {
    GroupBfs b = group_elements(g, depth);
    std::vector<RatVec> pts;
    for (const GroupElement& e : b.elements) pts.push_back(mat_vec(e.m, y));
    std::sort(pts.begin(), pts.end(), rat_lex_less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return OrbitResult{std::move(pts), b.closed};
}

StabilizerResult stabilizer_trivial(const IsometryGroup& g, const RatVec& y, int depth) {
    GroupBfs b = group_elements(g, depth);
    for (size_t i = 1; i < b.elements.size(); ++i) {
        if (mat_vec(b.elements[i].m, y) == y)
            return StabilizerResult{StabilizerStatus::NontrivialWitness, b.elements[i].word};
    }
    if (b.closed) return StabilizerResult{StabilizerStatus::Trivial, {}};
    return StabilizerResult{StabilizerStatus::UnknownAtDepth, {}};
}

DirichletDomain dirichlet_domain(const IsometryGroup& g, const RationalCone& ambient,
                                 const RatVec& y, int depth) {
    const Lattice& lat = *g.lattice;
    if (lat.cone_position(y) != ConePosition::InteriorPositive)
        throw BadReferenceError("base point must lie in the interior of the positive cone");
    if (!ambient.contains(y, Strictness::RelativeInterior))
        throw BadReferenceError("base point must lie in the relative interior of the ambient cone");

    struct Cut {
        IntVec w;
        Word word;
        IntMat m;
    };

    Bfs bfs(g);
    RationalCone cur = ambient;
    std::vector<RationalCone> hist{cur};
    std::vector<Cut> cuts;
    bool stabilized = false;
    int stab_depth = 0;

    while (!bfs.closed && bfs.layer < depth) {
        size_t before = bfs.elems.size();
        bfs.advance();
        if (bfs.closed) break;
        for (size_t e = before; e < bfs.elems.size(); ++e) {
            auto w = cut_functional(lat, bfs.elems[e].m, y);
            if (!w) throw StabilizerError("base point is fixed by " + word_string(bfs.elems[e].word));
            cur = intersect_halfspace(cur, *w, HalfspaceSign::NonNegative);
            cuts.push_back(Cut{*w, bfs.elems[e].word, bfs.elems[e].m});
        }
        hist.push_back(cur);
        size_t top = hist.size() - 1;
        if (top >= 2 && cone_eq(hist[top - 2], hist[top])) {
            stabilized = true;
            stab_depth = static_cast<int>(top) - 2;
            break;
        }
    }

    DirichletDomain out;
    out.domain = cur;
    out.base_point = y;
    out.ambient = ambient;
    if (bfs.closed) {
        out.status = CertStatus::Certified;
        out.depth = bfs.layer;
    } else if (stabilized) {
        out.status = CertStatus::Heuristic;
        out.depth = stab_depth;
    } else {
        out.status = CertStatus::Heuristic;
        out.depth = depth;
    }
    assert(out.domain.contains(y, Strictness::RelativeInterior));

    IntVec rip = out.domain.relative_interior_point();
    int facets = static_cast<int>(out.domain.facet_normals().size());
    for (int f = 0; f < facets; ++f) {
        RationalCone fc = facet_cone(out.domain, f);
        FacetWord fw;
        fw.facet_normal = out.domain.facet_normals()[f];
        bool found = false;
        for (const Cut& c : cuts) {
            if (lat.pair(c.w, rip) > 0 && supports_cone(lat, c.w, fc)) {
                fw.from_group = true;
                fw.word = c.word;
                fw.map = c.m;
                found = true;
                break;
            }
        }
        if (!found) fw.from_group = false;  // facet inherited from the ambient cone
        out.facet_words.push_back(std::move(fw));
    }
    return out;
}

TilingReport verify_tiling(const DirichletDomain& d, const IsometryGroup& g, int samples,
                           int depth, std::uint64_t seed) {
    GroupBfs b = group_elements(g, depth);
    std::vector<IntVec> dirs = d.ambient.generators();
    for (const IntVec& l : d.ambient.lineality()) {
        dirs.push_back(l);
        IntVec neg(l.size());
        for (size_t i = 0; i < l.size(); ++i) neg[i] = -l[i];
        dirs.push_back(std::move(neg));
    }

    TilingReport rep;
    rep.samples = samples;
    std::mt19937_64 rng(seed);
    int n = g.lattice->rank();
    for (int s = 0; s < samples; ++s) {
        IntVec p(n, 0);
        for (const IntVec& dir : dirs) {
            Int c = static_cast<unsigned long>(rng() % 9 + 1);
            p = vec_add(p, vec_scale(c, dir));
        }
        bool covered = false;
        int interior_claims = 0;
        for (const GroupElement& e : b.elements) {
            IntVec q = mat_vec(e.m, p);
            if (!covered && d.domain.contains(q, Strictness::Closed)) {
                covered = true;
                ++rep.witness_counts[word_string(e.word)];
            }
            if (d.domain.contains(q, Strictness::RelativeInterior)) ++interior_claims;
        }
        if (covered) ++rep.covered;
        if (interior_claims >= 2) ++rep.collisions;
    }
    rep.cover_fraction = samples == 0 ? Rat(1) : Rat(rep.covered) / Rat(samples);
    return rep;
}

FacePairing find_face_pairings(const RationalCone& base, const IsometryGroup& g, int depth) {
    GroupBfs b = group_elements(g, depth);
    int facets = static_cast<int>(base.facet_normals().size());
    std::vector<RationalCone> fc;
    for (int t = 0; t < facets; ++t) fc.push_back(facet_cone(base, t));

    FacePairing out;
    std::vector<char> paired(facets, 0);
    int remaining = facets;
    std::vector<std::optional<FacePairingEntry>> slots(facets);
    for (size_t i = 1; i < b.elements.size() && remaining > 0; ++i) {
        RationalCone tr = transform(base, b.elements[i].m);
        RationalCone inter = intersect(tr, base);
        if (inter.dim() != base.dim() - 1) continue;
        for (int t = 0; t < facets; ++t) {
            if (paired[t] || !cone_eq(inter, fc[t])) continue;
            slots[t] = FacePairingEntry{fc[t].generators(), b.elements[i].m, b.elements[i].word};
            paired[t] = 1;
            --remaining;
            break;
        }
    }
    for (int t = 0; t < facets; ++t) {
        if (slots[t])
            out.entries.push_back(std::move(*slots[t]));
        else
            out.unpaired_facets.push_back(t);
    }
    return out;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

std::vector<IntVec> canonical_generator_list(const std::vector<IntVec>& gens) {
    std::vector<IntVec> out;
    for (const IntVec& v : gens) out.push_back(primitive_part(v));
    std::sort(out.begin(), out.end(), lex_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

ModelClasses chamber_orbits(const Subdivision& s, const IsometryGroup& g,
                            const FacePairing& pairing, int depth) {
    const Lattice& lat = *g.lattice;
    const RationalCone& base = s.base;
    int d = base.dim();
    int m = static_cast<int>(s.chambers.size());
    int base_facets = static_cast<int>(base.facet_normals().size());

    std::vector<RationalCone> base_fc;
    for (int t = 0; t < base_facets; ++t) base_fc.push_back(facet_cone(base, t));

    // Validate the pairing and resolve each entry to a base facet.
    std::vector<int> facet_entry(base_facets, -1);
    for (size_t e = 0; e < pairing.entries.size(); ++e) {
        const FacePairingEntry& entry = pairing.entries[e];
        std::vector<IntVec> want = canonical_generator_list(entry.facet_generators);
        int t = -1;
        for (int c = 0; c < base_facets; ++c) {
            if (base_fc[c].generators() == want) {
                t = c;
                break;
            }
        }
        if (t < 0) throw PairingError("pairing facet does not match a facet of the base cone");
        if (facet_entry[t] >= 0) throw PairingError("base facet is paired twice");
        if (!check_isometry(lat, entry.map))
            throw PairingError("pairing element is not an isometry preserving the positive cone");
        RationalCone image = transform(base, entry.map);
        for (const IntVec& x : base_fc[t].generators()) {
            if (!image.contains(x, Strictness::Closed))
                throw PairingError("pairing element does not glue its facet");
        }
        for (const IntVec& x : base_fc[t].lineality()) {
            if (!image.contains(x, Strictness::Closed))
                throw PairingError("pairing element does not glue its facet");
        }
        facet_entry[t] = static_cast<int>(e);
    }

    // Images of every chamber under every pairing element, computed once.
    std::vector<std::vector<RationalCone>> entry_images(pairing.entries.size());
    for (size_t e = 0; e < pairing.entries.size(); ++e) {
        for (int k = 0; k < m; ++k)
            entry_images[e].push_back(transform(s.chambers[k].cone, pairing.entries[e].map));
    }

    // Crossings out of each chamber: a facet of the chamber that lies on a
    // paired facet of the base cone and on no wall hyperplane leads, via the
    // pairing element, to the chambers whose images share that facet in full
    // dimension.
    struct Crossing {
        int entry;
        std::vector<int> targets;
    };
    std::vector<std::vector<Crossing>> crossings(m);
    for (int i = 0; i < m; ++i) {
        const RationalCone& ci = s.chambers[i].cone;
        int nf = static_cast<int>(ci.facet_normals().size());
        for (int f = 0; f < nf; ++f) {
            RationalCone fc = facet_cone(ci, f);
            bool on_wall = false;
            for (const IntVec& w : s.walls) {
                if (supports_cone(lat, w, fc)) {
                    on_wall = true;
                    break;
                }
            }
            if (on_wall) continue;
            int entry = -1;
            for (int t = 0; t < base_facets && entry < 0; ++t) {
                if (facet_entry[t] < 0) continue;
                if (supports_cone(lat, base.facet_normals()[t], fc)) entry = facet_entry[t];
            }
            if (entry < 0) continue;
            Crossing cr;
            cr.entry = entry;
            for (int k = 0; k < m; ++k) {
                RationalCone inter = intersect(entry_images[entry][k], fc);
                if (inter.dim() == d - 1) cr.targets.push_back(k);
            }
            if (!cr.targets.empty()) crossings[i].push_back(std::move(cr));
        }
    }

    UnionFind uf(m);
    bool all_closed = true;
    int max_layer = 0;
    for (int seed = 0; seed < m; ++seed) {
        std::map<std::vector<Int>, char> visited;
        IntMat id = IntMat::identity(lat.rank());
        auto key_of = [](const IntMat& mat, int k) {
            std::vector<Int> key = mat.a;
            key.push_back(k);
            return key;
        };
        std::vector<std::pair<IntMat, int>> frontier;
        visited.emplace(key_of(id, seed), 1);
        frontier.emplace_back(id, seed);
        int layer = 0;
        bool closed = false;
        while (layer < depth) {
            std::vector<std::pair<IntMat, int>> next;
            for (const auto& [w, k] : frontier) {
                for (const Crossing& cr : crossings[k]) {
                    IntMat w2 = mat_mul(w, pairing.entries[cr.entry].map);
                    for (int tgt : cr.targets) {
                        auto [it, fresh] = visited.emplace(key_of(w2, tgt), 1);
                        if (!fresh) continue;
                        uf.unite(seed, tgt);
                        next.emplace_back(w2, tgt);
                    }
                }
            }
            if (next.empty()) {
                closed = true;
                break;
            }
            frontier = std::move(next);
            ++layer;
        }
        if (!closed) {
            // One more expansion decides closure at exactly depth layers.
            bool more = false;
            for (const auto& [w, k] : frontier) {
                for (const Crossing& cr : crossings[k]) {
                    IntMat w2 = mat_mul(w, pairing.entries[cr.entry].map);
                    for (int tgt : cr.targets) {
                        if (!visited.count(key_of(w2, tgt))) {
                            uf.unite(seed, tgt);
                            more = true;
                        }
                    }
                }
            }
            closed = !more;
        }
        if (!closed) all_closed = false;
        max_layer = std::max(max_layer, layer);
    }

    ModelClasses out;
    std::map<int, int> class_of_root;
    for (int i = 0; i < m; ++i) {
        int r = uf.find(i);
        auto it = class_of_root.find(r);
        if (it == class_of_root.end()) {
            class_of_root.emplace(r, static_cast<int>(out.classes.size()));
            out.classes.push_back({i});
        } else {
            out.classes[it->second].push_back(i);
        }
    }
    out.status = all_closed ? CertStatus::Certified : CertStatus::Heuristic;
    out.depth = all_closed ? max_layer : depth;
    return out;
}

}  // namespace conewalls
