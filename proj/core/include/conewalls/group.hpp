#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "conewalls/chamber.hpp"

namespace conewalls {

/// Finitely generated subgroup of the isometry group preserving the
/// positive cone, given by validated generator matrices.
struct IsometryGroup {
    LatticePtr lattice;
    std::vector<IntMat> generators;
};

/// True when m is an n by n integer matrix with m^t G m = G that maps the
/// reference vector into the interior of the positive cone.  Pairing
/// preservation already forces det m = +-1, so no separate determinant test
/// is needed.
bool check_isometry(const Lattice& L, const IntMat& m);

/// Validates every generator with check_isometry; throws PreconditionError
/// on the first failure.
IsometryGroup make_group(LatticePtr L, std::vector<IntMat> gens);

/// Letters of words: 2*i is generators[i], 2*i + 1 its inverse.
using Word = std::vector<int>;

std::string word_string(const Word& w);

struct GroupElement {
    IntMat m;
    Word word;  // a shortest word for m, first found in breadth-first order
};

struct GroupBfs {
    std::vector<GroupElement> elements;  // breadth-first order, identity first
    bool closed = false;                 // expansion produced no new element
    int layers = 0;                      // longest word length present
};

/// Breadth-first enumeration of the group through words of length at most
/// depth, deduplicated by matrix.  closed is set when some layer adds no new
/// element, in which case the whole group has been listed.
GroupBfs group_elements(const IsometryGroup& g, int depth);

struct OrbitResult {
    std::vector<RatVec> points;  // sorted lexicographically
    bool closed = false;
};

/// Distinct images w(y) over words w of length at most depth.
OrbitResult orbit(const IsometryGroup& g, const RatVec& y, int depth);

enum class StabilizerStatus { Trivial, NontrivialWitness, UnknownAtDepth };

struct StabilizerResult {
    StabilizerStatus status = StabilizerStatus::UnknownAtDepth;
    Word witness;  // fixing word when status is NontrivialWitness
};

/// Trivial is reported only when the group enumeration closes within depth,
/// so the answer is definite; UnknownAtDepth means no fixing element was
/// found but the group may extend beyond the horizon.
StabilizerResult stabilizer_trivial(const IsometryGroup& g, const RatVec& y, int depth);

enum class CertStatus { Certified, Heuristic };

struct FacetWord {
    IntVec facet_normal;  // lattice functional, as stored by RationalCone
    bool from_group = false;  // false: facet inherited from the ambient cone
    Word word;
    IntMat map;
};

struct DirichletDomain {
    RationalCone domain;
    RatVec base_point;
    CertStatus status = CertStatus::Heuristic;
    int depth = 0;  // closure depth when certified, stabilization depth otherwise
    std::vector<FacetWord> facet_words;
    RationalCone ambient;
};

/// Dirichlet domain {x in ambient : (x, g(y) - y) >= 0 for all g}, built by
/// deepening word length.  Certified when the group enumeration closes;
/// otherwise the first depth k with D_k = D_{k+1} = D_{k+2} is returned as a
/// heuristic answer, falling back to D_depth.  Throws BadReferenceError when
/// y is not an interior point of the positive cone inside the ambient cone,
/// and StabilizerError when a nonidentity element fixing y turns up.
DirichletDomain dirichlet_domain(const IsometryGroup& g, const RationalCone& ambient,
                                 const RatVec& y, int depth);

struct TilingReport {
    Rat cover_fraction;  // exact
    int covered = 0;
    int collisions = 0;  // sample points claimed by two translates' interiors
    int samples = 0;
    std::map<std::string, int> witness_counts;  // word of first covering translate
};

/// Seeded deterministic spot check that the translates of the domain tile
/// the ambient cone: samples integer points of the ambient interior,
/// searches words up to depth for a translate covering each, and counts
/// points covered by more than one translate's relative interior.
TilingReport verify_tiling(const DirichletDomain& d, const IsometryGroup& g, int samples,
                           int depth, std::uint64_t seed);

struct FacePairingEntry {
    std::vector<IntVec> facet_generators;
    IntMat map;
    Word word;  // may be empty for externally supplied pairings
};

struct FacePairing {
    std::vector<FacePairingEntry> entries;
    std::vector<int> unpaired_facets;  // indices into base.facet_normals()
};

/// For each facet F of the base cone, the first group element g in
/// breadth-first order whose translate g(base) meets base exactly in F.
/// Facets with no such element within depth are reported unpaired.
FacePairing find_face_pairings(const RationalCone& base, const IsometryGroup& g, int depth);

struct ModelClasses {
    std::vector<std::vector<int>> classes;  // chamber ids, canonical order
    CertStatus status = CertStatus::Heuristic;
    int depth = 0;
};

/// Glues chambers of the subdivision across paired facets of the base cone:
/// starting from each chamber, walks translates of the subdivision crossing
/// only facets that lie on a paired base facet and on no wall hyperplane,
/// and merges every chamber reached.  Certified when each walk exhausts its
/// reachable states within depth.  Throws PairingError when a pairing entry
/// fails validation against the base cone.
ModelClasses chamber_orbits(const Subdivision& s, const IsometryGroup& g,
                            const FacePairing& pairing, int depth);

}  // namespace conewalls
