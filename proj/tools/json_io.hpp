#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "conewalls/chamber.hpp"
#include "conewalls/group.hpp"
#include "conewalls/mukai.hpp"

namespace conewalls::io {

using nlohmann::json;

/// Parsed problem file.  Every field is optional at parse time; each
/// subcommand checks for the fields it needs.
struct ProblemFile {
    std::optional<IntMat> gram;
    std::optional<IntVec> h;
    std::optional<std::vector<IntVec>> cone;
    std::optional<Int> max_neg_square;  // "N"
    std::optional<std::vector<IntVec>> walls;
    std::optional<std::vector<IntMat>> group;
    std::optional<RatVec> y;
    std::optional<int> depth;
    std::optional<std::uint64_t> seed;

    struct MukaiInput {
        IntMat gram;
        IntVec v;
    };
    std::optional<MukaiInput> mukai;

    struct PairingInput {
        std::vector<IntVec> facet;
        IntMat map;
    };
    std::optional<std::vector<PairingInput>> pairing;
};

/// Throws ValidationError on malformed documents.
ProblemFile parse_problem_file(const json& j);
ProblemFile parse_problem_text(const std::string& text);

// Scalar conversions.  Integers that fit a JSON number are emitted as
// numbers, larger ones as decimal strings; rationals are always "p/q"
// strings.
json int_to_json(const Int& v);
json vec_to_json(const IntVec& v);
json vecs_to_json(const std::vector<IntVec>& vs);
Int json_to_int(const json& j);
Rat json_to_rat(const json& j);

// Result documents, key order canonical (alphabetical).
json walls_result(const std::vector<Wall>& walls);
json chambers_result(const Subdivision& s, const std::vector<AdjacencyEdge>& adj);
json dirichlet_result(const DirichletDomain& d);
json models_result(const ModelClasses& mc);
json k3walls_result(const MukaiResult& mr);

std::string status_string(CertStatus s);

}  // namespace conewalls::io
