#include "json_io.hpp"

#include <stdexcept>

#include "conewalls/errors.hpp"

namespace conewalls::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw ValidationError(what); }

Int int_from_json(const json& j, const char* where) {
    if (j.is_number_integer()) return Int(j.get<long>());
    if (j.is_number_unsigned()) {
        unsigned long v = j.get<unsigned long>();
        return Int(v);
    }
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::invalid_argument&) {
            bad(std::string(where) + ": malformed integer literal");
        }
    }
    bad(std::string(where) + ": expected an integer");
}

Rat rat_from_json(const json& j, const char* where) {
    if (j.is_number_integer()) return Rat(j.get<long>());
    if (j.is_number_unsigned()) return Rat(Int(j.get<unsigned long>()));
    if (j.is_string()) {
        try {
            return rat_from_string(j.get<std::string>());
        } catch (const std::invalid_argument& e) {
            bad(std::string(where) + ": " + e.what());
        }
    }
    bad(std::string(where) + ": expected a rational");
}

IntVec int_vec_from_json(const json& j, const char* where) {
    if (!j.is_array()) bad(std::string(where) + ": expected an array");
    IntVec v;
    for (const auto& e : j) v.push_back(int_from_json(e, where));
    return v;
}

RatVec rat_vec_from_json(const json& j, const char* where) {
    if (!j.is_array()) bad(std::string(where) + ": expected an array");
    RatVec v;
    for (const auto& e : j) v.push_back(rat_from_json(e, where));
    return v;
}

IntMat int_mat_from_json(const json& j, const char* where) {
    if (!j.is_array() || j.empty()) bad(std::string(where) + ": expected a nonempty matrix");
    std::vector<IntVec> rows;
    for (const auto& r : j) rows.push_back(int_vec_from_json(r, where));
    size_t cols = rows[0].size();
    for (const auto& r : rows)
        if (r.size() != cols) bad(std::string(where) + ": ragged matrix");
    IntMat m(static_cast<int>(rows.size()), static_cast<int>(cols));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t k = 0; k < cols; ++k) m(static_cast<int>(i), static_cast<int>(k)) = rows[i][k];
    return m;
}

std::vector<IntVec> vec_list_from_json(const json& j, const char* where) {
    if (!j.is_array()) bad(std::string(where) + ": expected an array of vectors");
    std::vector<IntVec> out;
    for (const auto& e : j) out.push_back(int_vec_from_json(e, where));
    return out;
}

}  // namespace

ProblemFile parse_problem_file(const json& j) {
    if (!j.is_object()) bad("problem file must be a JSON object");
    ProblemFile pf;
    if (j.contains("gram")) pf.gram = int_mat_from_json(j["gram"], "gram");
    if (j.contains("h")) pf.h = int_vec_from_json(j["h"], "h");
    if (j.contains("cone")) pf.cone = vec_list_from_json(j["cone"], "cone");
    if (j.contains("N")) pf.max_neg_square = int_from_json(j["N"], "N");
    if (j.contains("walls")) {
        const json& w = j["walls"];
        if (!w.is_array()) bad("walls: expected an array");
        std::vector<IntVec> walls;
        for (const auto& e : w) {
            if (e.is_object()) {
                if (!e.contains("v")) bad("walls: wall object lacks v");
                walls.push_back(int_vec_from_json(e["v"], "walls"));
            } else {
                walls.push_back(int_vec_from_json(e, "walls"));
            }
        }
        pf.walls = std::move(walls);
    }
    if (j.contains("group")) {
        const json& g = j["group"];
        if (!g.is_array()) bad("group: expected an array of matrices");
        std::vector<IntMat> gens;
        for (const auto& m : g) gens.push_back(int_mat_from_json(m, "group"));
        pf.group = std::move(gens);
    }
    if (j.contains("y")) pf.y = rat_vec_from_json(j["y"], "y");
    if (j.contains("depth")) {
        if (!j["depth"].is_number_integer() && !j["depth"].is_number_unsigned())
            bad("depth: expected an integer");
        long d = j["depth"].get<long>();
        if (d < 0 || d > 1000000) bad("depth: out of range");
        pf.depth = static_cast<int>(d);
    }
    if (j.contains("seed")) {
        if (!j["seed"].is_number_integer() && !j["seed"].is_number_unsigned())
            bad("seed: expected an integer");
        pf.seed = j["seed"].get<std::uint64_t>();
    }
    if (j.contains("mukai")) {
        const json& m = j["mukai"];
        if (!m.is_object() || !m.contains("gram") || !m.contains("v"))
            bad("mukai: expected an object with gram and v");
        ProblemFile::MukaiInput mi;
        mi.gram = int_mat_from_json(m["gram"], "mukai.gram");
        mi.v = int_vec_from_json(m["v"], "mukai.v");
        pf.mukai = std::move(mi);
    }
    if (j.contains("pairing")) {
        const json& p = j["pairing"];
        if (!p.is_array()) bad("pairing: expected an array");
        std::vector<ProblemFile::PairingInput> entries;
        for (const auto& e : p) {
            if (!e.is_object() || !e.contains("facet") || !e.contains("map"))
                bad("pairing: expected objects with facet and map");
            ProblemFile::PairingInput pi;
            pi.facet = vec_list_from_json(e["facet"], "pairing.facet");
            pi.map = int_mat_from_json(e["map"], "pairing.map");
            entries.push_back(std::move(pi));
        }
        pf.pairing = std::move(entries);
    }
    return pf;
}

ProblemFile parse_problem_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        bad(std::string("invalid JSON: ") + e.what());
    }
    return parse_problem_file(j);
}

json int_to_json(const Int& v) {
    if (v.fits_slong_p()) return json(v.get_si());
    return json(v.get_str());
}

json vec_to_json(const IntVec& v) {
    json a = json::array();
    for (const auto& e : v) a.push_back(int_to_json(e));
    return a;
}

json vecs_to_json(const std::vector<IntVec>& vs) {
    json a = json::array();
    for (const auto& v : vs) a.push_back(vec_to_json(v));
    return a;
}

Int json_to_int(const json& j) { return int_from_json(j, "value"); }

Rat json_to_rat(const json& j) { return rat_from_json(j, "value"); }

std::string status_string(CertStatus s) {
    return s == CertStatus::Certified ? "certified" : "heuristic";
}

json walls_result(const std::vector<Wall>& walls) {
    json list = json::array();
    for (const Wall& w : walls) {
        json e;
        e["v"] = vec_to_json(w.v);
        e["square"] = int_to_json(w.square);
        list.push_back(std::move(e));
    }
    json out;
    out["walls"] = std::move(list);
    return out;
}

json chambers_result(const Subdivision& s, const std::vector<AdjacencyEdge>& adj) {
    const Lattice& lat = *s.base.lattice();
    auto supports_facet = [&](const IntVec& w, const RationalCone& c) {
        int nf = static_cast<int>(c.facet_normals().size());
        for (int f = 0; f < nf; ++f) {
            RationalCone fc = facet_cone(c, f);
            bool zero = true;
            for (const auto& g : fc.generators())
                if (lat.pair(w, g) != 0) { zero = false; break; }
            if (zero)
                for (const auto& l : fc.lineality())
                    if (lat.pair(w, l) != 0) { zero = false; break; }
            if (zero) return true;
        }
        return false;
    };

    json chambers = json::array();
    for (const Chamber& ch : s.chambers) {
        json e;
        e["id"] = ch.id;
        e["generators"] = vecs_to_json(ch.cone.generators());
        json wb = json::array();
        for (size_t k = 0; k < s.walls.size(); ++k) {
            if (ch.wall_signs[k] == 0 || supports_facet(s.walls[k], ch.cone))
                wb.push_back(vec_to_json(s.walls[k]));
        }
        e["walls_on_boundary"] = std::move(wb);
        chambers.push_back(std::move(e));
    }
    json edges = json::array();
    for (const AdjacencyEdge& e : adj) {
        json o;
        o["a"] = e.a;
        o["b"] = e.b;
        o["wall"] = vec_to_json(e.wall);
        edges.push_back(std::move(o));
    }
    json out;
    out["chambers"] = std::move(chambers);
    out["adjacency"] = std::move(edges);
    return out;
}

json dirichlet_result(const DirichletDomain& d) {
    json out;
    out["domain_generators"] = vecs_to_json(d.domain.generators());
    out["domain_lineality"] = vecs_to_json(d.domain.lineality());
    json fw = json::array();
    for (const FacetWord& f : d.facet_words) {
        json e;
        e["facet_normal"] = vec_to_json(f.facet_normal);
        e["from_group"] = f.from_group;
        e["word"] = f.from_group ? word_string(f.word) : "";
        fw.push_back(std::move(e));
    }
    out["facet_words"] = std::move(fw);
    out["status"] = status_string(d.status);
    out["depth"] = d.depth;
    return out;
}

json models_result(const ModelClasses& mc) {
    json classes = json::array();
    for (const auto& c : mc.classes) {
        json e = json::array();
        for (int id : c) e.push_back(id);
        classes.push_back(std::move(e));
    }
    json out;
    out["classes"] = std::move(classes);
    out["count"] = static_cast<int>(mc.classes.size());
    out["status"] = status_string(mc.status);
    out["depth"] = mc.depth;
    return out;
}

json k3walls_result(const MukaiResult& mr) {
    json list = json::array();
    for (const SigmaWall& w : mr.walls) {
        json e;
        e["direction"] = vec_to_json(w.direction);
        e["square"] = int_to_json(w.square);
        e["sigma_square"] = rat_to_string(w.sigma_square);
        e["lift_t"] = int_to_json(w.lift_t);
        e["lift_k"] = int_to_json(w.lift_k);
        e["witness"] = vec_to_json(w.witness);
        list.push_back(std::move(e));
    }
    json out;
    out["bound"] = rat_to_string(mr.bound);
    out["walls"] = std::move(list);
    return out;
}

}  // namespace conewalls::io
