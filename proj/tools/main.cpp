#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "conewalls/errors.hpp"
#include "json_io.hpp"

namespace {

using conewalls::io::json;
using conewalls::io::ProblemFile;

std::string read_input(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw conewalls::ValidationError("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const json& doc) {
    std::string text = doc.dump(2) + "\n";
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw conewalls::ValidationError("cannot open output file: " + path);
    out << text;
}

template <typename T>
const T& need(const std::optional<T>& field, const char* name) {
    if (!field) throw conewalls::ValidationError(std::string("missing required field: ") + name);
    return *field;
}

conewalls::LatticePtr lattice_of(const ProblemFile& pf) {
    return conewalls::make_lattice(need(pf.gram, "gram"), need(pf.h, "h"));
}

conewalls::RationalCone cone_of(const ProblemFile& pf, const conewalls::LatticePtr& lat) {
    return conewalls::RationalCone::from_generators(lat, need(pf.cone, "cone"));
}

std::vector<conewalls::IntVec> walls_of(const ProblemFile& pf, const conewalls::RationalCone& cone) {
    if (pf.walls) return *pf.walls;
    conewalls::WallQuery q{cone, need(pf.max_neg_square, "N or walls")};
    std::vector<conewalls::IntVec> out;
    for (const auto& w : conewalls::walls_meeting_cone(q)) out.push_back(w.v);
    return out;
}

int effective_depth(const ProblemFile& pf, int flag) {
    if (flag >= 0) return flag;
    if (pf.depth) return *pf.depth;
    return 8;
}

json cmd_walls(const ProblemFile& pf) {
    auto lat = lattice_of(pf);
    conewalls::WallQuery q{cone_of(pf, lat), need(pf.max_neg_square, "N")};
    return conewalls::io::walls_result(conewalls::walls_meeting_cone(q));
}

json cmd_chambers(const ProblemFile& pf) {
    auto lat = lattice_of(pf);
    auto cone = cone_of(pf, lat);
    auto s = conewalls::subdivide(cone, walls_of(pf, cone));
    return conewalls::io::chambers_result(s, conewalls::adjacency(s));
}

json cmd_dirichlet(const ProblemFile& pf, int depth_flag) {
    auto lat = lattice_of(pf);
    auto ambient = cone_of(pf, lat);
    auto group = conewalls::make_group(lat, need(pf.group, "group"));
    auto d = conewalls::dirichlet_domain(group, ambient, need(pf.y, "y"),
                                         effective_depth(pf, depth_flag));
    return conewalls::io::dirichlet_result(d);
}

json cmd_models(const ProblemFile& pf, int depth_flag) {
    auto lat = lattice_of(pf);
    auto cone = cone_of(pf, lat);
    auto s = conewalls::subdivide(cone, walls_of(pf, cone));
    auto group = conewalls::make_group(lat, need(pf.group, "group"));
    int depth = effective_depth(pf, depth_flag);
    conewalls::FacePairing pairing;
    if (pf.pairing) {
        for (const auto& e : *pf.pairing)
            pairing.entries.push_back(conewalls::FacePairingEntry{e.facet, e.map, {}});
    } else {
        pairing = conewalls::find_face_pairings(cone, group, depth);
    }
    return conewalls::io::models_result(conewalls::chamber_orbits(s, group, pairing, depth));
}

json cmd_k3walls(const ProblemFile& pf) {
    const auto& mi = need(pf.mukai, "mukai");
    auto ms = conewalls::make_mukai_setup(mi.gram, mi.v);
    auto result = conewalls::sigma_walls_meeting_cone(ms, need(pf.cone, "cone"));
    return conewalls::io::k3walls_result(result);
}

int exit_code_for(const conewalls::Error& e) {
    if (e.code() == "stabilizer" || e.code() == "precondition") return 3;
    return 2;
}

void report(const std::string& code, const std::string& detail) {
    json err;
    err["error"] = code;
    err["detail"] = detail;
    std::cerr << err.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact wall-and-chamber computations on hyperbolic lattices"};
    app.require_subcommand(1);

    std::string input, output;
    int depth_flag = -1;
    long long seed_flag = -1;

    const char* names[] = {"walls", "chambers", "dirichlet", "models", "k3walls"};
    const char* descs[] = {
        "Walls of bounded negative square meeting a cone",
        "Chamber subdivision of a cone by its walls",
        "Dirichlet fundamental domain for a group action",
        "Chamber classes glued by face pairings",
        "Projected wall classes of a Mukai-lattice setup",
    };
    for (int i = 0; i < 5; ++i) {
        CLI::App* sub = app.add_subcommand(names[i], descs[i]);
        sub->add_option("--input", input, "Problem file (JSON)")->required();
        sub->add_option("--output", output, "Result file (default: standard output)");
        sub->add_option("--depth", depth_flag, "Word-length horizon for group searches");
        sub->add_option("--seed", seed_flag, "Seed for sampled checks");
    }

    CLI11_PARSE(app, argc, argv);

    try {
        ProblemFile pf = conewalls::io::parse_problem_text(read_input(input));
        if (seed_flag >= 0) pf.seed = static_cast<std::uint64_t>(seed_flag);
        json doc;
        if (app.got_subcommand("walls"))
            doc = cmd_walls(pf);
        else if (app.got_subcommand("chambers"))
            doc = cmd_chambers(pf);
        else if (app.got_subcommand("dirichlet"))
            doc = cmd_dirichlet(pf, depth_flag);
        else if (app.got_subcommand("models"))
            doc = cmd_models(pf, depth_flag);
        else
            doc = cmd_k3walls(pf);
        write_output(output, doc);
        return 0;
    } catch (const conewalls::Error& e) {
        report(e.code(), e.what());
        return exit_code_for(e);
    } catch (const std::exception& e) {
        report("internal", e.what());
        return 4;
    }
}
