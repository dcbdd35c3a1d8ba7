#include "plumbtop/cli.hpp"

#include "plumbtop/assembly.hpp"
#include "plumbtop/error.hpp"
#include "plumbtop/germ.hpp"
#include "plumbtop/homology.hpp"
#include "plumbtop/io.hpp"
#include "plumbtop/repro.hpp"

#include <functional>
#include <ostream>
#include <sstream>

namespace plumbtop::cli {

namespace {

constexpr int kOk = 0;
constexpr int kClaimFailure = 1;
constexpr int kInputError = 2;

std::string rotation_text(const mpq_class& turn) {
    std::ostringstream out;
    out << turn.get_num().get_str();
    if (turn.get_den() != 1)
        out << "/" << turn.get_den().get_str();
    out << " turn";
    return out.str();
}

std::string lens_text(const LensParams& p) {
    switch (p.kind) {
    case LensParams::Kind::Sphere3:
        return "S^3";
    case LensParams::Kind::S1xS2:
        return "S^1 x S^2";
    case LensParams::Kind::Lens:
        return "L(" + std::to_string(p.n) + ", " + std::to_string(p.q) + ")";
    }
    return "?";
}

Json zone_to_json(const VanishingZoneData& z) {
    Json j;
    j["branch"] = z.branch;
    j["k"] = z.k;
    j["d"] = z.d;
    j["order"] = z.monodromy.order;
    j["fiber"] = Json{{"euler", z.fiber.euler_char},
                      {"genus", z.fiber.genus},
                      {"boundary", z.fiber.boundary_circles}};
    j["fixed_points"] = Json::array();
    for (long rot : z.monodromy.fixed_point_rotations)
        j["fixed_points"].push_back(rot);
    j["boundary_orbits"] = Json::array();
    for (const auto& orbit : z.monodromy.boundary_orbits)
        j["boundary_orbits"].push_back(Json{{"size", orbit.size},
                                            {"return_rotation", rotation_text(orbit.return_rotation)}});
    j["boundary_orbits_verified"] = z.boundary_orbits_verified;
    j["seifert"] = seifert_to_json(z.seifert);
    return j;
}

int run_guarded(std::ostream& err, const std::function<int()>& body) {
    try {
        return body();
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
}

} // namespace

Format parse_format(const std::string& name) {
    if (name == "json")
        return Format::Json;
    if (name == "dot")
        return Format::Dot;
    if (name == "text")
        return Format::Text;
    throw ValidationError("unknown format \"" + name + "\" (expected json, dot or text)");
}

int cmd_germ(const std::string& input_path, bool irreducible, Format fmt,
             std::ostream& out, std::ostream& err) {
    return run_guarded(err, [&]() {
        GermData germ = germ_from_json(parse_json_file(input_path));
        std::vector<VanishingZoneData> zones;
        for (int branch : singular_branches(germ))
            zones.push_back(vanishing_zone(germ, branch));
        LensVerdict verdict = is_lens_boundary(germ, irreducible);

        if (fmt == Format::Json) {
            Json j;
            j["germ"] = germ_to_json(germ);
            j["zones"] = Json::array();
            for (const auto& z : zones)
                j["zones"].push_back(zone_to_json(z));
            j["lens_boundary"] = Json{{"is_lens", verdict.is_lens}, {"reason", verdict.detail}};
            out << j.dump(2) << "\n";
            return kOk;
        }
        for (const auto& z : zones) {
            out << "branch " << z.branch << ": k = " << z.k << ", d = " << z.d << "\n";
            out << "  vertical monodromy: order " << z.monodromy.order;
            if (z.monodromy.order == 1)
                out << " (identity)";
            out << ", " << z.monodromy.fixed_point_rotations.size() << " fixed points";
            if (!z.monodromy.fixed_point_rotations.empty()) {
                long rot = z.monodromy.fixed_point_rotations.front();
                long order = z.monodromy.order;
                long display = rot > order / 2 ? rot - order : rot;
                out << ", angle " << display << "/" << order << " turn";
            }
            out << "\n";
            out << "  fiber: euler " << z.fiber.euler_char << ", genus " << z.fiber.genus
                << ", boundary circles " << z.fiber.boundary_circles << "\n";
            out << "  seifert: base genus " << z.seifert.base_genus << ", boundary components "
                << z.seifert.boundary_count << ", " << z.seifert.pairs.size() << " exceptional pairs";
            for (const auto& p : z.seifert.pairs)
                out << " (" << p.alpha << "," << p.beta << ")";
            out << "\n";
            if (!z.boundary_orbits_verified)
                out << "  note: boundary-orbit data derived, unverified for this germ shape\n";
        }
        out << "lens boundary: " << (verdict.is_lens ? "yes" : "no");
        if (!verdict.detail.empty())
            out << " (" << verdict.detail << ")";
        out << "\n";
        return kOk;
    });
}

int cmd_h1(const std::string& input_path, Format fmt, std::ostream& out, std::ostream& err) {
    return run_guarded(err, [&]() {
        PlumbingGraph g = graph_from_json(parse_json_file(input_path));
        HomologyResult h = h1_of_plumbed(g);
        if (fmt == Format::Json) {
            Json j;
            j["free_rank"] = h.free_rank;
            j["torsion"] = Json::array();
            for (const auto& t : h.torsion)
                j["torsion"].push_back(t.get_str());
            j["rendering"] = to_string(h);
            out << j.dump(2) << "\n";
        } else {
            out << to_string(h) << "\n";
        }
        return kOk;
    });
}

int cmd_graph(const std::string& family, int l, Format fmt, std::ostream& out, std::ostream& err) {
    return run_guarded(err, [&]() {
        PlumbingGraph g;
        if (family == "example")
            g = boundary_graph_example_family(l);
        else if (family == "lens")
            g = lens_family_boundary_graph(l);
        else
            throw ValidationError("unknown family \"" + family + "\" (expected example or lens)");

        if (fmt == Format::Dot) {
            out << graph_to_dot(g);
        } else if (fmt == Format::Json) {
            out << graph_to_json(g).dump(2) << "\n";
        } else {
            out << family << " family, l = " << l << ": " << g.vertex_count() << " vertices, "
                << g.edges().size() << " edges\n";
            out << "H1 = " << to_string(h1_of_plumbed(g)) << "\n";
            auto lens_params = recognize_generalized_lens(g);
            out << "generalized lens space: " << (lens_params ? lens_text(*lens_params) : "no") << "\n";
        }
        return kOk;
    });
}

int cmd_glue(const std::string& path_a, const std::string& path_b, long alpha, long beta,
             std::size_t leg_a, std::size_t leg_b, Format fmt, std::ostream& out, std::ostream& err) {
    return run_guarded(err, [&]() {
        BoundedPiece a = make_piece(graph_from_json(parse_json_file(path_a)));
        BoundedPiece b = make_piece(graph_from_json(parse_json_file(path_b)));
        BoundedPiece glued = glue_with_bamboo(a, leg_a, b, leg_b, GluingData{alpha, beta});
        if (fmt == Format::Dot)
            out << graph_to_dot(glued.graph);
        else
            out << graph_to_json(glued.graph).dump(2) << "\n";
        return kOk;
    });
}

int cmd_snf(const std::string& input_path, Format fmt, std::ostream& out, std::ostream& err) {
    return run_guarded(err, [&]() {
        IntMatrix m = matrix_from_json(parse_json_file(input_path));
        SnfResult snf = smith_normal_form(m);
        if (fmt == Format::Json) {
            Json j;
            j["d"] = Json::array();
            for (const auto& d : snf.diag)
                j["d"].push_back(d.get_str());
            j["rank"] = snf.rank;
            out << j.dump(2) << "\n";
        } else {
            out << "invariant factors:";
            for (const auto& d : snf.diag)
                out << " " << d.get_str();
            out << "\nrank: " << snf.rank << "\n";
        }
        return kOk;
    });
}

int cmd_repro(Format fmt, std::ostream& out, std::ostream& err) {
    return run_guarded(err, [&]() {
        ReproReport r = run_repro_suite();
        if (fmt == Format::Json)
            out << repro_to_json(r).dump(2) << "\n";
        else
            out << repro_to_text(r);
        return r.all_pass() ? kOk : kClaimFailure;
    });
}

} // namespace plumbtop::cli
