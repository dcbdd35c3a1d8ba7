#include "plumbtop/repro.hpp"

#include "plumbtop/assembly.hpp"
#include "plumbtop/germ.hpp"
#include "plumbtop/homology.hpp"
#include "plumbtop/numeric.hpp"

#include <sstream>

namespace plumbtop {

bool ReproReport::all_pass() const {
    for (const auto& c : claims)
        if (!c.pass)
            return false;
    return true;
}

namespace {

ClaimResult claim_lens_characterization() {
    ClaimResult c{"T6.5",
                  "z^2 - x y^l boundaries are the lens spaces L(2l, 1); other germ shapes are obstructed",
                  "L(2l,1) for l=2..10; obstructions named elsewhere",
                  "",
                  true};
    std::ostringstream got;
    for (int l = 2; l <= 10; ++l) {
        auto lens_params = recognize_generalized_lens(lens_family_boundary_graph(l));
        bool ok = lens_params && *lens_params == lens(2L * l, 1);
        LensVerdict verdict = is_lens_boundary(lens_family_germ(l), true);
        if (!ok || !verdict.is_lens)
            c.pass = false;
        if (l == 2 || !ok)
            got << "l=" << l << ": "
                << (lens_params && lens_params->kind == LensParams::Kind::Lens
                        ? "L(" + std::to_string(lens_params->n) + "," + std::to_string(lens_params->q) + ")"
                        : "not a lens space")
                << "; ";
    }
    if (is_lens_boundary(single_branch_germ(2, 5), true).is_lens)
        c.pass = false;
    if (is_lens_boundary(example_family_germ(3), true).is_lens)
        c.pass = false;
    if (is_lens_boundary(lens_family_germ(4), false).is_lens)
        c.pass = false;
    got << (c.pass ? "all lens verdicts and graphs as published" : "mismatch");
    c.computed = got.str();
    return c;
}

ClaimResult claim_odd_zone() {
    ClaimResult c{"P7.1",
                  "odd l: vanishing zone is the mapping torus of an order-l map with two fixed points "
                  "of rotation -2/l turn over a disc; trunk is Q",
                  "order l, 2 fixed points, class -2 mod l, base disc, two alpha=l fibers",
                  "",
                  true};
    for (int l = 3; l <= 11; l += 2) {
        VanishingZoneData z = vanishing_zone(example_family_germ(l), 0);
        bool ok = z.monodromy.order == l && z.monodromy.fixed_point_rotations.size() == 2;
        for (long rot : z.monodromy.fixed_point_rotations)
            ok = ok && mod_norm(rot + 2, l) == 0;
        ok = ok && z.seifert.boundary_count == 1 && z.seifert.base_genus == 0;
        ok = ok && z.seifert.pairs.size() == 2;
        for (const auto& p : z.seifert.pairs)
            ok = ok && p.alpha == l;
        if (!ok)
            c.pass = false;
    }
    const auto q = trunk_q();
    if (q.graph.vertex_count() != 3 || q.graph.legs().size() != 1)
        c.pass = false;
    c.computed = c.pass ? "zone structure and trunk Q as published (l = 3..11)" : "mismatch";
    return c;
}

ClaimResult claim_even_zone() {
    ClaimResult c{"P7.2",
                  "even l: vanishing zone is the mapping torus of an order-(l/2) map, each fiber "
                  "boundary circle invariant; trunk is a thickened torus",
                  "order l/2, 2 invariant boundary circles, base annulus",
                  "",
                  true};
    for (int l = 2; l <= 12; l += 2) {
        VanishingZoneData z = vanishing_zone(example_family_germ(l), 0);
        const long u = l / 2;
        bool ok = z.monodromy.order == u;
        ok = ok && z.monodromy.boundary_orbits.size() == 2;
        for (const auto& orbit : z.monodromy.boundary_orbits)
            ok = ok && orbit.size == 1;
        ok = ok && z.seifert.boundary_count == 2 && z.seifert.base_genus == 0;
        if (u > 1) {
            ok = ok && z.monodromy.fixed_point_rotations.size() == 2;
            for (long rot : z.monodromy.fixed_point_rotations)
                ok = ok && mod_norm(rot + 1, u) == 0;
            ok = ok && z.seifert.pairs.size() == 2;
            for (const auto& p : z.seifert.pairs)
                ok = ok && p.alpha == u;
        } else {
            ok = ok && z.monodromy.fixed_point_rotations.empty() && z.seifert.pairs.empty();
        }
        if (!ok)
            c.pass = false;
    }
    c.computed = c.pass ? "zone structure as published (l = 2..12; l = 2 is the identity case)"
                        : "mismatch";
    return c;
}

ClaimResult claim_definiteness_obstruction() {
    ClaimResult c{"T7.3",
                  "the example-family boundaries bound no normal surface singularity: their "
                  "intersection forms are not definite for either orientation",
                  "neither A nor -A negative definite, l = 2..8",
                  "",
                  true};
    for (int l = 2; l <= 8; ++l) {
        IntMatrix a = intersection_matrix(boundary_graph_example_family(l));
        if (is_negative_definite(a) || is_positive_definite(a))
            c.pass = false;
    }
    c.computed = c.pass ? "indefinite for l = 2..8" : "a definite form appeared";
    return c;
}

ClaimResult claim_hirzebruch_homology() {
    ClaimResult c{"T8.1",
                  "H1 closed form for z^m - x^k y^l boundaries",
                  "(2,1,5) -> Z/10; (3,1,2) -> Z/2 ⊕ Z/6; (3,2,4) -> Z^4 ⊕ Z/2 ⊕ Z/6",
                  "",
                  true};
    HomologyResult a = hirzebruch_h1(2, 1, 5);
    HomologyResult b = hirzebruch_h1(3, 1, 2);
    HomologyResult d = hirzebruch_h1(3, 2, 4);
    c.computed = to_string(a) + "; " + to_string(b) + "; " + to_string(d);
    c.pass = to_string(a) == "Z/10" && to_string(b) == "Z/2 ⊕ Z/6" && to_string(d) == "Z^4 ⊕ Z/2 ⊕ Z/6";
    // cross-check against the lens family
    for (int l = 2; l <= 10; ++l) {
        HomologyResult h = hirzebruch_h1(2, 1, l);
        if (h.free_rank != 0 || h.torsion.size() != 1 || h.torsion[0] != 2 * l)
            c.pass = false;
    }
    return c;
}

ClaimResult claim_example_family_homology() {
    ClaimResult c{"T8.2",
                  "H1 of the example-family boundaries",
                  "odd l: Z/4l; even l: Z + torsion of order l(l+3)",
                  "",
                  true};
    std::ostringstream got;
    for (int l = 3; l <= 11; l += 2) {
        HomologyResult h = h1_of_plumbed(boundary_graph_example_family(l));
        bool ok = h.free_rank == 0 && h.torsion.size() == 1 && h.torsion[0] == 4 * l;
        ok = ok && h == example_family_h1(l);
        if (!ok)
            c.pass = false;
        if (l == 3)
            got << "l=3: " << to_string(h) << "; ";
    }
    for (int l = 2; l <= 10; l += 2) {
        HomologyResult h = h1_of_plumbed(boundary_graph_example_family(l));
        bool ok = h.free_rank == 1 && h.torsion_order() == static_cast<long>(l) * (l + 3);
        ok = ok && h == example_family_h1(l);
        if (!ok)
            c.pass = false;
        if (l == 2)
            got << "l=2: " << to_string(h) << "; ";
    }
    got << (c.pass ? "all values as published" : "mismatch");
    c.computed = got.str();
    return c;
}

} // namespace

ReproReport run_repro_suite() {
    ReproReport r;
    r.claims.push_back(claim_lens_characterization());
    r.claims.push_back(claim_odd_zone());
    r.claims.push_back(claim_even_zone());
    r.claims.push_back(claim_definiteness_obstruction());
    r.claims.push_back(claim_hirzebruch_homology());
    r.claims.push_back(claim_example_family_homology());
    return r;
}

Json repro_to_json(const ReproReport& r) {
    Json j;
    j["claims"] = Json::array();
    for (const auto& c : r.claims)
        j["claims"].push_back(Json{{"id", c.id},
                                   {"description", c.description},
                                   {"expected", c.expected},
                                   {"computed", c.computed},
                                   {"pass", c.pass}});
    j["all_pass"] = r.all_pass();
    return j;
}

std::string repro_to_text(const ReproReport& r) {
    std::ostringstream out;
    for (const auto& c : r.claims) {
        out << (c.pass ? "PASS" : "FAIL") << "  " << c.id << "  " << c.description << "\n";
        out << "      expected: " << c.expected << "\n";
        out << "      computed: " << c.computed << "\n";
    }
    out << (r.all_pass() ? "all claims reproduced" : "SOME CLAIMS FAILED") << "\n";
    return out.str();
}

} // namespace plumbtop
