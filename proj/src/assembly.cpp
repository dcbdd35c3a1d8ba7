#include "plumbtop/assembly.hpp"

#include "plumbtop/error.hpp"
#include "plumbtop/numeric.hpp"

#include <map>
#include <numeric>
#include <string>

namespace plumbtop {

BoundedPiece make_piece(PlumbingGraph g, std::string section) {
    BoundedPiece piece;
    piece.leg_sections.assign(g.legs().size(), std::move(section));
    piece.graph = std::move(g);
    return piece;
}

BoundedPiece trunk_q() {
    // Annulus, involution with two fixed points of rotation angle pi, the
    // two boundary circles swapped.
    MonodromyData m;
    m.fiber_euler_char = 0;
    m.fiber_boundary_circles = 2;
    m.order = 2;
    m.fixed_point_rotations = {1, 1};
    m.boundary_orbits = {BoundaryOrbit{2, 0}};
    return make_piece(star_graph(mapping_torus_seifert(m)));
}

BoundedPiece trunk_thickened_torus() {
    BoundedPiece piece;
    piece.kind = PieceKind::ThickenedTorus;
    piece.leg_sections = {"product", "product"};
    return piece;
}

BoundedPiece trunk_solid_torus() {
    PlumbingGraph g;
    int v = g.add_vertex(0, -2);
    g.add_leg(v);
    return make_piece(std::move(g));
}

std::vector<long> gluing_chain_weights(const GluingData& g) {
    if (g.alpha < 1)
        throw ValidationError("gluing: alpha must be >= 1");
    if (std::gcd(g.alpha, g.beta) != 1)
        throw ValidationError("gluing: gcd(alpha, beta) must be 1");
    if (g.alpha == 1)
        return {-1};
    long beta = mod_norm(g.beta, g.alpha);
    std::vector<long> chain = neg_cont_frac(g.alpha, g.alpha - beta);
    for (long& w : chain)
        w = -w;
    return chain;
}

namespace {

int leg_anchor(const BoundedPiece& piece, std::size_t leg) {
    if (leg >= piece.graph.legs().size())
        throw ValidationError("gluing: missing boundary leg");
    return piece.graph.legs()[leg];
}

// Copies `src` into `dst`, returning the id translation.
std::map<int, int> absorb_graph(PlumbingGraph& dst, const PlumbingGraph& src) {
    std::map<int, int> translate;
    for (int id : src.vertex_ids()) {
        const auto& v = src.vertex(id);
        translate[id] = dst.add_vertex(v.genus, v.weight);
    }
    for (const auto& e : src.edges())
        dst.add_edge(translate.at(e.first), translate.at(e.second));
    for (int anchor : src.legs())
        dst.add_leg(translate.at(anchor));
    return translate;
}

void insert_chain(PlumbingGraph& g, int from, int to, const std::vector<long>& weights) {
    int prev = from;
    for (long w : weights) {
        int v = g.add_vertex(0, static_cast<int>(w));
        g.add_edge(prev, v);
        prev = v;
    }
    g.add_edge(prev, to);
}

void drop_leg(BoundedPiece& piece, std::size_t index) {
    piece.graph.remove_leg_at(index);
    piece.leg_sections.erase(piece.leg_sections.begin() + static_cast<std::ptrdiff_t>(index));
}

} // namespace

BoundedPiece glue_with_bamboo(const BoundedPiece& a, std::size_t leg_a,
                              const BoundedPiece& b, std::size_t leg_b,
                              const GluingData& g) {
    std::vector<long> chain = gluing_chain_weights(g);

    if (b.kind == PieceKind::ThickenedTorus) {
        if (a.kind == PieceKind::ThickenedTorus)
            throw ValidationError("gluing two thickened tori has no graph content");
        // leg_b is a second leg of `a`: the torus identifies the two
        // boundary components, closing a circuit through `a`.
        int from = leg_anchor(a, leg_a);
        int to = leg_anchor(a, leg_b);
        if (leg_a == leg_b)
            throw ValidationError("gluing through a thickened torus needs two distinct legs");
        if (a.leg_sections[leg_a] != a.leg_sections[leg_b])
            throw ValidationError("gluing: incompatible boundary sections");
        BoundedPiece out = a;
        insert_chain(out.graph, from, to, chain);
        std::size_t hi = std::max(leg_a, leg_b), lo = std::min(leg_a, leg_b);
        drop_leg(out, hi);
        drop_leg(out, lo);
        return out;
    }
    if (a.kind == PieceKind::ThickenedTorus)
        return glue_with_bamboo(b, leg_b, a, leg_a, g);

    int anchor_a = leg_anchor(a, leg_a);
    leg_anchor(b, leg_b);
    if (a.leg_sections[leg_a] != b.leg_sections[leg_b])
        throw ValidationError("gluing: incompatible boundary sections");

    BoundedPiece out = a;
    int from = anchor_a;
    std::map<int, int> translate = absorb_graph(out.graph, b.graph);
    int to = translate.at(leg_anchor(b, leg_b));
    insert_chain(out.graph, from, to, chain);

    // drop the consumed legs: a's leg, then b's copy (now appended after a's)
    std::size_t b_leg_index = a.graph.legs().size() + leg_b;
    out.leg_sections.insert(out.leg_sections.end(), b.leg_sections.begin(), b.leg_sections.end());
    drop_leg(out, b_leg_index);
    drop_leg(out, leg_a);
    return out;
}

PlumbingGraph closed_graph(const BoundedPiece& piece) {
    if (!piece.graph.legs().empty())
        throw ValidationError("piece still has open boundary legs");
    return piece.graph;
}

PlumbingGraph expected_graph_odd(int l) {
    if (l < 3 || l % 2 == 0)
        throw ValidationError("expected_graph_odd: l must be odd and >= 3");
    const int u = (l - 1) / 2;

    PlumbingGraph g;
    std::vector<int> bamboo;
    for (int i = 0; i < l + 4; ++i)
        bamboo.push_back(g.add_vertex(0, -2));
    for (std::size_t i = 0; i + 1 < bamboo.size(); ++i)
        g.add_edge(bamboo[i], bamboo[i + 1]);

    // one extremity: two single -2 leaves
    for (int i = 0; i < 2; ++i)
        g.add_edge(bamboo.front(), g.add_vertex(0, -2));

    // other extremity: two length-2 legs, outer weight -(u+1)
    for (int i = 0; i < 2; ++i) {
        int inner = g.add_vertex(0, -2);
        int outer = g.add_vertex(0, -(u + 1));
        g.add_edge(bamboo.back(), inner);
        g.add_edge(inner, outer);
    }
    return g;
}

PlumbingGraph expected_graph_even(int l) {
    if (l < 2 || l % 2 == 1)
        throw ValidationError("expected_graph_even: l must be even and >= 2");
    const int u = l / 2;

    PlumbingGraph g;
    std::vector<int> circuit;
    circuit.push_back(g.add_vertex(0, u == 1 ? 0 : -2));
    for (int i = 1; i < l + 3; ++i)
        circuit.push_back(g.add_vertex(0, -2));
    for (std::size_t i = 0; i + 1 < circuit.size(); ++i)
        g.add_edge(circuit[i], circuit[i + 1]);
    g.add_edge(circuit.back(), circuit.front());

    // two single-vertex legs of weight -u; at u = 1 they are blow-downs
    // already absorbed into the weight-0 circuit vertex.
    if (u > 1)
        for (int i = 0; i < 2; ++i)
            g.add_edge(circuit.front(), g.add_vertex(0, -u));
    return g;
}

PlumbingGraph boundary_graph_example_family(int l) {
    if (l < 2)
        throw ValidationError("example family needs l >= 2");
    GermData germ = example_family_germ(l);
    VanishingZoneData zone = vanishing_zone(germ, 0);
    BoundedPiece zone_piece = make_piece(star_graph(zone.seifert));
    GluingData g{static_cast<long>(l) + 3, 1};

    if (l % 2 == 1)
        return closed_graph(glue_with_bamboo(zone_piece, 0, trunk_q(), 0, g));
    return closed_graph(glue_with_bamboo(zone_piece, 0, trunk_thickened_torus(), 1, g));
}

PlumbingGraph lens_family_boundary_graph(int l) {
    if (l < 2)
        throw ValidationError("lens family needs l >= 2");
    GermData germ = lens_family_germ(l);
    VanishingZoneData zone = vanishing_zone(germ, 0);
    BoundedPiece zone_piece = make_piece(star_graph(zone.seifert));
    return closed_graph(glue_with_bamboo(zone_piece, 0, trunk_solid_torus(), 0, GluingData{1, 0}));
}

} // namespace plumbtop
