#pragma once

#include "plumbtop/germ.hpp"
#include "plumbtop/plumbing.hpp"
#include "plumbtop/seifert.hpp"

#include <string>
#include <vector>

namespace plumbtop {

// Gluing datum along one torus: the curve type the pasting identifies.
// Requires alpha >= 1 and gcd(alpha, beta) = 1; beta is consumed modulo
// alpha (integer shifts are section changes absorbed by the pieces).
struct GluingData {
    long alpha = 1;
    long beta = 0;
};

enum class PieceKind {
    SeifertStar,    // graph with boundary legs
    ThickenedTorus, // no vertices; gluing through it joins two legs of the
                    // neighboring piece into a circuit
};

struct BoundedPiece {
    PlumbingGraph graph;
    PieceKind kind = PieceKind::SeifertStar;
    std::vector<std::string> leg_sections; // parallel to graph.legs()
};

BoundedPiece make_piece(PlumbingGraph g, std::string section = "product");

// The Waldhausen manifold Q: mapping torus of the orientation-preserving
// involution of the annulus.  One boundary leg, two alpha = 2 legs.
BoundedPiece trunk_q();

// S^1 x S^1 x [0, 1]; contributes no vertices.
BoundedPiece trunk_thickened_torus();

// Solid-torus trunk: one vertex, one boundary leg, weight -2 under the
// frozen gluing convention (chain terminator for the lens family).
BoundedPiece trunk_solid_torus();

// Chain weights inserted for a gluing: -(neg_cont_frac(alpha, alpha - beta))
// read from the first anchor to the second; alpha = 1 contributes the
// single weight -1.
std::vector<long> gluing_chain_weights(const GluingData& g);

// Glues leg `leg_a` of `a` to leg `leg_b` of `b` along a genus-0 bamboo.
// When `b` is a thickened torus, `leg_b` names a second leg of `a` and the
// chain closes a circuit through `a` itself.
BoundedPiece glue_with_bamboo(const BoundedPiece& a, std::size_t leg_a,
                              const BoundedPiece& b, std::size_t leg_b,
                              const GluingData& g);

// The piece's graph once every leg is consumed; throws otherwise.
PlumbingGraph closed_graph(const BoundedPiece& piece);

// Literal boundary graphs for z^2 - (x^2 - y^3) y^l.  Odd l = 2u+1: bamboo
// of length l+4, two -2 leaves at one end, two length-2 legs [-2, -(u+1)]
// at the other, every unlisted weight -2.  Even l = 2u: circuit of l+3
// vertices with two single-vertex legs of weight -u at one circuit vertex;
// at l = 2 the legs degenerate (no exceptional fibers) and the circuit
// carries one weight-0 vertex instead.
PlumbingGraph expected_graph_odd(int l);
PlumbingGraph expected_graph_even(int l);

// Full pipeline: germ data -> vanishing zone -> star piece -> glue with
// the appropriate trunk using (l+3, 1).
PlumbingGraph boundary_graph_example_family(int l);

// z^2 - x y^l pipeline: vanishing zone glued to the solid-torus trunk;
// recognizes as L(2l, 1).
PlumbingGraph lens_family_boundary_graph(int l);

} // namespace plumbtop
