#pragma once

#include "plumbtop/linalg.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace plumbtop {

// Vertex of a plumbing graph: an oriented circle bundle over a closed
// orientable surface of the given genus, with the given Euler number.
struct PlumbingVertex {
    int id = 0;
    int genus = 0;
    int weight = 0;
};

// Weighted multigraph with boundary legs.  Parallel edges are allowed,
// loops are not.  A boundary leg marks one boundary torus attached at its
// anchor vertex.  Vertex ids are stable integers assigned at insertion.
class PlumbingGraph {
public:
    PlumbingGraph() = default;

    int add_vertex(int genus, int weight);
    void add_vertex_with_id(int id, int genus, int weight);
    void add_edge(int a, int b);
    void add_leg(int v);

    bool has_vertex(int id) const;
    const PlumbingVertex& vertex(int id) const;
    void set_weight(int id, int weight);

    std::size_t vertex_count() const { return vertices_.size(); }
    const std::vector<PlumbingVertex>& vertices() const { return vertices_; }
    std::vector<int> vertex_ids() const;
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& legs() const { return legs_; }

    int degree(int v) const;
    std::vector<int> neighbors(int v) const; // with multiplicity, sorted
    int edge_multiplicity(int a, int b) const;
    int leg_count(int v) const;

    int component_count() const;
    bool connected() const { return component_count() <= 1; }

    // Removes a vertex together with all incident edges.  The vertex must
    // carry no boundary legs.
    void remove_vertex(int id);
    void remove_edge(int a, int b); // one copy of a parallel bundle
    void remove_leg_at(std::size_t index);

private:
    int index_of(int id) const;

    std::vector<PlumbingVertex> vertices_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<int> legs_;
    int next_id_ = 0;
};

enum class GraphShape { Bamboo, Circuit, Star, Other };

struct LensParams {
    enum class Kind { Lens, Sphere3, S1xS2 };
    Kind kind = Kind::Sphere3;
    long n = 0; // order, >= 2 for Kind::Lens
    long q = 0; // 1 <= q < n, gcd(n, q) = 1; normalized to min(q, q^-1 mod n)
    bool operator==(const LensParams&) const = default;
};

LensParams lens(long n, long q);
LensParams sphere3();
LensParams s1xs2();

// Vertices indexed by ascending id; boundary legs are ignored.
IntMatrix intersection_matrix(const PlumbingGraph& g);

// Classification of a connected closed graph.
GraphShape shape(const PlumbingGraph& g);

int graph_first_betti(const PlumbingGraph& g);

// Calculus moves.  blow_down removes a genus-0 vertex of weight +-1 and
// degree <= 2; the blow_up_* functions are its inverses and exist so tests
// can perturb graphs without changing the underlying 3-manifold.
//
// Blowing down an e = -1 vertex raises the neighbor weights by 1 and, at
// degree 2, joins the neighbors by an edge.  Blowing down an e = +1 vertex
// lowers the neighbor weights by 1 and joins the neighbors; that join is
// a negative edge in the signed calculus, so the move is accepted only
// when the neighbors are disconnected away from the vertex and the sign
// can be balanced across the bridge.  A +1 vertex on a cycle is rejected:
// positive-edge graphs cannot carry the move's result.
PlumbingGraph blow_down(const PlumbingGraph& g, int vertex_id);
bool blow_down_applicable(const PlumbingGraph& g, int vertex_id);
PlumbingGraph blow_up_edge(const PlumbingGraph& g, std::size_t edge_index, int sign);
PlumbingGraph blow_up_at_vertex(const PlumbingGraph& g, int vertex_id, int sign);

// Reduces a connected closed graph by blow-downs and zero-weight chain
// absorption and reports the generalized lens space it describes, or
// nullopt when a genus > 0 vertex, a cycle or a branch vertex survives the
// reduction.  For Lens(n, q), q is reported as min(q, q') where q*q' = 1
// (mod n); both describe the same oriented manifold (reading a bamboo from
// either end inverts q mod n).
std::optional<LensParams> recognize_generalized_lens(const PlumbingGraph& g);

// Label-respecting graph isomorphism (genus, weight, leg multiplicity),
// brute force with pruning; fine for the < 30 vertex graphs produced here.
bool isomorphic(const PlumbingGraph& a, const PlumbingGraph& b);

} // namespace plumbtop
