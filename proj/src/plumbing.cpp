#include "plumbtop/plumbing.hpp"

#include "plumbtop/error.hpp"
#include "plumbtop/numeric.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <string>
#include <vector>

namespace plumbtop {

namespace {

std::pair<int, int> normalized_edge(int a, int b) {
    return a <= b ? std::make_pair(a, b) : std::make_pair(b, a);
}

} // namespace

int PlumbingGraph::add_vertex(int genus, int weight) {
    int id = next_id_++;
    add_vertex_with_id(id, genus, weight);
    return id;
}

void PlumbingGraph::add_vertex_with_id(int id, int genus, int weight) {
    if (genus < 0)
        throw ValidationError("vertex genus must be non-negative");
    if (has_vertex(id))
        throw ValidationError("duplicate vertex id " + std::to_string(id));
    vertices_.push_back(PlumbingVertex{id, genus, weight});
    if (id >= next_id_)
        next_id_ = id + 1;
}

void PlumbingGraph::add_edge(int a, int b) {
    if (a == b)
        throw ValidationError("loops are forbidden in plumbing graphs");
    if (!has_vertex(a) || !has_vertex(b))
        throw ValidationError("edge endpoint refers to a missing vertex");
    edges_.push_back(normalized_edge(a, b));
}

void PlumbingGraph::add_leg(int v) {
    if (!has_vertex(v))
        throw ValidationError("boundary leg anchored at a missing vertex");
    legs_.push_back(v);
}

int PlumbingGraph::index_of(int id) const {
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        if (vertices_[i].id == id)
            return static_cast<int>(i);
    return -1;
}

bool PlumbingGraph::has_vertex(int id) const {
    return index_of(id) >= 0;
}

const PlumbingVertex& PlumbingGraph::vertex(int id) const {
    int i = index_of(id);
    if (i < 0)
        throw ValidationError("no vertex with id " + std::to_string(id));
    return vertices_[static_cast<std::size_t>(i)];
}

void PlumbingGraph::set_weight(int id, int weight) {
    int i = index_of(id);
    if (i < 0)
        throw ValidationError("no vertex with id " + std::to_string(id));
    vertices_[static_cast<std::size_t>(i)].weight = weight;
}

std::vector<int> PlumbingGraph::vertex_ids() const {
    std::vector<int> ids;
    ids.reserve(vertices_.size());
    for (const auto& v : vertices_)
        ids.push_back(v.id);
    std::sort(ids.begin(), ids.end());
    return ids;
}

int PlumbingGraph::degree(int v) const {
    int d = 0;
    for (const auto& e : edges_) {
        if (e.first == v)
            ++d;
        if (e.second == v)
            ++d;
    }
    return d;
}

std::vector<int> PlumbingGraph::neighbors(int v) const {
    std::vector<int> out;
    for (const auto& e : edges_) {
        if (e.first == v)
            out.push_back(e.second);
        else if (e.second == v)
            out.push_back(e.first);
    }
    std::sort(out.begin(), out.end());
    return out;
}

int PlumbingGraph::edge_multiplicity(int a, int b) const {
    auto key = normalized_edge(a, b);
    int c = 0;
    for (const auto& e : edges_)
        if (e == key)
            ++c;
    return c;
}

int PlumbingGraph::leg_count(int v) const {
    int c = 0;
    for (int anchor : legs_)
        if (anchor == v)
            ++c;
    return c;
}

int PlumbingGraph::component_count() const {
    std::vector<int> ids = vertex_ids();
    std::map<int, int> comp;
    for (int id : ids)
        comp[id] = -1;
    int count = 0;
    for (int start : ids) {
        if (comp[start] >= 0)
            continue;
        std::vector<int> stack{start};
        comp[start] = count;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : neighbors(v))
                if (comp[w] < 0) {
                    comp[w] = count;
                    stack.push_back(w);
                }
        }
        ++count;
    }
    return count;
}

void PlumbingGraph::remove_vertex(int id) {
    int i = index_of(id);
    if (i < 0)
        throw ValidationError("no vertex with id " + std::to_string(id));
    if (leg_count(id) > 0)
        throw ValidationError("cannot remove a vertex carrying boundary legs");
    vertices_.erase(vertices_.begin() + i);
    std::erase_if(edges_, [id](const std::pair<int, int>& e) { return e.first == id || e.second == id; });
}

void PlumbingGraph::remove_edge(int a, int b) {
    auto key = normalized_edge(a, b);
    auto it = std::find(edges_.begin(), edges_.end(), key);
    if (it == edges_.end())
        throw ValidationError("no such edge");
    edges_.erase(it);
}

void PlumbingGraph::remove_leg_at(std::size_t index) {
    if (index >= legs_.size())
        throw ValidationError("leg index out of range");
    legs_.erase(legs_.begin() + static_cast<std::ptrdiff_t>(index));
}

LensParams lens(long n, long q) {
    if (n < 2 || q < 1 || q >= n || std::gcd(n, q) != 1)
        throw ValidationError("invalid lens parameters");
    return LensParams{LensParams::Kind::Lens, n, q};
}

LensParams sphere3() {
    return LensParams{LensParams::Kind::Sphere3, 0, 0};
}

LensParams s1xs2() {
    return LensParams{LensParams::Kind::S1xS2, 0, 0};
}

IntMatrix intersection_matrix(const PlumbingGraph& g) {
    std::vector<int> ids = g.vertex_ids();
    const int n = static_cast<int>(ids.size());
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) {
        m.at(i, i) = g.vertex(ids[static_cast<std::size_t>(i)]).weight;
        for (int j = i + 1; j < n; ++j) {
            int mult = g.edge_multiplicity(ids[static_cast<std::size_t>(i)], ids[static_cast<std::size_t>(j)]);
            m.at(i, j) = mult;
            m.at(j, i) = mult;
        }
    }
    return m;
}

GraphShape shape(const PlumbingGraph& g) {
    if (g.vertex_count() == 0)
        throw ValidationError("shape requires a non-empty graph");
    if (!g.legs().empty())
        throw ValidationError("shape requires a closed graph (no boundary legs)");
    if (g.component_count() != 1)
        throw ValidationError("shape requires a connected graph");

    const auto ids = g.vertex_ids();
    const std::size_t v = ids.size();
    const std::size_t e = g.edges().size();

    int max_degree = 0;
    int branch_vertices = 0;
    int branch_id = -1;
    bool all_genus_zero = true;
    for (int id : ids) {
        int d = g.degree(id);
        max_degree = std::max(max_degree, d);
        if (d >= 3) {
            ++branch_vertices;
            branch_id = id;
        }
        if (g.vertex(id).genus > 0)
            all_genus_zero = false;
    }

    if (e + 1 == v) { // tree
        if (max_degree <= 2)
            return all_genus_zero ? GraphShape::Bamboo : GraphShape::Other;
        if (branch_vertices == 1) {
            bool legs_genus_zero = true;
            for (int id : ids)
                if (id != branch_id && g.vertex(id).genus > 0)
                    legs_genus_zero = false;
            if (legs_genus_zero)
                return GraphShape::Star;
        }
        return GraphShape::Other;
    }
    if (e == v && max_degree == 2)
        return GraphShape::Circuit;
    return GraphShape::Other;
}

int graph_first_betti(const PlumbingGraph& g) {
    return static_cast<int>(g.edges().size()) - static_cast<int>(g.vertex_count()) + g.component_count();
}

namespace {

bool connected_avoiding(const PlumbingGraph& g, int from, int to, int banned) {
    if (from == to)
        return true;
    std::vector<int> stack{from};
    std::map<int, bool> seen;
    seen[from] = true;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(v)) {
            if (w == banned || seen[w])
                continue;
            if (w == to)
                return true;
            seen[w] = true;
            stack.push_back(w);
        }
    }
    return false;
}

std::string blow_down_objection(const PlumbingGraph& g, int vertex_id) {
    if (!g.has_vertex(vertex_id))
        return "no such vertex";
    const PlumbingVertex& v = g.vertex(vertex_id);
    if (v.genus != 0)
        return "vertex has genus > 0";
    if (v.weight != 1 && v.weight != -1)
        return "vertex weight is not +-1";
    if (g.leg_count(vertex_id) > 0)
        return "vertex carries boundary legs";
    std::vector<int> nbrs = g.neighbors(vertex_id);
    if (nbrs.size() > 2)
        return "vertex degree exceeds 2";
    if (nbrs.size() == 2 && nbrs[0] == nbrs[1])
        return "move would create a loop";
    if (v.weight == 1 && nbrs.size() == 2 && connected_avoiding(g, nbrs[0], nbrs[1], vertex_id))
        return "+1 vertex on a cycle needs a negative edge, which positive plumbing graphs cannot carry";
    return {};
}

} // namespace

bool blow_down_applicable(const PlumbingGraph& g, int vertex_id) {
    return blow_down_objection(g, vertex_id).empty();
}

PlumbingGraph blow_down(const PlumbingGraph& g, int vertex_id) {
    std::string objection = blow_down_objection(g, vertex_id);
    if (!objection.empty())
        throw ValidationError("blow_down: " + objection);

    const PlumbingVertex& v = g.vertex(vertex_id);
    std::vector<int> nbrs = g.neighbors(vertex_id);

    PlumbingGraph h = g;
    for (int u : nbrs)
        h.set_weight(u, h.vertex(u).weight - v.weight);
    h.remove_vertex(vertex_id);
    // For weight -1 the new edge is honestly positive; for weight +1 the
    // neighbors are guaranteed disconnected, so the negative edge the move
    // produces is sign-balanced to a positive one across the bridge.
    if (nbrs.size() == 2)
        h.add_edge(nbrs[0], nbrs[1]);
    return h;
}

PlumbingGraph blow_up_edge(const PlumbingGraph& g, std::size_t edge_index, int sign) {
    if (sign != 1 && sign != -1)
        throw ValidationError("blow_up_edge: sign must be +-1");
    if (edge_index >= g.edges().size())
        throw ValidationError("blow_up_edge: edge index out of range");
    auto [a, b] = g.edges()[edge_index];
    if (sign == 1) {
        // only sound across a bridge: elsewhere the inverse blow-down would
        // need a negative edge
        PlumbingGraph probe = g;
        probe.remove_edge(a, b);
        if (connected_avoiding(probe, a, b, -1))
            throw ValidationError("blow_up_edge: +1 blow-up requires a bridge edge");
    }
    PlumbingGraph h = g;
    h.remove_edge(a, b);
    int v = h.add_vertex(0, sign);
    h.add_edge(a, v);
    h.add_edge(v, b);
    h.set_weight(a, h.vertex(a).weight + sign);
    h.set_weight(b, h.vertex(b).weight + sign);
    return h;
}

PlumbingGraph blow_up_at_vertex(const PlumbingGraph& g, int vertex_id, int sign) {
    if (sign != 1 && sign != -1)
        throw ValidationError("blow_up_at_vertex: sign must be +-1");
    if (!g.has_vertex(vertex_id))
        throw ValidationError("blow_up_at_vertex: no such vertex");
    PlumbingGraph h = g;
    int v = h.add_vertex(0, sign);
    h.add_edge(vertex_id, v);
    h.set_weight(vertex_id, h.vertex(vertex_id).weight + sign);
    return h;
}

namespace {

// One pass of the reduction used by lens recognition.  Returns true if a
// move was applied.  All moves preserve the underlying oriented manifold.
bool reduce_step(PlumbingGraph& g) {
    for (int id : g.vertex_ids()) {
        const PlumbingVertex& v = g.vertex(id);
        if (v.genus != 0)
            continue;
        std::vector<int> nbrs = g.neighbors(id);

        if ((v.weight == 1 || v.weight == -1) && blow_down_applicable(g, id)) {
            g = blow_down(g, id);
            return true;
        }

        if (v.weight == 0 && nbrs.size() == 2 && nbrs[0] != nbrs[1] &&
            g.edge_multiplicity(nbrs[0], nbrs[1]) == 0 &&
            g.vertex(nbrs[0]).genus == 0 && g.vertex(nbrs[1]).genus == 0) {
            // 0-chain absorption: ...a - 0 - b... collapses to a single
            // vertex of weight a + b.
            int keep = nbrs[0], drop = nbrs[1];
            int merged_weight = g.vertex(keep).weight + g.vertex(drop).weight;
            std::vector<int> moved;
            for (int w : g.neighbors(drop))
                if (w != id)
                    moved.push_back(w);
            g.remove_vertex(id);
            g.remove_vertex(drop);
            g.set_weight(keep, merged_weight);
            for (int w : moved)
                g.add_edge(keep, w);
            return true;
        }

        if (v.weight == 0 && nbrs.size() == 1 && g.vertex(nbrs[0]).genus == 0) {
            // A 0-weighted leaf is a 0-framed meridian of its neighbor:
            // everything else slides off and the pair cancels.
            int u = nbrs[0];
            g.remove_vertex(id);
            g.remove_vertex(u);
            return true;
        }
    }
    return false;
}

std::vector<std::vector<int>> components_of(const PlumbingGraph& g) {
    std::vector<std::vector<int>> comps;
    std::map<int, bool> seen;
    for (int id : g.vertex_ids())
        seen[id] = false;
    for (int start : g.vertex_ids()) {
        if (seen[start])
            continue;
        std::vector<int> comp, stack{start};
        seen[start] = true;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w : g.neighbors(v))
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(comp);
    }
    return comps;
}

// Classifies one path component.  weight order follows the path.
std::optional<LensParams> classify_path(const PlumbingGraph& g, const std::vector<int>& comp) {
    // locate the path order
    std::vector<int> order;
    if (comp.size() == 1) {
        order = comp;
    } else {
        int start = -1;
        for (int id : comp)
            if (g.degree(id) == 1) {
                start = id;
                break;
            }
        if (start < 0)
            return std::nullopt; // cycle
        order.push_back(start);
        int prev = -1, cur = start;
        while (order.size() < comp.size()) {
            int next = -1;
            for (int w : g.neighbors(cur))
                if (w != prev) {
                    next = w;
                    break;
                }
            if (next < 0)
                return std::nullopt;
            order.push_back(next);
            prev = cur;
            cur = next;
        }
    }

    // Evaluate the negative continued fraction of the negated weights
    // projectively: (p, q) <- (e*p - q, p), scanning from the far end.
    long p = -g.vertex(order.back()).weight;
    long q = 1;
    for (std::size_t i = order.size() - 1; i-- > 0;) {
        long e = -g.vertex(order[i]).weight;
        long np = e * p - q;
        q = p;
        p = np;
    }

    if (p == 0)
        return s1xs2();
    if (p == 1 || p == -1)
        return sphere3();
    long n = std::labs(p);
    long qq = p > 0 ? mod_norm(q, n) : mod_norm(-q, n);
    long q_star = std::min(qq, mod_inverse(qq, n));
    return lens(n, q_star);
}

} // namespace

std::optional<LensParams> recognize_generalized_lens(const PlumbingGraph& g) {
    if (!g.legs().empty())
        throw ValidationError("recognize_generalized_lens requires a closed graph");
    if (g.component_count() > 1)
        throw ValidationError("recognize_generalized_lens requires a connected graph");
    for (const auto& v : g.vertices())
        if (v.genus > 0)
            return std::nullopt;

    PlumbingGraph work = g;
    while (reduce_step(work)) {
    }

    if (work.vertex_count() == 0)
        return sphere3();

    std::vector<LensParams> pieces;
    for (const auto& comp : components_of(work)) {
        std::size_t internal_edges = 0;
        for (const auto& e : work.edges())
            if (std::binary_search(comp.begin(), comp.end(), e.first))
                ++internal_edges;
        bool path = internal_edges + 1 == comp.size();
        for (int id : comp)
            if (work.degree(id) > 2)
                path = false;
        if (!path)
            return std::nullopt;
        auto piece = classify_path(work, comp);
        if (!piece)
            return std::nullopt;
        if (piece->kind != LensParams::Kind::Sphere3)
            pieces.push_back(*piece);
    }

    if (pieces.empty())
        return sphere3();
    if (pieces.size() == 1)
        return pieces.front();
    return std::nullopt; // non-trivial connected sum
}

namespace {

struct VertexProfile {
    int genus;
    int weight;
    int degree;
    int legs;
    auto operator<=>(const VertexProfile&) const = default;
};

VertexProfile profile_of(const PlumbingGraph& g, int id) {
    const auto& v = g.vertex(id);
    return VertexProfile{v.genus, v.weight, g.degree(id), g.leg_count(id)};
}

bool extend_mapping(const PlumbingGraph& a, const PlumbingGraph& b,
                    const std::vector<int>& order, std::size_t k,
                    std::map<int, int>& a2b, std::map<int, bool>& used,
                    const std::map<int, std::vector<int>>& candidates) {
    if (k == order.size())
        return true;
    int va = order[k];
    for (int vb : candidates.at(va)) {
        if (used.at(vb))
            continue;
        bool ok = true;
        for (const auto& [ua, ub] : a2b)
            if (a.edge_multiplicity(va, ua) != b.edge_multiplicity(vb, ub)) {
                ok = false;
                break;
            }
        if (!ok)
            continue;
        a2b[va] = vb;
        used[vb] = true;
        if (extend_mapping(a, b, order, k + 1, a2b, used, candidates))
            return true;
        a2b.erase(va);
        used[vb] = false;
    }
    return false;
}

} // namespace

bool isomorphic(const PlumbingGraph& a, const PlumbingGraph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edges().size() != b.edges().size() ||
        a.legs().size() != b.legs().size())
        return false;

    std::vector<VertexProfile> pa, pb;
    for (int id : a.vertex_ids())
        pa.push_back(profile_of(a, id));
    for (int id : b.vertex_ids())
        pb.push_back(profile_of(b, id));
    std::sort(pa.begin(), pa.end());
    std::sort(pb.begin(), pb.end());
    if (pa != pb)
        return false;

    std::map<int, std::vector<int>> candidates;
    for (int va : a.vertex_ids()) {
        auto prof = profile_of(a, va);
        for (int vb : b.vertex_ids())
            if (profile_of(b, vb) == prof)
                candidates[va].push_back(vb);
    }

    // most-constrained vertices first
    std::vector<int> order = a.vertex_ids();
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        auto cx = candidates[x].size(), cy = candidates[y].size();
        if (cx != cy)
            return cx < cy;
        return a.degree(x) > a.degree(y);
    });

    std::map<int, int> a2b;
    std::map<int, bool> used;
    for (int vb : b.vertex_ids())
        used[vb] = false;
    return extend_mapping(a, b, order, 0, a2b, used, candidates);
}

} // namespace plumbtop
