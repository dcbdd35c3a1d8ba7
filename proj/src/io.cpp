#include "plumbtop/io.hpp"

#include "plumbtop/error.hpp"

#include <fstream>
#include <sstream>

namespace plumbtop {

namespace {

long expect_int(const Json& j, const std::string& where) {
    if (!j.is_number_integer())
        throw ValidationError(where + ": expected an integer");
    return j.get<long>();
}

const Json& expect_field(const Json& j, const std::string& key, const std::string& where) {
    if (!j.is_object() || !j.contains(key))
        throw ValidationError(where + ": missing field \"" + key + "\"");
    return j.at(key);
}

} // namespace

Json graph_to_json(const PlumbingGraph& g) {
    Json j;
    j["vertices"] = Json::array();
    for (int id : g.vertex_ids()) {
        const auto& v = g.vertex(id);
        j["vertices"].push_back(Json{{"id", v.id}, {"genus", v.genus}, {"e", v.weight}});
    }
    j["edges"] = Json::array();
    for (const auto& e : g.edges())
        j["edges"].push_back(Json::array({e.first, e.second}));
    j["legs"] = Json::array();
    for (int anchor : g.legs())
        j["legs"].push_back(anchor);
    return j;
}

PlumbingGraph graph_from_json(const Json& j) {
    PlumbingGraph g;
    for (const auto& v : expect_field(j, "vertices", "graph")) {
        long id = expect_int(expect_field(v, "id", "vertex"), "vertex.id");
        long genus = expect_int(expect_field(v, "genus", "vertex"), "vertex.genus");
        long e = expect_int(expect_field(v, "e", "vertex"), "vertex.e");
        g.add_vertex_with_id(static_cast<int>(id), static_cast<int>(genus), static_cast<int>(e));
    }
    for (const auto& e : expect_field(j, "edges", "graph")) {
        if (!e.is_array() || e.size() != 2)
            throw ValidationError("graph.edges: each edge is a pair [a, b]");
        g.add_edge(static_cast<int>(expect_int(e[0], "edge endpoint")),
                   static_cast<int>(expect_int(e[1], "edge endpoint")));
    }
    for (const auto& leg : expect_field(j, "legs", "graph"))
        g.add_leg(static_cast<int>(expect_int(leg, "leg anchor")));
    return g;
}

std::string graph_to_dot(const PlumbingGraph& g) {
    std::ostringstream out;
    out << "graph plumbing {\n";
    out << "  node [shape=circle];\n";
    for (int id : g.vertex_ids()) {
        const auto& v = g.vertex(id);
        out << "  v" << id << " [label=\"g=" << v.genus << ", e=" << v.weight << "\"];\n";
    }
    for (const auto& e : g.edges())
        out << "  v" << e.first << " -- v" << e.second << ";\n";
    for (std::size_t i = 0; i < g.legs().size(); ++i) {
        out << "  leg" << i << " [shape=point, label=\"\"];\n";
        out << "  v" << g.legs()[i] << " -- leg" << i << " [dir=forward, arrowhead=normal];\n";
    }
    out << "}\n";
    return out.str();
}

Json seifert_to_json(const SeifertData& s) {
    Json j;
    j["g"] = s.base_genus;
    j["r"] = s.boundary_count;
    j["pairs"] = Json::array();
    for (const auto& p : s.pairs)
        j["pairs"].push_back(Json::array({p.alpha, p.beta}));
    if (s.euler)
        j["e"] = *s.euler;
    else
        j["e"] = nullptr;
    return j;
}

SeifertData seifert_from_json(const Json& j) {
    SeifertData s;
    s.base_genus = static_cast<int>(expect_int(expect_field(j, "g", "seifert"), "seifert.g"));
    s.boundary_count = static_cast<int>(expect_int(expect_field(j, "r", "seifert"), "seifert.r"));
    if (s.base_genus < 0 || s.boundary_count < 0)
        throw ValidationError("seifert: g and r must be non-negative");
    for (const auto& p : expect_field(j, "pairs", "seifert")) {
        if (!p.is_array() || p.size() != 2)
            throw ValidationError("seifert.pairs: each pair is [alpha, beta]");
        s.pairs.push_back(seifert_pair(expect_int(p[0], "pair alpha"), expect_int(p[1], "pair beta")));
    }
    const Json& e = expect_field(j, "e", "seifert");
    if (!e.is_null())
        s.euler = expect_int(e, "seifert.e");
    return s;
}

Json germ_to_json(const GermData& g) {
    Json j;
    j["m"] = g.exponent();
    j["branches"] = Json::array();
    for (const auto& b : g.branches())
        j["branches"].push_back(Json{{"n", b.multiplicity}, {"mu", b.milnor_number}});
    j["intersections"] = Json::array();
    const int n = static_cast<int>(g.branches().size());
    for (int i = 0; i < n; ++i)
        for (int k = i + 1; k < n; ++k)
            j["intersections"].push_back(Json::array({i, k, g.intersection(i, k)}));
    return j;
}

GermData germ_from_json(const Json& j) {
    long m = expect_int(expect_field(j, "m", "germ"), "germ.m");
    std::vector<BranchData> branches;
    for (const auto& b : expect_field(j, "branches", "germ")) {
        BranchData data;
        data.multiplicity = static_cast<int>(expect_int(expect_field(b, "n", "branch"), "branch.n"));
        data.milnor_number = static_cast<int>(expect_int(expect_field(b, "mu", "branch"), "branch.mu"));
        branches.push_back(data);
    }
    std::vector<std::array<int, 3>> triples;
    for (const auto& t : expect_field(j, "intersections", "germ")) {
        if (!t.is_array() || t.size() != 3)
            throw ValidationError("germ.intersections: entries are [i, j, m0]");
        triples.push_back({static_cast<int>(expect_int(t[0], "intersection index")),
                           static_cast<int>(expect_int(t[1], "intersection index")),
                           static_cast<int>(expect_int(t[2], "intersection multiplicity"))});
    }
    return GermData(static_cast<int>(m), std::move(branches), std::move(triples));
}

Json matrix_to_json(const IntMatrix& m) {
    Json j = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int c = 0; c < m.cols(); ++c)
            row.push_back(m.at(i, c).get_str());
        j.push_back(row);
    }
    return j;
}

IntMatrix matrix_from_json(const Json& j) {
    if (!j.is_array())
        throw ValidationError("matrix: expected an array of rows");
    int rows = static_cast<int>(j.size());
    int cols = rows == 0 ? 0 : static_cast<int>(j[0].size());
    IntMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        if (!j[i].is_array() || static_cast<int>(j[i].size()) != cols)
            throw ValidationError("matrix: ragged rows");
        for (int c = 0; c < cols; ++c) {
            const Json& cell = j[i][c];
            if (cell.is_number_integer())
                m.at(i, c) = mpz_class(cell.get<long>());
            else if (cell.is_string())
                m.at(i, c) = mpz_class(cell.get<std::string>());
            else
                throw ValidationError("matrix: entries must be integers");
        }
    }
    return m;
}

Json parse_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ValidationError("cannot open " + path);
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(path + ": " + e.what());
    }
    return j;
}

} // namespace plumbtop
