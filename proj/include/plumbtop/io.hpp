#pragma once

#include "plumbtop/germ.hpp"
#include "plumbtop/linalg.hpp"
#include "plumbtop/plumbing.hpp"
#include "plumbtop/seifert.hpp"

#include <json.hpp>

#include <string>

namespace plumbtop {

using Json = nlohmann::ordered_json;

// {"vertices":[{"id":..,"genus":..,"e":..}], "edges":[[a,b]], "legs":[v]}
Json graph_to_json(const PlumbingGraph& g);
PlumbingGraph graph_from_json(const Json& j);

// Undirected DOT; vertices labeled "g=<genus>, e=<weight>", boundary legs
// as arrow-headed edges to anonymous point nodes.
std::string graph_to_dot(const PlumbingGraph& g);

// {"g":..,"r":..,"pairs":[[alpha,beta]],"e":int|null}
Json seifert_to_json(const SeifertData& s);
SeifertData seifert_from_json(const Json& j);

// {"m":..,"branches":[{"n":..,"mu":..}],"intersections":[[i,j,m0]]}
Json germ_to_json(const GermData& g);
GermData germ_from_json(const Json& j);

// array of arrays of integers
Json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const Json& j);

Json parse_json_file(const std::string& path);

} // namespace plumbtop
