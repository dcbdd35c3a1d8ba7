#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "plumbtop/assembly.hpp"
#include "plumbtop/cli.hpp"
#include "plumbtop/error.hpp"
#include "plumbtop/germ.hpp"
#include "plumbtop/io.hpp"
#include "plumbtop/repro.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace plumbtop;

namespace {

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
    std::filesystem::path dir = std::filesystem::temp_directory_path() / "plumbtop_tests";
    std::filesystem::create_directories(dir);
    std::filesystem::path path = dir / name;
    std::ofstream out(path);
    out << content;
    return path;
}

} // namespace

TEST_CASE("graph json roundtrip") {
    PlumbingGraph g = boundary_graph_example_family(4);
    PlumbingGraph back = graph_from_json(graph_to_json(g));
    CHECK(isomorphic(g, back));
    CHECK(graph_to_json(back) == graph_to_json(g));
}

TEST_CASE("graph json validation") {
    CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"vertices":[],"edges":[[0,1]],"legs":[]})")),
                    ValidationError);
    CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"vertices":[{"id":0,"genus":0,"e":-2}],"edges":[],"legs":[3]})")),
                    ValidationError);
    CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"edges":[],"legs":[]})")), ValidationError);
    CHECK_THROWS_AS(
        graph_from_json(Json::parse(
            R"({"vertices":[{"id":0,"genus":0,"e":-2},{"id":0,"genus":0,"e":-3}],"edges":[],"legs":[]})")),
        ValidationError);
}

TEST_CASE("germ json roundtrip and field names") {
    GermData g = example_family_germ(5);
    Json j = germ_to_json(g);
    CHECK(j["m"] == 2);
    CHECK(j["branches"][0]["n"] == 5);
    CHECK(j["branches"][0]["mu"] == 0);
    CHECK(j["intersections"][0] == Json::array({0, 1, 2}));
    GermData back = germ_from_json(j);
    CHECK(germ_to_json(back) == j);
}

TEST_CASE("seifert json") {
    SeifertData s;
    s.base_genus = 0;
    s.boundary_count = 1;
    s.pairs = {seifert_pair(5, 2), seifert_pair(5, 2)};
    s.euler = 1;
    Json j = seifert_to_json(s);
    CHECK(j["g"] == 0);
    CHECK(j["r"] == 1);
    CHECK(j["pairs"][0] == Json::array({5, 2}));
    CHECK(j["e"] == 1);
    SeifertData back = seifert_from_json(j);
    CHECK(back.pairs.size() == 2);
    CHECK(back.pairs[0].beta_star == 3);

    s.euler.reset();
    CHECK(seifert_to_json(s)["e"].is_null());
}

TEST_CASE("dot export") {
    PlumbingGraph g;
    int a = g.add_vertex(0, -2);
    int b = g.add_vertex(1, -3);
    g.add_edge(a, b);
    g.add_leg(a);
    std::string dot = graph_to_dot(g);
    CHECK(dot.find("graph plumbing {") != std::string::npos);
    CHECK(dot.find("label=\"g=0, e=-2\"") != std::string::npos);
    CHECK(dot.find("label=\"g=1, e=-3\"") != std::string::npos);
    CHECK(dot.find("v0 -- v1") != std::string::npos);
    CHECK(dot.find("arrowhead=normal") != std::string::npos);
}

TEST_CASE("cmd_germ reports the vanishing zone") {
    auto path = write_temp("family5.json", germ_to_json(example_family_germ(5)).dump());
    std::ostringstream out, err;
    int code = cli::cmd_germ(path.string(), true, cli::Format::Text, out, err);
    CHECK(code == 0);
    CHECK(out.str().find("order 5") != std::string::npos);
    CHECK(out.str().find("2 fixed points") != std::string::npos);
    CHECK(out.str().find("-2/5 turn") != std::string::npos);
    CHECK(out.str().find("lens boundary: no") != std::string::npos);
}

TEST_CASE("cmd_germ lens verdict") {
    auto path = write_temp("lens4.json", germ_to_json(lens_family_germ(4)).dump());
    std::ostringstream out, err;
    int code = cli::cmd_germ(path.string(), true, cli::Format::Json, out, err);
    CHECK(code == 0);
    Json j = Json::parse(out.str());
    CHECK(j["lens_boundary"]["is_lens"] == true);

    std::ostringstream again;
    CHECK(cli::cmd_germ(path.string(), true, cli::Format::Json, again, err) == 0);
    CHECK(again.str() == out.str());
}

TEST_CASE("cmd_germ rejects invalid input with exit 2") {
    auto path = write_temp("reduced.json",
                           R"({"m":2,"branches":[{"n":1,"mu":0},{"n":1,"mu":2}],"intersections":[[0,1,1]]})");
    std::ostringstream out, err;
    CHECK(cli::cmd_germ(path.string(), true, cli::Format::Text, out, err) == 2);
    CHECK(err.str().find("error:") != std::string::npos);

    std::ostringstream out2, err2;
    CHECK(cli::cmd_germ("/nonexistent/germ.json", true, cli::Format::Text, out2, err2) == 2);
}

TEST_CASE("cmd_h1 renders homology") {
    auto path = write_temp("odd3.json", graph_to_json(boundary_graph_example_family(3)).dump());
    std::ostringstream out, err;
    CHECK(cli::cmd_h1(path.string(), cli::Format::Text, out, err) == 0);
    CHECK(out.str() == "Z/12\n");

    auto bamboo_path = write_temp("bamboo.json",
                                  R"({"vertices":[{"id":0,"genus":0,"e":-2},{"id":1,"genus":0,"e":-2},{"id":2,"genus":0,"e":-2}],"edges":[[0,1],[1,2]],"legs":[]})");
    std::ostringstream out2, err2;
    CHECK(cli::cmd_h1(bamboo_path.string(), cli::Format::Text, out2, err2) == 0);
    CHECK(out2.str() == "Z/4\n");

    auto empty_path = write_temp("empty.json", R"({"vertices":[],"edges":[],"legs":[]})");
    std::ostringstream out3, err3;
    CHECK(cli::cmd_h1(empty_path.string(), cli::Format::Text, out3, err3) == 0);
    CHECK(out3.str() == "0\n");

    auto legs_path = write_temp("legs.json",
                                R"({"vertices":[{"id":0,"genus":0,"e":-2}],"edges":[],"legs":[0]})");
    std::ostringstream out4, err4;
    CHECK(cli::cmd_h1(legs_path.string(), cli::Format::Text, out4, err4) == 2);
}

TEST_CASE("cmd_graph emits the families deterministically") {
    std::ostringstream a, b, err;
    CHECK(cli::cmd_graph("example", 4, cli::Format::Json, a, err) == 0);
    CHECK(cli::cmd_graph("example", 4, cli::Format::Json, b, err) == 0);
    CHECK(a.str() == b.str());

    Json j = Json::parse(a.str());
    CHECK(j.contains("vertices"));
    CHECK(j.contains("edges"));
    CHECK(j.contains("legs"));

    std::ostringstream dot;
    CHECK(cli::cmd_graph("lens", 3, cli::Format::Dot, dot, err) == 0);
    CHECK(dot.str().find("graph plumbing {") != std::string::npos);

    std::ostringstream bad;
    CHECK(cli::cmd_graph("unknown", 3, cli::Format::Json, bad, err) == 2);
    CHECK(cli::cmd_graph("example", 1, cli::Format::Json, bad, err) == 2);
}

TEST_CASE("cmd_glue joins two legged graphs") {
    auto a_path = write_temp("piece_a.json",
                             R"({"vertices":[{"id":0,"genus":0,"e":-2}],"edges":[],"legs":[0]})");
    auto b_path = write_temp("piece_b.json",
                             R"({"vertices":[{"id":0,"genus":0,"e":-3}],"edges":[],"legs":[0]})");
    std::ostringstream out, err;
    CHECK(cli::cmd_glue(a_path.string(), b_path.string(), 5, 2, 0, 0, cli::Format::Json, out, err) == 0);
    Json j = Json::parse(out.str());
    CHECK(j["legs"].empty());
    CHECK(j["vertices"].size() == 4); // two anchors + chain [-2, -3]
}

TEST_CASE("cmd_snf") {
    auto path = write_temp("matrix.json", "[[-2,1],[1,-2]]");
    std::ostringstream out, err;
    CHECK(cli::cmd_snf(path.string(), cli::Format::Json, out, err) == 0);
    Json j = Json::parse(out.str());
    CHECK(j["d"] == Json::array({"1", "3"}));
    CHECK(j["rank"] == 2);
}

TEST_CASE("cmd_repro passes and is deterministic") {
    std::ostringstream a, b, err;
    CHECK(cli::cmd_repro(cli::Format::Json, a, err) == 0);
    CHECK(cli::cmd_repro(cli::Format::Json, b, err) == 0);
    CHECK(a.str() == b.str());

    Json j = Json::parse(a.str());
    CHECK(j["all_pass"] == true);
    REQUIRE(j["claims"].size() == 6);
    std::vector<std::string> ids;
    for (const auto& c : j["claims"])
        ids.push_back(c["id"].get<std::string>());
    CHECK(ids == std::vector<std::string>{"T6.5", "P7.1", "P7.2", "T7.3", "T8.1", "T8.2"});

    std::ostringstream text;
    CHECK(cli::cmd_repro(cli::Format::Text, text, err) == 0);
    CHECK(text.str().find("all claims reproduced") != std::string::npos);
}

TEST_CASE("format parsing") {
    CHECK(cli::parse_format("json") == cli::Format::Json);
    CHECK(cli::parse_format("dot") == cli::Format::Dot);
    CHECK(cli::parse_format("text") == cli::Format::Text);
    CHECK_THROWS_AS(cli::parse_format("yaml"), ValidationError);
}
