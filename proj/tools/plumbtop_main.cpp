#include "plumbtop/cli.hpp"
#include "plumbtop/error.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>

int main(int argc, char** argv) {
    CLI::App app{"plumbing graphs and homology for boundaries of Milnor fibers of z^m - g(x,y)"};
    app.require_subcommand(1);

    std::string format = "text";

    auto* germ = app.add_subcommand("germ", "vanishing-zone report for a germ file");
    std::string germ_input;
    bool reducible = false;
    germ->add_option("-i,--input", germ_input, "germ JSON file")->required();
    germ->add_flag("--reducible", reducible, "mark f as reducible (default: irreducible)");
    germ->add_option("--format", format, "json|text");

    auto* h1 = app.add_subcommand("h1", "first homology of a closed plumbing graph");
    std::string h1_input;
    h1->add_option("-i,--input", h1_input, "graph JSON file")->required();
    h1->add_option("--format", format, "json|text");

    auto* graph = app.add_subcommand("graph", "emit a built-in boundary graph");
    std::string family = "example";
    int l = 2;
    graph->add_option("--family", family, "example|lens")->required();
    graph->add_option("--l", l, "family parameter l >= 2")->required();
    graph->add_option("--format", format, "json|dot|text");

    auto* glue = app.add_subcommand("glue", "glue two graphs with legs along a bamboo");
    std::string glue_a, glue_b;
    long alpha = 1, beta = 0;
    std::size_t leg_a = 0, leg_b = 0;
    glue->add_option("--a", glue_a, "first graph JSON file")->required();
    glue->add_option("--b", glue_b, "second graph JSON file")->required();
    glue->add_option("--alpha", alpha, "gluing alpha")->required();
    glue->add_option("--beta", beta, "gluing beta")->required();
    glue->add_option("--leg-a", leg_a, "leg index on the first graph");
    glue->add_option("--leg-b", leg_b, "leg index on the second graph");
    glue->add_option("--format", format, "json|dot");

    auto* snf = app.add_subcommand("snf", "Smith normal form of an integer matrix");
    std::string snf_input;
    snf->add_option("-i,--input", snf_input, "matrix JSON file (array of rows)")->required();
    snf->add_option("--format", format, "json|text");

    auto* repro = app.add_subcommand("repro", "recompute the published example results");
    repro->add_option("--format", format, "json|text");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        using namespace plumbtop::cli;
        Format fmt = parse_format(format);
        if (germ->parsed())
            return cmd_germ(germ_input, !reducible, fmt, std::cout, std::cerr);
        if (h1->parsed())
            return cmd_h1(h1_input, fmt, std::cout, std::cerr);
        if (graph->parsed())
            return cmd_graph(family, l, fmt, std::cout, std::cerr);
        if (glue->parsed())
            return cmd_glue(glue_a, glue_b, alpha, beta, leg_a, leg_b, fmt, std::cout, std::cerr);
        if (snf->parsed())
            return cmd_snf(snf_input, fmt, std::cout, std::cerr);
        if (repro->parsed())
            return cmd_repro(fmt, std::cout, std::cerr);
    } catch (const plumbtop::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
