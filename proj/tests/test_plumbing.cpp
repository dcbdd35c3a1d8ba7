#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"

#include "plumbtop/error.hpp"
#include "plumbtop/homology.hpp"
#include "plumbtop/plumbing.hpp"

#include <random>

using namespace plumbtop;
using oracles::make_bamboo;

TEST_CASE("intersection matrix on pinned examples") {
    PlumbingGraph two = make_bamboo({-2, -2});
    IntMatrix m2 = intersection_matrix(two);
    CHECK(m2.at(0, 0) == -2);
    CHECK(m2.at(0, 1) == 1);
    CHECK(m2.at(1, 0) == 1);
    CHECK(m2.at(1, 1) == -2);

    PlumbingGraph circuit;
    int a = circuit.add_vertex(0, -2);
    int b = circuit.add_vertex(0, -2);
    int c = circuit.add_vertex(0, -2);
    circuit.add_edge(a, b);
    circuit.add_edge(b, c);
    circuit.add_edge(c, a);
    IntMatrix m3 = intersection_matrix(circuit);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(m3.at(i, j) == (i == j ? -2 : 1));

    PlumbingGraph single = make_bamboo({-1});
    CHECK(intersection_matrix(single).at(0, 0) == -1);
}

TEST_CASE("intersection matrix is symmetric, legs ignored") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        PlumbingGraph g;
        std::uniform_int_distribution<int> nv(1, 8), w(-4, 4), genus(0, 2);
        int n = nv(rng);
        std::vector<int> ids;
        for (int i = 0; i < n; ++i)
            ids.push_back(g.add_vertex(genus(rng), w(rng)));
        std::uniform_int_distribution<int> pick(0, n - 1);
        for (int e = 0; e < n; ++e) {
            int x = pick(rng), y = pick(rng);
            if (x != y)
                g.add_edge(ids[static_cast<std::size_t>(x)], ids[static_cast<std::size_t>(y)]);
        }
        g.add_leg(ids[0]);
        IntMatrix m = intersection_matrix(g);
        CHECK(m.rows() == n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                CHECK(m.at(i, j) == m.at(j, i));
    }
}

TEST_CASE("shape predicates") {
    CHECK(shape(make_bamboo({-2, -3, -2})) == GraphShape::Bamboo);
    CHECK(shape(make_bamboo({-7})) == GraphShape::Bamboo);

    PlumbingGraph cycle5;
    std::vector<int> ids;
    for (int i = 0; i < 5; ++i)
        ids.push_back(cycle5.add_vertex(0, -2));
    for (int i = 0; i < 5; ++i)
        cycle5.add_edge(ids[static_cast<std::size_t>(i)], ids[static_cast<std::size_t>((i + 1) % 5)]);
    CHECK(shape(cycle5) == GraphShape::Circuit);

    PlumbingGraph star;
    int center = star.add_vertex(0, -2);
    for (int i = 0; i < 3; ++i)
        star.add_edge(center, star.add_vertex(0, -2));
    CHECK(shape(star) == GraphShape::Star);

    PlumbingGraph with_genus;
    with_genus.add_vertex(1, -2);
    CHECK(shape(with_genus) == GraphShape::Other);

    PlumbingGraph disconnected;
    disconnected.add_vertex(0, -2);
    disconnected.add_vertex(0, -2);
    CHECK_THROWS_AS(shape(disconnected), ValidationError);

    PlumbingGraph with_leg = make_bamboo({-2});
    with_leg.add_leg(with_leg.vertex_ids()[0]);
    CHECK_THROWS_AS(shape(with_leg), ValidationError);
}

TEST_CASE("first betti number") {
    CHECK(graph_first_betti(make_bamboo({-2, -2, -2})) == 0);

    PlumbingGraph two_circuits;
    for (int c = 0; c < 2; ++c) {
        std::vector<int> ids;
        for (int i = 0; i < 3; ++i)
            ids.push_back(two_circuits.add_vertex(0, -2));
        for (int i = 0; i < 3; ++i)
            two_circuits.add_edge(ids[static_cast<std::size_t>(i)],
                                  ids[static_cast<std::size_t>((i + 1) % 3)]);
    }
    CHECK(graph_first_betti(two_circuits) == 2);
    CHECK(graph_first_betti(PlumbingGraph{}) == 0);
}

TEST_CASE("blow down on pinned examples") {
    PlumbingGraph lone = make_bamboo({-1});
    PlumbingGraph empty = blow_down(lone, lone.vertex_ids()[0]);
    CHECK(empty.vertex_count() == 0);

    PlumbingGraph mid = make_bamboo({-2, -1, -2});
    PlumbingGraph after = blow_down(mid, mid.vertex_ids()[1]);
    CHECK(isomorphic(after, make_bamboo({-1, -1})));

    PlumbingGraph end = make_bamboo({-2, -1});
    PlumbingGraph after_end = blow_down(end, end.vertex_ids()[1]);
    CHECK(isomorphic(after_end, make_bamboo({-1})));
}

TEST_CASE("blow down rejects bad vertices") {
    PlumbingGraph g = make_bamboo({-2, -1, -2});
    CHECK_THROWS_AS(blow_down(g, g.vertex_ids()[0]), ValidationError); // weight -2

    PlumbingGraph star;
    int center = star.add_vertex(0, -1);
    for (int i = 0; i < 3; ++i)
        star.add_edge(center, star.add_vertex(0, -2));
    CHECK_THROWS_AS(blow_down(star, center), ValidationError); // degree 3

    PlumbingGraph doubled;
    int x = doubled.add_vertex(0, -1);
    int y = doubled.add_vertex(0, -2);
    doubled.add_edge(x, y);
    doubled.add_edge(x, y);
    CHECK_THROWS_AS(blow_down(doubled, x), ValidationError); // loop would appear

    PlumbingGraph legged = make_bamboo({-1, -2});
    legged.add_leg(legged.vertex_ids()[0]);
    CHECK_THROWS_AS(blow_down(legged, legged.vertex_ids()[0]), ValidationError);
}

TEST_CASE("blow moves preserve homology") {
    std::mt19937 rng(500);
    std::uniform_int_distribution<int> nv(2, 7), w(-4, 4), genus(0, 1), steps_draw(1, 6);
    for (int trial = 0; trial < 60; ++trial) {
        PlumbingGraph g;
        std::vector<int> ids;
        int n = nv(rng);
        for (int i = 0; i < n; ++i)
            ids.push_back(g.add_vertex(genus(rng), w(rng)));
        for (int i = 1; i < n; ++i) {
            std::uniform_int_distribution<int> parent(0, i - 1);
            g.add_edge(ids[static_cast<std::size_t>(parent(rng))], ids[static_cast<std::size_t>(i)]);
        }
        HomologyResult before = h1_of_plumbed(g);
        int steps = steps_draw(rng);
        PlumbingGraph perturbed = g;
        for (int s = 0; s < steps; ++s)
            perturbed = oracles::random_calculus_move(perturbed, rng);
        CHECK(h1_of_plumbed(perturbed) == before);
    }
}

TEST_CASE("recognize generalized lens spaces on pinned examples") {
    auto l43 = recognize_generalized_lens(make_bamboo({-2, -2, -2}));
    REQUIRE(l43.has_value());
    CHECK(*l43 == lens(4, 3));

    PlumbingGraph genus1;
    genus1.add_vertex(1, -2);
    CHECK(!recognize_generalized_lens(genus1).has_value());

    CHECK(recognize_generalized_lens(PlumbingGraph{})->kind == LensParams::Kind::Sphere3);
    CHECK(recognize_generalized_lens(make_bamboo({-1}))->kind == LensParams::Kind::Sphere3);
    CHECK(recognize_generalized_lens(make_bamboo({0}))->kind == LensParams::Kind::S1xS2);
    CHECK(recognize_generalized_lens(make_bamboo({-2, -1, -2}))->kind == LensParams::Kind::S1xS2);

    // orientation reversal: a single +5 vertex is L(5, 4)
    CHECK(*recognize_generalized_lens(make_bamboo({5})) == lens(5, 4));
    CHECK(*recognize_generalized_lens(make_bamboo({-5})) == lens(5, 1));

    PlumbingGraph cycle;
    std::vector<int> ids;
    for (int i = 0; i < 4; ++i)
        ids.push_back(cycle.add_vertex(0, -2));
    for (int i = 0; i < 4; ++i)
        cycle.add_edge(ids[static_cast<std::size_t>(i)], ids[static_cast<std::size_t>((i + 1) % 4)]);
    CHECK(!recognize_generalized_lens(cycle).has_value());

    PlumbingGraph branch;
    int center = branch.add_vertex(0, -2);
    for (int i = 0; i < 3; ++i)
        branch.add_edge(center, branch.add_vertex(0, -3));
    CHECK(!recognize_generalized_lens(branch).has_value());
}

TEST_CASE("recognition invariant under calculus moves") {
    std::mt19937 rng(321);
    std::uniform_int_distribution<int> len(1, 7), w(-5, -2), steps_draw(1, 8);
    for (int trial = 0; trial < 80; ++trial) {
        std::vector<int> weights;
        int n = len(rng);
        for (int i = 0; i < n; ++i)
            weights.push_back(w(rng));
        PlumbingGraph g = make_bamboo(weights);
        auto before = recognize_generalized_lens(g);
        REQUIRE(before.has_value());

        PlumbingGraph perturbed = g;
        int steps = steps_draw(rng);
        for (int s = 0; s < steps; ++s)
            perturbed = oracles::random_calculus_move(perturbed, rng);
        auto after = recognize_generalized_lens(perturbed);
        REQUIRE(after.has_value());
        CHECK(*after == *before);
    }
}

TEST_CASE("bamboo determinant equals lens order") {
    std::mt19937 rng(42);
    std::uniform_int_distribution<int> len(1, 10), w(-6, -2);
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<int> weights;
        int n = len(rng);
        for (int i = 0; i < n; ++i)
            weights.push_back(w(rng));
        PlumbingGraph g = make_bamboo(weights);
        auto params = recognize_generalized_lens(g);
        REQUIRE(params.has_value());
        REQUIRE(params->kind == LensParams::Kind::Lens);
        mpz_class det = determinant(intersection_matrix(g));
        mpz_abs(det.get_mpz_t(), det.get_mpz_t());
        CHECK(det == params->n);
    }
}

TEST_CASE("zero-weight reduction moves") {
    // interior 0-chain absorption: [-3, 0, -4] collapses to [-7]
    CHECK(*recognize_generalized_lens(make_bamboo({-3, 0, -4})) == lens(7, 1));

    // a 0-weighted leaf cancels its neighbor: star center deleted, leaving L(2,1)
    PlumbingGraph small;
    int a = small.add_vertex(0, -3);
    int u = small.add_vertex(0, 0);
    int b = small.add_vertex(0, -2);
    small.add_edge(a, u);
    small.add_edge(a, b);
    CHECK(*recognize_generalized_lens(small) == lens(2, 1));

    // same cancellation exposing a connected sum: not a generalized lens space
    PlumbingGraph sum;
    int center = sum.add_vertex(0, -3);
    sum.add_edge(center, sum.add_vertex(0, 0));
    sum.add_edge(center, sum.add_vertex(0, -2));
    sum.add_edge(center, sum.add_vertex(0, -2));
    CHECK(!recognize_generalized_lens(sum).has_value());
}

TEST_CASE("plus-one moves demand sign-balanceable edges") {
    // +1 vertex on a circuit cannot be blown down in a positive-edge model,
    // triangles included
    for (int n : {3, 4, 5}) {
        PlumbingGraph cycle;
        std::vector<int> ids;
        ids.push_back(cycle.add_vertex(0, 1));
        for (int i = 1; i < n; ++i)
            ids.push_back(cycle.add_vertex(0, -2));
        for (int i = 0; i < n; ++i)
            cycle.add_edge(ids[static_cast<std::size_t>(i)],
                           ids[static_cast<std::size_t>((i + 1) % n)]);
        CHECK(!blow_down_applicable(cycle, ids[0]));
        CHECK_THROWS_AS(blow_down(cycle, ids[0]), ValidationError);
    }

    // across a bridge the sign balances and homology is preserved
    PlumbingGraph path = make_bamboo({-3, 1, -4});
    int plus_one = path.vertex_ids()[1];
    REQUIRE(blow_down_applicable(path, plus_one));
    CHECK(h1_of_plumbed(blow_down(path, plus_one)) == h1_of_plumbed(path));

    // +1 edge blow-ups only across bridges
    PlumbingGraph square;
    std::vector<int> sq;
    for (int i = 0; i < 4; ++i)
        sq.push_back(square.add_vertex(0, -2));
    for (int i = 0; i < 4; ++i)
        square.add_edge(sq[static_cast<std::size_t>(i)], sq[static_cast<std::size_t>((i + 1) % 4)]);
    CHECK_THROWS_AS(blow_up_edge(square, 0, 1), ValidationError);
    CHECK(h1_of_plumbed(blow_up_edge(square, 0, -1)) == h1_of_plumbed(square));

    PlumbingGraph doubled;
    int x = doubled.add_vertex(0, -2);
    int y = doubled.add_vertex(0, -2);
    doubled.add_edge(x, y);
    doubled.add_edge(x, y);
    CHECK_THROWS_AS(blow_up_edge(doubled, 0, 1), ValidationError); // parallel edge
    CHECK(h1_of_plumbed(blow_up_edge(doubled, 0, -1)) == h1_of_plumbed(doubled));
}

TEST_CASE("recognition rejects open or disconnected graphs") {
    PlumbingGraph with_leg = make_bamboo({-2});
    with_leg.add_leg(with_leg.vertex_ids()[0]);
    CHECK_THROWS_AS(recognize_generalized_lens(with_leg), ValidationError);

    PlumbingGraph two;
    two.add_vertex(0, -2);
    two.add_vertex(0, -3);
    CHECK_THROWS_AS(recognize_generalized_lens(two), ValidationError);
}

TEST_CASE("labeled graph isomorphism") {
    CHECK(isomorphic(make_bamboo({-2, -3, -4}), make_bamboo({-4, -3, -2})));
    CHECK(!isomorphic(make_bamboo({-2, -3, -4}), make_bamboo({-3, -2, -4})));
    CHECK(!isomorphic(make_bamboo({-2, -2}), make_bamboo({-2, -2, -2})));

    PlumbingGraph legged_a = make_bamboo({-2, -2});
    legged_a.add_leg(legged_a.vertex_ids()[0]);
    PlumbingGraph legged_b = make_bamboo({-2, -2});
    legged_b.add_leg(legged_b.vertex_ids()[1]);
    CHECK(isomorphic(legged_a, legged_b));

    PlumbingGraph legged_c = make_bamboo({-2, -3});
    legged_c.add_leg(legged_c.vertex_ids()[1]);
    PlumbingGraph legged_d = make_bamboo({-2, -3});
    legged_d.add_leg(legged_d.vertex_ids()[0]);
    CHECK(!isomorphic(legged_c, legged_d));

    PlumbingGraph genus_a;
    genus_a.add_vertex(1, -2);
    PlumbingGraph genus_b;
    genus_b.add_vertex(0, -2);
    CHECK(!isomorphic(genus_a, genus_b));
}

TEST_CASE("parallel edges count in the intersection form") {
    PlumbingGraph g;
    int a = g.add_vertex(0, -2);
    int b = g.add_vertex(0, -2);
    g.add_edge(a, b);
    g.add_edge(a, b);
    IntMatrix m = intersection_matrix(g);
    CHECK(m.at(0, 1) == 2);
    CHECK_THROWS_AS(g.add_edge(a, a), ValidationError);
}
