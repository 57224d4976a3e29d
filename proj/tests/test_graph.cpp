#include "homtoric/error.hpp"
#include "homtoric/graph.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <sstream>

using namespace homtoric;

TEST_CASE("named graphs") {
    Graph s = build_named("spoon");
    CHECK(s.order() == 2);
    CHECK(s.edges() == std::vector<Edge>{{0, 1}, {1, 1}});
    CHECK_FALSE(s.has_loop(0));

    Graph c8 = build_named("complement:cycle:8");
    CHECK(c8.order() == 8);
    CHECK(c8.edge_count() == 20);

    Graph o = build_named("octahedron");
    CHECK(o.order() == 6);
    CHECK(o.edge_count() == 12);
    for (int i = 0; i < 6; i += 2) CHECK_FALSE(o.adjacent(i, i + 1));

    CHECK(build_named("complete-looped:3").looped_vertices() == VertexSet::range(3));
    CHECK(build_named("loopify:path:2") == loopify(path_graph(2)));
    CHECK(build_named("edges:3:0-1,2-2").edges() == std::vector<Edge>{{0, 1}, {2, 2}});
    CHECK(build_named("fan:5").edge_count() == 7);
}

TEST_CASE("named graph errors") {
    CHECK_THROWS_AS(build_named("wheel:5"), ParseError);
    CHECK_THROWS_AS(build_named("cycle:2"), PreconditionError);
    CHECK_THROWS_AS(build_named("path:0"), PreconditionError);
    CHECK_THROWS_AS(build_named("path:x"), ParseError);
    CHECK_THROWS_AS(build_named("edges:2:0-5"), PreconditionError);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), PreconditionError);
}

TEST_CASE("graph file round trip") {
    Graph g = build_named("loopify:cycle:5");
    std::stringstream ss;
    write_graph(ss, g);
    CHECK(read_graph(ss) == g);

    std::istringstream commented("# a triangle\nn 3\ne 0 1 # first\ne 1 2\ne 0 2\n");
    CHECK(read_graph(commented) == complete_graph(3));

    std::istringstream bad("n 2\ne 0\n");
    CHECK_THROWS_AS(read_graph(bad), ParseError);
    std::istringstream dup("n 2\ne 0 1\ne 1 0\n");
    CHECK_THROWS_AS(read_graph(dup), ParseError);
}

TEST_CASE("vertex set order is lexicographic on member lists") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 2000; ++trial) {
        VertexSet a(rng() & 0xff), b(rng() & 0xff);
        auto ma = a.members(), mb = b.members();
        CHECK((a < b) == (ma < mb));
        CHECK((a == b) == (ma == mb));
    }
}

TEST_CASE("induced subgraphs") {
    auto k = induced_subgraph(complete_graph(4), VertexSet::of({0, 1, 2}));
    CHECK(k.graph == complete_graph(3));

    auto looped = induced_subgraph(spoon(), VertexSet::of({1}));
    CHECK(looped.graph == Graph(1, {{0, 0}}));
    CHECK(looped.vertices == std::vector<Vertex>{1});

    auto face = induced_subgraph(octahedron(), VertexSet::of({0, 2, 4}));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(face.graph.adjacent(i, j) == (i != j && octahedron().adjacent(face.vertices[i], face.vertices[j])));
    CHECK(face.graph == complete_graph(3));

    const Vertex bad[] = {0, 9};
    CHECK_THROWS_AS(induced_subgraph(complete_graph(4), bad), PreconditionError);
}

TEST_CASE("bipartite and almost bipartite") {
    auto c4 = is_bipartite(cycle_graph(4));
    REQUIRE(c4);
    CHECK(c4->part1 == VertexSet::of({0, 2}));
    CHECK(c4->part2 == VertexSet::of({1, 3}));

    CHECK_FALSE(is_bipartite(cycle_graph(5)));
    auto c5 = is_almost_bipartite(cycle_graph(5));
    REQUIRE(c5);
    CHECK(c5->apex == 0);
    CHECK(c5->parts.part1 == VertexSet::of({1, 3}));
    CHECK(c5->parts.part2 == VertexSet::of({2, 4}));

    CHECK_FALSE(is_bipartite(complete_graph(4)));
    CHECK_FALSE(is_almost_bipartite(complete_graph(4)));
    CHECK_FALSE(is_bipartite(spoon()));

    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 1 + static_cast<int>(rng() % 12);
        Graph g = oracle::random_graph(rng, n, 0.25);
        auto parts = is_bipartite(g);
        CHECK(parts.has_value() == oracle::naive_two_colourable(g));
        if (parts) {
            CHECK((parts->part1 | parts->part2) == g.vertices());
            CHECK(g.is_independent(parts->part1));
            CHECK(g.is_independent(parts->part2));
        }
    }
}

TEST_CASE("complement and loopify") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        Graph g = oracle::random_graph(rng, 1 + static_cast<int>(rng() % 9), 0.4);
        CHECK(complement(complement(g)) == g);
        CHECK(loopify(g).looped_vertices() == g.vertices());
    }
}

TEST_CASE("forests, components, independence number") {
    CHECK(is_forest(star_graph(3)));
    CHECK(is_forest(empty_graph(3)));
    CHECK_FALSE(is_forest(cycle_graph(4)));
    CHECK(connected_components(Graph(4, {{0, 2}})).size() == 3);
    CHECK(independence_number(cycle_graph(5)) == 2);
    CHECK(independence_number(complete_graph(4)) == 1);
    CHECK(independence_number(octahedron()) == 2);
}

TEST_CASE("four-partite gadget") {
    auto k2 = fourpartite_gadget(complete_graph(2));
    CHECK(k2.graph.order() == 5);
    CHECK(k2.graph.edge_count() == 7);

    auto k3 = fourpartite_gadget(complete_graph(3));
    CHECK(k3.graph.order() == 12);
    CHECK(k3.graph.edge_count() == 21);
    for (Edge e : k3.graph.edges()) CHECK(k3.role[e.u] != k3.role[e.v]);

    CHECK(fourpartite_gadget(empty_graph(3)).graph == empty_graph(3));
    CHECK_THROWS_AS(fourpartite_gadget(spoon()), PreconditionError);
}

TEST_CASE("connected graphs up to isomorphism") {
    const std::size_t known[] = {0, 1, 1, 2, 6, 21, 112};
    for (int n = 1; n <= 6; ++n) CHECK(connected_graphs_up_to_iso(n).size() == known[n]);
    CHECK(canonical_code(path_graph(4)) == canonical_code(Graph(4, {{0, 2}, {2, 1}, {1, 3}})));
    CHECK(canonical_code(path_graph(4)) != canonical_code(star_graph(3)));
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = oracle::random_graph(rng, 6, 0.5, true);
        std::vector<int> perm{0, 1, 2, 3, 4, 5};
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<Edge> es;
        for (Edge e : g.edges()) es.push_back({perm[e.u], perm[e.v]});
        CHECK(canonical_code(Graph(6, es)) == canonical_code(g));
    }
}
