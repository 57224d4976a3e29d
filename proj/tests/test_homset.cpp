#include "homtoric/error.hpp"
#include "homtoric/homset.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace homtoric;

namespace {

VertexMap one_based_map(const std::string& digits) {
    VertexMap m;
    for (char c : digits) m.push_back(c - '1');
    return m;
}

}  // namespace

TEST_CASE("Hom(P4,P3) has the eight expected maps") {
    HomSet homs = enumerate(path_graph(4), path_graph(3));
    std::vector<VertexMap> expected;
    for (const char* s : {"1232", "1212", "2121", "2123", "2321", "2323", "3212", "3232"})
        expected.push_back(one_based_map(s));
    std::sort(expected.begin(), expected.end());
    CHECK(homs.maps() == expected);
}

TEST_CASE("enumeration agrees with naive filtering") {
    HomSet k3k4 = enumerate(complete_graph(3), complete_graph(4));
    CHECK(k3k4.size() == 24);
    CHECK(k3k4.maps() == oracle::naive_homs(complete_graph(3), complete_graph(4)));

    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        Graph g = oracle::random_graph(rng, 1 + static_cast<int>(rng() % 6), 0.4, true);
        Graph h = oracle::random_graph(rng, 1 + static_cast<int>(rng() % 4), 0.5, true);
        HomSet homs = enumerate(g, h);
        CHECK(homs.maps() == oracle::naive_homs(g, h));
        for (const VertexMap& m : homs) CHECK(is_homomorphism(g, h, m));
    }
}

TEST_CASE("empty hom sets and resource cap") {
    CHECK(enumerate(cycle_graph(3), cycle_graph(4)).empty());
    CHECK(enumerate(Graph(1, {{0, 0}}), complete_graph(3)).empty());
    EnumerateOptions tiny;
    tiny.max_search_space = 100;
    CHECK_THROWS_AS(enumerate(path_graph(5), complete_graph(4), tiny), ResourceLimit);
}

TEST_CASE("index_of round trips") {
    HomSet homs = enumerate(cycle_graph(5), complete_graph(3));
    for (std::size_t i = 0; i < homs.size(); ++i) CHECK(homs.index_of(homs[i]) == i);
    CHECK_FALSE(homs.index_of(VertexMap{0, 0, 1, 2, 1}));
    CHECK_FALSE(homs.index_of(VertexMap{0, 1}));
}

TEST_CASE("hom sets grow with the target and shrink with the source") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 1 + static_cast<int>(rng() % 4);
        Graph h2 = oracle::random_graph(rng, n, 0.6, true);
        std::vector<Edge> kept;
        for (Edge e : h2.edges())
            if (rng() % 2) kept.push_back(e);
        Graph h1(n, kept);
        Graph g = oracle::random_graph(rng, 1 + static_cast<int>(rng() % 5), 0.5);
        HomSet small = enumerate(g, h1), big = enumerate(g, h2);
        CHECK(small.size() <= big.size());
        for (const VertexMap& m : small) CHECK(big.index_of(m).has_value());

        std::vector<Edge> fewer;
        for (Edge e : g.edges())
            if (rng() % 2) fewer.push_back(e);
        CHECK(enumerate(Graph(g.order(), fewer), h2).size() >= big.size());
    }
}

TEST_CASE("restriction") {
    VertexMap phi = one_based_map("1232");
    CHECK(restrict_map(phi, VertexSet::of({1, 2})) == one_based_map("23"));
    CHECK(restrict_map(phi, VertexSet::range(4)) == phi);
    const Vertex edge[] = {0, 1};
    CHECK(restrict_map(phi, edge) == one_based_map("12"));
    CHECK_THROWS_AS(restrict_map(phi, VertexSet::of({7})), PreconditionError);
}

TEST_CASE("composition") {
    Graph p4 = path_graph(4), p3 = path_graph(3);
    VertexMap phi = one_based_map("1232");
    VertexMap id{0, 1, 2};
    CHECK(compose(p4, phi, p3, id, p3) == phi);

    // post-composition with an inclusion of targets
    Graph k3 = complete_graph(3);
    VertexMap inc{0, 1, 2};
    Graph looped_p3 = loopify(p3);
    VertexMap into = compose(p4, phi, p3, inc, looped_p3);
    CHECK(enumerate(p4, looped_p3).index_of(into).has_value());

    VertexMap bad{0, 0, 1, 2};
    CHECK_THROWS_AS(compose(p4, bad, p3, id, p3), PreconditionError);
    CHECK_THROWS_AS(compose(p4, phi, p3, VertexMap{0, 0, 0}, k3), PreconditionError);
}

TEST_CASE("independence encoding") {
    auto c4 = indep_encode(cycle_graph(4));
    CHECK(c4.homs.size() == 7);
    std::set<VertexSet> sets(c4.sets.begin(), c4.sets.end());
    std::set<VertexSet> expected{VertexSet{}, VertexSet::of({0}), VertexSet::of({1}), VertexSet::of({2}),
                                 VertexSet::of({3}), VertexSet::of({0, 2}), VertexSet::of({1, 3})};
    CHECK(sets == expected);
    auto all_looped = c4.index_of(VertexSet{});
    REQUIRE(all_looped);
    CHECK(c4.homs[*all_looped] == VertexMap{1, 1, 1, 1});

    for (int n = 1; n <= 6; ++n) {
        auto kn = indep_encode(complete_graph(n));
        CHECK(kn.homs.size() == static_cast<std::size_t>(n + 1));
        for (VertexSet s : kn.sets) CHECK(s.size() <= 1);
    }

    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = oracle::random_graph(rng, 1 + static_cast<int>(rng() % 8), 0.3);
        auto enc = indep_encode(g);
        std::size_t count = 0;
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << g.order()); ++bits)
            if (g.is_independent(VertexSet(bits))) {
                ++count;
                CHECK(enc.index_of(VertexSet(bits)).has_value());
            }
        CHECK(enc.homs.size() == count);
    }
    CHECK_THROWS_AS(indep_encode(enumerate(path_graph(2), complete_graph(2))), PreconditionError);
}
