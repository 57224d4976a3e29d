#include "homtoric/error.hpp"
#include "homtoric/polytope.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <array>

using namespace homtoric;

namespace {

/// "13" for {0,2}; "" for the empty set.
std::string digits(VertexSet s) {
    std::string out;
    for (Vertex v : s.members()) out += static_cast<char>('1' + v);
    return out;
}

std::set<std::vector<std::size_t>> incidences(const FacetDescription& f) {
    std::set<std::vector<std::size_t>> out;
    for (const Facet& x : f.facets) out.insert(x.vertices);
    return out;
}

void check_facets_valid(const Polytope& p, const FacetDescription& f) {
    for (const Facet& x : f.facets) {
        IntVector vals = x.normal.transpose() * p.points;
        std::vector<std::size_t> tight;
        for (Eigen::Index j = 0; j < vals.size(); ++j) {
            REQUIRE(vals(j) <= x.offset);
            if (vals(j) == x.offset) tight.push_back(static_cast<std::size_t>(j));
        }
        CHECK(tight == x.vertices);
    }
}

}  // namespace

TEST_CASE("C4 into the spoon: seven vertices, eight facets") {
    ToricSystem sys = build_system(cycle_graph(4), spoon());
    Polytope p = build_polytope(sys);
    CHECK(p.vertex_count() == 7);
    CHECK(p.ambient_dim() == 12);
    CHECK(p.dim == 4);
    StableSetImage iso = stable_set_iso(cycle_graph(4));
    FacetDescription f = facets(p);
    check_facets_valid(p, f);
    std::set<std::set<std::string>> got;
    for (const Facet& x : f.facets) {
        std::set<std::string> names;
        for (std::size_t v : x.vertices) names.insert(digits(iso.sets[v]));
        got.insert(names);
    }
    std::set<std::set<std::string>> expected{
        {"1", "2", "13", "24"},      {"2", "3", "13", "24"},      {"1", "4", "13", "24"},
        {"3", "4", "13", "24"},      {"", "1", "2", "3", "13"},   {"", "1", "3", "4", "13"},
        {"", "1", "2", "4", "24"},   {"", "2", "3", "4", "24"},
    };
    CHECK(f.facets.size() == 8);
    CHECK(got == expected);

    Simplicity s = simplicity(p, f);
    CHECK_FALSE(s.simple);
    // counts read off the facet table: the empty set 4, singletons 5, the two maximal sets 6
    for (std::size_t v = 0; v < p.vertex_count(); ++v) {
        int in_table = 0;
        for (const auto& facet : expected) in_table += facet.count(digits(iso.sets[v])) ? 1 : 0;
        CHECK(s.counts[v] == in_table);
        CHECK(s.counts[v] == std::array{4, 5, 6}[static_cast<std::size_t>(iso.sets[v].size())]);
    }
}

TEST_CASE("degenerate polytopes") {
    Polytope empty = build_polytope(build_system(complete_graph(3), cycle_graph(4)));
    CHECK(empty.vertex_count() == 0);
    CHECK(empty.dim == -1);
    CHECK(facets(empty).facets.empty());

    Polytope segment = build_polytope(build_system(complete_graph(2), complete_graph(2)));
    CHECK(segment.vertex_count() == 2);
    CHECK(segment.dim == 1);
    FacetDescription f = facets(segment);
    CHECK(f.facets.size() == 2);
    Simplicity s = simplicity(segment, f);
    CHECK(s.simple);
    CHECK(s.counts == std::vector<int>{1, 1});

    IntMatrix one(3, 1);
    one << 1, 2, 3;
    Polytope point = polytope_from_points(one);
    CHECK(point.dim == 0);
    CHECK(facets(point).facets.empty());
}

TEST_CASE("complete graphs give simplices") {
    for (int n = 1; n <= 6; ++n) {
        StableSetImage iso = stable_set_iso(complete_graph(n));
        CHECK(iso.image.vertex_count() == static_cast<std::size_t>(n + 1));
        CHECK(iso.image.dim == n);
        for (VertexSet s : iso.sets) CHECK(s.size() <= 1);
        FacetDescription f = facets(iso.image);
        CHECK(f.facets.size() == static_cast<std::size_t>(n + 1));
        CHECK(simplicity(iso.image, f).simple);
        check_facets_valid(iso.image, f);
    }
}

TEST_CASE("stable set polytope of C5 has the odd-hole facet") {
    Polytope p = stable_set_polytope(cycle_graph(5));
    CHECK(p.vertex_count() == 11);
    CHECK(p.dim == 5);
    FacetDescription f = facets(p);
    check_facets_valid(p, f);
    auto oracle = oracle::box_facets(p.points, 2);
    CHECK(f.facets.size() == 11);
    REQUIRE(oracle.size() == f.facets.size());
    for (const Facet& x : f.facets) {
        std::vector<std::int64_t> c(x.normal.data(), x.normal.data() + x.normal.size());
        auto it = oracle.find({c, x.offset});
        REQUIRE(it != oracle.end());
        CHECK(it->second == x.vertices);
    }
    IntVector ones = IntVector::Ones(5);
    int hole = 0, nonneg = 0, edge = 0;
    for (const Facet& x : f.facets) {
        if (x.normal == ones && x.offset == 2) ++hole;
        if (x.offset == 0 && x.normal.sum() == -1) ++nonneg;
        if (x.offset == 1 && x.normal.sum() == 2) ++edge;
    }
    CHECK(hole == 1);
    CHECK(nonneg == 5);
    CHECK(edge == 5);
}

TEST_CASE("facets agree with the box scan on random full-dimensional sets") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = oracle::random_graph(rng, 3 + trial % 4, 0.4);
        Polytope p = stable_set_polytope(g);
        if (p.vertex_count() > 20) continue;
        FacetDescription f = facets(p);
        check_facets_valid(p, f);
        auto box = oracle::box_facets(p.points, 1);
        std::set<std::vector<std::size_t>> expected;
        for (const auto& [key, tight] : box) expected.insert(tight);
        // stable set polytopes of graphs this small have 0/+-1 facets
        CHECK(incidences(f) == expected);
    }
}

TEST_CASE("stable set isomorphism") {
    StableSetImage c4 = stable_set_iso(cycle_graph(4));
    for (std::size_t j = 0; j < c4.sets.size(); ++j)
        for (Vertex v = 0; v < 4; ++v)
            CHECK(c4.image.points(v, static_cast<Eigen::Index>(j)) == (c4.sets[j].contains(v) ? 1 : 0));

    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 25; ++trial) {
        Graph g = oracle::random_graph(rng, 2 + trial % 6, 0.5);
        StableSetImage iso = stable_set_iso(g);
        std::set<std::uint64_t> seen;
        for (VertexSet s : iso.sets) CHECK(seen.insert(s.bits()).second);
        CHECK(seen.size() == stable_set_polytope(g).vertex_count());
        Polytope original = build_polytope(iso.system);
        CHECK(original.dim == iso.image.dim);
        if (original.vertex_count() <= 20) {
            FacetDescription a = facets(original);
            FacetDescription b = facets(iso.image);
            CHECK(a.facets.size() == b.facets.size());
            CHECK(incidences(a) == incidences(b));
        }
    }
    CHECK_THROWS_AS(stable_set_iso(loopify(path_graph(2))), PreconditionError);
}

TEST_CASE("faces from deleting parts of the target") {
    Graph both = loopify(path_graph(2));
    Graph s = spoon();
    for (const Graph& g : {path_graph(3), cycle_graph(4), star_graph(3), Graph(3, {{0, 1}})}) {
        FaceCertificate loop = face_check(g, both, s);
        CHECK(loop.ok);
        CHECK(loop.deleted.size() == 1);
        CHECK(loop.face.size() == enumerate(g, s).size());

        FaceCertificate same = face_check(g, both, both);
        CHECK(same.ok);
        CHECK(same.face.size() == same.system.variable_count());
        CHECK(same.functional.isZero());
    }
    // delete vertex 2 of K3
    FaceCertificate v = face_check(path_graph(3), complete_graph(3), Graph(3, {{0, 1}}), VertexSet::of({2}));
    CHECK(v.ok);
    CHECK(v.face.size() == 2);
    CHECK_THROWS_AS(face_check(path_graph(3), complete_graph(3), Graph(3, {{0, 2}}), VertexSet::of({2})),
                    PreconditionError);
    CHECK_THROWS_AS(face_check(path_graph(3), spoon(), both), PreconditionError);
}

TEST_CASE("faces give monotone width") {
    struct Pair {
        Graph big, small;
        VertexSet removed;
    };
    std::vector<Pair> pairs{
        {loopify(path_graph(2)), spoon(), {}},
        {loopify(complete_graph(3)), complete_graph(3), {}},
        {loopify(complete_graph(3)), Graph(3, {{0, 0}, {0, 1}, {1, 2}, {0, 2}}), {}},
        {complete_graph(4), Graph(4, {{0, 1}, {0, 2}, {1, 2}}), VertexSet::of({3})},
    };
    for (const Graph& g : {path_graph(3), cycle_graph(4), star_graph(3), complete_graph(3)})
        for (const Pair& pr : pairs) {
            FaceCertificate c = face_check(g, pr.big, pr.small, pr.removed);
            REQUIRE(c.ok);
            ToricSystem small = build_system(g, pr.small);
            int lo = markov_width(small, 4).width;
            int hi = markov_width(c.system, 4).width;
            CHECK(lo <= hi);
        }
}
