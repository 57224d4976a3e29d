#include "homtoric/coloring.hpp"
#include "homtoric/error.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <sstream>

using namespace homtoric;

namespace {

/// Binomial from 1-based triangle words such as "123".
Binomial words(const ToricSystem& sys, std::initializer_list<const char*> plus, std::initializer_list<const char*> minus) {
    auto side = [&](std::initializer_list<const char*> ws) {
        std::vector<Variable> f;
        for (const char* w : ws) {
            VertexMap m;
            for (const char* c = w; *c; ++c) m.push_back(*c - '1');
            auto idx = sys.homs().index_of(m);
            REQUIRE(idx);
            f.push_back(static_cast<Variable>(*idx));
        }
        return ExponentVector(f);
    };
    return Binomial(side(plus), side(minus));
}

using Row = std::vector<std::tuple<int, int, bool>>;

std::vector<Row> table(const ObstructionCertificate& c) {
    std::vector<Row> out;
    for (const FirstFactorRow& r : c.first_rows) {
        Row row;
        for (const Identification& id : r.pairs) row.emplace_back(id.u + 1, id.v + 1, id.marked);
        out.push_back(row);
    }
    return out;
}

std::vector<Edge> antipodes() { return {{0, 1}, {2, 3}, {4, 5}}; }

}  // namespace

TEST_CASE("K5 certificate reproduces the identification table") {
    ToricSystem sys = build_system(complete_graph(3), complete_graph(5));
    Binomial b = words(sys, {"123", "145", "325", "341", "521", "543"}, {"125", "143", "321", "345", "523", "541"});
    REQUIRE(sys.membership(b));
    ObstructionCertificate c = analyze_certificate(sys, b);
    std::vector<Row> expected{
        {{1, 1, false}, {2, 2, false}, {3, 5, true}},
        {{1, 1, false}, {2, 4, true}, {3, 3, false}},
        {{1, 3, true}, {2, 2, false}, {3, 1, true}},
        {{1, 3, true}, {2, 4, true}, {3, 5, true}},
        {{1, 5, true}, {2, 2, false}, {3, 3, false}},
        {{1, 5, true}, {2, 4, true}, {3, 1, true}},
    };
    CHECK(table(c) == expected);
    CHECK(c.rows.size() == 720);
    CHECK(c.unmarked == 0);
    CHECK(c.verdict == Verdict::not_colorable);
    CHECK_FALSE(oracle::naive_colourable(complete_graph(5), 4));

    std::ostringstream text;
    write_certificate(text, c);
    CHECK(text.str().find("*xi(3)=xi(5)*") != std::string::npos);
    CHECK(text.str().find("NOT_4_COLORABLE") != std::string::npos);
}

TEST_CASE("octahedron certificate forces an antipodal identification") {
    ToricSystem sys = build_system(complete_graph(3), octahedron());
    Binomial b = words(sys, {"135", "146", "236", "245"}, {"136", "145", "235", "246"});
    REQUIRE(sys.membership(b));
    std::vector<Edge> rel = antipodes();
    ObstructionCertificate c = analyze_certificate(sys, b, rel);
    std::vector<Row> expected{
        {{1, 1, false}, {3, 3, false}, {5, 6, true}},
        {{1, 1, false}, {3, 4, true}, {5, 5, false}},
        {{1, 2, true}, {3, 3, false}, {5, 5, false}},
        {{1, 2, true}, {3, 4, true}, {5, 6, true}},
    };
    CHECK(table(c) == expected);
    CHECK(c.rows.size() == 24);
    CHECK(c.verdict == Verdict::property);
    CHECK(oracle::naive_colourable(octahedron(), 4));

    // with adjacency as the relation nothing follows: the octahedron is 4-colourable
    ObstructionCertificate plain = analyze_certificate(sys, b);
    CHECK(plain.verdict == Verdict::inconclusive);
    CHECK(plain.unmarked > 0);
}

TEST_CASE("certificate preconditions") {
    ToricSystem sys = build_system(complete_graph(3), octahedron());
    Binomial b = words(sys, {"135", "146", "236", "245"}, {"136", "145", "235", "246"});
    Binomial off = words(sys, {"135", "146", "236", "245"}, {"136", "145", "235", "264"});
    CHECK_THROWS_AS(analyze_certificate(sys, off), PreconditionError);
    CertificateOptions low;
    low.threshold = 4;
    CHECK_THROWS_AS(analyze_certificate(sys, b, {}, low), PreconditionError);
    ToricSystem wrong = build_system(path_graph(3), octahedron());
    CHECK_THROWS_AS(analyze_certificate(wrong, Binomial({0, 1}, {2, 3})), PreconditionError);
    CHECK_THROWS_AS(find_low_degree_binomial(build_system(complete_graph(3), cycle_graph(4)), 4), PreconditionError);
}

namespace {

/// First nontrivial fiber of the lowest degree, straight from the degree layers.
std::optional<Binomial> layer_scan(const ToricSystem& sys, int cap) {
    for (int t = 2; t <= cap; ++t) {
        DegreeLayer layer(sys, t);
        if (layer.fiber_count() == 0) continue;
        auto f = layer.fiber(0);
        return Binomial(layer.monomial_vector(f[0]), layer.monomial_vector(f[1]));
    }
    return std::nullopt;
}

}  // namespace

TEST_CASE("low-degree search") {
    ToricSystem oct = build_system(complete_graph(3), octahedron());
    auto b = find_low_degree_binomial(oct, 5);
    REQUIRE(b);
    CHECK(b->degree() == 4);
    CHECK(oct.membership(*b));
    for (int t = 2; t <= 3; ++t)
        for (const auto& [img, members] : oracle::brute_fibers(oct, t)) CHECK(members.size() == 1);
    CHECK(layer_scan(oct, 4) == b);
    ObstructionCertificate c = analyze_certificate(oct, *b, antipodes());
    CHECK(c.verdict == Verdict::property);

    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = oracle::random_graph(rng, 5 + trial % 2, 0.7);
        ToricSystem sys = build_system(complete_graph(3), g);
        if (sys.variable_count() == 0) continue;
        CHECK(find_low_degree_binomial(sys, 4) == layer_scan(sys, 4));
    }

    // no binomial of degree at most 5 among four-colourings of a triangle
    ToricSystem k4 = build_system(complete_graph(3), complete_graph(4));
    CHECK_FALSE(find_low_degree_binomial(k4, 5));

    ToricSystem k5 = build_system(complete_graph(3), complete_graph(5));
    auto k5b = find_low_degree_binomial(k5, 6);
    REQUIRE(k5b);
    CHECK(k5b->degree() <= 6);
    CHECK(analyze_certificate(k5, *k5b).verdict == Verdict::not_colorable);
}

TEST_CASE("pushforward along colourings") {
    ToricSystem oct = build_system(complete_graph(3), octahedron());
    ToricSystem k4 = build_system(complete_graph(3), complete_graph(4));
    Binomial b = words(oct, {"135", "146", "236", "245"}, {"136", "145", "235", "246"});
    std::size_t colourings = 0;
    for (const VertexMap& xi : oracle::naive_homs(octahedron(), complete_graph(4))) {
        ++colourings;
        CHECK(pushforward(oct, xi, b, k4).is_zero());
        // some antipodal pair shares a colour
        CHECK((xi[0] == xi[1] || xi[2] == xi[3] || xi[4] == xi[5]));
    }
    CHECK(colourings > 0);
    // the colouring pairing antipodes
    VertexMap pair{0, 0, 1, 1, 2, 2};
    CHECK(pushforward(oct, pair, b, k4).is_zero());
    CHECK_THROWS_AS(pushforward(oct, VertexMap{0, 1, 2, 3, 0, 0}, b, k4), PreconditionError);

    Binomial deg12 = words(k4, {"123", "214", "341", "432", "231", "142", "413", "324", "312", "421", "134", "243"},
                           {"124", "213", "342", "431", "234", "143", "412", "321", "314", "423", "132", "241"});
    CHECK(k4.membership(deg12));
    CHECK(pushforward(k4, VertexMap{0, 1, 2, 3}, deg12, k4) == deg12);
}

TEST_CASE("obstruction verdicts agree with brute-force colourability") {
    std::mt19937_64 rng(23);
    int obstructed = 0;
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = oracle::random_graph(rng, 5 + trial % 3, 0.85);
        ToricSystem sys = build_system(complete_graph(3), g);
        if (sys.variable_count() == 0 || sys.variable_count() > 80) continue;
        auto b = find_low_degree_binomial(sys, 6);
        if (!b) continue;
        ObstructionCertificate c = analyze_certificate(sys, *b);
        if (c.verdict == Verdict::not_colorable) {
            ++obstructed;
            CHECK_FALSE(oracle::naive_colourable(g, 4));
        }
        if (oracle::naive_colourable(g, 4)) CHECK(c.verdict == Verdict::inconclusive);
    }
    MESSAGE("obstructed graphs: " << obstructed);
}

TEST_CASE("pairs files") {
    std::istringstream in("0 1 # antipodal\n2 3\n\n4 5\n");
    CHECK(read_pairs(in) == antipodes());
    std::istringstream bad("0\n");
    CHECK_THROWS_AS(read_pairs(bad), ParseError);
}
