#include "homtoric/error.hpp"
#include "homtoric/toric.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <set>

using namespace homtoric;

namespace {

VertexMap one_based_map(const std::string& digits) {
    VertexMap m;
    for (char c : digits) m.push_back(c - '1');
    return m;
}

Variable var(const HomSet& homs, const VertexMap& m) {
    auto i = homs.index_of(m);
    REQUIRE(i.has_value());
    return static_cast<Variable>(*i);
}

/// Monomial over Hom(G, spoon) from independent sets such as "15" or "" (empty set).
ExponentVector sets_monomial(const IndependenceEncoding& enc, std::initializer_list<const char*> sets) {
    std::vector<Variable> f;
    for (const char* s : sets) {
        VertexSet vs;
        for (const char* c = s; *c; ++c) vs.insert(*c - '1');
        auto i = enc.index_of(vs);
        REQUIRE(i.has_value());
        f.push_back(static_cast<Variable>(*i));
    }
    return ExponentVector(f);
}

Graph prism() { return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}}); }

std::set<Binomial> canonical_set(const OrientedBasis& b) {
    std::set<Binomial> out;
    for (const Binomial& x : b.elements) out.insert(x.canonical());
    return out;
}

}  // namespace

TEST_CASE("C4 into the spoon gives the expected matrix") {
    // rows (edge, subset mapped to the unlooped vertex), columns independent sets, 1-based.
    // The printed headers of the last two columns are transposed relative to the
    // entries (row "12,{1}" has its second 1 under "{2,4}"); the entries agree with
    // the printed facet list, so we compare entries with the headers swapped.
    const char* cols[] = {"", "1", "2", "3", "4", "24", "13"};
    const int expected[12][7] = {{1, 0, 0, 1, 1, 0, 0}, {0, 1, 0, 0, 0, 0, 1}, {0, 0, 1, 0, 0, 1, 0},
                              {1, 1, 0, 0, 1, 0, 0}, {0, 0, 1, 0, 0, 1, 0}, {0, 0, 0, 1, 0, 0, 1},
                              {1, 1, 1, 0, 0, 0, 0}, {0, 0, 0, 1, 0, 0, 1}, {0, 0, 0, 0, 1, 1, 0},
                              {1, 0, 1, 1, 0, 0, 0}, {0, 1, 0, 0, 0, 0, 1}, {0, 0, 0, 0, 1, 1, 0}};
    struct ExpectedRow {
        Edge e;
        int s;  // -1 for the empty subset, else a 0-based vertex
    };
    const ExpectedRow rows[12] = {{{0, 1}, -1}, {{0, 1}, 0}, {{0, 1}, 1}, {{1, 2}, -1}, {{1, 2}, 1}, {{1, 2}, 2},
                               {{2, 3}, -1}, {{2, 3}, 2}, {{2, 3}, 3}, {{0, 3}, -1}, {{0, 3}, 0}, {{0, 3}, 3}};

    ToricSystem sys = build_system(cycle_graph(4), spoon());
    auto enc = indep_encode(sys.homs());
    REQUIRE(sys.row_count() == 12);
    REQUIRE(sys.variable_count() == 7);
    for (int r = 0; r < 12; ++r) {
        // locate our row: spoon vertex 0 is unlooped
        std::optional<std::size_t> ours;
        for (std::size_t k = 0; k < sys.row_count(); ++k) {
            const SeparatorRow& row = sys.rows()[k];
            if (row.where != rows[r].e) continue;
            int s = row.image_u == 0 ? row.where.u : row.image_v == 0 ? row.where.v : -1;
            if (s == rows[r].s) ours = k;
        }
        REQUIRE(ours);
        for (int c = 0; c < 7; ++c) {
            Variable v = *sets_monomial(enc, {cols[c]}).factors().begin();
            CHECK(sys.matrix()(static_cast<Eigen::Index>(*ours), v) == expected[r][c]);
        }
    }
}

TEST_CASE("system shape") {
    ToricSystem k2 = build_system(complete_graph(2), complete_graph(4));
    CHECK(k2.variable_count() == 12);
    // distinct unit columns: trivial ideal
    CHECK(exact_rank(k2.matrix()) == 12);
    CHECK(markov_basis(k2, 3).basis.empty());

    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = oracle::random_graph(rng, 1 + static_cast<int>(rng() % 5), 0.5);
        Graph h = oracle::random_graph(rng, 1 + static_cast<int>(rng() % 4), 0.6, true);
        ToricSystem sys = build_system(g, h);
        int weight = g.edge_count() + static_cast<int>(g.isolated_vertices().size());
        for (Eigen::Index j = 0; j < sys.matrix().cols(); ++j) CHECK(sys.matrix().col(j).sum() == weight);
        for (std::size_t r = 0; r < sys.row_count(); ++r)
            CHECK(sys.used_rows()[r] == (sys.matrix().row(static_cast<Eigen::Index>(r)).sum() > 0));
    }
}

TEST_CASE("membership") {
    ToricSystem k3k4 = build_system(complete_graph(3), complete_graph(4));
    std::vector<Variable> plus, minus;
    for (const char* s : {"123", "214", "341", "432", "231", "142", "413", "324", "312", "421", "134", "243"})
        plus.push_back(var(k3k4.homs(), one_based_map(s)));
    for (const char* s : {"124", "213", "342", "431", "234", "143", "412", "321", "314", "423", "132", "241"})
        minus.push_back(var(k3k4.homs(), one_based_map(s)));
    Binomial b12{ExponentVector(plus), ExponentVector(minus)};
    CHECK(b12.degree() == 12);
    CHECK(k3k4.membership(b12));
    CHECK(k3k4.membership(Binomial({0, 1}, {0, 1})));
    CHECK_FALSE(k3k4.membership(Binomial({0}, {1})));
    CHECK_THROWS_AS(k3k4.membership(Binomial({999}, {0})), PreconditionError);

    ToricSystem pr = build_system(prism(), spoon());
    auto enc = indep_encode(pr.homs());
    CHECK(pr.membership(Binomial(sets_monomial(enc, {"15", "26", "34"}), sets_monomial(enc, {"16", "24", "35"}))));
}

TEST_CASE("binomials strip common factors") {
    Binomial b({1, 2, 2, 5}, {2, 3, 5, 7});
    CHECK(b.plus() == ExponentVector{1, 2});
    CHECK(b.minus() == ExponentVector{3, 7});
    CHECK(Binomial({4, 4}, {4, 4}).is_zero());
}

TEST_CASE("P4 to P3 Markov basis") {
    ToricSystem sys = build_system(path_graph(4), path_graph(3));
    MarkovResult r = markov_basis(sys, 4);
    const HomSet& h = sys.homs();
    std::vector<Binomial> expected{
        Binomial(ExponentVector{var(h, one_based_map("1212")), var(h, one_based_map("3232"))},
                 ExponentVector{var(h, one_based_map("1232")), var(h, one_based_map("3212"))}),
        Binomial(ExponentVector{var(h, one_based_map("2121")), var(h, one_based_map("2323"))},
                 ExponentVector{var(h, one_based_map("2123")), var(h, one_based_map("2321"))})};
    CHECK(r.basis.elements == expected);
    CHECK(r.stable);
    CHECK(r.certified_bound == 2);
    CHECK(r.complete);
    CHECK(oracle::brute_markov(sys, r.basis, 4));
    CHECK_FALSE(verify_markov(sys, OrientedBasis{}, 2).ok);
}

TEST_CASE("prism into the spoon") {
    ToricSystem sys = build_system(prism(), spoon());
    auto enc = indep_encode(sys.homs());
    MarkovResult r = markov_basis(sys, 4);
    // multidegrees force the first quadratic to be r15 r() - r1 r5
    std::set<Binomial> expected;
    for (auto [pair, a, b] : {std::tuple{"15", "1", "5"}, {"16", "1", "6"}, {"24", "2", "4"}, {"26", "2", "6"},
                              {"34", "3", "4"}, {"35", "3", "5"}})
        expected.insert(Binomial(sets_monomial(enc, {pair, ""}), sets_monomial(enc, {a, b})).canonical());
    expected.insert(
        Binomial(sets_monomial(enc, {"15", "26", "34"}), sets_monomial(enc, {"16", "24", "35"})).canonical());
    // six of the quadratics are known in closed form; each must be present
    std::set<Binomial> ours = canonical_set(r.basis);
    for (const Binomial& b : expected) CHECK(ours.count(b) == 1);
    CHECK(r.added[3] == 1);
    CHECK(r.basis.degree() == 3);
    CHECK(markov_width(sys, 4).width == 3);
}

TEST_CASE("widths") {
    for (int n = 1; n <= 5; ++n) {
        WidthResult w = markov_width(build_system(complete_graph(n), spoon()), 3);
        CHECK(w.width == 0);
        CHECK(w.exact);
    }
    CHECK(markov_width(build_system(complement(cycle_graph(4)), spoon()), 3).width == 2);
    CHECK(markov_width(build_system(cycle_graph(3), loopify(complete_graph(2))), 5).width == 4);
}

TEST_CASE("layer grouping matches brute-force fibers") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 15; ++trial) {
        Graph g = oracle::random_graph(rng, 2 + static_cast<int>(rng() % 4), 0.5);
        ToricSystem sys = build_system(g, spoon());
        for (int t = 1; t <= 3; ++t) {
            DegreeLayer layer(sys, t);
            std::set<std::vector<ExponentVector>> ours, brute;
            for (std::size_t f = 0; f < layer.fiber_count(); ++f) {
                std::vector<ExponentVector> members;
                for (auto m : layer.fiber(f)) members.push_back(layer.monomial_vector(m));
                ours.insert(members);
            }
            for (auto& [img, members] : oracle::brute_fibers(sys, t))
                if (members.size() >= 2) brute.insert(members);
            CHECK(ours == brute);
            CHECK(layer.monomial_count() == monomial_count(sys.variable_count(), t));
        }
    }
}

TEST_CASE("Markov bases verify and are minimal") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 12; ++trial) {
        Graph g = oracle::random_graph(rng, 2 + static_cast<int>(rng() % 4), 0.5);
        Graph h = oracle::random_graph(rng, 2 + static_cast<int>(rng() % 2), 0.6, true);
        ToricSystem sys = build_system(g, h);
        if (sys.variable_count() > 30) continue;
        MarkovResult r = markov_basis(sys, 3);
        CHECK(verify_markov(sys, r.basis, 3).ok);
        CHECK(verify_markov_explicit(sys, r.basis, 3).ok);
        CHECK(oracle::brute_markov(sys, r.basis, 3));
        for (const Binomial& b : r.basis.elements) {
            CHECK(sys.membership(b));
            CHECK(gcd(b.plus(), b.minus()).is_one());
        }
        for (std::size_t drop = 0; drop < r.basis.size(); ++drop) {
            OrientedBasis fewer = r.basis;
            fewer.elements.erase(fewer.elements.begin() + static_cast<std::ptrdiff_t>(drop));
            CHECK_FALSE(verify_markov(sys, fewer, 3).ok);
        }
    }
}

TEST_CASE("width is monotone in the target") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 2 + static_cast<int>(rng() % 2);
        Graph h2 = oracle::random_graph(rng, n, 0.7, true);
        std::vector<Edge> kept;
        for (Edge e : h2.edges())
            if (rng() % 3) kept.push_back(e);
        Graph h1(n, kept);
        Graph g = oracle::random_graph(rng, 2 + static_cast<int>(rng() % 3), 0.6);
        ToricSystem big = build_system(g, h2), small = build_system(g, h1);
        if (big.variable_count() > 40) continue;
        MarkovResult rb = markov_basis(big, 3);
        CHECK(markov_width(small, 3).width <= rb.basis.degree());
        // restricted basis stays a basis of the smaller ideal
        OrientedBasis restricted = restrict_basis(big, rb.basis, small);
        CHECK(verify_markov(small, restricted, 3).ok);
    }
}

TEST_CASE("restriction to the spoon inside a looped edge") {
    Graph k2l = loopify(complete_graph(2));
    ToricSystem big = build_system(path_graph(3), k2l), small = build_system(path_graph(3), spoon());
    MarkovResult r = markov_basis(big, 4);
    OrientedBasis restricted = restrict_basis(big, r.basis, small);
    CHECK(verify_markov(small, restricted, 4).ok);
    CHECK(oracle::brute_markov(small, restricted, 4));
    CHECK(restrict_basis(big, r.basis, big).elements == r.basis.elements);
    CHECK_THROWS_AS(restrict_basis(small, restricted, big), PreconditionError);
}

TEST_CASE("Groebner verification") {
    ToricSystem p4 = build_system(path_graph(4), path_graph(3));
    OrientedBasis b = markov_basis(p4, 2).basis;
    CHECK(verify_grobner(p4, b, 4).ok);
    CHECK(oracle::brute_unique_sink(p4, b, 4));
    CHECK(verify_grobner(build_system(complete_graph(2), complete_graph(3)), OrientedBasis{}, 3).ok);
    BasisCheck empty = verify_grobner(p4, OrientedBasis{}, 3);
    CHECK_FALSE(empty.ok);
    CHECK(empty.degree == 2);
}

TEST_CASE("monomial cap") {
    ToricSystem sys = build_system(path_graph(4), complete_graph(4));
    FiberOptions tiny;
    tiny.max_monomials = 1000;
    CHECK_THROWS_AS(markov_basis(sys, 3, tiny), ResourceLimit);
}

TEST_CASE("normality witness") {
    ToricSystem p4 = build_system(path_graph(4), path_graph(3));
    NormalityWitness w = normality_witness(p4, markov_basis(p4, 2).basis);
    CHECK(w.verified);
    CHECK(w.normal);
    CHECK(w.cohen_macaulay);
    CHECK(w.koszul);

    ToricSystem k3k4 = build_system(complete_graph(3), complete_graph(4));
    CHECK_THROWS_AS(normality_witness(p4, OrientedBasis{{Binomial({0}, {1})}}), PreconditionError);
    // a degree-12 element puts the check out of reach: silent, not negative
    std::vector<Variable> plus, minus;
    for (Variable v = 0; v < 12; ++v) plus.push_back(v);
    for (Variable v = 12; v < 24; ++v) minus.push_back(v);
    NormalityWitness silent = normality_witness(k3k4, OrientedBasis{{Binomial(ExponentVector(plus), ExponentVector(minus))}});
    CHECK_FALSE(silent.verified);
    CHECK_FALSE(silent.normal);
    CHECK_FALSE(silent.koszul);
}
