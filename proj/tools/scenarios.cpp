#include "scenarios.hpp"

#include "homtoric/basis_io.hpp"
#include "homtoric/coloring.hpp"
#include "homtoric/error.hpp"
#include "homtoric/hibi.hpp"
#include "homtoric/indep.hpp"
#include "homtoric/linalg.hpp"
#include "homtoric/polytope.hpp"
#include "homtoric/tfp.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace homtoric::app {

void Outcome::check(bool ok, const std::string& what) {
    lines.push_back((ok ? "  ok    " : "  FAIL  ") + what);
    pass = pass && ok;
}

namespace {

std::string word(const VertexMap& m) {
    bool short_form = std::all_of(m.begin(), m.end(), [](Vertex v) { return v < 9; });
    if (!short_form) return map_literal(m, true);
    std::string s;
    for (Vertex v : m) s += static_cast<char>('1' + v);
    return s;
}

std::string edges_text(const Graph& g) {
    std::string out;
    for (Edge e : g.edges()) {
        if (!out.empty()) out += ' ';
        out += std::to_string(e.u) + '-' + std::to_string(e.v);
    }
    return out.empty() ? "(no edges)" : out;
}

Json edges_json(const Graph& g) {
    Json out = Json::array();
    for (Edge e : g.edges()) out.push_back({e.u, e.v});
    return out;
}

/// Monomial from 1-based map words such as "1232".
ExponentVector from_words(const ToricSystem& sys, std::initializer_list<const char*> ws) {
    std::vector<Variable> f;
    for (const char* w : ws) {
        VertexMap m;
        for (const char* c = w; *c; ++c) m.push_back(*c - '1');
        auto idx = sys.homs().index_of(m);
        if (!idx) throw InternalError(std::string("scenario: ") + w + " is not a homomorphism");
        f.push_back(static_cast<Variable>(*idx));
    }
    return ExponentVector(std::move(f));
}

Binomial words(const ToricSystem& sys, std::initializer_list<const char*> plus, std::initializer_list<const char*> minus) {
    return Binomial(from_words(sys, plus), from_words(sys, minus));
}

/// Monomial from 1-based independent sets such as "13" or "".
ExponentVector from_sets(const IndependenceEncoding& enc, std::initializer_list<const char*> sets) {
    std::vector<Variable> f;
    for (const char* s : sets) {
        VertexSet vs;
        for (const char* c = s; *c; ++c) vs.insert(*c - '1');
        auto idx = enc.index_of(vs);
        if (!idx) throw InternalError(std::string("scenario: {") + s + "} is not independent");
        f.push_back(static_cast<Variable>(*idx));
    }
    return ExponentVector(std::move(f));
}

std::set<Binomial> canonical_set(const OrientedBasis& b) {
    std::set<Binomial> out;
    for (const Binomial& x : b.elements) out.insert(x.canonical());
    return out;
}

Json basis_json(const OrientedBasis& b, const ToricSystem& sys) {
    Json out = Json::array();
    for (const Binomial& x : b.elements) out.push_back(show(x, sys));
    return out;
}

void list_basis(Outcome& o, const OrientedBasis& b, const ToricSystem& sys) {
    for (const Binomial& x : b.elements) o.note("    " + show(x, sys));
}

Graph random_graph(std::mt19937_64& rng, int n, double p) {
    std::vector<Edge> es;
    std::bernoulli_distribution coin(p);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) es.push_back({i, j});
    return Graph(n, es);
}

Graph random_tree(std::mt19937_64& rng, int n) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Edge> es;
    for (int v = 1; v < n; ++v) es.push_back({perm[std::uniform_int_distribution<int>(0, v - 1)(rng)], perm[v]});
    return Graph(n, es);
}

// ---------------------------------------------------------------------------

Outcome p4p3(const RunConfig& cfg) {
    Outcome o;
    ToricSystem sys = build_system(path_graph(4), path_graph(3));
    MarkovResult r = markov_basis(sys, 4, cfg.fibers());
    o.note("Hom(P4, P3): " + std::to_string(sys.variable_count()) + " maps; Markov basis up to degree 4:");
    list_basis(o, r.basis, sys);
    std::set<Binomial> expected{words(sys, {"1212", "3232"}, {"1232", "3212"}).canonical(),
                                words(sys, {"2121", "2323"}, {"2123", "2321"}).canonical()};
    o.check(r.basis.size() == 2 && canonical_set(r.basis) == expected,
            "exactly r1212 r3232 - r1232 r3212 and r2121 r2323 - r2123 r2321");
    o.data["variables"] = sys.variable_count();
    o.data["basis"] = basis_json(r.basis, sys);
    o.data["stable"] = r.stable;
    return o;
}

Outcome complement_cycles(const RunConfig& cfg) {
    Outcome o;
    Json widths = Json::array();
    for (int k = 2; k <= 4; ++k) {
        ToricSystem sys = build_system(complement(cycle_graph(2 * k)), spoon());
        WidthResult w = markov_width(sys, k + 1, cfg.fibers());
        o.check(w.width == k, "complement of C" + std::to_string(2 * k) + ": width " + std::to_string(w.width) +
                                  " at cap " + std::to_string(k + 1) + (w.stable ? " (stable)" : ""));
        widths.push_back({{"k", k}, {"cap", k + 1}, {"width", w.width}, {"stable", w.stable}});
    }
    ToricSystem c6 = build_system(complement(cycle_graph(6)), spoon());
    IndependenceEncoding enc = indep_encode(c6.homs());
    MarkovResult r = markov_basis(c6, 4, cfg.fibers());
    Binomial cubic(from_sets(enc, {"12", "34", "56"}), from_sets(enc, {"23", "45", "61"}));
    o.note("complement of C6, basis up to degree 4:");
    list_basis(o, r.basis, c6);
    o.check(canonical_set(r.basis).count(cubic.canonical()) == 1, "contains " + show(cubic, c6));
    o.data["widths"] = widths;
    o.data["c6_basis"] = basis_json(r.basis, c6);
    return o;
}

Outcome bipartite_suite(const RunConfig& cfg) {
    Outcome o;
    Json per = Json::array();
    std::size_t total = 0, failed = 0;
    for (int n = 1; n <= 6; ++n) {
        std::size_t count = 0, fibers = 0;
        for (const Graph& g : connected_graphs_up_to_iso(n)) {
            if (!is_bipartite(g)) continue;
            ToricSystem sys = build_system(g, spoon());
            IndepBasis b = bipartite_grobner(sys);
            BasisCheck c = verify_grobner(sys, b.basis, 4, cfg.fibers());
            ++count;
            fibers += c.fibers_checked;
            if (!c.ok) {
                ++failed;
                o.check(false, edges_text(g) + ": " + c.reason);
            }
        }
        total += count;
        o.note("  n=" + std::to_string(n) + ": " + std::to_string(count) + " graphs, " + std::to_string(fibers) +
               " fibers checked");
        per.push_back({{"n", n}, {"graphs", count}, {"fibers", fibers}});
    }
    o.check(failed == 0, std::to_string(total) + " connected bipartite graphs pass the Groebner check at cap 4");
    o.data["orders"] = per;
    o.data["failures"] = failed;
    return o;
}

Outcome almost_bipartite_suite(const RunConfig& cfg) {
    Outcome o;
    ToricSystem c5 = build_system(cycle_graph(5), spoon());
    IndependenceEncoding enc = indep_encode(c5.homs());
    IndepBasis b5 = almost_bipartite_grobner(c5);
    std::map<Binomial, MoveKind> kind;
    for (std::size_t i = 0; i < b5.basis.size(); ++i) kind[b5.basis.elements[i].canonical()] = b5.kinds[i];
    struct Known {
        std::initializer_list<const char*> lhs, rhs;
        MoveKind kind;
    };
    const Known known[] = {{{"24", ""}, {"2", "4"}, MoveKind::uncovered},
                           {{"35", ""}, {"3", "5"}, MoveKind::uncovered},
                           {{"1", "24"}, {"14", "2"}, MoveKind::mixed},
                           {{"1", "35"}, {"13", "5"}, MoveKind::mixed},
                           {{"13", "4"}, {"14", "3"}, MoveKind::mixed}};
    for (const Known& k : known) {
        Binomial b(from_sets(enc, k.lhs), from_sets(enc, k.rhs));
        auto it = kind.find(b.canonical());
        o.check(it != kind.end() && it->second == k.kind,
                "C5 (apex 1): " + show(b, c5) + " is " + std::string(to_string(k.kind)));
    }
    Json c5_basis = Json::array();
    for (std::size_t i = 0; i < b5.basis.size(); ++i)
        c5_basis.push_back({{"binomial", show(b5.basis.elements[i], c5)}, {"kind", to_string(b5.kinds[i])}});

    std::vector<std::pair<std::string, Graph>> suite{{"C5", cycle_graph(5)}, {"C7", cycle_graph(7)}};
    std::mt19937_64 rng(cfg.seed);
    while (suite.size() < 27) {
        int n = std::uniform_int_distribution<int>(4, 6)(rng);
        Graph g = random_graph(rng, n, 0.5);
        if (is_bipartite(g) || !is_almost_bipartite(g)) continue;
        suite.emplace_back("random " + std::to_string(suite.size() - 1), g);
    }
    Json graphs = Json::array();
    std::size_t failed = 0;
    for (const auto& [name, g] : suite) {
        ToricSystem sys = build_system(g, spoon());
        IndepBasis b = almost_bipartite_grobner(sys);
        BasisCheck c = verify_grobner(sys, b.basis, 4, cfg.fibers());
        if (!c.ok) {
            ++failed;
            o.check(false, name + " (" + edges_text(g) + "): " + c.reason);
        }
        graphs.push_back({{"name", name}, {"order", g.order()}, {"edges", edges_json(g)}, {"basis_size", b.basis.size()},
                          {"fibers", c.fibers_checked}, {"ok", c.ok}});
    }
    o.check(failed == 0, std::to_string(suite.size()) + " almost-bipartite graphs (C5, C7, 25 random) pass at cap 4");
    o.data["c5_basis"] = c5_basis;
    o.data["graphs"] = graphs;
    return o;
}

Outcome multigrading(const RunConfig&) {
    Outcome o;
    Json per = Json::array();
    bool all = true;
    for (int n = 1; n <= 5; ++n) {
        std::vector<std::pair<int, int>> pairs;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
        std::size_t graphs = 0, monomials = 0, classes = 0;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
            std::vector<Edge> es;
            for (std::size_t i = 0; i < pairs.size(); ++i)
                if ((mask >> i) & 1U) es.push_back({pairs[i].first, pairs[i].second});
            Graph g(n, es);
            MultigradingCheck c = check_multigrading(build_system(g, spoon()), 3);
            ++graphs;
            monomials += c.monomials;
            classes += c.classes;
            if (!c.ok) {
                all = false;
                o.check(false, edges_text(g) + ": " + c.failure);
            }
        }
        o.note("  n=" + std::to_string(n) + ": " + std::to_string(graphs) + " labelled graphs, " +
               std::to_string(monomials) + " monomials of degree <= 3 in " + std::to_string(classes) + " classes");
        per.push_back({{"n", n}, {"graphs", graphs}, {"monomials", monomials}, {"classes", classes}});
    }
    o.check(all, "fibers coincide with (degree, multidegree) classes for every graph on <= 5 vertices");
    o.data["orders"] = per;
    return o;
}

Outcome forests(const RunConfig& cfg) {
    Outcome o;
    std::mt19937_64 rng(cfg.seed);
    const std::pair<const char*, Graph> targets[] = {{"spoon", spoon()}, {"K3", complete_graph(3)}, {"P3", path_graph(3)}};
    Json runs = Json::array();
    std::size_t failed = 0;
    for (int i = 0; i < 50; ++i) {
        Graph tree = random_tree(rng, 2 + i % 6);
        for (const auto& [hname, h] : targets) {
            PipelineResult r = forest_pipeline(tree, h);
            bool quadratic = std::all_of(r.basis.elements.begin(), r.basis.elements.end(),
                                         [](const Binomial& b) { return b.degree() == 2; });
            BasisCheck c = verify_markov(r.system, r.basis, 3, cfg.fibers());
            bool ok = quadratic && r.basis.square_free() && c.ok;
            if (!ok) {
                ++failed;
                o.check(false, "tree " + edges_text(tree) + " -> " + hname +
                                   (quadratic ? "" : ": not quadratic") +
                                   (r.basis.square_free() ? "" : ": not square-free") + (c.ok ? "" : ": " + c.reason));
            }
            runs.push_back({{"tree", edges_json(tree)}, {"order", tree.order()}, {"target", hname},
                            {"basis_size", r.basis.size()}, {"ok", ok}});
        }
    }
    o.note("  50 trees on 2..7 vertices, targets spoon, K3, P3");
    o.check(failed == 0, "every glued basis is quadratic, square-free and a Markov basis at cap 3");
    o.data["runs"] = runs;
    return o;
}

Outcome k3k4(const RunConfig& cfg) {
    Outcome o;
    ToricSystem sys = build_system(complete_graph(3), complete_graph(4));
    Binomial deg12 = words(sys, {"123", "214", "341", "432", "231", "142", "413", "324", "312", "421", "134", "243"},
                           {"124", "213", "342", "431", "234", "143", "412", "321", "314", "423", "132", "241"});
    o.note("  " + show(deg12, sys));
    o.check(sys.membership(deg12), "the degree-12 binomial lies in I(K3 -> K4)");
    Json layers = Json::array();
    bool none = true;
    for (int t = 2; t <= 4; ++t) {
        DegreeLayer layer(sys, t, cfg.fibers());
        none = none && layer.fiber_count() == 0;
        layers.push_back({{"degree", t}, {"monomials", layer.monomial_count()}, {"nontrivial_fibers", layer.fiber_count()}});
    }
    o.check(none, "every fiber of degree 2..4 is a single monomial");

    OuterplanarOptions opt;
    opt.k3_basis = OrientedBasis{{deg12}};
    DegreeProfile p = outerplanar_profile(fan_graph(5), complete_graph(4), opt);
    std::string degrees;
    Json counts = Json::object();
    bool within = true;
    for (auto [d, c] : p.counts) {
        degrees += " " + std::to_string(d) + ":" + std::to_string(c);
        counts[std::to_string(d)] = c;
        within = within && (d == 2 || d == 12);
    }
    o.check(within, "pentagon fan into K4: generator degrees (degree:count)" + degrees);
    o.data["layers"] = layers;
    o.data["fan_profile"] = counts;
    o.data["fan_total"] = p.total;
    return o;
}

std::string digits(VertexSet s) {
    std::string out;
    for (Vertex v : s.members()) out += static_cast<char>('1' + v);
    return out;
}

Outcome c4_polytope(const RunConfig& cfg) {
    Outcome o;
    ToricSystem sys = build_system(cycle_graph(4), spoon());
    Polytope p = build_polytope(sys);
    FacetOptions fo;
    fo.threads = cfg.threads;
    FacetDescription f = facets(p, fo);
    StableSetImage iso = stable_set_iso(cycle_graph(4));
    o.check(p.vertex_count() == 7 && p.dim == 4, "P(C4 -> spoon): " + std::to_string(p.vertex_count()) +
                                                     " vertices in R^" + std::to_string(p.ambient_dim()) +
                                                     ", dimension " + std::to_string(p.dim));
    std::set<std::set<std::string>> got;
    Json fj = Json::array();
    for (const Facet& x : f.facets) {
        std::set<std::string> names;
        Json inc = Json::array();
        for (std::size_t v : x.vertices) {
            names.insert(digits(iso.sets[v]));
            inc.push_back(digits(iso.sets[v]));
        }
        std::string line;
        for (const std::string& s : names) line += " {" + s + "}";
        o.note("    facet:" + line);
        got.insert(names);
        fj.push_back(inc);
    }
    const std::set<std::set<std::string>> expected{
        {"1", "2", "13", "24"},    {"2", "3", "13", "24"},    {"1", "4", "13", "24"},    {"3", "4", "13", "24"},
        {"", "1", "2", "3", "13"}, {"", "1", "3", "4", "13"}, {"", "1", "2", "4", "24"}, {"", "2", "3", "4", "24"}};
    o.check(f.facets.size() == 8 && got == expected, "8 facets with the expected incidence sets");

    Simplicity s = simplicity(p, f);
    std::map<int, std::vector<std::string>> by_count;
    Json cj = Json::object();
    for (std::size_t v = 0; v < p.vertex_count(); ++v) {
        by_count[s.counts[v]].push_back("{" + digits(iso.sets[v]) + "}");
        cj[digits(iso.sets[v]).empty() ? "{}" : digits(iso.sets[v])] = s.counts[v];
    }
    for (const auto& [c, names] : by_count) {
        std::string line;
        for (const std::string& n : names) line += " " + n;
        o.note("    on " + std::to_string(c) + " facets:" + line);
    }
    bool empty4 = s.counts[static_cast<std::size_t>(*sys.homs().index_of(VertexMap{1, 1, 1, 1}))] == 4;
    o.check(empty4 && by_count.count(6) && !s.simple, "counts include 4 (empty set) and 6 (maximal sets); not simple");

    Polytope none = build_polytope(build_system(cycle_graph(3), cycle_graph(4)));
    o.check(none.vertex_count() == 0 && none.dim == -1, "P(C3 -> C4) is empty");
    o.data["vertices"] = p.vertex_count();
    o.data["dim"] = p.dim;
    o.data["facets"] = fj;
    o.data["facet_counts"] = cj;
    o.data["simple"] = s.simple;
    return o;
}

/// Facets by scanning integer normals in a box; independent of the vertex-subset search.
std::set<std::pair<std::vector<std::int64_t>, std::int64_t>> box_scan(const IntMatrix& pts, int bound) {
    const auto d = pts.rows();
    std::set<std::pair<std::vector<std::int64_t>, std::int64_t>> out;
    std::vector<std::int64_t> c(static_cast<std::size_t>(d), -bound);
    for (;;) {
        std::int64_t g = 0;
        for (std::int64_t x : c) g = std::gcd(g, x);
        if (g == 1) {
            IntVector cv = Eigen::Map<const IntVector>(c.data(), d);
            IntVector vals = cv.transpose() * pts;
            std::int64_t best = vals.maxCoeff();
            std::vector<Eigen::Index> tight;
            for (Eigen::Index j = 0; j < vals.size(); ++j)
                if (vals(j) == best) tight.push_back(j);
            IntMatrix t(d + 1, static_cast<Eigen::Index>(tight.size()));
            for (std::size_t k = 0; k < tight.size(); ++k) {
                t(0, static_cast<Eigen::Index>(k)) = 1;
                t.col(static_cast<Eigen::Index>(k)).tail(d) = pts.col(tight[k]);
            }
            if (exact_rank(t) == d) out.insert({c, best});
        }
        std::size_t i = 0;
        while (i < c.size() && c[i] == bound) c[i++] = -bound;
        if (i == c.size()) break;
        ++c[i];
    }
    return out;
}

Outcome c5_stable(const RunConfig& cfg) {
    Outcome o;
    Polytope p = stable_set_polytope(cycle_graph(5));
    FacetOptions fo;
    fo.threads = cfg.threads;
    FacetDescription f = facets(p, fo);
    std::set<std::pair<std::vector<std::int64_t>, std::int64_t>> ours;
    Json fj = Json::array();
    for (const Facet& x : f.facets) {
        std::vector<std::int64_t> nv(x.normal.begin(), x.normal.end());
        std::string text;
        for (std::int64_t c : nv) text += (text.empty() ? "" : " ") + std::to_string(c);
        o.note("    (" + text + ") . x <= " + std::to_string(x.offset));
        fj.push_back({{"normal", nv}, {"offset", x.offset}});
        ours.insert({nv, x.offset});
    }
    o.check(f.facets.size() == 11, std::to_string(f.facets.size()) + " facets");
    o.check(ours.count({{1, 1, 1, 1, 1}, 2}) == 1, "odd-hole inequality x1 + ... + x5 <= 2 is a facet");
    o.check(box_scan(p.points, 2) == ours, "matches a brute-force scan of normals in [-2,2]^5");
    o.data["facets"] = fj;
    return o;
}

Outcome posets(const RunConfig& cfg) {
    Outcome o;
    const std::size_t known[] = {0, 1, 2, 5, 16, 63};
    Json per = Json::array();
    for (int n = 1; n <= 5; ++n) {
        std::vector<Poset> ps = posets_up_to_iso(n);
        std::size_t xi_ok = 0, hibi_ok = 0, relations = 0;
        for (const Poset& p : ps) {
            XiCheck x = xi_bijection(p);
            xi_ok += x.bijective && x.alpha == n;
            HibiComparison h = hibi_vs_topgraded(p, 3, cfg.fibers());
            hibi_ok += h.ok();
            relations += h.hibi.size();
        }
        o.check(ps.size() == known[n] && xi_ok == ps.size() && hibi_ok == ps.size(),
                "n=" + std::to_string(n) + ": " + std::to_string(ps.size()) + " posets, xi bijective for " +
                    std::to_string(xi_ok) + ", Hibi relations match top-degree generators for " +
                    std::to_string(hibi_ok) + " (" + std::to_string(relations) + " relations)");
        per.push_back({{"n", n}, {"posets", ps.size()}, {"xi_bijective", xi_ok}, {"hibi_match", hibi_ok},
                       {"relations", relations}});
    }
    o.data["orders"] = per;
    return o;
}

Outcome colorings(const RunConfig&) {
    Outcome o;
    using Row = std::vector<std::tuple<int, int, bool>>;
    auto table = [](const ObstructionCertificate& c) {
        std::vector<Row> out;
        for (const FirstFactorRow& r : c.first_rows) {
            Row row;
            for (const Identification& id : r.pairs) row.emplace_back(id.u + 1, id.v + 1, id.marked);
            out.push_back(row);
        }
        return out;
    };
    auto text = [](const ObstructionCertificate& c) {
        std::ostringstream s;
        write_certificate(s, c);
        return s.str();
    };
    auto emit = [&](const std::string& body) {
        std::istringstream in(body);
        for (std::string line; std::getline(in, line);) o.note("    " + line);
    };

    ToricSystem k5 = build_system(complete_graph(3), complete_graph(5));
    Binomial b5 = words(k5, {"123", "145", "325", "341", "521", "543"}, {"125", "143", "321", "345", "523", "541"});
    ObstructionCertificate c5 = analyze_certificate(k5, b5);
    emit(text(c5));
    const std::vector<Row> k5_table{
        {{1, 1, false}, {2, 2, false}, {3, 5, true}}, {{1, 1, false}, {2, 4, true}, {3, 3, false}},
        {{1, 3, true}, {2, 2, false}, {3, 1, true}},  {{1, 3, true}, {2, 4, true}, {3, 5, true}},
        {{1, 5, true}, {2, 2, false}, {3, 3, false}}, {{1, 5, true}, {2, 4, true}, {3, 1, true}}};
    o.check(table(c5) == k5_table, "K5: the six rows of the identification table");
    o.check(c5.unmarked == 0 && c5.verdict == Verdict::not_colorable,
            "K5: all " + std::to_string(c5.rows.size()) + " permutations force an adjacent pair; " + to_string(c5.verdict));
    bool k5_colourable = !enumerate(complete_graph(5), complete_graph(4)).empty();
    o.check(!k5_colourable, "brute force: K5 has no 4-colouring");

    ToricSystem oct = build_system(complete_graph(3), octahedron());
    Binomial bo = words(oct, {"135", "146", "236", "245"}, {"136", "145", "235", "246"});
    const std::vector<Edge> antipodes{{0, 1}, {2, 3}, {4, 5}};
    ObstructionCertificate co = analyze_certificate(oct, bo, antipodes);
    emit(text(co));
    const std::vector<Row> oct_table{{{1, 1, false}, {3, 3, false}, {5, 6, true}},
                                     {{1, 1, false}, {3, 4, true}, {5, 5, false}},
                                     {{1, 2, true}, {3, 3, false}, {5, 5, false}},
                                     {{1, 2, true}, {3, 4, true}, {5, 6, true}}};
    o.check(table(co) == oct_table, "octahedron: the four rows of the identification table");
    o.check(co.unmarked == 0 && co.verdict == Verdict::property,
            "octahedron: every permutation forces an antipodal pair; " + to_string(co.verdict));
    std::size_t oct_colourings = enumerate(octahedron(), complete_graph(4)).size();
    o.check(oct_colourings > 0, "brute force: the octahedron has " + std::to_string(oct_colourings) + " 4-colourings");
    o.check(analyze_certificate(oct, bo).verdict == Verdict::inconclusive,
            "octahedron with adjacency as the relation: INCONCLUSIVE");

    o.data["k5"] = {{"binomial", show(b5, k5)}, {"permutations", c5.rows.size()}, {"verdict", to_string(c5.verdict)}};
    o.data["octahedron"] = {{"binomial", show(bo, oct)}, {"permutations", co.rows.size()},
                            {"verdict", to_string(co.verdict)}, {"colourings", oct_colourings}};
    return o;
}

Outcome census(const RunConfig& cfg) {
    Outcome o;
    std::map<int, std::size_t> histogram;
    Json threes = Json::array();
    bool in_range = true, complete_zero = true, small_ok = true, all_stable = true, c6_three = false;
    const std::uint64_t c6 = canonical_code(complement(cycle_graph(6)));
    std::size_t total = 0;
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : connected_graphs_up_to_iso(n)) {
            WidthResult w = markov_width(build_system(g, spoon()), 5, cfg.fibers());
            ++total;
            ++histogram[w.width];
            all_stable = all_stable && w.stable;
            in_range = in_range && (w.width == 0 || w.width == 2 || w.width == 3);
            if (is_complete(g)) complete_zero = complete_zero && w.width == 0;
            if ((is_bipartite(g) || is_almost_bipartite(g)) && w.width > 2) {
                small_ok = false;
                o.note("    almost bipartite with width " + std::to_string(w.width) + ": " + edges_text(g));
            }
            if (w.width == 3) {
                threes.push_back(edges_json(g));
                o.note("    width 3: " + edges_text(g));
                if (canonical_code(g) == c6) c6_three = true;
            }
        }
    std::string hist;
    Json hj = Json::object();
    for (auto [wd, c] : histogram) {
        hist += " " + std::to_string(wd) + ":" + std::to_string(c);
        hj[std::to_string(wd)] = c;
    }
    o.note("  " + std::to_string(total) + " connected graphs on <= 6 vertices; width:count" + hist);
    o.check(in_range, "every width is 0, 2 or 3 (cap 5)");
    o.check(complete_zero, "complete graphs have width 0");
    o.check(small_ok, "bipartite and almost-bipartite graphs have width <= 2");
    o.check(c6_three, "the complement of C6 has width 3");
    o.note(std::string("  no new generators at degrees 4 and 5 for ") + (all_stable ? "every graph" : "some graphs only"));
    o.data["graphs"] = total;
    o.data["histogram"] = hj;
    o.data["width_three"] = threes;
    o.data["stable"] = all_stable;
    return o;
}

Outcome prism(const RunConfig& cfg) {
    Outcome o;
    Graph g(6, std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
    ToricSystem sys = build_system(g, spoon());
    IndependenceEncoding enc = indep_encode(sys.homs());
    MarkovResult r = markov_basis(sys, 4, cfg.fibers());
    o.note("K3 x K2 into the spoon, basis up to degree 4:");
    list_basis(o, r.basis, sys);
    Binomial cubic(from_sets(enc, {"15", "26", "34"}), from_sets(enc, {"16", "24", "35"}));
    o.check(canonical_set(r.basis).count(cubic.canonical()) == 1, "contains the cubic " + show(cubic, sys));
    o.check(r.basis.degree() == 3, "width 3");
    o.data["basis"] = basis_json(r.basis, sys);
    return o;
}

}  // namespace

std::string show(const ExponentVector& m, const ToricSystem& sys) {
    auto unlooped = spoon_unlooped_vertex(sys.target());
    std::string out;
    for (Variable x : m.factors()) {
        const VertexMap& phi = sys.homs()[x];
        if (!out.empty()) out += ' ';
        if (unlooped) {
            VertexSet s;
            for (std::size_t v = 0; v < phi.size(); ++v)
                if (phi[v] == *unlooped) s.insert(static_cast<Vertex>(v));
            out += "r" + to_string(s, true);
        } else {
            out += "r" + word(phi);
        }
    }
    return out.empty() ? "1" : out;
}

std::string show(const Binomial& b, const ToricSystem& sys) { return show(b.plus(), sys) + " - " + show(b.minus(), sys); }

const std::vector<Scenario>& scenarios() {
    static const std::vector<Scenario> all{
        {"p4p3", 1, "Markov basis of Hom(P4, P3)", p4p3},
        {"complement-cycles", 2, "widths of complements of even cycles", complement_cycles},
        {"bipartite", 3, "Groebner bases for connected bipartite graphs on <= 6 vertices", bipartite_suite},
        {"almost-bipartite", 4, "Groebner bases for almost-bipartite graphs", almost_bipartite_suite},
        {"multigrading", 5, "membership by degree and multidegree, graphs on <= 5 vertices", multigrading},
        {"forests", 6, "glued bases for random trees", forests},
        {"k3k4", 7, "colourings of a triangle with four colours", k3k4},
        {"c4-polytope", 8, "the polytope of C4 into the spoon", c4_polytope},
        {"c5-stable", 9, "stable set polytope of C5", c5_stable},
        {"posets", 10, "posets, lower ideals and Hibi relations", posets},
        {"colorings", 11, "obstruction certificates for K5 and the octahedron", colorings},
        {"census", 12, "Markov widths of connected graphs on <= 6 vertices", census},
        {"prism", 0, "the triangular prism into the spoon", prism},
    };
    return all;
}

const Scenario* find_scenario(const std::string& name) {
    for (const Scenario& s : scenarios())
        if (s.name == name) return &s;
    return nullptr;
}

std::string render(const Scenario& s, const Outcome& o, const RunConfig& cfg) {
    if (cfg.json) {
        Json doc{{"schema", 1}, {"seed", cfg.seed}, {"command", "reproduce"}, {"scenario", s.name},
                 {"criterion", s.criterion}, {"pass", o.pass}, {"report", o.data}};
        return doc.dump(2) + "\n";
    }
    std::string out = "== " + s.name + ": " + s.title + "\n";
    for (const std::string& l : o.lines) out += l + "\n";
    out += std::string("result: ") + (o.pass ? "PASS" : "FAIL") + "\n";
    return out;
}

}  // namespace homtoric::app
