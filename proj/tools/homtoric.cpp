#include "scenarios.hpp"

#include "homtoric/basis_io.hpp"
#include "homtoric/coloring.hpp"
#include "homtoric/error.hpp"
#include "homtoric/hibi.hpp"
#include "homtoric/indep.hpp"
#include "homtoric/polytope.hpp"
#include "homtoric/tfp.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

using namespace homtoric;
using app::Json;
using app::RunConfig;

namespace {

enum Exit { success = 0, negative = 1, usage = 2, resource = 3, internal = 4 };

struct Report {
    std::ostringstream text;
    Json data = Json::object();
    int code = success;
};

Json basis_json(const OrientedBasis& b, const ToricSystem& sys) {
    Json out = Json::array();
    for (const Binomial& x : b.elements)
        out.push_back(format_monomial(x.plus(), sys, true) + " - " + format_monomial(x.minus(), sys, true));
    return out;
}

Json map_json(const VertexMap& m) { return Json(std::vector<int>(m.begin(), m.end())); }

void homs(Report& r, const std::string& gs, const std::string& hs) {
    Graph g = load_graph(gs), h = load_graph(hs);
    HomSet maps = enumerate(g, h);
    auto unlooped = spoon_unlooped_vertex(h);
    Json list = Json::array();
    for (const VertexMap& phi : maps) {
        Json entry{{"map", map_json(phi)}};
        r.text << map_literal(phi);
        if (unlooped) {
            VertexSet s;
            for (std::size_t v = 0; v < phi.size(); ++v)
                if (phi[v] == *unlooped) s.insert(static_cast<Vertex>(v));
            r.text << ' ' << to_string(s);
            entry["independent_set"] = s.members();
        }
        r.text << '\n';
        list.push_back(entry);
    }
    r.data["count"] = maps.size();
    r.data["homomorphisms"] = list;
}

void markov(Report& r, const RunConfig& cfg, const std::string& gs, const std::string& hs, int cap) {
    ToricSystem sys = build_system(load_graph(gs), load_graph(hs));
    MarkovResult m = markov_basis(sys, cap, cfg.fibers());
    r.text << "# " << sys.variable_count() << " variables, " << m.basis.size() << " generators up to degree " << cap
           << (m.complete ? ", complete" : m.stable ? ", stable at the cap" : "") << '\n';
    write_basis(r.text, m.basis, sys, {.maps = true, .tags = {}});
    r.data["variables"] = sys.variable_count();
    r.data["cap"] = cap;
    r.data["added_per_degree"] = m.added;
    r.data["stable"] = m.stable;
    r.data["complete"] = m.complete;
    r.data["basis"] = basis_json(m.basis, sys);
}

void width(Report& r, const RunConfig& cfg, const std::string& gs, const std::string& hs, int cap) {
    ToricSystem sys = build_system(load_graph(gs), load_graph(hs));
    WidthResult w = markov_width(sys, cap, cfg.fibers());
    r.text << w.width << '\n';
    r.data["width"] = w.width;
    r.data["cap"] = w.cap;
    r.data["exact"] = w.exact;
    r.data["stable"] = w.stable;
}

void verify(Report& r, const RunConfig& cfg, const std::string& gs, const std::string& hs, const std::string& file,
            int cap) {
    ToricSystem sys = build_system(load_graph(gs), load_graph(hs));
    OrientedBasis b = load_basis(file, sys);
    BasisCheck c = verify_grobner(sys, b, cap, cfg.fibers());
    if (c.ok)
        r.text << "ok: " << c.fibers_checked << " fibers up to degree " << cap << '\n';
    else
        r.text << "not a Groebner basis: degree " << c.degree << ", fiber " << c.fiber << ": " << c.reason << '\n';
    r.data["ok"] = c.ok;
    r.data["cap"] = cap;
    r.data["fibers_checked"] = c.fibers_checked;
    if (!c.ok) r.data["failure"] = {{"degree", c.degree}, {"fiber", c.fiber}, {"reason", c.reason}};
    r.code = c.ok ? success : negative;
}

void indep(Report& r, const std::string& gs) {
    ToricSystem sys = build_system(load_graph(gs), spoon());
    IndepBasis b = independence_grobner(sys);
    std::vector<std::string> tags;
    Json list = Json::array();
    for (std::size_t i = 0; i < b.basis.size(); ++i) {
        tags.emplace_back(to_string(b.kinds[i]));
        const Binomial& x = b.basis.elements[i];
        list.push_back({{"binomial", format_monomial(x.plus(), sys, true) + " - " + format_monomial(x.minus(), sys, true)},
                        {"kind", tags.back()}});
    }
    write_basis(r.text, b.basis, sys, {.maps = true, .tags = tags});
    r.data["basis"] = list;
}

struct GlueArgs {
    std::string g1, g2, h, basis1, basis2;
    int offset = 0;
    bool profile = false;
    int cap = 0;
};

void glue(Report& r, const RunConfig& cfg, const GlueArgs& a) {
    GlueContext ctx(glue_spec(load_graph(a.g1), load_graph(a.g2), a.offset), load_graph(a.h));
    OrientedBasis b1 = load_basis(a.basis1, ctx.side(1));
    OrientedBasis b2 = load_basis(a.basis2, ctx.side(2));
    r.data["codim_zero"] = ctx.codim_zero();
    if (a.profile) {
        DegreeProfile p = glue_profile(ctx, b1, b2);
        Json counts = Json::object();
        for (auto [d, c] : p.counts) {
            r.text << "degree " << d << ": " << c << '\n';
            counts[std::to_string(d)] = c;
        }
        r.text << "total: " << p.total << '\n';
        r.data["profile"] = counts;
        r.data["total"] = p.total;
        return;
    }
    OrientedBasis out = glue_basis(ctx, b1, b2);
    write_basis(r.text, out, ctx.whole(), {.maps = true, .tags = {}});
    r.data["basis"] = basis_json(out, ctx.whole());
    if (a.cap > 0) {
        BasisCheck c = verify_markov(ctx.whole(), out, a.cap, cfg.fibers());
        r.text << "# Markov check up to degree " << a.cap << ": " << (c.ok ? "ok" : c.reason) << '\n';
        r.data["markov_ok"] = c.ok;
        r.code = c.ok ? success : negative;
    }
}

void polytope(Report& r, const RunConfig& cfg, const std::string& gs, const std::string& hs, bool with_facets) {
    ToricSystem sys = build_system(load_graph(gs), load_graph(hs));
    Polytope p = build_polytope(sys);
    r.text << p.vertex_count() << " vertices in R^" << p.ambient_dim() << ", dimension " << p.dim << '\n';
    Json verts = Json::array();
    for (const VertexMap& phi : sys.homs()) {
        r.text << "  " << map_literal(phi) << '\n';
        verts.push_back(map_json(phi));
    }
    r.data["vertices"] = verts;
    r.data["ambient_dim"] = p.ambient_dim();
    r.data["dim"] = p.dim;
    if (!with_facets) return;
    FacetOptions fo;
    fo.threads = cfg.threads;
    FacetDescription f = facets(p, fo);
    Simplicity s = simplicity(p, f);
    r.text << f.facets.size() << " facets (normal . x <= offset; tight vertices):\n";
    Json fj = Json::array();
    for (const Facet& x : f.facets) {
        std::vector<std::int64_t> nv(x.normal.begin(), x.normal.end());
        r.text << "  [";
        for (std::size_t i = 0; i < nv.size(); ++i) r.text << (i ? "," : "") << nv[i];
        r.text << "] <= " << x.offset << ";";
        for (std::size_t v : x.vertices) r.text << ' ' << v;
        r.text << '\n';
        fj.push_back({{"normal", nv}, {"offset", x.offset}, {"vertices", x.vertices}});
    }
    r.text << "facets per vertex:";
    for (int c : s.counts) r.text << ' ' << c;
    r.text << (s.simple ? "\nsimple\n" : "\nnot simple\n");
    r.data["facets"] = fj;
    r.data["facets_per_vertex"] = s.counts;
    r.data["simple"] = s.simple;
}

void hibi(Report& r, const RunConfig& cfg, const std::string& file, int cap) {
    Poset p = load_poset(file);
    XiCheck x = xi_bijection(p);
    HibiComparison h = hibi_vs_topgraded(p, cap, cfg.fibers());
    r.text << p.size() << " elements, " << h.ideals.size() << " lower ideals\n";
    r.text << "xi onto maximal independent sets of B_P: " << (x.bijective ? "bijective" : "NOT bijective")
           << ", alpha = " << x.alpha << '\n';
    r.text << h.hibi.size() << " Hibi relations; top-degree generators " << (h.generators_match ? "match" : "DIFFER")
           << "; relations generate up to degree " << cap << ": " << (h.hibi_generates ? "yes" : "no") << '\n';
    for (std::size_t i = 0; i < h.hibi.size(); ++i) r.text << "  " << app::show(h.hibi.elements[i], h.top.system) << '\n';
    Json ideals = Json::array();
    for (VertexSet l : h.ideals) ideals.push_back(l.members());
    r.data["ideals"] = ideals;
    r.data["xi_bijective"] = x.bijective;
    r.data["alpha"] = x.alpha;
    r.data["relations"] = h.hibi.size();
    r.data["generators_match"] = h.generators_match;
    r.data["relations_generate"] = h.hibi_generates;
    r.data["ok"] = h.ok() && x.bijective;
    r.code = h.ok() && x.bijective ? success : negative;
}

void chromatic(Report& r, const std::string& gs, const std::string& relation_file, int cap) {
    ToricSystem sys = build_system(complete_graph(3), load_graph(gs));
    std::vector<Edge> relation;
    if (!relation_file.empty()) relation = load_pairs(relation_file);
    auto b = find_low_degree_binomial(sys, cap);
    if (!b) {
        r.text << "no binomial of degree <= " << cap << " in I(K3 -> G)\n";
        r.data["found"] = false;
        r.code = negative;
        return;
    }
    ObstructionCertificate c = analyze_certificate(sys, *b, relation);
    write_certificate(r.text, c);
    r.data["found"] = true;
    r.data["binomial"] = app::show(*b, sys);
    r.data["degree"] = b->degree();
    r.data["permutations"] = c.rows.size();
    r.data["unmarked"] = c.unmarked;
    r.data["verdict"] = to_string(c.verdict);
    r.code = c.verdict == Verdict::inconclusive ? negative : success;
}

int reproduce(const RunConfig& cfg, const std::string& name, bool all, bool list) {
    if (list) {
        for (const app::Scenario& s : app::scenarios()) std::cout << s.name << '\t' << s.title << '\n';
        return success;
    }
    std::vector<const app::Scenario*> chosen;
    if (all) {
        for (const app::Scenario& s : app::scenarios()) chosen.push_back(&s);
    } else if (const app::Scenario* s = app::find_scenario(name)) {
        chosen.push_back(s);
    } else {
        std::cerr << "error: unknown scenario '" << name << "' (try --list)\n";
        return usage;
    }
    bool pass = true;
    for (const app::Scenario* s : chosen) {
        app::Outcome o = s->run(cfg);
        std::cout << app::render(*s, o, cfg) << std::flush;
        pass = pass && o.pass;
    }
    return pass ? success : negative;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App cli{"Toric ideals of graph homomorphisms"};
    cli.require_subcommand(1);
    RunConfig cfg;
    cli.add_option("--threads", cfg.threads, "worker threads")->check(CLI::PositiveNumber);
    cli.add_option("--seed", cfg.seed, "seed for randomized suites");
    cli.add_option("--max-monomials", cfg.max_monomials, "largest degree layer held in memory")
        ->check(CLI::PositiveNumber);
    cli.add_flag("--json", cfg.json, "JSON report");

    std::string g, h, file, name;
    int cap = 3;
    bool flag = false;
    GlueArgs glue_args;

    auto* c_homs = cli.add_subcommand("homs", "list Hom(G, H)");
    c_homs->add_option("G", g)->required();
    c_homs->add_option("H", h)->required();

    auto* c_markov = cli.add_subcommand("markov", "minimal generators up to a degree");
    c_markov->add_option("G", g)->required();
    c_markov->add_option("H", h)->required();
    c_markov->add_option("--cap", cap, "largest degree")->check(CLI::PositiveNumber);

    auto* c_width = cli.add_subcommand("width", "Markov width up to a degree");
    c_width->add_option("G", g)->required();
    c_width->add_option("H", h)->required();
    c_width->add_option("--cap", cap, "largest degree")->check(CLI::PositiveNumber);

    auto* c_verify = cli.add_subcommand("verify-grobner", "check a basis file with the fiber-graph criterion");
    c_verify->add_option("G", g)->required();
    c_verify->add_option("H", h)->required();
    c_verify->add_option("--basis", file, "basis file")->required()->check(CLI::ExistingFile);
    c_verify->add_option("--cap", cap, "largest degree")->check(CLI::PositiveNumber);

    auto* c_indep = cli.add_subcommand("indep-grobner", "Groebner basis of I(G -> spoon), tagged");
    c_indep->add_option("G", g)->required();

    auto* c_glue = cli.add_subcommand("glue", "glue two bases over the shared labels");
    c_glue->add_option("G1", glue_args.g1)->required();
    c_glue->add_option("G2", glue_args.g2)->required();
    c_glue->add_option("H", glue_args.h)->required();
    c_glue->add_option("--basis1", glue_args.basis1)->required()->check(CLI::ExistingFile);
    c_glue->add_option("--basis2", glue_args.basis2)->required()->check(CLI::ExistingFile);
    c_glue->add_option("--offset", glue_args.offset, "label of G2's vertex 0")->check(CLI::NonNegativeNumber);
    c_glue->add_flag("--profile", glue_args.profile, "count generators per degree only");
    c_glue->add_option("--cap", glue_args.cap, "verify the result as a Markov basis up to this degree");

    auto* c_poly = cli.add_subcommand("polytope", "vertices and facets of P(G -> H)");
    c_poly->add_option("G", g)->required();
    c_poly->add_option("H", h)->required();
    c_poly->add_flag("--facets", flag, "enumerate facets");

    auto* c_hibi = cli.add_subcommand("hibi", "Hibi relations of a poset against the top-graded ideal");
    c_hibi->add_option("poset", file)->required()->check(CLI::ExistingFile);
    c_hibi->add_option("--cap", cap, "degree for the generation check")->check(CLI::PositiveNumber);

    std::string relation;
    int cert_cap = 6;
    auto* c_chrom = cli.add_subcommand("chromatic-cert", "4-colouring obstruction from a low-degree binomial");
    c_chrom->add_option("G", g)->required();
    c_chrom->add_option("--relation", relation, "pairs file")->check(CLI::ExistingFile);
    c_chrom->add_option("--cap", cert_cap, "largest degree searched")->check(CLI::PositiveNumber);

    bool all = false, list = false;
    auto* c_repro = cli.add_subcommand("reproduce", "run a named example");
    c_repro->add_option("name", name);
    c_repro->add_flag("--all", all, "every example");
    c_repro->add_flag("--list", list, "list the examples");

    try {
        cli.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = cli.exit(e);
        return code == 0 ? success : usage;
    }

    try {
        if (c_repro->parsed()) {
            if (!all && !list && name.empty()) {
                std::cerr << "error: reproduce needs a name, --all or --list\n";
                return usage;
            }
            return reproduce(cfg, name, all, list);
        }
        Report r;
        std::string command;
        for (auto* sub : cli.get_subcommands()) command = sub->get_name();
        if (c_homs->parsed()) homs(r, g, h);
        if (c_markov->parsed()) markov(r, cfg, g, h, cap);
        if (c_width->parsed()) width(r, cfg, g, h, cap);
        if (c_verify->parsed()) verify(r, cfg, g, h, file, c_verify->count("--cap") ? cap : 4);
        if (c_indep->parsed()) indep(r, g);
        if (c_glue->parsed()) glue(r, cfg, glue_args);
        if (c_poly->parsed()) polytope(r, cfg, g, h, flag);
        if (c_hibi->parsed()) hibi(r, cfg, file, cap);
        if (c_chrom->parsed()) chromatic(r, g, relation, cert_cap);
        if (cfg.json) {
            Json doc{{"schema", 1}, {"seed", cfg.seed}, {"command", command}, {"report", r.data}};
            std::cout << doc.dump(2) << '\n';
        } else {
            std::cout << r.text.str();
        }
        return r.code;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    } catch (const ResourceLimit& e) {
        std::cerr << "resource limit: " << e.what() << '\n';
        return resource;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return internal;
    }
}
