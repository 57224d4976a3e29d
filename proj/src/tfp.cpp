#include "homtoric/tfp.hpp"

#include "homtoric/error.hpp"
#include "homtoric/homset.hpp"
#include "homtoric/linalg.hpp"

#include <limits>
#include <set>
#include <type_traits>

namespace homtoric {

namespace {

constexpr Variable kMissing = std::numeric_limits<Variable>::max();

std::vector<Vertex> positions_in(const std::vector<Vertex>& labels, const std::vector<Vertex>& subset) {
    std::vector<Vertex> out;
    for (Vertex v : subset)
        out.push_back(static_cast<Vertex>(std::find(labels.begin(), labels.end(), v) - labels.begin()));
    return out;
}

}  // namespace

GlueSpec glue_spec(const Graph& whole, VertexSet side1, VertexSet side2) {
    if ((side1 | side2) != whole.vertices()) throw PreconditionError("glue sides must cover the graph");
    VertexSet only1 = side1 - side2, only2 = side2 - side1;
    for (Edge e : whole.edges())
        if ((only1.contains(e.u) && only2.contains(e.v)) || (only2.contains(e.u) && only1.contains(e.v)))
            throw PreconditionError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                                    " joins the two private parts");
    return {whole, side1, side2};
}

GlueSpec glue_spec(const Graph& g1, const Graph& g2, int offset) {
    if (offset < 0) throw PreconditionError("glue offset must be non-negative");
    int n = std::max(g1.order(), g2.order() + offset);
    VertexSet side1 = VertexSet::range(g1.order());
    VertexSet side2 = VertexSet::range(n) - VertexSet::range(offset);
    std::vector<Edge> es(g1.edges().begin(), g1.edges().end());
    for (Edge e : g2.edges()) {
        Edge moved{e.u + offset, e.v + offset};
        bool shared = side1.contains(moved.u) && side1.contains(moved.v);
        if (shared) {
            if (!g1.adjacent(moved.u, moved.v))
                throw PreconditionError("edge " + std::to_string(moved.u) + "-" + std::to_string(moved.v) +
                                        " of the second graph is missing from the first");
            continue;
        }
        es.push_back(moved);
    }
    for (Edge e : g1.edges())
        if (side2.contains(e.u) && side2.contains(e.v) && !g2.adjacent(e.u - offset, e.v - offset))
            throw PreconditionError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                                    " of the first graph is missing from the second");
    return glue_spec(Graph(n, es), side1, side2);
}

GlueContext::GlueContext(GlueSpec spec, const Graph& target, const EnumerateOptions& options)
    : spec_(std::move(spec)) {
    InducedSubgraph g1 = induced_subgraph(spec_.whole, spec_.side1);
    InducedSubgraph g2 = induced_subgraph(spec_.whole, spec_.side2);
    InducedSubgraph gm = induced_subgraph(spec_.whole, spec_.side1 & spec_.side2);
    whole_ = build_system(spec_.whole, target, options);
    side1_ = build_system(g1.graph, target, options);
    side2_ = build_system(g2.graph, target, options);
    meet_ = build_system(gm.graph, target, options);
    codim_zero_ = check_codim_zero(spec_, target);

    const std::vector<Vertex> pos1 = positions_in(g1.vertices, gm.vertices);
    const std::vector<Vertex> pos2 = positions_in(g2.vertices, gm.vertices);
    classes_.resize(meet_.variable_count());
    auto classify = [&](const ToricSystem& sys, const std::vector<Vertex>& pos, std::vector<std::uint32_t>& cls,
                        std::vector<std::uint32_t>& rank, bool first) {
        cls.resize(sys.variable_count());
        rank.resize(sys.variable_count());
        for (Variable x = 0; x < sys.variable_count(); ++x) {
            auto c = meet_.homs().index_of(restrict_map(sys.homs()[x], pos));
            if (!c) throw InternalError("restriction to the intersection is not a homomorphism");
            cls[x] = static_cast<std::uint32_t>(*c);
            auto& list = first ? classes_[*c].u : classes_[*c].w;
            rank[x] = static_cast<std::uint32_t>(list.size());
            list.push_back(x);
        }
    };
    classify(side1_, pos1, class1_, rank1_, true);
    classify(side2_, pos2, class2_, rank2_, false);
    for (Class& c : classes_) c.table.assign(c.u.size() * c.w.size(), kMissing);

    for (Variable x = 0; x < whole_.variable_count(); ++x) {
        const VertexMap& phi = whole_.homs()[x];
        auto u = side1_.homs().index_of(restrict_map(phi, g1.vertices));
        auto w = side2_.homs().index_of(restrict_map(phi, g2.vertices));
        if (!u || !w || class1_[*u] != class2_[*w]) throw InternalError("union map does not split");
        Class& c = classes_[class1_[*u]];
        c.table[rank1_[*u] * c.w.size() + rank2_[*w]] = x;
    }
    for (const Class& c : classes_)
        if (std::find(c.table.begin(), c.table.end(), kMissing) != c.table.end())
            throw InternalError("compatible side maps without a union map");
}

std::optional<Variable> GlueContext::join(Variable u, Variable w) const {
    if (u >= class1_.size() || w >= class2_.size() || class1_[u] != class2_[w]) return std::nullopt;
    const Class& c = classes_[class1_[u]];
    return c.table[rank1_[u] * c.w.size() + rank2_[w]];
}

void GlueContext::visit_lift(int side, const OrientedBasis& basis, const GlueVisitor& visit) const {
    if (side != 1 && side != 2) throw PreconditionError("side must be 1 or 2");
    const ToricSystem& own = this->side(side);
    const auto& cls = side == 1 ? class1_ : class2_;
    const auto& rank = side == 1 ? rank1_ : rank2_;
    for (const Binomial& b : basis.elements) {
        std::vector<Variable> p(b.plus().factors().begin(), b.plus().factors().end());
        std::vector<Variable> m(b.minus().factors().begin(), b.minus().factors().end());
        for (Variable x : p)
            if (x >= own.variable_count()) throw PreconditionError("basis variable out of range");
        for (Variable x : m)
            if (x >= own.variable_count()) throw PreconditionError("basis variable out of range");
        if (p.size() != m.size()) throw PreconditionError("lifting needs homogeneous binomials");
        std::map<std::uint32_t, int> balance;
        for (Variable x : p) ++balance[cls[x]];
        for (Variable x : m) --balance[cls[x]];
        for (auto [c, k] : balance)
            if (k != 0) throw PreconditionError("binomial " + to_string(b) + " is not balanced on the intersection");

        const std::size_t d = p.size();
        std::vector<Variable> plus(d), minus(d);
        std::vector<bool> used(d, false);
        auto unite = [&](Variable x, std::size_t ext, const Class& c) {
            return side == 1 ? c.table[rank[x] * c.w.size() + ext] : c.table[ext * c.w.size() + rank[x]];
        };
        std::function<void(std::size_t)> rec = [&](std::size_t i) {
            if (i == d) {
                visit(plus, minus);
                return;
            }
            const Class& c = classes_[cls[p[i]]];
            const std::size_t extensions = side == 1 ? c.w.size() : c.u.size();
            for (std::size_t j = 0; j < d; ++j) {
                if (used[j] || cls[m[j]] != cls[p[i]]) continue;
                bool repeat = false;
                for (std::size_t k = 0; k < j && !repeat; ++k) repeat = !used[k] && m[k] == m[j];
                if (repeat) continue;
                used[j] = true;
                for (std::size_t e = 0; e < extensions; ++e) {
                    plus[i] = unite(p[i], e, c);
                    minus[i] = unite(m[j], e, c);
                    rec(i + 1);
                }
                used[j] = false;
            }
        };
        rec(0);
    }
}

void GlueContext::visit_quad(const GlueVisitor& visit) const {
    Variable lead[2], trail[2];
    for (const Class& c : classes_) {
        const std::size_t nw = c.w.size();
        for (std::size_t u1 = 0; u1 < c.u.size(); ++u1)
            for (std::size_t u2 = u1 + 1; u2 < c.u.size(); ++u2)
                for (std::size_t w1 = 0; w1 < nw; ++w1)
                    for (std::size_t w2 = w1 + 1; w2 < nw; ++w2) {
                        lead[0] = c.table[u1 * nw + w1];
                        lead[1] = c.table[u2 * nw + w2];
                        trail[0] = c.table[u1 * nw + w2];
                        trail[1] = c.table[u2 * nw + w1];
                        visit(lead, trail);
                    }
    }
}

bool check_codim_zero(const GlueSpec& spec, const Graph& target) {
    InducedSubgraph gm = induced_subgraph(spec.whole, spec.side1 & spec.side2);
    ToricSystem meet = build_system(gm.graph, target);
    const IntMatrix& a = meet.matrix();
    IntMatrix stacked(a.rows() + 1, a.cols());
    stacked.row(0).setOnes();
    stacked.bottomRows(a.rows()) = a;
    return static_cast<std::size_t>(exact_rank(stacked)) == meet.variable_count();
}

OrientedBasis glue_basis(const GlueContext& ctx, const OrientedBasis& b1, const OrientedBasis& b2,
                         const GlueOptions& options) {
    if (!ctx.codim_zero()) throw PreconditionError("gluing needs independent intersection columns");
    OrientedBasis out;
    std::set<Binomial> seen;
    GlueVisitor keep = [&](std::span<const Variable> plus, std::span<const Variable> minus) {
        Binomial b{ExponentVector(std::vector<Variable>(plus.begin(), plus.end())),
                   ExponentVector(std::vector<Variable>(minus.begin(), minus.end()))};
        if (b.is_zero() || !seen.insert(b.canonical()).second) return;
        if (out.size() >= options.max_elements)
            throw ResourceLimit("glued basis exceeds " + std::to_string(options.max_elements) + " elements");
        out.elements.push_back(std::move(b));
    };
    ctx.visit_lift(1, b1, keep);
    ctx.visit_lift(2, b2, keep);
    ctx.visit_quad(keep);
    return out;
}

DegreeProfile glue_profile(const GlueContext& ctx, const OrientedBasis& b1, const OrientedBasis& b2) {
    if (!ctx.codim_zero()) throw PreconditionError("gluing needs independent intersection columns");
    DegreeProfile out;
    GlueVisitor count = [&](std::span<const Variable> plus, std::span<const Variable>) {
        ++out.counts[static_cast<int>(plus.size())];
        ++out.total;
    };
    ctx.visit_lift(1, b1, count);
    ctx.visit_lift(2, b2, count);
    ctx.visit_quad(count);
    return out;
}

namespace {

PipelineResult forest_step(const Graph& g, const Graph& target, const GlueOptions& options) {
    auto components = connected_components(g);
    VertexSet side1, side2;
    if (components.size() > 1) {
        side1 = components.front();
        side2 = g.vertices() - side1;
    } else if (g.edge_count() <= 1) {
        return {build_system(g, target, options.enumerate), {}, 0, true};
    } else {
        Vertex leaf = 0;
        while (g.neighbors(leaf).size() != 1) ++leaf;
        side1 = g.vertices() - VertexSet::of({leaf});
        side2 = VertexSet::of({leaf, g.neighbors(leaf).front()});
    }
    GlueContext ctx(glue_spec(g, side1, side2), target, options.enumerate);
    PipelineResult r1 = forest_step(induced_subgraph(g, side1).graph, target, options);
    PipelineResult r2 = forest_step(induced_subgraph(g, side2).graph, target, options);
    OrientedBasis basis = glue_basis(ctx, r1.basis, r2.basis, options);
    return {ctx.whole(), std::move(basis), r1.steps + r2.steps + 1, true};
}

struct Ear {
    Vertex tip, a, b;
};

std::optional<Ear> lowest_ear(const Graph& g) {
    for (Vertex v = 0; v < g.order(); ++v) {
        VertexSet n = g.neighbors(v);
        if (n.size() != 2) continue;
        auto ab = n.members();
        if (g.adjacent(ab[0], ab[1])) return Ear{v, ab[0], ab[1]};
    }
    return std::nullopt;
}

OrientedBasis k3_basis_for(const Graph& target, const OuterplanarOptions& options) {
    ToricSystem k3 = build_system(complete_graph(3), target, options.glue.enumerate);
    if (!options.k3_basis) return markov_basis(k3, options.k3_cap).basis;
    for (const Binomial& b : options.k3_basis->elements)
        if (!k3.membership(b)) throw PreconditionError("supplied triangle basis element " + to_string(b) +
                                                       " is not in the triangle ideal");
    return *options.k3_basis;
}

/// Splits off the lowest ear, builds the rest fully, and hands the last gluing to `last`.
template <typename Last>
std::invoke_result_t<Last, const GlueContext&, const PipelineResult&> last_gluing(const Graph& g, const Graph& target, const OrientedBasis& k3, const OuterplanarOptions& options,
                 Last&& last);

PipelineResult outerplanar_full(const Graph& g, const Graph& target, const OrientedBasis& k3,
                                const OuterplanarOptions& options) {
    if (g.order() == 3) return {build_system(g, target, options.glue.enumerate), k3, 0, options.k3_normal};
    return last_gluing(g, target, k3, options, [&](const GlueContext& c, const PipelineResult& sub) {
        return PipelineResult{c.whole(), glue_basis(c, sub.basis, k3, options.glue), sub.steps + 1,
                              options.k3_normal};
    });
}

template <typename Last>
std::invoke_result_t<Last, const GlueContext&, const PipelineResult&> last_gluing(const Graph& g, const Graph& target, const OrientedBasis& k3, const OuterplanarOptions& options,
                 Last&& last) {
    Ear ear = *lowest_ear(g);
    VertexSet side1 = g.vertices() - VertexSet::of({ear.tip});
    VertexSet side2 = VertexSet::of({ear.tip, ear.a, ear.b});
    GlueContext ctx(glue_spec(g, side1, side2), target, options.glue.enumerate);
    PipelineResult rest = outerplanar_full(induced_subgraph(g, side1).graph, target, k3, options);
    return last(ctx, rest);
}

}  // namespace

PipelineResult forest_pipeline(const Graph& g, const Graph& target, const GlueOptions& options) {
    if (!is_forest(g)) throw PreconditionError("forest pipeline needs a loop-free acyclic graph");
    return forest_step(g, target, options);
}

bool is_maximal_outerplanar(const Graph& g) {
    const int n = g.order();
    if (n < 3 || !g.loop_free() || g.edge_count() != 2 * n - 3) return false;
    for (Edge e : g.edges())
        if ((g.neighbors(e.u) & g.neighbors(e.v)).size() > 2) return false;
    VertexSet alive = g.vertices();
    while (alive.size() > 3) {
        bool removed = false;
        for (Vertex v : alive.members()) {
            auto n2 = (g.neighbors(v) & alive).members();
            if (n2.size() == 2 && g.adjacent(n2[0], n2[1])) {
                alive.erase(v);
                removed = true;
                break;
            }
        }
        if (!removed) return false;
    }
    return is_complete(induced_subgraph(g, alive).graph);
}

PipelineResult outerplanar_pipeline(const Graph& g, const Graph& target, const OuterplanarOptions& options) {
    if (!is_maximal_outerplanar(g)) throw PreconditionError("outerplanar pipeline needs a maximal outerplanar graph");
    OrientedBasis k3 = k3_basis_for(target, options);
    return outerplanar_full(g, target, k3, options);
}

DegreeProfile outerplanar_profile(const Graph& g, const Graph& target, const OuterplanarOptions& options) {
    if (!is_maximal_outerplanar(g)) throw PreconditionError("outerplanar pipeline needs a maximal outerplanar graph");
    OrientedBasis k3 = k3_basis_for(target, options);
    if (g.order() == 3) {
        DegreeProfile p;
        for (const Binomial& b : k3.elements) ++p.counts[b.degree()], ++p.total;
        return p;
    }
    return last_gluing(g, target, k3, options, [&](const GlueContext& c, const PipelineResult& sub) {
        return glue_profile(c, sub.basis, k3);
    });
}

}  // namespace homtoric
