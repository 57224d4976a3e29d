#include "homtoric/indep.hpp"

#include "homtoric/error.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace homtoric {

namespace {

IndependenceEncoding encoding_of(const ToricSystem& sys) {
    if (!spoon_unlooped_vertex(sys.target()))
        throw PreconditionError("independence operations need a spoon target");
    return indep_encode(sys.homs());
}

/// (S & part1, S & part2) with the apex (if any) removed.
struct Split {
    VertexSet a;
    VertexSet b;
    bool covered = false;
};

bool comparable(const Split& x, const Split& y) {
    return (x.a.subset_of(y.a) && y.b.subset_of(x.b)) || (y.a.subset_of(x.a) && x.b.subset_of(y.b));
}

Variable lookup(const IndependenceEncoding& enc, VertexSet s) {
    auto i = enc.index_of(s);
    if (!i) throw InternalError("expected independent set " + to_string(s, false) + " is missing");
    return static_cast<Variable>(*i);
}

class BasisBuilder {
public:
    void add(Variable x, Variable y, Variable x2, Variable y2, MoveKind kind) {
        Binomial b(ExponentVector{x, y}, ExponentVector{x2, y2});
        if (b.is_zero()) return;
        if (!seen_.insert(b.canonical()).second) return;
        out_.basis.elements.push_back(std::move(b));
        out_.kinds.push_back(kind);
    }
    IndepBasis take() { return std::move(out_); }

private:
    IndepBasis out_;
    std::set<Binomial> seen_;
};

void meet_join_moves(const IndependenceEncoding& enc, const std::vector<Split>& splits,
                     const std::vector<Variable>& vars, VertexSet extra, MoveKind kind, BasisBuilder& out) {
    for (std::size_t i = 0; i < vars.size(); ++i)
        for (std::size_t j = i + 1; j < vars.size(); ++j) {
            const Split& x = splits[vars[i]];
            const Split& y = splits[vars[j]];
            if (comparable(x, y)) continue;
            Variable meet = lookup(enc, (x.a & y.a) | (x.b | y.b) | extra);
            Variable join = lookup(enc, (x.a | y.a) | (x.b & y.b) | extra);
            out.add(vars[i], vars[j], meet, join, kind);
        }
}

std::vector<Split> splits_of(const IndependenceEncoding& enc, const Bipartition& parts,
                             std::optional<Vertex> apex) {
    std::vector<Split> out;
    out.reserve(enc.sets.size());
    for (VertexSet s : enc.sets) {
        Split sp{s & parts.part1, s & parts.part2, false};
        if (apex) sp.covered = s.contains(*apex);
        out.push_back(sp);
    }
    return out;
}

void check_split(const Graph& g, const AlmostBipartiteSplit& split) {
    VertexSet apex = VertexSet::of({split.apex});
    const Bipartition& p = split.parts;
    if (split.apex < 0 || split.apex >= g.order() || p.part1.intersects(p.part2) ||
        (p.part1 | p.part2 | apex) != g.vertices() || (p.part1 | p.part2).contains(split.apex))
        throw PreconditionError("invalid almost-bipartite split");
    for (Edge e : g.edges()) {
        if (e.u == split.apex || e.v == split.apex) {
            if (e.u == e.v) throw PreconditionError("apex carries a loop");
            continue;
        }
        bool u1 = p.part1.contains(e.u), v1 = p.part1.contains(e.v);
        if (u1 == v1) throw PreconditionError("invalid almost-bipartite split: edge inside a part");
    }
}

}  // namespace

MultiDegree multidegree(const ToricSystem& sys, const ExponentVector& m) {
    auto unlooped = spoon_unlooped_vertex(sys.target());
    if (!unlooped) throw PreconditionError("multidegree needs a spoon target");
    MultiDegree d;
    d.counts.assign(static_cast<std::size_t>(sys.source().order()), 0);
    d.degree = m.degree();
    for (Variable x : m.factors()) {
        if (x >= sys.variable_count()) throw PreconditionError("variable out of range");
        const VertexMap& phi = sys.homs()[x];
        for (std::size_t v = 0; v < phi.size(); ++v) d.counts[v] += phi[v] == *unlooped;
    }
    return d;
}

MultigradingCheck check_multigrading(const ToricSystem& sys, int max_degree) {
    if (!spoon_unlooped_vertex(sys.target())) throw PreconditionError("multigrading needs a spoon target");
    MultigradingCheck out;
    for (int t = 1; t <= max_degree; ++t) {
        if (monomial_count(sys.variable_count(), t) > 5'000'000)
            throw ResourceLimit("multigrading check exceeds 5000000 monomials");
        // image as the sorted multiset of rows hit
        std::map<std::vector<std::uint32_t>, std::size_t> by_image;
        std::map<MultiDegree, std::size_t> by_degree;
        std::vector<std::size_t> image_to_degree;
        std::vector<std::size_t> degree_to_image;
        std::vector<Variable> cur;
        std::function<void(Variable)> rec = [&](Variable from) {
            if (!out.ok) return;
            if (static_cast<int>(cur.size()) == t) {
                ExponentVector m(cur);
                std::vector<std::uint32_t> rows;
                for (Variable x : cur) {
                    auto col = sys.column(x);
                    rows.insert(rows.end(), col.begin(), col.end());
                }
                std::sort(rows.begin(), rows.end());
                auto [ii, new_image] = by_image.try_emplace(std::move(rows), by_image.size());
                auto [di, new_degree] = by_degree.try_emplace(multidegree(sys, m), by_degree.size());
                if (new_image) image_to_degree.push_back(di->second);
                if (new_degree) degree_to_image.push_back(ii->second);
                ++out.monomials;
                if (image_to_degree[ii->second] != di->second || degree_to_image[di->second] != ii->second) {
                    out.ok = false;
                    out.failure = "degree " + std::to_string(t) + ": monomial " + to_string(m) +
                                  (new_image ? " shares a multidegree but not an image"
                                             : " shares an image but not a multidegree");
                }
                return;
            }
            for (Variable v = from; v < sys.variable_count(); ++v) {
                cur.push_back(v);
                rec(v);
                cur.pop_back();
            }
        };
        rec(0);
        out.classes += by_image.size();
        if (!out.ok) return out;
    }
    return out;
}

std::string_view to_string(MoveKind kind) {
    switch (kind) {
        case MoveKind::bipartite: return "bipartite";
        case MoveKind::uncovered: return "uncovered";
        case MoveKind::covered: return "covered";
        case MoveKind::mixed: return "mixed";
    }
    return "?";
}

IndepBasis bipartite_grobner(const ToricSystem& sys) {
    IndependenceEncoding enc = encoding_of(sys);
    const Graph& g = sys.source();
    auto parts = g.loop_free() ? is_bipartite(g) : std::nullopt;
    if (!parts) throw PreconditionError("bipartite construction needs a loop-free bipartite graph");
    std::vector<Split> splits = splits_of(enc, *parts, std::nullopt);
    std::vector<Variable> all(enc.sets.size());
    for (Variable i = 0; i < all.size(); ++i) all[i] = i;
    BasisBuilder out;
    meet_join_moves(enc, splits, all, VertexSet{}, MoveKind::bipartite, out);
    return out.take();
}

IndepBasis almost_bipartite_grobner(const ToricSystem& sys, const AlmostBipartiteSplit& split) {
    IndependenceEncoding enc = encoding_of(sys);
    const Graph& g = sys.source();
    check_split(g, split);
    const VertexSet apex = VertexSet::of({split.apex});
    std::vector<Split> splits = splits_of(enc, split.parts, split.apex);
    std::vector<Variable> open, covered;
    for (Variable i = 0; i < splits.size(); ++i) (splits[i].covered ? covered : open).push_back(i);

    BasisBuilder out;
    meet_join_moves(enc, splits, open, VertexSet{}, MoveKind::uncovered, out);
    meet_join_moves(enc, splits, covered, apex, MoveKind::covered, out);

    for (Variable x : open)
        for (Variable y : covered) {
            const Split& o = splits[x];
            const Split& c = splits[y];
            const VertexSet free = o.a - c.a;
            if (free.size() > 20) throw ResourceLimit("mixed move enumeration over more than 2^20 subsets");
            const std::vector<Vertex> pool = free.members();
            for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << pool.size()); ++mask) {
                VertexSet e;
                for (std::size_t i = 0; i < pool.size(); ++i)
                    if ((mask >> i) & 1U) e.insert(pool[i]);
                VertexSet moved = g.neighbors(e) & c.b;
                auto x2 = enc.index_of((o.a - e) | o.b | moved);
                auto y2 = enc.index_of(c.a | e | (c.b - moved) | apex);
                if (x2 && y2)
                    out.add(x, y, static_cast<Variable>(*x2), static_cast<Variable>(*y2), MoveKind::mixed);
            }
            for (Vertex u : (c.b - o.b).members()) {
                auto x2 = enc.index_of(o.a | o.b | VertexSet::of({u}));
                if (!x2) continue;
                VertexSet rest = c.b;
                rest.erase(u);
                Variable y2 = lookup(enc, c.a | rest | apex);
                out.add(x, y, static_cast<Variable>(*x2), y2, MoveKind::mixed);
            }
        }
    return out.take();
}

IndepBasis almost_bipartite_grobner(const ToricSystem& sys) {
    auto split = is_almost_bipartite(sys.source());
    if (!split) throw PreconditionError("source graph is not almost bipartite");
    return almost_bipartite_grobner(sys, *split);
}

IndepBasis independence_grobner(const ToricSystem& sys) {
    const Graph& g = sys.source();
    if (g.loop_free() && is_bipartite(g)) return bipartite_grobner(sys);
    return almost_bipartite_grobner(sys);
}

ExponentVector normal_form(const ToricSystem& sys, const IndepBasis& basis, const ExponentVector& m,
                           std::size_t step_cap) {
    for (Variable x : m.factors())
        if (x >= sys.variable_count()) throw PreconditionError("variable out of range");
    const bool track = !basis.kinds.empty() &&
                       std::all_of(basis.kinds.begin(), basis.kinds.end(),
                                   [](MoveKind k) { return k == MoveKind::bipartite; });
    std::optional<IndependenceEncoding> enc;
    std::vector<Split> splits;
    if (track) {
        enc = encoding_of(sys);
        auto parts = is_bipartite(sys.source());
        if (!parts) throw PreconditionError("bipartite moves on a non-bipartite graph");
        splits = splits_of(*enc, *parts, std::nullopt);
    }
    auto omega = [&](const std::vector<Variable>& w) {
        long long k = static_cast<long long>(w.size()), total = 0;
        for (long long i = 1; i <= k; ++i) {
            const Split& s = splits[w[static_cast<std::size_t>(i - 1)]];
            total += (2 * i - k) * s.a.size() + (k - 2 * i) * s.b.size();
        }
        return total;
    };

    std::vector<Variable> w(m.factors().begin(), m.factors().end());
    ExponentVector cur = m;
    for (std::size_t step = 0;; ++step) {
        if (step > step_cap) throw InternalError("normal form did not terminate within the step cap");
        auto it = std::find_if(basis.basis.elements.begin(), basis.basis.elements.end(),
                               [&](const Binomial& b) { return b.plus().divides(cur); });
        if (it == basis.basis.elements.end()) return cur;
        cur = (cur / it->plus()) * it->minus();
        if (!track) continue;
        auto lead = it->plus().factors();
        if (lead.size() != 2) throw InternalError("bipartite move with a non-quadratic lead");
        auto s = std::find(w.begin(), w.end(), lead[0]) - w.begin();
        auto t = std::find_if(w.begin(), w.end(),
                              [&, pos = std::size_t{0}](Variable v) mutable {
                                  return pos++ != static_cast<std::size_t>(s) && v == lead[1];
                              }) - w.begin();
        if (s > t) std::swap(s, t);
        const Split& x = splits[w[static_cast<std::size_t>(s)]];
        const Split& y = splits[w[static_cast<std::size_t>(t)]];
        std::vector<Variable> next = w;
        next[static_cast<std::size_t>(s)] = lookup(*enc, (x.a & y.a) | x.b | y.b);
        next[static_cast<std::size_t>(t)] = lookup(*enc, x.a | y.a | (x.b & y.b));
        if (ExponentVector(next) != cur) throw InternalError("bipartite move does not match meet and join");
        if (omega(next) <= omega(w)) throw InternalError("chain weight did not increase");
        w = std::move(next);
    }
}

TopGraded top_graded(const ToricSystem& sys, int cap, const FiberOptions& options) {
    IndependenceEncoding enc = encoding_of(sys);
    TopGraded out;
    for (VertexSet s : enc.sets) out.alpha = std::max(out.alpha, s.size());
    for (Variable i = 0; i < enc.sets.size(); ++i)
        if (enc.sets[i].size() == out.alpha) out.parent.push_back(i);
    out.system = sys.subsystem(out.parent);
    out.markov = markov_basis(out.system, cap, options);
    return out;
}

ComplementCycle complement_cycle_basis(int k, const FiberOptions& options) {
    if (k < 2) throw PreconditionError("complement cycle family needs k >= 2");
    const int n = 2 * k;
    ComplementCycle out;
    out.system = build_system(complement(cycle_graph(n)), spoon());
    IndependenceEncoding enc = indep_encode(out.system.homs());
    std::vector<Variable> plus, minus;
    for (int i = 0; i < k; ++i) {
        plus.push_back(lookup(enc, VertexSet::of({2 * i, 2 * i + 1})));
        minus.push_back(lookup(enc, VertexSet::of({2 * i + 1, (2 * i + 2) % n})));
    }
    out.cycle = Binomial(ExponentVector(plus), ExponentVector(minus));
    out.basis.elements.push_back(out.cycle);
    MarkovResult quadrics = markov_basis(out.system, 2, options);
    for (const Binomial& b : quadrics.basis.elements)
        if (b.degree() == 2 && b.canonical() != out.cycle.canonical()) out.basis.elements.push_back(b);
    return out;
}

VertexSet gadget_lift(const Graph& g, const FourPartiteGadget& gadget, VertexSet independent) {
    if (!g.is_independent(independent)) throw PreconditionError("gadget lift needs an independent set");
    if (gadget.graph.order() != g.order() + 3 * g.edge_count())
        throw PreconditionError("gadget does not belong to this graph");
    VertexSet out = independent;
    int next = g.order();
    for (Edge e : g.edges()) {
        bool u = independent.contains(e.u), v = independent.contains(e.v);
        if (!u && !v) out.insert(next);
        if (u) out.insert(next + 2);
        if (v) out.insert(next + 1);
        next += 3;
    }
    return out;
}

}  // namespace homtoric
