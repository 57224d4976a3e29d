#pragma once

// Brute-force reference implementations used only by the tests.

#include "homtoric/graph.hpp"
#include "homtoric/homset.hpp"
#include "homtoric/linalg.hpp"
#include "homtoric/monomial.hpp"
#include "homtoric/toric.hpp"

#include <Eigen/Core>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using namespace homtoric;

/// Every map V(G) -> V(H), filtered by the edge condition.
inline std::vector<VertexMap> naive_homs(const Graph& g, const Graph& h) {
    std::vector<VertexMap> out;
    VertexMap m(static_cast<std::size_t>(g.order()), 0);
    if (h.order() == 0) return g.order() == 0 ? std::vector<VertexMap>{m} : out;
    for (;;) {
        bool ok = true;
        for (Edge e : g.edges())
            if (!h.adjacent(m[e.u], m[e.v])) ok = false;
        if (ok) out.push_back(m);
        std::size_t i = m.size();
        while (i > 0 && m[i - 1] == h.order() - 1) m[--i] = 0;
        if (i == 0) break;
        ++m[i - 1];
    }
    return out;  // odometer order is already lexicographic
}

inline bool naive_two_colourable(const Graph& g) {
    int n = g.order();
    for (std::uint64_t c = 0; c < (std::uint64_t{1} << n); ++c) {
        bool ok = true;
        for (Edge e : g.edges())
            if (((c >> e.u) & 1U) == ((c >> e.v) & 1U)) ok = false;
        if (ok) return true;
    }
    return false;
}

inline bool naive_colourable(const Graph& g, int colours) {
    VertexMap m(static_cast<std::size_t>(g.order()), 0);
    std::function<bool(int)> rec = [&](int v) {
        if (v == g.order()) return true;
        for (int c = 0; c < colours; ++c) {
            bool ok = !g.has_loop(v);
            for (int w = 0; w < v; ++w)
                if (g.adjacent(v, w) && m[w] == c) ok = false;
            if (!ok) continue;
            m[v] = c;
            if (rec(v + 1)) return true;
        }
        return false;
    };
    return rec(0);
}

inline Graph random_graph(std::mt19937_64& rng, int n, double p, bool loops = false) {
    std::vector<Edge> es;
    std::bernoulli_distribution coin(p);
    for (int i = 0; i < n; ++i)
        for (int j = loops ? i : i + 1; j < n; ++j)
            if (coin(rng)) es.push_back({i, j});
    return Graph(n, es);
}

inline Graph random_tree(std::mt19937_64& rng, int n) {
    std::vector<Edge> es;
    for (int v = 1; v < n; ++v) es.push_back({std::uniform_int_distribution<int>(0, v - 1)(rng), v});
    // shuffle labels so the tree is not always rooted at 0
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    for (Edge& e : es) e = {perm[e.u], perm[e.v]};
    return Graph(n, es);
}

/// All degree-t monomials by recursion, each with its A-image from the dense matrix.
inline std::map<std::vector<std::int64_t>, std::vector<ExponentVector>> brute_fibers(const ToricSystem& sys, int t) {
    std::map<std::vector<std::int64_t>, std::vector<ExponentVector>> out;
    std::vector<Variable> cur;
    const auto& a = sys.matrix();
    std::function<void(Variable)> rec = [&](Variable from) {
        if (static_cast<int>(cur.size()) == t) {
            Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1> img = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>::Zero(a.rows());
            for (Variable v : cur) img += a.col(v);
            out[std::vector<std::int64_t>(img.data(), img.data() + img.size())].push_back(ExponentVector(cur));
            return;
        }
        for (Variable v = from; v < sys.variable_count(); ++v) {
            cur.push_back(v);
            rec(v);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

/// Fiber connectivity by BFS with explicit moves (both directions), on brute fibers.
inline bool brute_markov(const ToricSystem& sys, const OrientedBasis& basis, int cap) {
    for (int t = 1; t <= cap; ++t)
        for (auto& [img, members] : brute_fibers(sys, t)) {
            if (members.size() < 2) continue;
            std::set<ExponentVector> seen{members.front()};
            std::vector<ExponentVector> stack{members.front()};
            while (!stack.empty()) {
                ExponentVector m = stack.back();
                stack.pop_back();
                for (const Binomial& b : basis.elements)
                    for (const auto& [from, to] : {std::pair{b.plus(), b.minus()}, std::pair{b.minus(), b.plus()}})
                        if (from.divides(m)) {
                            ExponentVector next = (m / from) * to;
                            if (seen.insert(next).second) stack.push_back(next);
                        }
            }
            if (seen.size() != members.size()) return false;
        }
    return true;
}

/// Exactly one monomial per brute fiber is irreducible by the leading sides.
inline bool brute_unique_sink(const ToricSystem& sys, const OrientedBasis& basis, int cap) {
    for (int t = 1; t <= cap; ++t)
        for (auto& [img, members] : brute_fibers(sys, t)) {
            int sinks = 0;
            for (const ExponentVector& m : members) {
                bool reducible = false;
                for (const Binomial& b : basis.elements)
                    if (b.plus().divides(m)) reducible = true;
                sinks += !reducible;
            }
            if (sinks != 1) return false;
        }
    return true;
}

/// Facets of a full-dimensional polytope found by scanning every integer normal with
/// entries in [-bound, bound]: the maximiser set must have affine rank dim.
/// Returns (normal, offset) -> tight vertex indices.
inline std::map<std::pair<std::vector<std::int64_t>, std::int64_t>, std::vector<std::size_t>>
box_facets(const IntMatrix& points, int bound) {
    const auto d = points.rows();
    const auto n = points.cols();
    std::map<std::pair<std::vector<std::int64_t>, std::int64_t>, std::vector<std::size_t>> out;
    std::vector<std::int64_t> c(static_cast<std::size_t>(d), -bound);
    for (;;) {
        std::int64_t g = 0;
        for (std::int64_t x : c) g = std::gcd(g, x);
        if (g == 1) {
            std::int64_t best = 0;
            std::vector<std::int64_t> val(static_cast<std::size_t>(n));
            for (Eigen::Index j = 0; j < n; ++j) {
                std::int64_t s = 0;
                for (Eigen::Index i = 0; i < d; ++i) s += c[static_cast<std::size_t>(i)] * points(i, j);
                val[static_cast<std::size_t>(j)] = s;
                best = j == 0 ? s : std::max(best, s);
            }
            std::vector<std::size_t> tight;
            for (Eigen::Index j = 0; j < n; ++j)
                if (val[static_cast<std::size_t>(j)] == best) tight.push_back(static_cast<std::size_t>(j));
            IntMatrix t(d + 1, static_cast<Eigen::Index>(tight.size()));
            for (std::size_t k = 0; k < tight.size(); ++k) {
                t(0, static_cast<Eigen::Index>(k)) = 1;
                t.col(static_cast<Eigen::Index>(k)).tail(d) = points.col(static_cast<Eigen::Index>(tight[k]));
            }
            if (exact_rank(t) == d) out[{c, best}] = tight;
        }
        std::size_t i = 0;
        while (i < c.size() && c[i] == bound) c[i++] = -bound;
        if (i == c.size()) break;
        ++c[i];
    }
    return out;
}

}  // namespace oracle
