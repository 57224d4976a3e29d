#include "homtoric/toric.hpp"

#include "homtoric/error.hpp"
#include "homtoric/parallel.hpp"

#include <algorithm>
#include <iterator>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <unordered_map>

namespace homtoric {

// ---------------------------------------------------------------------------
// ToricSystem

ToricSystem::ToricSystem(HomSet homs) : homs_(std::move(homs)) {
    const Graph& g = homs_.source();
    const Graph& h = homs_.target();
    const int hn = h.order();

    struct Piece {
        Edge where;
        bool vertex_piece;
    };
    std::vector<Piece> pieces;
    for (Edge e : g.edges()) pieces.push_back({e, false});
    for (Vertex v : g.isolated_vertices()) pieces.push_back({{v, v}, true});
    piece_count_ = static_cast<int>(pieces.size());

    // local[p][a * hn + b] = row index of (piece p, rho = (a, b))
    std::vector<std::vector<std::int64_t>> local(pieces.size(),
                                                 std::vector<std::int64_t>(static_cast<std::size_t>(hn * hn), -1));
    for (std::size_t p = 0; p < pieces.size(); ++p) {
        const Piece& pc = pieces[p];
        for (Vertex a = 0; a < hn; ++a)
            for (Vertex b = 0; b < hn; ++b) {
                bool ok;
                if (pc.vertex_piece || pc.where.is_loop())
                    ok = a == b && (pc.vertex_piece || h.has_loop(a));
                else
                    ok = h.adjacent(a, b);
                if (!ok) continue;
                local[p][static_cast<std::size_t>(a * hn + b)] = static_cast<std::int64_t>(rows_.size());
                rows_.push_back({static_cast<int>(p), pc.where, pc.vertex_piece, a, b});
            }
    }

    const std::size_t n = homs_.size();
    matrix_ = IntMatrix::Zero(static_cast<Eigen::Index>(rows_.size()), static_cast<Eigen::Index>(n));
    column_rows_.resize(n * pieces.size());
    used_.assign(rows_.size(), false);
    for (std::size_t j = 0; j < n; ++j) {
        const VertexMap& phi = homs_[j];
        for (std::size_t p = 0; p < pieces.size(); ++p) {
            Edge e = pieces[p].where;
            std::int64_t r = local[p][static_cast<std::size_t>(phi[e.u] * hn + phi[e.v])];
            if (r < 0) throw InternalError("homomorphism restricts to no piece map");
            column_rows_[j * pieces.size() + p] = static_cast<std::uint32_t>(r);
            matrix_(r, static_cast<Eigen::Index>(j)) = 1;
            used_[static_cast<std::size_t>(r)] = true;
        }
    }
}

IntVector ToricSystem::image(const ExponentVector& m) const {
    IntVector out = IntVector::Zero(static_cast<Eigen::Index>(rows_.size()));
    for (Variable v : m.factors()) {
        if (v >= variable_count()) throw PreconditionError("variable index " + std::to_string(v) + " out of range");
        for (std::uint32_t r : column(v)) out(r) += 1;
    }
    return out;
}

bool ToricSystem::membership(const Binomial& b) const {
    return (image(b.plus()) - image(b.minus())).isZero();
}

ToricSystem ToricSystem::subsystem(std::span<const Variable> variables) const {
    std::vector<VertexMap> maps;
    maps.reserve(variables.size());
    for (Variable v : variables) {
        if (v >= variable_count()) throw PreconditionError("subsystem: variable out of range");
        maps.push_back(homs_[v]);
    }
    return ToricSystem(HomSet(source(), target(), std::move(maps)));
}

ToricSystem build_system(const Graph& g, const Graph& h, const EnumerateOptions& options) {
    return ToricSystem(enumerate(g, h, options));
}

// ---------------------------------------------------------------------------
// Degree layers

std::size_t monomial_count(std::size_t variables, int degree) {
    if (degree == 0) return 1;
    if (variables == 0) return 0;
    // C(n + t - 1, t) computed incrementally; each prefix product is an integer.
    unsigned __int128 c = 1;
    for (int i = 1; i <= degree; ++i) {
        c = c * (variables + static_cast<std::size_t>(i) - 1) / static_cast<unsigned>(i);
        if (c > std::numeric_limits<std::size_t>::max()) return std::numeric_limits<std::size_t>::max();
    }
    return static_cast<std::size_t>(c);
}

DegreeLayer::DegreeLayer(const ToricSystem& sys, int degree, const FiberOptions& options) : degree_(degree) {
    if (degree < 1) throw PreconditionError("degree layer needs degree >= 1");
    const std::size_t n = sys.variable_count();
    count_ = homtoric::monomial_count(n, degree);
    if (count_ > options.max_monomials)
        throw ResourceLimit("degree " + std::to_string(degree) + " has " +
                            (count_ == std::numeric_limits<std::size_t>::max() ? std::string("too many")
                                                                                : std::to_string(count_)) +
                            " monomials, above the cap of " + std::to_string(options.max_monomials));
    const std::size_t t = static_cast<std::size_t>(degree);
    flat_.resize(count_ * t);
    fiber_of_.assign(count_, -1);
    if (count_ == 0) return;

    // Column hashes from fixed random row keys; monomial hash is the sum.
    std::mt19937_64 rng(0x5eed'1e55'c0de'2024ULL);
    std::vector<std::uint64_t> key1(sys.row_count()), key2(sys.row_count());
    for (std::size_t r = 0; r < sys.row_count(); ++r) {
        key1[r] = rng();
        key2[r] = rng();
    }
    std::vector<std::uint64_t> col1(n, 0), col2(n, 0);
    for (std::size_t v = 0; v < n; ++v)
        for (std::uint32_t r : sys.column(static_cast<Variable>(v))) {
            col1[v] += key1[r];
            col2[v] += key2[r];
        }

    struct Keyed {
        std::uint64_t h1, h2;
        std::uint32_t index;
    };
    std::vector<Keyed> keyed(count_);
    std::vector<Variable> tuple(t, 0);
    for (std::size_t i = 0;; ++i) {
        std::uint64_t h1 = 0, h2 = 0;
        for (std::size_t k = 0; k < t; ++k) {
            flat_[i * t + k] = tuple[k];
            h1 += col1[tuple[k]];
            h2 += col2[tuple[k]];
        }
        keyed[i] = {h1, h2, static_cast<std::uint32_t>(i)};
        // next nondecreasing tuple in lex order
        std::size_t pos = t;
        while (pos > 0 && tuple[pos - 1] == n - 1) --pos;
        if (pos == 0) break;
        Variable next = tuple[pos - 1] + 1;
        for (std::size_t k = pos - 1; k < t; ++k) tuple[k] = next;
    }

    std::sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
        if (a.h1 != b.h1) return a.h1 < b.h1;
        if (a.h2 != b.h2) return a.h2 < b.h2;
        return a.index < b.index;
    });

    // Exact image (sorted row multiset) for collision-proof grouping.
    const std::size_t pieces = static_cast<std::size_t>(sys.piece_count());
    auto exact_image = [&](std::uint32_t idx) {
        std::vector<std::uint32_t> img;
        img.reserve(t * pieces);
        for (Variable v : monomial(idx))
            for (std::uint32_t r : sys.column(v)) img.push_back(r);
        std::sort(img.begin(), img.end());
        return img;
    };

    std::vector<std::vector<std::uint32_t>> groups;
    for (std::size_t lo = 0; lo < count_;) {
        std::size_t hi = lo + 1;
        while (hi < count_ && keyed[hi].h1 == keyed[lo].h1 && keyed[hi].h2 == keyed[lo].h2) ++hi;
        if (hi - lo >= 2) {
            auto first = exact_image(keyed[lo].index);
            bool clean = true;
            for (std::size_t k = lo + 1; k < hi && clean; ++k) clean = exact_image(keyed[k].index) == first;
            if (clean) {
                std::vector<std::uint32_t> members;
                for (std::size_t k = lo; k < hi; ++k) members.push_back(keyed[k].index);
                groups.push_back(std::move(members));
            } else {
                std::map<std::vector<std::uint32_t>, std::vector<std::uint32_t>> split;
                for (std::size_t k = lo; k < hi; ++k) split[exact_image(keyed[k].index)].push_back(keyed[k].index);
                for (auto& [img, members] : split)
                    if (members.size() >= 2) groups.push_back(std::move(members));
            }
        }
        lo = hi;
    }
    // members are already ascending (ties broken by index); order fibers by min member
    std::sort(groups.begin(), groups.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    fiber_start_.push_back(0);
    for (std::size_t f = 0; f < groups.size(); ++f) {
        for (std::uint32_t m : groups[f]) {
            fiber_members_.push_back(m);
            fiber_of_[m] = static_cast<std::int64_t>(f);
        }
        fiber_start_.push_back(fiber_members_.size());
    }
}

ExponentVector DegreeLayer::monomial_vector(std::size_t i) const {
    auto f = monomial(i);
    return ExponentVector(std::vector<Variable>(f.begin(), f.end()));
}

std::optional<std::size_t> DegreeLayer::find(std::span<const Variable> sorted_factors) const {
    if (sorted_factors.size() != static_cast<std::size_t>(degree_)) return std::nullopt;
    std::size_t lo = 0, hi = count_;
    while (lo < hi) {
        std::size_t mid = lo + (hi - lo) / 2;
        auto m = monomial(mid);
        if (std::lexicographical_compare(m.begin(), m.end(), sorted_factors.begin(), sorted_factors.end()))
            lo = mid + 1;
        else
            hi = mid;
    }
    if (lo == count_) return std::nullopt;
    auto m = monomial(lo);
    if (!std::equal(m.begin(), m.end(), sorted_factors.begin(), sorted_factors.end())) return std::nullopt;
    return lo;
}

// ---------------------------------------------------------------------------
// Component analysis inside a fiber

namespace {

struct UnionFind {
    std::vector<std::uint32_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0U); }
    std::uint32_t find(std::uint32_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    // keeps the smaller root so the root of a component is its smallest member
    void unite(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (a < b)
            parent[b] = a;
        else
            parent[a] = b;
    }
};

/// Components of a fiber where two monomials are joined when they share a
/// variable, plus the extra local joins. Returns the root (local index) of each member.
std::vector<std::uint32_t> fiber_components(const DegreeLayer& layer, std::span<const std::uint32_t> members,
                                            std::span<const std::pair<std::uint32_t, std::uint32_t>> extra) {
    UnionFind uf(members.size());
    std::unordered_map<Variable, std::uint32_t> first_owner;
    for (std::uint32_t i = 0; i < members.size(); ++i) {
        Variable prev = std::numeric_limits<Variable>::max();
        for (Variable v : layer.monomial(members[i])) {
            if (v == prev) continue;
            prev = v;
            auto [it, inserted] = first_owner.emplace(v, i);
            if (!inserted) uf.unite(it->second, i);
        }
    }
    for (auto [a, b] : extra) uf.unite(a, b);
    std::vector<std::uint32_t> roots(members.size());
    for (std::uint32_t i = 0; i < members.size(); ++i) roots[i] = uf.find(i);
    return roots;
}

std::uint32_t local_index(std::span<const std::uint32_t> members, std::size_t global) {
    auto it = std::lower_bound(members.begin(), members.end(), static_cast<std::uint32_t>(global));
    return static_cast<std::uint32_t>(it - members.begin());
}

/// Binomial joining two monomials, oriented with the lex-smaller side leading.
Binomial join(const DegreeLayer& layer, std::size_t a, std::size_t b) {
    return Binomial(layer.monomial_vector(std::min(a, b)), layer.monomial_vector(std::max(a, b)));
}

}  // namespace

std::optional<int> certified_degree_bound(const ToricSystem& sys) {
    const Graph& g = sys.source();
    const Graph& h = sys.target();
    if (sys.variable_count() <= 2000 && static_cast<std::size_t>(exact_rank(sys.matrix())) == sys.variable_count())
        return 0;
    if (spoon_unlooped_vertex(h)) {
        if (is_complete(g)) return 0;
        if ((g.loop_free() && is_bipartite(g)) || is_almost_bipartite(g)) return 2;
    }
    if (is_forest(g)) return 2;
    return std::nullopt;
}

MarkovResult markov_basis(const ToricSystem& sys, int cap, const FiberOptions& options) {
    if (cap < 1) throw PreconditionError("markov basis needs a degree cap >= 1");
    MarkovResult result;
    result.cap = cap;
    result.added.assign(static_cast<std::size_t>(cap) + 1, 0);
    for (int t = 1; t <= cap; ++t) {
        DegreeLayer layer(sys, t, options);
        std::vector<std::vector<Binomial>> per_fiber(layer.fiber_count());
        parallel_for(layer.fiber_count(), options.threads, [&](std::size_t f) {
            auto members = layer.fiber(f);
            auto roots = fiber_components(layer, members, {});
            // roots are smallest members; the first member is the global minimum
            for (std::uint32_t i = 1; i < members.size(); ++i)
                if (roots[i] == i) per_fiber[f].push_back(join(layer, members[0], members[i]));
        });
        for (auto& list : per_fiber)
            for (Binomial& b : list) {
                result.basis.elements.push_back(std::move(b));
                ++result.added[static_cast<std::size_t>(t)];
            }
    }
    result.stable = result.added[static_cast<std::size_t>(cap)] == 0 &&
                    (cap < 2 || result.added[static_cast<std::size_t>(cap - 1)] == 0);
    result.certified_bound = certified_degree_bound(sys);
    result.complete = result.stable && result.certified_bound && *result.certified_bound <= cap;
    return result;
}

WidthResult markov_width(const ToricSystem& sys, int cap, const FiberOptions& options) {
    MarkovResult r = markov_basis(sys, cap, options);
    WidthResult w;
    w.width = r.basis.degree();
    w.cap = cap;
    w.stable = r.stable;
    w.exact = r.certified_bound && *r.certified_bound <= cap;
    return w;
}

// ---------------------------------------------------------------------------
// Verification

namespace {

std::optional<std::string> membership_failure(const ToricSystem& sys, const OrientedBasis& basis) {
    for (std::size_t i = 0; i < basis.elements.size(); ++i) {
        const Binomial& b = basis.elements[i];
        for (const ExponentVector* side : {&b.plus(), &b.minus()})
            if (!side->is_one() && side->max_variable() >= sys.variable_count())
                throw PreconditionError("basis element " + std::to_string(i) + " uses an unknown variable");
        if (b.is_zero()) return "basis element " + std::to_string(i) + " is zero";
        if (!sys.membership(b)) return "basis element " + std::to_string(i) + " is not in the ideal";
    }
    return std::nullopt;
}

/// Basis elements bucketed by the smallest variable of their leading side.
struct MoveIndex {
    std::vector<std::vector<std::size_t>> by_min_var;
    std::vector<Binomial> moves;

    MoveIndex(std::size_t variables, std::vector<Binomial> ms) : by_min_var(variables), moves(std::move(ms)) {
        for (std::size_t i = 0; i < moves.size(); ++i)
            if (!moves[i].plus().is_one()) by_min_var[moves[i].plus().factors().front()].push_back(i);
    }

    /// Calls fn(target) for every move applicable to monomial m (a sorted factor list).
    template <typename Fn>
    void for_each_step(std::span<const Variable> m, std::vector<Variable>& scratch, Fn&& fn) const {
        Variable prev = std::numeric_limits<Variable>::max();
        for (Variable v : m) {
            if (v == prev) continue;
            prev = v;
            for (std::size_t idx : by_min_var[v]) {
                const Binomial& b = moves[idx];
                auto lead = b.plus().factors();
                if (!std::includes(m.begin(), m.end(), lead.begin(), lead.end())) continue;
                scratch.clear();
                std::set_difference(m.begin(), m.end(), lead.begin(), lead.end(), std::back_inserter(scratch));
                auto trail = b.minus().factors();
                std::size_t mid = scratch.size();
                scratch.insert(scratch.end(), trail.begin(), trail.end());
                std::inplace_merge(scratch.begin(), scratch.begin() + static_cast<std::ptrdiff_t>(mid), scratch.end());
                fn(std::span<const Variable>(scratch));
            }
        }
    }
};

BasisCheck first_failure(std::vector<std::string> verdicts, int degree, BasisCheck acc) {
    for (std::size_t f = 0; f < verdicts.size(); ++f)
        if (!verdicts[f].empty()) {
            acc.ok = false;
            acc.degree = degree;
            acc.fiber = f;
            acc.reason = std::move(verdicts[f]);
            return acc;
        }
    acc.fibers_checked += verdicts.size();
    return acc;
}

}  // namespace

BasisCheck verify_markov(const ToricSystem& sys, const OrientedBasis& basis, int cap, const FiberOptions& options) {
    BasisCheck check;
    if (auto bad = membership_failure(sys, basis)) {
        check.ok = false;
        check.reason = *bad;
        return check;
    }
    for (int t = 1; t <= cap; ++t) {
        DegreeLayer layer(sys, t, options);
        // degree-t elements join their two sides inside a fiber
        std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> joins(layer.fiber_count());
        for (const Binomial& b : basis.elements) {
            if (b.degree() != t) continue;
            auto p = layer.find(b.plus().factors());
            auto m = layer.find(b.minus().factors());
            if (!p || !m || layer.fiber_of(*p) < 0 || layer.fiber_of(*p) != layer.fiber_of(*m))
                throw InternalError("member binomial sides fall in different fibers");
            auto f = static_cast<std::size_t>(layer.fiber_of(*p));
            joins[f].push_back({local_index(layer.fiber(f), *p), local_index(layer.fiber(f), *m)});
        }
        std::vector<std::string> verdicts(layer.fiber_count());
        parallel_for(layer.fiber_count(), options.threads, [&](std::size_t f) {
            auto roots = fiber_components(layer, layer.fiber(f), joins[f]);
            for (std::uint32_t r : roots)
                if (r != 0) {
                    verdicts[f] = "fiber graph disconnected";
                    break;
                }
        });
        check = first_failure(std::move(verdicts), t, check);
        if (!check.ok) return check;
    }
    return check;
}

BasisCheck verify_markov_explicit(const ToricSystem& sys, const OrientedBasis& basis, int cap,
                                  const FiberOptions& options) {
    BasisCheck check;
    if (auto bad = membership_failure(sys, basis)) {
        check.ok = false;
        check.reason = *bad;
        return check;
    }
    std::vector<Binomial> both;
    for (const Binomial& b : basis.elements) {
        both.push_back(b);
        both.push_back(b.flipped());
    }
    MoveIndex index(sys.variable_count(), std::move(both));
    for (int t = 1; t <= cap; ++t) {
        DegreeLayer layer(sys, t, options);
        std::vector<std::string> verdicts(layer.fiber_count());
        parallel_for(layer.fiber_count(), options.threads, [&](std::size_t f) {
            auto members = layer.fiber(f);
            UnionFind uf(members.size());
            std::vector<Variable> scratch;
            for (std::uint32_t i = 0; i < members.size(); ++i)
                index.for_each_step(layer.monomial(members[i]), scratch, [&](std::span<const Variable> target) {
                    auto g = layer.find(target);
                    if (!g) throw InternalError("move left the degree layer");
                    uf.unite(i, local_index(members, *g));
                });
            for (std::uint32_t i = 0; i < members.size(); ++i)
                if (uf.find(i) != 0) {
                    verdicts[f] = "fiber graph disconnected";
                    break;
                }
        });
        check = first_failure(std::move(verdicts), t, check);
        if (!check.ok) return check;
    }
    return check;
}

BasisCheck verify_grobner(const ToricSystem& sys, const OrientedBasis& basis, int cap, const FiberOptions& options) {
    BasisCheck check;
    if (auto bad = membership_failure(sys, basis)) {
        check.ok = false;
        check.reason = *bad;
        return check;
    }
    MoveIndex index(sys.variable_count(), basis.elements);
    for (int t = 1; t <= cap; ++t) {
        DegreeLayer layer(sys, t, options);
        std::vector<std::string> verdicts(layer.fiber_count());
        parallel_for(layer.fiber_count(), options.threads, [&](std::size_t f) {
            auto members = layer.fiber(f);
            const std::size_t k = members.size();
            std::vector<std::vector<std::uint32_t>> out(k);
            std::vector<std::uint32_t> indegree(k, 0);
            UnionFind uf(k);
            std::vector<Variable> scratch;
            for (std::uint32_t i = 0; i < k; ++i)
                index.for_each_step(layer.monomial(members[i]), scratch, [&](std::span<const Variable> target) {
                    auto g = layer.find(target);
                    if (!g) throw InternalError("move left the degree layer");
                    std::uint32_t j = local_index(members, *g);
                    out[i].push_back(j);
                    ++indegree[j];
                    uf.unite(i, j);
                });
            for (std::uint32_t i = 0; i < k; ++i)
                if (uf.find(i) != 0) {
                    verdicts[f] = "fiber graph disconnected";
                    return;
                }
            std::size_t sinks = 0;
            for (std::uint32_t i = 0; i < k; ++i) sinks += out[i].empty();
            if (sinks != 1) {
                verdicts[f] = std::to_string(sinks) + " sinks";
                return;
            }
            // Kahn's algorithm
            std::vector<std::uint32_t> ready;
            for (std::uint32_t i = 0; i < k; ++i)
                if (indegree[i] == 0) ready.push_back(i);
            std::size_t seen = 0;
            while (!ready.empty()) {
                std::uint32_t i = ready.back();
                ready.pop_back();
                ++seen;
                for (std::uint32_t j : out[i])
                    if (--indegree[j] == 0) ready.push_back(j);
            }
            if (seen != k) verdicts[f] = "directed cycle";
        });
        check = first_failure(std::move(verdicts), t, check);
        if (!check.ok) return check;
    }
    return check;
}

OrientedBasis restrict_basis(const ToricSystem& big, const OrientedBasis& basis, const ToricSystem& small) {
    if (!(big.source() == small.source())) throw PreconditionError("restrict_basis: source graphs differ");
    if (big.target().order() != small.target().order())
        throw PreconditionError("restrict_basis: targets must share the vertex set");
    for (Edge e : small.target().edges())
        if (!big.target().adjacent(e.u, e.v)) throw PreconditionError("restrict_basis: target is not a subgraph");
    std::vector<std::optional<std::size_t>> to_small(big.variable_count());
    for (std::size_t v = 0; v < big.variable_count(); ++v) to_small[v] = small.homs().index_of(big.homs()[v]);

    OrientedBasis out;
    auto convert = [&](const ExponentVector& m) -> std::optional<ExponentVector> {
        std::vector<Variable> f;
        for (Variable v : m.factors()) {
            if (v >= big.variable_count()) throw PreconditionError("restrict_basis: variable out of range");
            if (!to_small[v]) return std::nullopt;
            f.push_back(static_cast<Variable>(*to_small[v]));
        }
        return ExponentVector(std::move(f));
    };
    for (const Binomial& b : basis.elements) {
        auto p = convert(b.plus());
        auto m = convert(b.minus());
        if (p && m) out.elements.emplace_back(std::move(*p), std::move(*m));
    }
    return out;
}

NormalityWitness normality_witness(const ToricSystem& sys, const OrientedBasis& basis, const FiberOptions& options) {
    NormalityWitness w;
    int cap = std::max(2, 2 * basis.degree());
    w.checked_degree = cap;
    // S-pairs of two elements live in degree at most the sum of their degrees.
    if (monomial_count(sys.variable_count(), cap) > options.max_monomials) {
        w.note = "unverified: degree " + std::to_string(cap) + " fibers exceed the monomial cap";
        return w;
    }
    BasisCheck check = verify_grobner(sys, basis, cap, options);
    if (!check.ok)
        throw PreconditionError("normality witness: basis is not Groebner (" + check.reason + " in degree " +
                                std::to_string(check.degree) + ")");
    w.verified = true;
    w.normal = w.cohen_macaulay = basis.square_free();
    w.koszul = basis.degree() <= 2;
    w.note = w.normal ? "square-free Groebner basis" : "Groebner basis is not square-free";
    return w;
}

}  // namespace homtoric
