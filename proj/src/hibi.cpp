#include "homtoric/hibi.hpp"

#include "homtoric/error.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <string>

namespace homtoric {

Poset::Poset(int n, const std::vector<std::pair<int, int>>& less) : n_(n) {
    if (n < 0 || n > kMaxOrder) throw PreconditionError("poset: size out of range");
    up_.assign(static_cast<std::size_t>(n), 0);
    for (int a = 0; a < n; ++a) up_[a] = std::uint64_t{1} << a;
    for (auto [a, b] : less) {
        if (a < 0 || b < 0 || a >= n || b >= n) throw PreconditionError("poset: element out of range");
        up_[a] |= std::uint64_t{1} << b;
    }
    // Warshall closure on bit rows
    for (int k = 0; k < n; ++k)
        for (int a = 0; a < n; ++a)
            if ((up_[a] >> k) & 1U) up_[a] |= up_[k];
    down_.assign(static_cast<std::size_t>(n), 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (leq(a, b)) {
                if (a != b && leq(b, a)) throw PreconditionError("poset: the relations contain a cycle");
                down_[b] |= std::uint64_t{1} << a;
            }
}

std::vector<std::pair<int, int>> Poset::covers() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b) {
            if (a == b || !leq(a, b)) continue;
            bool direct = true;
            for (int c = 0; c < n_ && direct; ++c)
                if (c != a && c != b && leq(a, c) && leq(c, b)) direct = false;
            if (direct) out.emplace_back(a, b);
        }
    return out;
}

Poset chain_poset(int n) {
    std::vector<std::pair<int, int>> r;
    for (int i = 0; i + 1 < n; ++i) r.emplace_back(i, i + 1);
    return Poset(n, r);
}

Poset antichain_poset(int n) { return Poset(n, {}); }

Poset read_poset(std::istream& in) {
    std::string line;
    int n = -1;
    std::vector<std::pair<int, int>> rel;
    int lineno = 0;
    auto fail = [&](const std::string& what) { return ParseError("line " + std::to_string(lineno) + ": " + what); };
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "p") {
            if (n >= 0) throw fail("repeated 'p'");
            if (!(ls >> n) || n < 1 || n > kMaxOrder) throw fail("bad element count");
        } else if (tag == "c") {
            int a = 0, b = 0;
            if (n < 0) throw fail("cover before 'p'");
            if (!(ls >> a >> b)) throw fail("bad cover");
            rel.emplace_back(a, b);
        } else {
            throw fail("unknown record '" + tag + "'");
        }
        std::string extra;
        if (ls >> extra) throw fail("trailing text");
    }
    if (n < 0) throw ParseError("poset file has no 'p' line");
    try {
        return Poset(n, rel);
    } catch (const PreconditionError& e) {
        throw ParseError(e.what());
    }
}

void write_poset(std::ostream& out, const Poset& p) {
    out << "p " << p.size() << '\n';
    for (auto [a, b] : p.covers()) out << "c " << a << ' ' << b << '\n';
}

Poset load_poset(std::string_view path) {
    std::ifstream in{std::string(path)};
    if (!in) throw ParseError("cannot open poset file '" + std::string(path) + "'");
    return read_poset(in);
}

std::vector<Poset> posets_up_to_iso(int n) {
    if (n < 0 || n > 6) throw ResourceLimit("poset enumeration: only up to 6 elements");
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::set<std::uint64_t> seen;
    std::vector<Poset> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
        std::vector<std::pair<int, int>> rel;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if ((mask >> i) & 1U) rel.push_back(pairs[i]);
        Poset p(n, rel);
        // only closed masks, so each labelled order appears once
        std::uint64_t closed = 0;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (p.leq(pairs[i].first, pairs[i].second)) closed |= std::uint64_t{1} << i;
        if (closed != mask) continue;
        std::iota(perm.begin(), perm.end(), 0);
        std::uint64_t best = ~std::uint64_t{0};
        do {
            std::uint64_t code = 0;
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    if (p.leq(a, b)) code |= std::uint64_t{1} << (perm[a] * n + perm[b]);
            best = std::min(best, code);
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (seen.insert(best).second) out.push_back(std::move(p));
    }
    return out;
}

std::vector<VertexSet> lower_ideals(const Poset& p, std::size_t cap) {
    // grow ideals one minimal element of the complement at a time
    std::set<std::uint64_t> found{0};
    std::vector<std::uint64_t> frontier{0};
    while (!frontier.empty()) {
        std::vector<std::uint64_t> next;
        for (std::uint64_t s : frontier)
            for (int a = 0; a < p.size(); ++a) {
                if ((s >> a) & 1U) continue;
                std::uint64_t below = p.down(a).bits() & ~(std::uint64_t{1} << a);
                if ((below & ~s) != 0) continue;
                std::uint64_t t = s | (std::uint64_t{1} << a);
                if (found.insert(t).second) {
                    if (found.size() > cap) throw ResourceLimit("lower ideals: more than " + std::to_string(cap));
                    next.push_back(t);
                }
            }
        frontier = std::move(next);
    }
    std::vector<VertexSet> out;
    for (std::uint64_t s : found) out.emplace_back(s);
    std::sort(out.begin(), out.end(), [](VertexSet a, VertexSet b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

Graph build_bp(const Poset& p) {
    if (2 * p.size() > kMaxOrder) throw PreconditionError("B_P: poset too large");
    std::vector<Edge> es;
    for (int a = 0; a < p.size(); ++a)
        for (int b = 0; b < p.size(); ++b)
            if (p.leq(b, a)) es.push_back({2 * a, 2 * b + 1});
    return Graph(2 * p.size(), es);
}

VertexSet xi(const Poset& p, VertexSet lower_ideal) {
    VertexSet out;
    for (int a = 0; a < p.size(); ++a) out.insert(lower_ideal.contains(a) ? 2 * a : 2 * a + 1);
    return out;
}

XiCheck xi_bijection(const Poset& p) {
    if (p.size() > 12) throw ResourceLimit("xi check: more than 12 poset elements");
    XiCheck out;
    Graph bp = build_bp(p);
    out.ideals = lower_ideals(p);
    for (VertexSet l : out.ideals) out.images.push_back(xi(p, l));
    const int m = bp.order();
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << m); ++s) {
        VertexSet set(s);
        if (!bp.is_independent(set)) continue;
        out.alpha = std::max(out.alpha, set.size());
        bool maximal = true;
        for (int v = 0; v < m && maximal; ++v)
            if (!set.contains(v) && !bp.neighbors(v).intersects(set)) maximal = false;
        if (maximal) out.maximal_sets.push_back(set);
    }
    std::vector<VertexSet> sorted = out.images;
    std::sort(sorted.begin(), sorted.end(), [](VertexSet a, VertexSet b) { return a.bits() < b.bits(); });
    out.bijective = sorted == out.maximal_sets;
    return out;
}

HibiComparison hibi_vs_topgraded(const Poset& p, int cap, const FiberOptions& options) {
    HibiComparison out;
    out.ideals = lower_ideals(p);
    ToricSystem full = build_system(build_bp(p), spoon());
    IndependenceEncoding enc = indep_encode(full.homs());
    out.top = top_graded(full, cap, options);
    if (out.top.alpha != p.size()) throw InternalError("hibi: independence number of B_P differs from |P|");

    std::vector<std::optional<Variable>> local(full.variable_count());
    for (Variable i = 0; i < out.top.parent.size(); ++i) local[out.top.parent[i]] = i;
    auto variable_of = [&](VertexSet ideal) {
        auto idx = enc.index_of(xi(p, ideal));
        if (!idx || !local[*idx]) throw InternalError("hibi: xi(L) is not a top-degree independent set");
        return *local[*idx];
    };
    for (VertexSet l : out.ideals) out.ideal_variable.push_back(variable_of(l));

    for (std::size_t i = 0; i < out.ideals.size(); ++i)
        for (std::size_t j = i + 1; j < out.ideals.size(); ++j) {
            VertexSet a = out.ideals[i], b = out.ideals[j];
            if (a.subset_of(b) || b.subset_of(a)) continue;
            out.hibi.elements.emplace_back(
                ExponentVector(std::vector<Variable>{out.ideal_variable[i], out.ideal_variable[j]}),
                ExponentVector(std::vector<Variable>{variable_of(a | b), variable_of(a & b)}));
        }

    out.members = std::all_of(out.hibi.elements.begin(), out.hibi.elements.end(),
                              [&](const Binomial& b) { return out.top.system.membership(b); });

    auto to_top = [&](const ExponentVector& m) -> std::optional<ExponentVector> {
        std::vector<Variable> f;
        for (Variable v : m.factors()) {
            if (!local[v]) return std::nullopt;
            f.push_back(*local[v]);
        }
        return ExponentVector(std::move(f));
    };
    for (const Binomial& b : bipartite_grobner(full).basis.elements) {
        auto plus = to_top(b.plus());
        auto minus = to_top(b.minus());
        if (plus && minus) out.top_generators.elements.emplace_back(*plus, *minus);
    }
    std::set<Binomial> lhs, rhs;
    for (const Binomial& b : out.hibi.elements) lhs.insert(b.canonical());
    for (const Binomial& b : out.top_generators.elements) rhs.insert(b.canonical());
    out.generators_match = lhs == rhs && lhs.size() == out.hibi.size();

    out.hibi_generates = verify_markov(out.top.system, out.hibi, cap, options).ok;
    out.markov_within = out.top.markov.basis.degree() <= 2;
    return out;
}

}  // namespace homtoric
