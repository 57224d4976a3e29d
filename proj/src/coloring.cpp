#include "homtoric/coloring.hpp"

#include "homtoric/error.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

namespace homtoric {

namespace {

Edge ordered(Vertex a, Vertex b) { return a <= b ? Edge{a, b} : Edge{b, a}; }

bool needs_triangle_source(const ToricSystem& sys) { return sys.source() == complete_graph(3); }

/// Pairs (P, M) of degree-d monomials with equal image whose smallest variable `a`
/// lies in P and nowhere in M. Each step repairs the lowest unbalanced row by adding
/// a variable through it to the side that is short.
class PairSearch {
public:
    PairSearch(const ToricSystem& sys, std::size_t node_cap) : sys_(sys), node_cap_(node_cap) {
        cover_.resize(sys.row_count());
        for (Variable v = 0; v < sys.variable_count(); ++v)
            for (std::uint32_t r : sys.column(v)) cover_[r].push_back(v);
        balance_.assign(sys.row_count(), 0);
        in_plus_.assign(sys.variable_count(), 0);
        in_minus_.assign(sys.variable_count(), 0);
    }

    std::optional<Binomial> run(int degree) {
        degree_ = static_cast<std::size_t>(degree);
        for (Variable a = 0; a < sys_.variable_count(); ++a) {
            low_ = a;
            best_.reset();
            add(a, true);
            dfs();
            remove(a, true);
            if (best_) return Binomial(ExponentVector(best_->first), ExponentVector(best_->second));
        }
        return std::nullopt;
    }

private:
    void add(Variable v, bool plus) {
        (plus ? plus_ : minus_).push_back(v);
        ++(plus ? in_plus_ : in_minus_)[v];
        for (std::uint32_t r : sys_.column(v)) balance_[r] += plus ? 1 : -1;
    }
    void remove(Variable v, bool plus) {
        (plus ? plus_ : minus_).pop_back();
        --(plus ? in_plus_ : in_minus_)[v];
        for (std::uint32_t r : sys_.column(v)) balance_[r] -= plus ? 1 : -1;
    }

    void dfs() {
        if (++nodes_ > node_cap_) throw ResourceLimit("low-degree search: node cap reached");
        auto r = std::find_if(balance_.begin(), balance_.end(), [](int b) { return b != 0; });
        if (r == balance_.end()) {
            if (plus_.size() != degree_) return;
            std::vector<Variable> p = plus_, m = minus_;
            std::sort(p.begin(), p.end());
            std::sort(m.begin(), m.end());
            std::pair cand{std::move(p), std::move(m)};
            if (!best_ || cand < *best_) best_ = std::move(cand);
            return;
        }
        const bool to_minus = *r > 0;
        if ((to_minus ? minus_ : plus_).size() >= degree_) return;
        for (Variable y : cover_[static_cast<std::size_t>(r - balance_.begin())]) {
            if (to_minus ? (y <= low_ || in_plus_[y]) : (y < low_ || in_minus_[y])) continue;
            add(y, !to_minus);
            dfs();
            remove(y, !to_minus);
        }
    }

    const ToricSystem& sys_;
    std::size_t node_cap_;
    std::size_t nodes_ = 0;
    std::size_t degree_ = 0;
    Variable low_ = 0;
    std::vector<std::vector<Variable>> cover_;
    std::vector<int> balance_;
    std::vector<int> in_plus_, in_minus_;
    std::vector<Variable> plus_, minus_;
    std::optional<std::pair<std::vector<Variable>, std::vector<Variable>>> best_;
};

}  // namespace

std::optional<Binomial> find_low_degree_binomial(const ToricSystem& k3_into_g, int degree_cap,
                                                 std::size_t node_cap) {
    if (!needs_triangle_source(k3_into_g)) throw PreconditionError("low-degree search: source must be K3");
    if (k3_into_g.variable_count() == 0) throw PreconditionError("low-degree search: the graph has no triangle");
    PairSearch search(k3_into_g, node_cap);
    for (int t = 2; t <= degree_cap; ++t)
        if (auto b = search.run(t)) return b;
    return std::nullopt;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::not_colorable: return "NOT_4_COLORABLE";
        case Verdict::property: return "PROPERTY";
        case Verdict::inconclusive: return "INCONCLUSIVE";
    }
    return "?";
}

ObstructionCertificate analyze_certificate(const ToricSystem& k3_into_g, const Binomial& b,
                                           std::span<const Edge> relation, const CertificateOptions& options) {
    if (!needs_triangle_source(k3_into_g)) throw PreconditionError("certificate: source must be K3");
    const int d = b.degree();
    if (b.plus().degree() != b.minus().degree() || d == 0) throw PreconditionError("certificate: not a homogeneous binomial");
    if (d >= options.threshold) throw PreconditionError("certificate: degree must be below the threshold");
    if (d > options.max_degree) throw ResourceLimit("certificate: degree above the permutation cap");
    if (gcd(b.plus(), b.minus()).degree() != 0) throw PreconditionError("certificate: supports are not disjoint");
    if (!k3_into_g.membership(b)) throw PreconditionError("certificate: binomial is not in the ideal");

    const Graph& g = k3_into_g.target();
    std::set<Edge> marks;
    for (Edge e : relation) marks.insert(ordered(e.u, e.v));
    auto marked = [&](Vertex u, Vertex v) {
        return relation.empty() ? g.adjacent(u, v) : marks.count(ordered(u, v)) > 0;
    };

    ObstructionCertificate out;
    out.binomial = b;
    out.custom_relation = !relation.empty();
    for (Variable x : b.plus().factors()) out.plus_maps.push_back(k3_into_g.homs()[x]);
    for (Variable x : b.minus().factors()) out.minus_maps.push_back(k3_into_g.homs()[x]);

    auto pair_of = [&](const VertexMap& a, const VertexMap& c, std::size_t v) {
        return Identification{a[v], c[v], a[v] != c[v] && marked(a[v], c[v])};
    };
    for (std::size_t j = 0; j < out.minus_maps.size(); ++j) {
        FirstFactorRow row{j, {}};
        for (std::size_t v = 0; v < 3; ++v) row.pairs.push_back(pair_of(out.plus_maps[0], out.minus_maps[j], v));
        out.first_rows.push_back(std::move(row));
    }

    std::vector<std::size_t> pi(static_cast<std::size_t>(d));
    std::iota(pi.begin(), pi.end(), 0);
    do {
        PermutationRow row{pi, {}, false};
        std::set<Edge> seen;
        for (std::size_t i = 0; i < pi.size(); ++i)
            for (std::size_t v = 0; v < 3; ++v) {
                Identification id = pair_of(out.plus_maps[i], out.minus_maps[pi[i]], v);
                if (id.u == id.v) continue;
                Edge e = ordered(id.u, id.v);
                if (!seen.insert(e).second) continue;
                row.identified.push_back({e.u, e.v, id.marked});
                row.marked = row.marked || id.marked;
            }
        std::sort(row.identified.begin(), row.identified.end(),
                  [](const Identification& x, const Identification& y) { return std::tie(x.u, x.v) < std::tie(y.u, y.v); });
        out.unmarked += !row.marked;
        out.rows.push_back(std::move(row));
    } while (std::next_permutation(pi.begin(), pi.end()));

    if (out.unmarked == 0) out.verdict = out.custom_relation ? Verdict::property : Verdict::not_colorable;
    return out;
}

void write_certificate(std::ostream& out, const ObstructionCertificate& cert) {
    auto word = [](const VertexMap& m) {
        std::string s;
        for (Vertex v : m) s += std::to_string(v + 1);
        return s;
    };
    out << "binomial:";
    for (const VertexMap& m : cert.plus_maps) out << " r" << word(m);
    out << " -";
    for (const VertexMap& m : cert.minus_maps) out << " r" << word(m);
    out << "\npi(1) | identifications (" << (cert.custom_relation ? "related" : "adjacent") << " pairs in *)\n";
    for (const FirstFactorRow& row : cert.first_rows) {
        out << row.target + 1 << " |";
        for (const Identification& id : row.pairs) {
            std::string text = "xi(" + std::to_string(id.u + 1) + ")=xi(" + std::to_string(id.v + 1) + ")";
            out << ' ' << (id.marked ? "*" + text + "*" : text);
        }
        out << '\n';
    }
    out << "permutations: " << cert.rows.size() << ", without a marked identification: " << cert.unmarked << '\n';
    out << "verdict: " << to_string(cert.verdict) << '\n';
}

Binomial pushforward(const ToricSystem& from, std::span<const Vertex> xi, const Binomial& b, const ToricSystem& to) {
    if (from.source() != to.source()) throw PreconditionError("pushforward: the systems have different sources");
    auto push = [&](const ExponentVector& m) {
        std::vector<Variable> f;
        for (Variable x : m.factors()) {
            VertexMap c = compose(from.source(), from.homs()[x], from.target(), xi, to.target());
            auto idx = to.homs().index_of(c);
            if (!idx) throw InternalError("pushforward: composite missing from the target system");
            f.push_back(static_cast<Variable>(*idx));
        }
        return ExponentVector(std::move(f));
    };
    return Binomial(push(b.plus()), push(b.minus()));
}

std::vector<Edge> read_pairs(std::istream& in) {
    std::vector<Edge> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        Edge e;
        if (!(ls >> e.u)) continue;
        std::string extra;
        if (!(ls >> e.v) || (ls >> extra) || e.u < 0 || e.v < 0)
            throw ParseError("line " + std::to_string(lineno) + ": expected two vertices");
        out.push_back(e);
    }
    return out;
}

std::vector<Edge> load_pairs(std::string_view path) {
    std::ifstream in{std::string(path)};
    if (!in) throw ParseError("cannot open pairs file '" + std::string(path) + "'");
    return read_pairs(in);
}

}  // namespace homtoric
