#include "homtoric/graph.hpp"

#include "homtoric/error.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <istream>
#include <numeric>
#include <set>
#include <ostream>
#include <sstream>

namespace homtoric {

std::vector<Vertex> VertexSet::members() const {
    std::vector<Vertex> out;
    out.reserve(size());
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
}

std::strong_ordering operator<=>(VertexSet a, VertexSet b) {
    // Lexicographic on sorted member lists. Below the lowest differing vertex the
    // lists agree; the set holding it is smaller unless the other list ends there.
    std::uint64_t diff = a.bits_ ^ b.bits_;
    if (diff == 0) return std::strong_ordering::equal;
    int low = std::countr_zero(diff);
    bool a_has = (a.bits_ >> low) & 1U;
    std::uint64_t other = a_has ? b.bits_ : a.bits_;
    bool other_ends = (other >> low) == 0;
    bool a_less = a_has != other_ends;
    return a_less ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::string to_string(VertexSet s, bool one_based) {
    std::string out = "{";
    bool first = true;
    for (Vertex v : s.members()) {
        if (!first) out += ',';
        first = false;
        out += std::to_string(one_based ? v + 1 : v);
    }
    out += '}';
    return out;
}

Graph::Graph(int order) : order_(order), adjacency_(static_cast<std::size_t>(std::max(order, 0))) {
    if (order < 0 || order > kMaxOrder)
        throw PreconditionError("graph order must be in [0," + std::to_string(kMaxOrder) + "]");
}

Graph::Graph(int order, std::span<const Edge> edges) : Graph(order) {
    edges_.reserve(edges.size());
    for (Edge e : edges) {
        if (e.u < 0 || e.v < 0 || e.u >= order || e.v >= order)
            throw PreconditionError("edge endpoint out of range: " + std::to_string(e.u) + "-" +
                                    std::to_string(e.v));
        if (e.u > e.v) std::swap(e.u, e.v);
        edges_.push_back(e);
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw PreconditionError("duplicate edge");
    for (Edge e : edges_) {
        adjacency_[e.u].insert(e.v);
        adjacency_[e.v].insert(e.u);
    }
}

bool Graph::loop_free() const {
    return std::none_of(edges_.begin(), edges_.end(), [](Edge e) { return e.is_loop(); });
}

VertexSet Graph::neighbors(VertexSet s) const {
    VertexSet out;
    for (Vertex v : s.members()) out = out | adjacency_[v];
    return out - s;
}

VertexSet Graph::looped_vertices() const {
    VertexSet out;
    for (Edge e : edges_)
        if (e.is_loop()) out.insert(e.u);
    return out;
}

std::vector<Vertex> Graph::isolated_vertices() const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < order_; ++v)
        if (adjacency_[v].empty()) out.push_back(v);
    return out;
}

bool Graph::is_independent(VertexSet s) const {
    for (Vertex v : s.members())
        if (adjacency_[v].intersects(s)) return false;
    return true;
}

Graph path_graph(int n) {
    if (n < 1) throw PreconditionError("path needs n >= 1");
    std::vector<Edge> es;
    for (int i = 0; i + 1 < n; ++i) es.push_back({i, i + 1});
    return Graph(n, es);
}

Graph cycle_graph(int n) {
    if (n < 3) throw PreconditionError("cycle needs n >= 3");
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i) es.push_back({i, (i + 1) % n});
    return Graph(n, es);
}

Graph complete_graph(int n) {
    if (n < 1) throw PreconditionError("complete graph needs n >= 1");
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) es.push_back({i, j});
    return Graph(n, es);
}

Graph empty_graph(int n) {
    if (n < 1) throw PreconditionError("empty graph needs n >= 1");
    return Graph(n);
}

Graph star_graph(int leaves) {
    if (leaves < 1) throw PreconditionError("star needs at least one leaf");
    std::vector<Edge> es;
    for (int i = 1; i <= leaves; ++i) es.push_back({0, i});
    return Graph(leaves + 1, es);
}

Graph fan_graph(int n) {
    if (n < 3) throw PreconditionError("fan needs n >= 3");
    std::vector<Edge> es;
    for (int i = 1; i < n; ++i) es.push_back({0, i});
    for (int i = 1; i + 1 < n; ++i) es.push_back({i, i + 1});
    return Graph(n, es);
}

Graph spoon() { return Graph(2, {{0, 1}, {1, 1}}); }

Graph octahedron() {
    std::vector<Edge> es;
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            if (j != (i ^ 1)) es.push_back({i, j});
    return Graph(6, es);
}

Graph complement(const Graph& g) {
    std::vector<Edge> es;
    for (int i = 0; i < g.order(); ++i)
        for (int j = i + 1; j < g.order(); ++j)
            if (!g.adjacent(i, j)) es.push_back({i, j});
    return Graph(g.order(), es);
}

Graph loopify(const Graph& g) {
    std::vector<Edge> es = g.edges();
    for (int v = 0; v < g.order(); ++v)
        if (!g.has_loop(v)) es.push_back({v, v});
    return Graph(g.order(), es);
}

Graph graph_union(const Graph& a, const Graph& b) {
    std::vector<Edge> es = a.edges();
    es.insert(es.end(), b.edges().begin(), b.edges().end());
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());
    return Graph(std::max(a.order(), b.order()), es);
}

namespace {

int parse_int(std::string_view s, std::string_view what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw ParseError("expected integer for " + std::string(what) + ", got '" + std::string(s) + "'");
    return value;
}

int parse_order(std::string_view s) {
    int n = parse_int(s, "vertex count");
    if (n < 1 || n > kMaxOrder) throw PreconditionError("vertex count out of range: " + std::string(s));
    return n;
}

Graph parse_edge_literal(std::string_view body) {
    auto colon = body.find(':');
    int n = parse_order(body.substr(0, colon));
    std::vector<Edge> es;
    if (colon != std::string_view::npos) {
        std::string_view rest = body.substr(colon + 1);
        while (!rest.empty()) {
            auto comma = rest.find(',');
            std::string_view item = rest.substr(0, comma);
            auto dash = item.find('-');
            if (dash == std::string_view::npos) throw ParseError("bad edge '" + std::string(item) + "'");
            es.push_back({parse_int(item.substr(0, dash), "edge"), parse_int(item.substr(dash + 1), "edge")});
            rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
        }
    }
    return Graph(n, es);
}

}  // namespace

Graph build_named(std::string_view spec) {
    auto colon = spec.find(':');
    std::string_view name = spec.substr(0, colon);
    std::string_view arg = colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);
    auto need_arg = [&] {
        if (arg.empty()) throw ParseError("graph spec '" + std::string(name) + "' needs a parameter");
    };
    if (name == "spoon") return spoon();
    if (name == "octahedron") return octahedron();
    need_arg();
    if (name == "path") return path_graph(parse_order(arg));
    if (name == "cycle") return cycle_graph(parse_order(arg));
    if (name == "complete") return complete_graph(parse_order(arg));
    if (name == "complete-looped") return loopify(complete_graph(parse_order(arg)));
    if (name == "empty") return empty_graph(parse_order(arg));
    if (name == "star") return star_graph(parse_order(arg));
    if (name == "fan") return fan_graph(parse_order(arg));
    if (name == "complement") return complement(build_named(arg));
    if (name == "loopify") return loopify(build_named(arg));
    if (name == "edges") return parse_edge_literal(arg);
    throw ParseError("unknown graph spec '" + std::string(spec) + "'");
}

Graph read_graph(std::istream& in) {
    std::string line;
    int n = -1;
    std::vector<Edge> es;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "n") {
            if (n >= 0) throw ParseError("line " + std::to_string(lineno) + ": repeated 'n'");
            if (!(ls >> n) || n < 1 || n > kMaxOrder)
                throw ParseError("line " + std::to_string(lineno) + ": bad vertex count");
        } else if (tag == "e") {
            Edge e;
            if (n < 0) throw ParseError("line " + std::to_string(lineno) + ": edge before 'n'");
            if (!(ls >> e.u >> e.v)) throw ParseError("line " + std::to_string(lineno) + ": bad edge");
            es.push_back(e);
        } else {
            throw ParseError("line " + std::to_string(lineno) + ": unknown record '" + tag + "'");
        }
        std::string extra;
        if (ls >> extra) throw ParseError("line " + std::to_string(lineno) + ": trailing text");
    }
    if (n < 0) throw ParseError("graph file has no 'n' line");
    try {
        return Graph(n, es);
    } catch (const PreconditionError& e) {
        throw ParseError(e.what());
    }
}

void write_graph(std::ostream& out, const Graph& g) {
    out << "n " << g.order() << '\n';
    for (Edge e : g.edges()) out << "e " << e.u << ' ' << e.v << '\n';
}

Graph load_graph(std::string_view path_or_spec) {
    std::filesystem::path p{std::string(path_or_spec)};
    std::error_code ec;
    if (std::filesystem::is_regular_file(p, ec)) {
        std::ifstream in(p);
        if (!in) throw ParseError("cannot open " + p.string());
        return read_graph(in);
    }
    return build_named(path_or_spec);
}

InducedSubgraph induced_subgraph(const Graph& g, VertexSet s) {
    if (!s.subset_of(g.vertices())) throw PreconditionError("induced subgraph: vertex out of range");
    InducedSubgraph out;
    out.vertices = s.members();
    std::vector<int> pos(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < out.vertices.size(); ++i) pos[out.vertices[i]] = static_cast<int>(i);
    std::vector<Edge> es;
    for (Edge e : g.edges())
        if (s.contains(e.u) && s.contains(e.v)) es.push_back({pos[e.u], pos[e.v]});
    out.graph = Graph(static_cast<int>(out.vertices.size()), es);
    return out;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> s) {
    VertexSet set;
    for (Vertex v : s) {
        if (v < 0 || v >= g.order()) throw PreconditionError("induced subgraph: vertex out of range");
        set.insert(v);
    }
    return induced_subgraph(g, set);
}

namespace {

std::optional<Bipartition> two_colour(const Graph& g, VertexSet alive) {
    Bipartition parts;
    VertexSet seen;
    for (Vertex start : alive.members()) {
        if (seen.contains(start)) continue;
        std::vector<Vertex> queue{start};
        seen.insert(start);
        parts.part1.insert(start);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            Vertex v = queue[head];
            if (g.has_loop(v)) return std::nullopt;
            bool in1 = parts.part1.contains(v);
            for (Vertex w : (g.adjacency(v) & alive).members()) {
                if (!seen.contains(w)) {
                    seen.insert(w);
                    (in1 ? parts.part2 : parts.part1).insert(w);
                    queue.push_back(w);
                } else if (parts.part1.contains(w) == in1) {
                    return std::nullopt;
                }
            }
        }
    }
    return parts;
}

}  // namespace

std::optional<Bipartition> is_bipartite(const Graph& g) { return two_colour(g, g.vertices()); }

std::optional<AlmostBipartiteSplit> is_almost_bipartite(const Graph& g) {
    for (Vertex v = 0; v < g.order(); ++v) {
        VertexSet alive = g.vertices();
        alive.erase(v);
        if (auto parts = two_colour(g, alive)) return AlmostBipartiteSplit{v, *parts};
    }
    return std::nullopt;
}

std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<VertexSet> out;
    VertexSet seen;
    for (Vertex start = 0; start < g.order(); ++start) {
        if (seen.contains(start)) continue;
        VertexSet comp = VertexSet::of({start});
        VertexSet frontier = comp;
        while (!frontier.empty()) {
            VertexSet next;
            for (Vertex v : frontier.members()) next = next | g.adjacency(v);
            frontier = next - comp;
            comp = comp | next;
        }
        seen = seen | comp;
        out.push_back(comp);
    }
    return out;
}

bool is_connected(const Graph& g) { return g.order() > 0 && connected_components(g).size() == 1; }

bool is_forest(const Graph& g) {
    return g.loop_free() &&
           g.edge_count() + static_cast<int>(connected_components(g).size()) == g.order();
}

bool is_complete(const Graph& g) {
    return g.loop_free() && g.edge_count() == g.order() * (g.order() - 1) / 2;
}

int independence_number(const Graph& g) {
    if (g.order() > 30) throw ResourceLimit("independence number: graph too large for brute force");
    int best = 0;
    // grow independent sets by extension from the lowest free vertex
    auto rec = [&](auto&& self, VertexSet chosen, VertexSet allowed) -> void {
        best = std::max(best, chosen.size());
        if (chosen.size() + allowed.size() <= best) return;
        for (Vertex v : allowed.members()) {
            allowed.erase(v);
            if (!g.has_loop(v)) {
                VertexSet next = chosen;
                next.insert(v);
                self(self, next, allowed - g.adjacency(v));
            }
        }
    };
    rec(rec, VertexSet{}, g.vertices());
    return best;
}

FourPartiteGadget fourpartite_gadget(const Graph& g) {
    if (!g.loop_free()) throw PreconditionError("four-partite gadget needs a loop-free graph");
    int n = g.order();
    int total = n + 3 * g.edge_count();
    if (total > kMaxOrder) throw ResourceLimit("four-partite gadget exceeds 64 vertices");
    FourPartiteGadget out;
    out.role.assign(static_cast<std::size_t>(total), 0);
    std::vector<Edge> es;
    int next = n;
    for (Edge e : g.edges()) {
        int w = next, wu = next + 1, wv = next + 2;
        next += 3;
        out.role[w] = 1;
        out.role[wu] = 2;
        out.role[wv] = 3;
        const Edge added[] = {{e.u, w}, {e.u, wu}, {w, wu}, {w, wv}, {wu, wv}, {e.v, w}, {e.v, wv}};
        es.insert(es.end(), std::begin(added), std::end(added));
    }
    out.graph = Graph(total, es);
    return out;
}

std::uint64_t canonical_code(const Graph& g) {
    const int n = g.order();
    if (n > 8) throw ResourceLimit("canonical code: more than 8 vertices");
    // bit (i, j) for i <= j in a fixed triangular order; 36 bits at n = 8
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    auto slot = [](int i, int j) { return j * (j + 1) / 2 + i; };
    std::uint64_t best = ~std::uint64_t{0};
    do {
        std::uint64_t code = 0;
        for (Edge e : g.edges()) {
            int a = perm[e.u], b = perm[e.v];
            code |= std::uint64_t{1} << slot(std::min(a, b), std::max(a, b));
        }
        best = std::min(best, code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

std::vector<Graph> connected_graphs_up_to_iso(int n) {
    if (n < 1 || n > 6) throw ResourceLimit("graph enumeration: only 1 to 6 vertices");
    std::vector<Edge> pairs;
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < j; ++i) pairs.push_back({i, j});
    std::set<std::uint64_t> seen;
    std::vector<Graph> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
        std::vector<Edge> es;
        for (std::size_t k = 0; k < pairs.size(); ++k)
            if ((mask >> k) & 1U) es.push_back(pairs[k]);
        if (static_cast<int>(es.size()) < n - 1) continue;
        Graph g(n, es);
        if (!is_connected(g)) continue;
        if (seen.insert(canonical_code(g)).second) out.push_back(std::move(g));
    }
    return out;
}

}  // namespace homtoric
