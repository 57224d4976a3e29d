#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace homtoric {

using Vertex = int;

/// Hard limit on graph order; vertex sets are 64-bit masks.
inline constexpr int kMaxOrder = 64;

/// A set of vertices of a graph with at most 64 vertices.
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

    static VertexSet of(std::initializer_list<Vertex> vs) {
        VertexSet s;
        for (Vertex v : vs) s.insert(v);
        return s;
    }
    static VertexSet range(int n) {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool contains(Vertex v) const { return (bits_ >> v) & 1U; }
    constexpr void insert(Vertex v) { bits_ |= std::uint64_t{1} << v; }
    constexpr void erase(Vertex v) { bits_ &= ~(std::uint64_t{1} << v); }
    constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
    constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }
    /// Lowest member; undefined on the empty set.
    constexpr Vertex front() const { return std::countr_zero(bits_); }

    std::vector<Vertex> members() const;

    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
    friend constexpr bool operator==(VertexSet, VertexSet) = default;
    /// Orders by sorted member list, so {0,5} < {1}.
    friend std::strong_ordering operator<=>(VertexSet a, VertexSet b);

private:
    std::uint64_t bits_ = 0;
};

/// "{0,2}" style rendering; `one_based` shifts labels by one.
std::string to_string(VertexSet s, bool one_based = false);

/// Unordered vertex pair stored with u <= v; u == v is a loop.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;
    constexpr bool is_loop() const { return u == v; }
    friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Finite graph on vertices 0..n-1 with optional loops and no multi-edges.
/// Immutable once built.
class Graph {
public:
    Graph() = default;
    explicit Graph(int order);
    /// Throws PreconditionError on out-of-range endpoints or duplicate edges.
    Graph(int order, std::span<const Edge> edges);
    Graph(int order, std::initializer_list<Edge> edges)
        : Graph(order, std::span<const Edge>(edges.begin(), edges.size())) {}

    int order() const { return order_; }
    /// Sorted, each edge once, loops as {v,v}.
    const std::vector<Edge>& edges() const { return edges_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    bool adjacent(Vertex a, Vertex b) const { return adjacency_[a].contains(b); }
    bool has_loop(Vertex v) const { return adjacency_[v].contains(v); }
    bool loop_free() const;
    /// Neighbourhood N(v), loops excluded.
    VertexSet neighbors(Vertex v) const {
        VertexSet s = adjacency_[v];
        s.erase(v);
        return s;
    }
    /// Adjacency row including v itself when v carries a loop.
    VertexSet adjacency(Vertex v) const { return adjacency_[v]; }
    /// N(S) = union of N(v) over S, minus S.
    VertexSet neighbors(VertexSet s) const;
    VertexSet looped_vertices() const;
    VertexSet vertices() const { return VertexSet::range(order_); }
    std::vector<Vertex> isolated_vertices() const;

    bool is_independent(VertexSet s) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.order_ == b.order_ && a.edges_ == b.edges_;
    }

private:
    int order_ = 0;
    std::vector<Edge> edges_;
    std::vector<VertexSet> adjacency_;
};

struct Bipartition {
    VertexSet part1;
    VertexSet part2;
};

/// A vertex whose deletion leaves a loop-free bipartite graph, and that bipartition
/// (in the original labels, apex excluded from both parts).
struct AlmostBipartiteSplit {
    Vertex apex = 0;
    Bipartition parts;
};

struct InducedSubgraph {
    Graph graph;
    /// vertices[i] is the original label of vertex i of `graph`.
    std::vector<Vertex> vertices;
};

/// Gadget graph plus the role of each vertex: 0 = original vertex,
/// 1 = w_uv, 2 = w_{u*v}, 3 = w_{uv*}. Roles form a proper 4-partition.
struct FourPartiteGadget {
    Graph graph;
    std::vector<int> role;
};

// Constructors for named families.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph empty_graph(int n);
/// K_{1,k}: centre 0, leaves 1..k.
Graph star_graph(int leaves);
/// Vertex 0 joined to every vertex of the path 1..n-1; a triangulated n-gon.
Graph fan_graph(int n);
/// The independence target: vertex 0 unlooped, vertex 1 looped, edge 0-1.
Graph spoon();
/// K6 minus the perfect matching {0,1},{2,3},{4,5}; those are the antipodal pairs.
Graph octahedron();
/// Loop-free complement of the loop-free part of g.
Graph complement(const Graph& g);
/// Attach a loop to every vertex.
Graph loopify(const Graph& g);
/// Union of two graphs whose vertices with equal labels are identified.
Graph graph_union(const Graph& a, const Graph& b);

/// Parses a named spec: path:n, cycle:n, complete:n, complete-looped:n, empty:n,
/// star:k, fan:n, spoon, octahedron, complement:<spec>, loopify:<spec>,
/// edges:<n>:<u>-<v>,<u>-<v>,...
Graph build_named(std::string_view spec);

/// Text format: "n <count>" then "e <u> <v>" lines; '#' starts a comment.
Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);
/// A path to a graph file if one exists, otherwise a named spec.
Graph load_graph(std::string_view path_or_spec);

InducedSubgraph induced_subgraph(const Graph& g, VertexSet s);
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> s);

/// BFS 2-colouring, each component started from its lowest vertex into part1.
std::optional<Bipartition> is_bipartite(const Graph& g);
/// Lowest apex whose removal leaves a loop-free bipartite graph.
std::optional<AlmostBipartiteSplit> is_almost_bipartite(const Graph& g);

bool is_connected(const Graph& g);
/// Loop-free and acyclic.
bool is_forest(const Graph& g);
bool is_complete(const Graph& g);
std::vector<VertexSet> connected_components(const Graph& g);
/// Size of a largest independent set (brute force over bitmasks).
int independence_number(const Graph& g);

FourPartiteGadget fourpartite_gadget(const Graph& g);

/// Smallest adjacency code over all relabellings; equal codes iff isomorphic.
/// Throws ResourceLimit above 8 vertices.
std::uint64_t canonical_code(const Graph& g);
/// Connected loop-free graphs on n vertices, one per isomorphism class, n <= 6.
std::vector<Graph> connected_graphs_up_to_iso(int n);

}  // namespace homtoric
