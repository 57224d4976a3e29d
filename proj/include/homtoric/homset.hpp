#pragma once

#include "homtoric/graph.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace homtoric {

/// Vertex map G -> H as an array indexed by V(G).
using VertexMap = std::vector<Vertex>;

struct EnumerateOptions {
    /// Upper bound on |V(H)|^|V(G)|; larger searches throw ResourceLimit.
    double max_search_space = 1099511627776.0;  // 2^40
};

/// All homomorphisms G -> H sorted lexicographically by map array.
/// The position of a map is its variable index in the homomorphism ring.
class HomSet {
public:
    HomSet() = default;
    /// Takes maps that are already sorted, distinct and edge-preserving (checked).
    HomSet(Graph source, Graph target, std::vector<VertexMap> maps);

    const Graph& source() const { return source_; }
    const Graph& target() const { return target_; }
    std::size_t size() const { return maps_.size(); }
    bool empty() const { return maps_.empty(); }
    const VertexMap& operator[](std::size_t i) const { return maps_[i]; }
    const std::vector<VertexMap>& maps() const { return maps_; }
    auto begin() const { return maps_.begin(); }
    auto end() const { return maps_.end(); }

    std::optional<std::size_t> index_of(std::span<const Vertex> map) const;

private:
    std::uint64_t encode(std::span<const Vertex> map) const;

    Graph source_;
    Graph target_;
    std::vector<VertexMap> maps_;
    // Dense code -> index + 1 table, built when |V(H)|^|V(G)| is small.
    std::vector<std::uint32_t> dense_;
};

HomSet enumerate(const Graph& g, const Graph& h, const EnumerateOptions& options = {});

bool is_homomorphism(const Graph& g, const Graph& h, std::span<const Vertex> map);

/// phi restricted to G[S], in the increasing relabeling used by induced_subgraph.
VertexMap restrict_map(std::span<const Vertex> phi, VertexSet s);
VertexMap restrict_map(std::span<const Vertex> phi, std::span<const Vertex> sorted_vertices);

/// psi o phi, with both maps checked against their graphs.
VertexMap compose(const Graph& g1, std::span<const Vertex> phi, const Graph& g2, std::span<const Vertex> psi,
                  const Graph& g3);

/// Hom(G, spoon) <-> independent sets of G, keyed by the preimage of the unlooped vertex.
struct IndependenceEncoding {
    HomSet homs;
    std::vector<VertexSet> sets;  ///< sets[i] belongs to homs[i]
    Vertex unlooped = 0;

    std::optional<std::size_t> index_of(VertexSet s) const;
};

IndependenceEncoding indep_encode(const Graph& g);
/// Encoding for an existing Hom(G, spoon) set, which must target a spoon-shaped graph.
IndependenceEncoding indep_encode(const HomSet& homs);

/// Vertex of H without a loop when H is a spoon (2 vertices, one loop, one edge).
std::optional<Vertex> spoon_unlooped_vertex(const Graph& h);

std::string map_literal(std::span<const Vertex> map, bool one_based = false);

}  // namespace homtoric
