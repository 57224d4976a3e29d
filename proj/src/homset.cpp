#include "homtoric/homset.hpp"

#include "homtoric/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_map>

namespace homtoric {

namespace {

constexpr std::uint64_t kDenseLimit = std::uint64_t{1} << 20;

bool small_code_space(int base, int length, std::uint64_t limit) {
    std::uint64_t space = 1;
    for (int i = 0; i < length; ++i) {
        space *= static_cast<std::uint64_t>(std::max(base, 1));
        if (space > limit) return false;
    }
    return true;
}

}  // namespace

HomSet::HomSet(Graph source, Graph target, std::vector<VertexMap> maps)
    : source_(std::move(source)), target_(std::move(target)), maps_(std::move(maps)) {
    for (std::size_t i = 0; i < maps_.size(); ++i) {
        if (!is_homomorphism(source_, target_, maps_[i]))
            throw PreconditionError("HomSet: map " + map_literal(maps_[i]) + " is not a homomorphism");
        if (i > 0 && !(maps_[i - 1] < maps_[i])) throw PreconditionError("HomSet: maps not strictly sorted");
    }
    if (maps_.size() < std::numeric_limits<std::uint32_t>::max() &&
        small_code_space(target_.order(), source_.order(), kDenseLimit)) {
        std::uint64_t space = 1;
        for (int i = 0; i < source_.order(); ++i) space *= static_cast<std::uint64_t>(target_.order());
        dense_.assign(space, 0);
        for (std::size_t i = 0; i < maps_.size(); ++i) dense_[encode(maps_[i])] = static_cast<std::uint32_t>(i + 1);
    }
}

std::uint64_t HomSet::encode(std::span<const Vertex> map) const {
    std::uint64_t code = 0;
    for (Vertex v : map) code = code * static_cast<std::uint64_t>(target_.order()) + static_cast<std::uint64_t>(v);
    return code;
}

std::optional<std::size_t> HomSet::index_of(std::span<const Vertex> map) const {
    if (map.size() != static_cast<std::size_t>(source_.order())) return std::nullopt;
    for (Vertex v : map)
        if (v < 0 || v >= target_.order()) return std::nullopt;
    if (!dense_.empty()) {
        std::uint32_t slot = dense_[encode(map)];
        if (slot == 0) return std::nullopt;
        return slot - 1;
    }
    auto it = std::lower_bound(maps_.begin(), maps_.end(), map, [](const VertexMap& a, std::span<const Vertex> b) {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    });
    if (it == maps_.end() || !std::equal(it->begin(), it->end(), map.begin(), map.end())) return std::nullopt;
    return static_cast<std::size_t>(it - maps_.begin());
}

bool is_homomorphism(const Graph& g, const Graph& h, std::span<const Vertex> map) {
    if (map.size() != static_cast<std::size_t>(g.order())) return false;
    for (Vertex v : map)
        if (v < 0 || v >= h.order()) return false;
    return std::all_of(g.edges().begin(), g.edges().end(),
                       [&](Edge e) { return h.adjacent(map[e.u], map[e.v]); });
}

HomSet enumerate(const Graph& g, const Graph& h, const EnumerateOptions& options) {
    int n = g.order();
    if (n > 0 && h.order() > 0 &&
        static_cast<double>(n) * std::log2(static_cast<double>(h.order())) > std::log2(options.max_search_space))
        throw ResourceLimit("homomorphism search space |V(H)|^|V(G)| = " + std::to_string(h.order()) + "^" +
                            std::to_string(n) + " exceeds the cap");

    // BFS order, each component rooted at its lowest vertex.
    std::vector<Vertex> order;
    VertexSet seen;
    for (Vertex start = 0; start < n; ++start) {
        if (seen.contains(start)) continue;
        seen.insert(start);
        std::size_t head = order.size();
        order.push_back(start);
        for (; head < order.size(); ++head)
            for (Vertex w : g.neighbors(order[head]).members())
                if (!seen.contains(w)) {
                    seen.insert(w);
                    order.push_back(w);
                }
    }

    VertexSet looped = h.looped_vertices();
    VertexMap map(static_cast<std::size_t>(n), -1);
    std::vector<VertexMap> found;
    // domain of a vertex given the images of its already-assigned neighbours
    auto domain = [&](Vertex v) {
        VertexSet d = h.vertices();
        if (g.has_loop(v)) d = d & looped;
        for (Vertex w : g.neighbors(v).members())
            if (map[w] >= 0) d = d & h.adjacency(map[w]);
        return d;
    };
    auto rec = [&](auto&& self, std::size_t depth) -> void {
        if (depth == order.size()) {
            found.push_back(map);
            return;
        }
        Vertex v = order[depth];
        for (Vertex c : domain(v).members()) {
            map[v] = c;
            bool alive = true;
            for (Vertex w : g.neighbors(v).members())
                if (map[w] < 0 && domain(w).empty()) {
                    alive = false;
                    break;
                }
            if (alive) self(self, depth + 1);
        }
        map[v] = -1;
    };
    if (n == 0) {
        found.emplace_back();
    } else if (h.order() > 0) {
        rec(rec, 0);
    }
    std::sort(found.begin(), found.end());
    return HomSet(g, h, std::move(found));
}

VertexMap restrict_map(std::span<const Vertex> phi, VertexSet s) {
    VertexMap out;
    for (Vertex v : s.members()) {
        if (v >= static_cast<Vertex>(phi.size())) throw PreconditionError("restrict: vertex out of range");
        out.push_back(phi[v]);
    }
    return out;
}

VertexMap restrict_map(std::span<const Vertex> phi, std::span<const Vertex> sorted_vertices) {
    VertexMap out;
    out.reserve(sorted_vertices.size());
    for (Vertex v : sorted_vertices) {
        if (v < 0 || v >= static_cast<Vertex>(phi.size())) throw PreconditionError("restrict: vertex out of range");
        out.push_back(phi[v]);
    }
    return out;
}

VertexMap compose(const Graph& g1, std::span<const Vertex> phi, const Graph& g2, std::span<const Vertex> psi,
                  const Graph& g3) {
    if (!is_homomorphism(g1, g2, phi)) throw PreconditionError("compose: first map is not a homomorphism");
    if (!is_homomorphism(g2, g3, psi)) throw PreconditionError("compose: second map is not a homomorphism");
    VertexMap out(phi.size());
    for (std::size_t i = 0; i < phi.size(); ++i) out[i] = psi[phi[i]];
    return out;
}

std::optional<Vertex> spoon_unlooped_vertex(const Graph& h) {
    if (h.order() != 2 || h.edge_count() != 2 || !h.adjacent(0, 1)) return std::nullopt;
    if (h.has_loop(0) == h.has_loop(1)) return std::nullopt;
    return h.has_loop(0) ? 1 : 0;
}

IndependenceEncoding indep_encode(const HomSet& homs) {
    auto unlooped = spoon_unlooped_vertex(homs.target());
    if (!unlooped) throw PreconditionError("independence encoding needs a spoon target");
    IndependenceEncoding enc{homs, {}, *unlooped};
    enc.sets.reserve(homs.size());
    for (const VertexMap& m : homs) {
        VertexSet s;
        for (std::size_t v = 0; v < m.size(); ++v)
            if (m[v] == *unlooped) s.insert(static_cast<Vertex>(v));
        if (!homs.source().is_independent(s)) throw InternalError("preimage of unlooped vertex not independent");
        enc.sets.push_back(s);
    }
    return enc;
}

IndependenceEncoding indep_encode(const Graph& g) { return indep_encode(enumerate(g, spoon())); }

std::optional<std::size_t> IndependenceEncoding::index_of(VertexSet s) const {
    VertexMap m(static_cast<std::size_t>(homs.source().order()), 1 - unlooped);
    for (Vertex v : s.members()) {
        if (v >= static_cast<Vertex>(m.size())) return std::nullopt;
        m[v] = unlooped;
    }
    return homs.index_of(m);
}

std::string map_literal(std::span<const Vertex> map, bool one_based) {
    std::string out = "[";
    for (std::size_t i = 0; i < map.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(one_based ? map[i] + 1 : map[i]);
    }
    out += ']';
    return out;
}

}  // namespace homtoric
