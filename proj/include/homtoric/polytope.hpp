#pragma once

#include "homtoric/graph.hpp"
#include "homtoric/linalg.hpp"
#include "homtoric/toric.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace homtoric {

/// Convex hull of the columns of `points`. Every column is assumed to be a vertex
/// (true for the 0/1 point sets built here).
struct Polytope {
    IntMatrix points;  ///< ambient dimension x vertex count
    int dim = -1;      ///< affine dimension, -1 when empty

    std::size_t vertex_count() const { return static_cast<std::size_t>(points.cols()); }
    Eigen::Index ambient_dim() const { return points.rows(); }
};

Polytope polytope_from_points(IntMatrix points);
/// P(G -> H): one vertex per homomorphism, the columns of the separator matrix.
Polytope build_polytope(const ToricSystem& sys);
/// Indicator vectors of the independent sets of G, in increasing mask order.
Polytope stable_set_polytope(const Graph& g);

/// normal . x <= offset on the polytope, with equality exactly on `vertices`.
struct Facet {
    IntVector normal;
    std::int64_t offset = 0;
    std::vector<std::size_t> vertices;
};

struct FacetOptions {
    std::size_t vertex_cap = 30;
    int dim_cap = 8;
    unsigned threads = 1;
};

struct FacetDescription {
    int dim = -1;
    std::vector<Facet> facets;  ///< sorted by (normal, offset)
};

/// Brute force over affinely independent vertex subsets of size dim. Normals use the
/// coordinates of an affine basis of the hull (the other coordinates get 0), so the
/// result is primitive and unique. Throws ResourceLimit past the caps.
FacetDescription facets(const Polytope& p, const FacetOptions& options = {});

struct Simplicity {
    std::vector<int> counts;  ///< facets through each vertex
    bool simple = true;
};

Simplicity simplicity(const Polytope& p, const FacetDescription& f);

/// P(G -> spoon) sent to R^V(G) by keeping, for each vertex v, the coordinate of a
/// piece map sending v to the unlooped vertex and the rest of the piece to the loop.
/// Isolated vertices use their own vertex piece.
struct StableSetImage {
    ToricSystem system;
    Polytope image;                 ///< V(G) x Hom(G, spoon)
    std::vector<std::size_t> rows;  ///< kept row per vertex of G
    std::vector<VertexSet> sets;    ///< preimage of the unlooped vertex, per homomorphism
};

/// Throws PreconditionError on loops in G; InternalError if the map is not an affine bijection.
StableSetImage stable_set_iso(const Graph& g);

/// Linear functional f >= 0 on P(G -> H2) whose zero set is P(G -> H1): the sum of the
/// rows (e, rho) of H2's system whose piece map uses a deleted vertex or edge.
struct FaceCertificate {
    ToricSystem system;                ///< G -> H2
    IntVector functional;              ///< one entry per row of `system`
    std::vector<std::string> deleted;  ///< deleted vertices and edges of H2, as text
    std::vector<Variable> face;        ///< variables with f = 0, ascending
    std::vector<Variable> embedded;    ///< Hom(G, H1) placed in Hom(G, H2), ascending
    bool ok = false;                   ///< face == embedded and f >= 1 elsewhere
};

/// H1 shares H2's labels; `removed` lists deleted vertices, which must carry no H1 edge.
/// H1's edges must be edges of H2. Throws PreconditionError otherwise.
FaceCertificate face_check(const Graph& g, const Graph& h2, const Graph& h1, VertexSet removed = {});

}  // namespace homtoric
