#pragma once

#include "homtoric/graph.hpp"
#include "homtoric/monomial.hpp"
#include "homtoric/toric.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace homtoric {

/// G = G1 u G2 given as one labelled graph and the two vertex sides. Each side is
/// the induced subgraph on its vertices, relabelled increasingly.
struct GlueSpec {
    Graph whole;
    VertexSet side1;
    VertexSet side2;
};

/// Checks that the sides cover the graph and no edge runs between the two private parts,
/// so the intersection is induced in both sides.
GlueSpec glue_spec(const Graph& whole, VertexSet side1, VertexSet side2);
/// G2's vertex v is identified with label v + offset; labels below n1 belong to G1.
/// Edges of the two graphs must agree on the shared labels.
GlueSpec glue_spec(const Graph& g1, const Graph& g2, int offset);

/// Raw lifted element: factor lists in no particular order.
using GlueVisitor = std::function<void(std::span<const Variable> plus, std::span<const Variable> minus)>;

/// The four toric systems of a gluing and the (side1 map, side2 map) -> union map table.
class GlueContext {
public:
    GlueContext(GlueSpec spec, const Graph& target, const EnumerateOptions& options = {});

    const GlueSpec& spec() const { return spec_; }
    const ToricSystem& whole() const { return whole_; }
    const ToricSystem& side(int i) const { return i == 1 ? side1_ : side2_; }
    const ToricSystem& meet() const { return meet_; }
    /// Columns of the intersection system (with a row of ones) are independent.
    bool codim_zero() const { return codim_zero_; }

    /// Variable of the union map that restricts to u on side 1 and w on side 2.
    std::optional<Variable> join(Variable u, Variable w) const;

    /// Lift(B_i): every pairing of factors with equal intersection restriction, and every
    /// common extension over the other side. Repeated outputs are possible.
    void visit_lift(int side, const OrientedBasis& basis, const GlueVisitor& visit) const;
    /// Quad, oriented with the diagonal r(u1,w1) r(u2,w2) leading for u1 < u2, w1 < w2.
    void visit_quad(const GlueVisitor& visit) const;

private:
    struct Class {
        std::vector<Variable> u;        ///< side-1 maps in this class
        std::vector<Variable> w;        ///< side-2 maps in this class
        std::vector<Variable> table;    ///< u-rank * |w| + w-rank -> union variable
    };

    GlueSpec spec_;
    ToricSystem whole_, side1_, side2_, meet_;
    bool codim_zero_ = false;
    std::vector<Class> classes_;
    std::vector<std::uint32_t> class1_, rank1_, class2_, rank2_;
};

bool check_codim_zero(const GlueSpec& spec, const Graph& target);

struct GlueOptions {
    /// Largest number of distinct elements kept in memory.
    std::size_t max_elements = 2'000'000;
    EnumerateOptions enumerate;
};

/// Lift(B1), Lift(B2), Quad in that order, deduplicated up to sign. Lifted elements
/// keep the orientation of their source, so Groebner inputs give a Groebner output.
/// Throws PreconditionError without codimension zero.
OrientedBasis glue_basis(const GlueContext& ctx, const OrientedBasis& b1, const OrientedBasis& b2,
                         const GlueOptions& options = {});

/// Number of emitted elements per degree, counted with repetition, without storing them.
struct DegreeProfile {
    std::map<int, std::uint64_t> counts;
    std::uint64_t total = 0;
};

DegreeProfile glue_profile(const GlueContext& ctx, const OrientedBasis& b1, const OrientedBasis& b2);

struct PipelineResult {
    ToricSystem system;
    OrientedBasis basis;
    int steps = 0;
    /// Normality carried through the gluings, when the base cases are known normal.
    std::optional<bool> normal;
};

/// Peels the lowest leaf of each tree and glues components over the empty graph.
PipelineResult forest_pipeline(const Graph& g, const Graph& target, const GlueOptions& options = {});

/// True for triangulations of a polygon: 2-trees whose edges lie in at most two triangles.
bool is_maximal_outerplanar(const Graph& g);

struct OuterplanarOptions {
    GlueOptions glue;
    /// Basis of I(K3 -> H) over build_system(complete_graph(3), H); computed when absent.
    std::optional<OrientedBasis> k3_basis;
    int k3_cap = 4;
    /// Whether I(K3 -> H) is known normal.
    std::optional<bool> k3_normal;
};

/// Peels the lowest ear and glues its triangle back along the chord.
PipelineResult outerplanar_pipeline(const Graph& g, const Graph& target, const OuterplanarOptions& options = {});

/// Same recursion, but the last gluing is only counted.
DegreeProfile outerplanar_profile(const Graph& g, const Graph& target, const OuterplanarOptions& options = {});

}  // namespace homtoric
