#pragma once

#include "homtoric/homset.hpp"
#include "homtoric/linalg.hpp"
#include "homtoric/monomial.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace homtoric {

/// One row (e, rho) of the separator matrix. A piece is an edge of G, or an
/// isolated vertex of G (vertex_piece), so every column has one entry per piece.
struct SeparatorRow {
    int piece = 0;
    Edge where;
    bool vertex_piece = false;
    Vertex image_u = 0;  ///< rho(where.u)
    Vertex image_v = 0;  ///< rho(where.v); equals image_u on vertex pieces and loops
};

/// The toric system of I(G -> H): columns are homomorphisms, rows are piece maps.
class ToricSystem {
public:
    ToricSystem() = default;
    explicit ToricSystem(HomSet homs);

    const HomSet& homs() const { return homs_; }
    const Graph& source() const { return homs_.source(); }
    const Graph& target() const { return homs_.target(); }
    std::size_t variable_count() const { return homs_.size(); }
    std::size_t row_count() const { return rows_.size(); }
    int piece_count() const { return piece_count_; }
    const std::vector<SeparatorRow>& rows() const { return rows_; }
    /// Dense 0/1 matrix, rows x variables.
    const IntMatrix& matrix() const { return matrix_; }
    /// Row indices hit by column v, one per piece, ascending.
    std::span<const std::uint32_t> column(Variable v) const {
        return {column_rows_.data() + static_cast<std::size_t>(v) * piece_count_,
                static_cast<std::size_t>(piece_count_)};
    }
    const std::vector<bool>& used_rows() const { return used_; }

    IntVector image(const ExponentVector& m) const;
    /// True iff A * plus == A * minus. Throws on out-of-range variables.
    bool membership(const Binomial& b) const;

    /// Same rows, restricted to the given ascending variables.
    ToricSystem subsystem(std::span<const Variable> variables) const;

private:
    HomSet homs_;
    int piece_count_ = 0;
    std::vector<SeparatorRow> rows_;
    IntMatrix matrix_;
    std::vector<std::uint32_t> column_rows_;
    std::vector<bool> used_;
};

ToricSystem build_system(const Graph& g, const Graph& h, const EnumerateOptions& options = {});

struct FiberOptions {
    /// Largest number of degree-t monomials enumerated in one layer.
    std::size_t max_monomials = 10'000'000;
    unsigned threads = 1;
};

/// All monomials of one degree, grouped into fibers by their A-image.
class DegreeLayer {
public:
    DegreeLayer(const ToricSystem& sys, int degree, const FiberOptions& options = {});

    int degree() const { return degree_; }
    std::size_t monomial_count() const { return count_; }
    /// Sorted factor list of monomial i; monomials are in lexicographic order.
    std::span<const Variable> monomial(std::size_t i) const {
        return {flat_.data() + i * static_cast<std::size_t>(degree_), static_cast<std::size_t>(degree_)};
    }
    ExponentVector monomial_vector(std::size_t i) const;
    /// Fibers with at least two monomials, ordered by their smallest member.
    std::size_t fiber_count() const { return fiber_start_.empty() ? 0 : fiber_start_.size() - 1; }
    /// Members of fiber f, ascending.
    std::span<const std::uint32_t> fiber(std::size_t f) const {
        return {fiber_members_.data() + fiber_start_[f], fiber_start_[f + 1] - fiber_start_[f]};
    }
    /// Nontrivial fiber containing monomial i, or -1.
    std::int64_t fiber_of(std::size_t i) const { return fiber_of_[i]; }
    std::optional<std::size_t> find(std::span<const Variable> sorted_factors) const;

private:
    int degree_ = 0;
    std::size_t count_ = 0;
    std::vector<Variable> flat_;
    std::vector<std::uint32_t> fiber_members_;
    std::vector<std::size_t> fiber_start_;
    std::vector<std::int64_t> fiber_of_;
};

/// Number of degree-t monomials in n variables, saturating at SIZE_MAX.
std::size_t monomial_count(std::size_t variables, int degree);

struct MarkovResult {
    OrientedBasis basis;
    int cap = 0;
    /// added[t] = number of elements of degree t (index 0 unused).
    std::vector<std::size_t> added;
    /// No new elements at the cap and one below.
    bool stable = false;
    /// A proven bound on the width of this system, when one of the known cases applies.
    std::optional<int> certified_bound;
    /// stable and certified_bound <= cap.
    bool complete = false;
};

/// Minimal generating set up to degree `cap`, built layer by layer. Each fiber gets
/// one binomial per extra component, joining the smallest monomial of the first
/// component to the smallest of each other one; the lex-smaller side leads.
MarkovResult markov_basis(const ToricSystem& sys, int cap, const FiberOptions& options = {});

struct WidthResult {
    int width = 0;
    /// width is proven exact (a certified bound applies), otherwise a value up to cap.
    bool exact = false;
    bool stable = false;
    int cap = 0;
};

WidthResult markov_width(const ToricSystem& sys, int cap, const FiberOptions& options = {});

/// Known width bounds: trivial ideal (independent columns) gives 0, complete G into
/// a spoon gives 0, (almost) bipartite G into a spoon gives 2, a forest G gives 2.
std::optional<int> certified_degree_bound(const ToricSystem& sys);

struct BasisCheck {
    bool ok = true;
    int degree = 0;           ///< degree of the first failing fiber
    std::size_t fiber = 0;    ///< its index in canonical fiber order
    std::string reason;
    std::size_t fibers_checked = 0;
};

/// Every fiber up to `cap` is connected under the moves of `basis`.
BasisCheck verify_markov(const ToricSystem& sys, const OrientedBasis& basis, int cap,
                         const FiberOptions& options = {});

/// Same check by explicit fiber graphs (slow; used as an oracle).
BasisCheck verify_markov_explicit(const ToricSystem& sys, const OrientedBasis& basis, int cap,
                                  const FiberOptions& options = {});

/// Every directed fiber graph up to `cap` (arcs lead -> trail) is connected,
/// acyclic, and has exactly one sink.
BasisCheck verify_grobner(const ToricSystem& sys, const OrientedBasis& basis, int cap,
                          const FiberOptions& options = {});

/// Keep the elements whose variables all map into the smaller target, reindexed.
OrientedBasis restrict_basis(const ToricSystem& big, const OrientedBasis& basis, const ToricSystem& small);

struct NormalityWitness {
    bool verified = false;
    bool normal = false;
    bool cohen_macaulay = false;
    bool koszul = false;
    int checked_degree = 0;
    std::string note;
};

/// Records what a verified Groebner basis implies: square-free gives normal and
/// Cohen-Macaulay, quadratic square-free adds Koszul. Verification runs up to twice
/// the basis degree; if that is out of reach the witness stays silent. Throws
/// PreconditionError when the basis fails verification.
NormalityWitness normality_witness(const ToricSystem& sys, const OrientedBasis& basis,
                                   const FiberOptions& options = {});

}  // namespace homtoric
