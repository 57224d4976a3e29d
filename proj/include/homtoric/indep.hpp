#pragma once

#include "homtoric/graph.hpp"
#include "homtoric/homset.hpp"
#include "homtoric/monomial.hpp"
#include "homtoric/toric.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace homtoric {

/// d_v(m) = number of factors of m whose independent set contains v.
struct MultiDegree {
    std::vector<int> counts;
    int degree = 0;

    friend bool operator==(const MultiDegree&, const MultiDegree&) = default;
    friend auto operator<=>(const MultiDegree&, const MultiDegree&) = default;
};

/// Throws PreconditionError unless the system targets a spoon.
MultiDegree multidegree(const ToricSystem& sys, const ExponentVector& m);

struct MultigradingCheck {
    bool ok = true;
    std::size_t monomials = 0;
    std::size_t classes = 0;
    std::string failure;
};

/// Compares the partition of monomials of degree 1..max_degree by A-image with the
/// partition by multidegree. They agree iff the multigrading detects membership.
MultigradingCheck check_multigrading(const ToricSystem& sys, int max_degree);

enum class MoveKind { bipartite, uncovered, covered, mixed };

std::string_view to_string(MoveKind kind);

/// An oriented basis with one tag per element.
struct IndepBasis {
    OrientedBasis basis;
    std::vector<MoveKind> kinds;
};

/// Meet/join binomials r_{A,B} r_{C,D} -> r_{A&C, B|D} r_{A|C, B&D} over incomparable
/// pairs. Needs a loop-free bipartite source.
IndepBasis bipartite_grobner(const ToricSystem& sys);

/// Uncovered and covered meet/join moves, mixed moves that shift E from the open side
/// to the covered side, and single-vertex transfers from the covered side back.
IndepBasis almost_bipartite_grobner(const ToricSystem& sys, const AlmostBipartiteSplit& split);
/// Same, with the lowest valid apex. Throws when the source is not almost bipartite.
IndepBasis almost_bipartite_grobner(const ToricSystem& sys);

/// Bipartite construction when it applies, otherwise the almost-bipartite one.
IndepBasis independence_grobner(const ToricSystem& sys);

/// Applies the first applicable move until none applies. For bipartite bases the
/// chain weight is checked to grow at every step. Throws InternalError past step_cap.
ExponentVector normal_form(const ToricSystem& sys, const IndepBasis& basis, const ExponentVector& m,
                           std::size_t step_cap = 1'000'000);

/// Independent sets of size alpha(G), as a subsystem, with its Markov basis.
struct TopGraded {
    ToricSystem system;
    std::vector<Variable> parent;  ///< variable i of system is parent[i] of the full system
    int alpha = 0;
    MarkovResult markov;
};

TopGraded top_graded(const ToricSystem& sys, int cap, const FiberOptions& options = {});

/// System for complement(C_2k) -> spoon and its basis: the degree-k cycle binomial
/// followed by the quadrics.
struct ComplementCycle {
    ToricSystem system;
    Binomial cycle;
    OrientedBasis basis;
};

ComplementCycle complement_cycle_basis(int k, const FiberOptions& options = {});

/// The maximal independent set of the gadget graph attached to an independent set I of G.
VertexSet gadget_lift(const Graph& g, const FourPartiteGadget& gadget, VertexSet independent);

}  // namespace homtoric
