#pragma once

#include "homtoric/graph.hpp"
#include "homtoric/indep.hpp"
#include "homtoric/monomial.hpp"
#include "homtoric/toric.hpp"

#include <cstddef>
#include <cstdint>
#include <istream>
#include <ostream>
#include <string_view>
#include <utility>
#include <vector>

namespace homtoric {

/// Finite poset on 0..n-1, stored as its transitively closed order relation.
class Poset {
public:
    Poset() = default;
    /// Relations a < b (covers or not); the closure is taken here. Throws
    /// PreconditionError on a cycle or an out-of-range element.
    Poset(int n, const std::vector<std::pair<int, int>>& less);

    int size() const { return n_; }
    bool leq(int a, int b) const { return (up_[a] >> b) & 1U; }
    /// Elements below or equal to a.
    VertexSet down(int a) const { return VertexSet(down_[a]); }
    /// Hasse diagram, sorted.
    std::vector<std::pair<int, int>> covers() const;

    friend bool operator==(const Poset&, const Poset&) = default;

private:
    int n_ = 0;
    std::vector<std::uint64_t> up_, down_;
};

Poset chain_poset(int n);
Poset antichain_poset(int n);

/// "p <count>" then "c <a> <b>" lines for a < b; '#' starts a comment.
Poset read_poset(std::istream& in);
void write_poset(std::ostream& out, const Poset& p);
Poset load_poset(std::string_view path);

/// One representative per isomorphism class on n elements, each labelled so that
/// a < b implies a < b as integers.
std::vector<Poset> posets_up_to_iso(int n);

/// Downward closed subsets, sorted by (size, members). Throws ResourceLimit past `cap`.
std::vector<VertexSet> lower_ideals(const Poset& p, std::size_t cap = 1U << 20);

/// Lower copy of element i is vertex 2i, upper copy 2i+1; (p,l) - (q,u) iff p >= q.
Graph build_bp(const Poset& p);

VertexSet xi(const Poset& p, VertexSet lower_ideal);

struct XiCheck {
    std::vector<VertexSet> ideals;
    std::vector<VertexSet> images;          ///< xi of each ideal
    std::vector<VertexSet> maximal_sets;    ///< maximal independent sets of B_P, ascending bits
    int alpha = 0;                          ///< independence number of B_P
    bool bijective = false;
};

/// Brute force over subsets of B_P; throws ResourceLimit past 12 elements.
XiCheck xi_bijection(const Poset& p);

struct HibiComparison {
    std::vector<VertexSet> ideals;
    TopGraded top;
    std::vector<Variable> ideal_variable;  ///< ideal i -> variable of top.system
    /// r_{L1} r_{L2} - r_{L1 u L2} r_{L1 n L2} for incomparable L1, L2, over top.system.
    OrientedBasis hibi;
    /// Elements of the bipartite basis of B_P supported on top-degree sets.
    OrientedBasis top_generators;
    bool members = false;           ///< every Hibi relation lies in the top ideal
    bool generators_match = false;  ///< hibi and top_generators agree up to sign
    bool hibi_generates = false;    ///< Hibi moves connect every top fiber up to `cap`
    bool markov_within = false;     ///< the top Markov basis has degree <= 2 and is complete at `cap`
    bool ok() const { return members && generators_match && hibi_generates && markov_within; }
};

HibiComparison hibi_vs_topgraded(const Poset& p, int cap = 3, const FiberOptions& options = {});

}  // namespace homtoric
