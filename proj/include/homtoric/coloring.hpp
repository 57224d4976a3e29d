#pragma once

#include "homtoric/graph.hpp"
#include "homtoric/monomial.hpp"
#include "homtoric/toric.hpp"

#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace homtoric {

/// Lowest-degree nonzero binomial of I(K3 -> G) up to `degree_cap`, over
/// build_system(complete_graph(3), G). Among them the lexicographically smallest
/// leading monomial, then the smallest partner; the leading side is the smaller one.
/// At the lowest degree the supports are disjoint. Searches pairs of monomials row by
/// row; throws ResourceLimit after `node_cap` search nodes and PreconditionError when
/// G has no triangle.
std::optional<Binomial> find_low_degree_binomial(const ToricSystem& k3_into_g, int degree_cap,
                                                 std::size_t node_cap = 200'000'000);

/// xi(u) = xi(v) forced by matching two triangles; u == v is trivial.
struct Identification {
    Vertex u = 0;
    Vertex v = 0;
    bool marked = false;  ///< (u, v) is in the relation (adjacency by default)
};

/// Forced identifications when the first plus factor is matched with minus factor `target`,
/// one per triangle vertex, in vertex order.
struct FirstFactorRow {
    std::size_t target = 0;
    std::vector<Identification> pairs;
};

struct PermutationRow {
    std::vector<std::size_t> pi;               ///< plus factor i is matched with minus factor pi[i]
    std::vector<Identification> identified;    ///< nontrivial, u < v, sorted, distinct
    bool marked = false;
};

enum class Verdict { not_colorable, property, inconclusive };
std::string to_string(Verdict v);

struct ObstructionCertificate {
    Binomial binomial;
    std::vector<VertexMap> plus_maps;   ///< phi_i
    std::vector<VertexMap> minus_maps;  ///< phi'_i
    std::vector<FirstFactorRow> first_rows;
    std::vector<PermutationRow> rows;   ///< every permutation, lexicographic
    std::size_t unmarked = 0;           ///< permutations forcing no marked pair
    bool custom_relation = false;
    Verdict verdict = Verdict::inconclusive;
};

struct CertificateOptions {
    /// Degree of the generator of I(K3 -> K_n) for the colouring tested (12 for n = 4).
    int threshold = 12;
    /// Largest degree whose full permutation group is scanned.
    int max_degree = 8;
};

/// Scans every permutation of the minus factors. Without a relation, marks adjacent pairs
/// and concludes not_colorable when every permutation has a mark; with one, concludes
/// property. Throws PreconditionError unless b is a member with disjoint supports and
/// degree below the threshold.
ObstructionCertificate analyze_certificate(const ToricSystem& k3_into_g, const Binomial& b,
                                           std::span<const Edge> relation = {},
                                           const CertificateOptions& options = {});

/// Identification table: one line per choice of the first match, marks as *...*.
void write_certificate(std::ostream& out, const ObstructionCertificate& cert);

/// r_phi -> r_{xi o phi}. `to` is the system of the same source into xi's target.
/// Throws PreconditionError if xi is not a homomorphism.
Binomial pushforward(const ToricSystem& from, std::span<const Vertex> xi, const Binomial& b, const ToricSystem& to);

/// "a b" per line, '#' comments; vertices as in graph files.
std::vector<Edge> read_pairs(std::istream& in);
std::vector<Edge> load_pairs(std::string_view path);

}  // namespace homtoric
