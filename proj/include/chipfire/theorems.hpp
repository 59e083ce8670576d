#pragma once

#include <vector>

#include "chipfire/abelian_group.hpp"
#include "chipfire/bigint.hpp"
#include "chipfire/graph.hpp"

namespace chipfire {

/// The exact sequence 0 -> (Z/(n+k))^(n-1) -> Pic0(cone(g, n)) -> H_n -> 0
/// for one instance. The subgroup is generated by w_i - w_1 over the cone
/// vertices w_1..w_n (indices k..k+n-1), and H_n is the quotient by it.
struct ConeSequenceReport {
    std::size_t base_vertices = 0;  // k
    std::size_t cone_size = 0;      // n
    CriticalGroup pic0;
    CriticalGroup subgroup;
    CriticalGroup quotient_h;
    BigInt p_at_minus_n;            // |P_g(-n)|
    bool order_formula_holds = false;   // |H_n| == |P_g(-n)|
    bool subgroup_is_expected = false;  // subgroup == (Z/(n+k))^(n-1)
    bool splits = false;                // pic0 == subgroup + quotient_h
    std::size_t h_generator_count = 0;

    bool holds() const { return order_formula_holds && subgroup_is_expected; }
};

/// |Pic0(join of gs)| against k^(l-2) * prod |P_i(k_i - k)|.
struct JoinOrderReport {
    std::vector<std::size_t> factor_vertex_counts;
    std::size_t total_vertices = 0;
    BigInt lhs;
    BigInt rhs;
    bool holds = false;
};

struct TreeBoundReport {
    std::size_t leaf_count = 0;
    std::size_t h_generators = 0;
    bool holds = false;  // h_generators <= leaf_count - 1
};

/// Order of v1 - v2 for a conformal pair of common degree d: d + 1 when
/// adjacent, d otherwise.
struct ElementaryOrderReport {
    std::size_t degree = 0;
    bool adjacent = false;
    BigInt expected;
    BigInt actual;
    bool holds = false;
};

/// Classes v^i_1 - v^i_j over disjoint conformal sets S^i generate the
/// direct sum of the cyclic groups they individually generate.
struct ConformalIndependenceReport {
    CriticalGroup generated;
    CriticalGroup expected;
    bool holds = false;
};

/// Throws NotConnectedError for disconnected g, InputError for n == 0.
ConeSequenceReport verify_cone_theorem(const Graph& g, std::size_t n);

/// Factors need not be connected; their join always is. Throws InputError
/// for fewer than two graphs.
JoinOrderReport verify_join_theorem(const std::vector<Graph>& gs);

/// Throws InputError unless g is a tree on at least two vertices.
TreeBoundReport verify_tree_bound(const Graph& g, std::size_t n);

/// Checks, as exact integer identities, that every w_i - w_1 and the vector
/// n * (sum of base vertices) - k * (sum of cone vertices) are eigenvectors
/// of L(cone(g, n)) with eigenvalue n + k.
bool verify_eigenvectors(const Graph& g, std::size_t n);

/// Throws InputError unless {v1, v2} is a conformal pair in a connected
/// graph on at least three vertices.
ElementaryOrderReport check_elementary_order(const Graph& g, Vertex v1, Vertex v2);

/// Throws InputError unless the sets are disjoint, conformal, and leave at
/// least one vertex uncovered.
ConformalIndependenceReport check_conformal_independence(const Graph& g, const std::vector<VertexSet>& sets);

/// Counts spanning trees by enumerating acyclic edge subsets of size
/// vertex_count - 1. Throws SizeError above 10 vertices.
BigInt brute_force_spanning_trees(const Graph& g);

inline constexpr std::size_t kBruteForceVertexLimit = 10;

}  // namespace chipfire
