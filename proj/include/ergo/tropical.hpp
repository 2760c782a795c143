#pragma once

// Exact min-plus computations on a weighted de Bruijn graph: the minimizing
// ergodic value, Mane potential and Peierls barrier matrices, the critical
// (non-wandering) structure and calibrated sub-actions.

#include "ergo/rational.hpp"
#include "ergo/symbolic.hpp"

#include <optional>
#include <span>
#include <vector>

namespace ergo {

struct ErgodicSummary {
  Rational abar;
  /// Edge ids of a cycle with mean weight abar, in traversal order.
  std::vector<std::size_t> witness_cycle;
};

/// Minimum cycle mean (Karp) with a witness cycle taken from the critical
/// subgraph: start at the smallest critical node, always follow the smallest
/// critical out-edge.
ErgodicSummary minimizing_value(const DeBruijnGraph& graph, const RationalVector& weights);

/// phi(i,j) = min over non-empty paths i -> j of sum (w - abar).
RationalMatrix mane_matrix(const DeBruijnGraph& graph, const RationalVector& weights, const Rational& abar);

struct Component {
  std::vector<std::size_t> nodes;
  std::vector<std::size_t> edges;
  /// Lexicographically smallest node of the component.
  std::size_t representative = 0;
};

struct CriticalStructure {
  std::vector<bool> is_critical_edge;
  std::vector<std::size_t> critical_edges;
  std::vector<Component> components;
  /// Component index of each node, nullopt for non-critical nodes.
  std::vector<std::optional<std::size_t>> node_component;
  /// Critical edge -> component index (only meaningful on critical edges).
  std::vector<std::size_t> edge_component;
  /// Strongly connected classes of the critical subgraph partition its nodes,
  /// so this stays true; kept so callers can assert it.
  bool node_disjoint = true;

  bool is_critical_node(std::size_t node) const { return node_component[node].has_value(); }
  std::vector<std::size_t> representatives() const;
};

/// Edge i -> j is critical iff (w - abar) + phi(j, i) == 0.
CriticalStructure critical_structure(const DeBruijnGraph& graph, const RationalVector& weights, const Rational& abar,
                                     const RationalMatrix& phi);

/// Same structure without the quadratic phi matrix: an edge is critical iff it
/// is tight for a shortest-path potential and closes a tight cycle.
CriticalStructure critical_structure_fast(const DeBruijnGraph& graph, const RationalVector& weights,
                                          const Rational& abar);

/// h(i,j) = min over critical z of phi(i,z) + phi(z,j).
RationalMatrix peierls_matrix(const DeBruijnGraph& graph, const RationalVector& weights, const Rational& abar,
                              const RationalMatrix& phi, const CriticalStructure& crit);

/// (Lu)(j) = min over edges i -> j of u(i) + w - abar.
RationalVector lax_oleinik_step(std::span<const Rational> u, const DeBruijnGraph& graph,
                                const RationalVector& weights, const Rational& abar);

/// Shortest normalized distances from `source` (empty path allowed, so the
/// source gets 0 unless a negative cycle exists, which normalization rules out).
RationalVector distances_from(const DeBruijnGraph& graph, const RationalVector& weights, const Rational& abar,
                              std::size_t source);

/// min over component representatives r of h(r, .), which equals phi(r, .)
/// on critical rows.
RationalVector calibrated_fixed_point(const DeBruijnGraph& graph, const RationalVector& weights,
                                      const Rational& abar, const CriticalStructure& crit);

struct ConstraintPolytope {
  /// H[i][j] = h(rep_i, rep_j).
  RationalMatrix bounds;

  /// u_j - u_i <= H[i][j] for all i, j.
  bool contains(std::span<const Rational> u) const;
  std::size_t dimension() const { return bounds.size(); }
};

ConstraintPolytope constraint_polytope(const CriticalStructure& crit, const RationalMatrix& h);

/// Everything the node-level solver produces for one weighted graph.
struct TropicalSolution {
  ErgodicSummary summary;
  RationalMatrix phi;
  CriticalStructure crit;
  RationalMatrix h;
};

TropicalSolution solve(const DeBruijnGraph& graph, const RationalVector& weights);

/// Values of a function on order-r nodes read on the nodes of a finer graph.
RationalVector lift_values(std::span<const Rational> values, const DeBruijnGraph& base, const DeBruijnGraph& fine);

/// Edge weights that only depend on the first base.order()+1 symbols.
RationalVector lift_edge_values(std::span<const Rational> weights, const DeBruijnGraph& base,
                                const DeBruijnGraph& fine);

/// Critical structure of a refinement: a fine edge is critical iff every
/// (r+1)-subword of its word is a critical edge of one base component.
CriticalStructure lift_critical(const CriticalStructure& crit, const DeBruijnGraph& base, const DeBruijnGraph& fine);

/// Component whose critical edges spell every (r+1)-subword of `word`, if any.
std::optional<std::size_t> critical_itinerary_component(std::span<const Symbol> word, const CriticalStructure& crit,
                                                        const DeBruijnGraph& base);

}  // namespace ergo
