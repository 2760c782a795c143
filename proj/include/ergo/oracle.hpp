#pragma once

// Brute-force counterparts of the solver: cycle enumeration, fixed-length
// path minima, epsilon-path sums with explicit pasts, point-level barriers
// between lassos and two independent non-wandering tests.

#include "ergo/potential.hpp"
#include "ergo/rational.hpp"
#include "ergo/symbolic.hpp"
#include "ergo/tropical.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace ergo {

inline constexpr std::size_t kOracleMaxNodes = 10;

struct CycleMean {
  /// Node ids, starting at the smallest one.
  std::vector<std::size_t> nodes;
  Rational mean;
};

/// Every simple cycle (as a node cycle; parallel edges cannot occur). Throws
/// TooLarge above kOracleMaxNodes nodes.
std::vector<CycleMean> brute_cycles(const DeBruijnGraph& graph, const RationalVector& weights);

/// Least normalized sum over paths i -> j with exactly k edges; nullopt when
/// there is no such path. Throws TooLarge when k > 2 n^2 or n > 10.
Extended path_min_sums(const DeBruijnGraph& graph, const RationalVector& weights, const Rational& abar,
                       std::size_t i, std::size_t j, std::size_t k);

/// All min-plus powers M^1 .. M^(2n^2) of the normalized weight matrix.
std::vector<std::vector<std::vector<Extended>>> min_plus_powers(const DeBruijnGraph& graph,
                                                                const RationalVector& weights, const Rational& abar,
                                                                std::size_t max_power);

/// phi(i,j) as the minimum of M^k(i,j) over 1 <= k <= n^2.
RationalMatrix mane_by_paths(const DeBruijnGraph& graph, const RationalVector& weights, const Rational& abar);

/// min over k in [n^2, 2n^2] of M^k(i,j).
RationalMatrix peierls_by_window(const DeBruijnGraph& graph, const RationalVector& weights, const Rational& abar);

/// liminf_k M^k(i,j), read off the eventually periodic tail of the powers.
RationalMatrix peierls_by_liminf(const DeBruijnGraph& graph, const RationalVector& weights, const Rational& abar);

struct SEpsilonQuery {
  LassoPoint x;
  LassoPoint y;
  std::size_t k = 1;
  /// epsilon = lambda^p: the path must agree with x (start) and y (end) on
  /// the first p symbols.
  int p = 1;
};

/// Least sum of (A - abar) over the paths of the query. Pasts of a two-sided
/// potential are enumerated at every step. Throws NoPathExists or TooLarge.
Rational s_epsilon(const SEpsilonQuery& query, const AnyPotential& potential, const SftSystem& sft,
                   const Rational& abar);

/// Minimum over closed paths (periodic words of length <= max_period) of the
/// average holonomic sum, pasts chosen freely at each step.
Rational holonomic_value(const TwoSidedPotential& ahat, const SftSystem& sft, std::size_t max_period);

/// Lax-Oleinik operator of the two-sided table on the order-r graph, minimizing
/// over predecessors and over pasts explicitly.
RationalVector holonomic_lax_oleinik(std::span<const Rational> u, const DeBruijnGraph& graph,
                                     const TwoSidedPotential& ahat, const Rational& abar);

enum class BarrierKind { Mane, Peierls };

struct BarrierBracket {
  Extended lower;
  Extended upper;
};

/// Value of the Mane potential or Peierls barrier between two lassos. The
/// graph must carry the compiled one-sided weights. Throws NotStabilized
/// (message carries the bracket) when the deepening budget runs out.
Extended point_barrier(const LassoPoint& x, const LassoPoint& y, BarrierKind kind, const DeBruijnGraph& graph,
                       const RationalVector& weights, const Rational& abar, const CriticalStructure& crit,
                       int max_depth = 64, BarrierBracket* bracket = nullptr);

struct NonwanderingReport {
  bool exact = false;
  bool search = false;
  /// The search answered "no" only because its length budget ran out.
  bool search_exhausted = false;
  bool agree() const { return exact == search; }
};

/// Exact way: every itinerary edge is critical and all share a component.
/// Search way: for p = 1 .. max(4, period + preperiod + r), look for a closed
/// epsilon-path of length <= max_length with |sum| < lambda^p.
NonwanderingReport is_nonwandering(const LassoPoint& x, const OneSidedPotential& b, const DeBruijnGraph& graph,
                                   const Rational& abar, const CriticalStructure& crit, std::size_t max_length = 0);

struct RandomInstanceOptions {
  int max_alphabet = 3;
  int max_range = 2;
  int max_weight = 4;
};

struct RandomInstance {
  SftSystem sft;
  OneSidedPotential potential;
};

/// Deterministic for a given seed.
RandomInstance random_instance(std::uint64_t seed, const RandomInstanceOptions& options = {});

struct RandomTwoSided {
  SftSystem sft;
  TwoSidedPotential potential;
};

/// p = q = 1 window table on a random irreducible shift.
RandomTwoSided random_two_sided(std::uint64_t seed, int max_alphabet = 3, int max_weight = 4);

/// Lassos with preperiod length <= max_pre and primitive period <= max_period.
std::vector<LassoPoint> enumerate_lassos(const SftSystem& sft, std::size_t max_pre, std::size_t max_period);

struct OracleReport {
  std::vector<std::string> lines;
  std::size_t mismatches = 0;
  /// The [n^2, 2n^2] window disagreed with the liminf; reported, not counted.
  std::size_t window_disagreements = 0;
};

/// Cross-checks every solver output on one instance against the brute force.
OracleReport cross_check(const SftSystem& sft, const OneSidedPotential& b);

}  // namespace ergo
