#pragma once

// Calibrated families, contact loci, separating sub-actions at finite depth
// and the comparison of a calibrated sub-action with an arbitrary one.

#include "ergo/rational.hpp"
#include "ergo/sub_action.hpp"
#include "ergo/symbolic.hpp"
#include "ergo/tropical.hpp"

#include <optional>
#include <vector>

namespace ergo {

/// One value per critical component, in component order.
struct BoundaryData {
  RationalVector values;
};

/// u(x) = min_i [u_i + h(rep_i, x)]. Throws NotInConstraintSet.
SubAction calibrated_from_boundary(const BoundaryData& bd, const CriticalStructure& crit, const RationalMatrix& h,
                                   int depth = 1);

/// Values of u at the component representatives.
BoundaryData restrict_to_representatives(const SubAction& u, const CriticalStructure& crit);

struct DominantCalibrated {
  SubAction u;
  BoundaryData boundary;
  /// No other index reproduces `boundary` from its own h row.
  bool index_unique = true;
};

/// u = u_i0 + h(rep_i0, .). Cross-checks against calibrated_from_boundary of
/// the induced boundary data and throws InvalidArgument if they disagree.
DominantCalibrated dominant_calibrated(std::size_t i0, const Rational& u_i0, const CriticalStructure& crit,
                                       const RationalMatrix& h, int depth = 1);

struct ContactSet {
  int depth = 1;
  std::vector<std::size_t> tight_edges;
};

/// Throws NotASubAction if some edge is violated.
ContactSet contact_locus(const SubAction& u, const DeBruijnGraph& graph, const RationalVector& weights,
                         const Rational& abar);

/// Tight edges that are not critical for `crit` (taken on the same graph).
std::vector<std::size_t> non_critical_tight_edges(const ContactSet& tight, const CriticalStructure& crit);

struct Verdict {
  bool is_subaction = false;
  bool is_calibrated = false;
  bool separating_certificate = false;
  bool critical_containment = false;
};

/// All arguments live on the graph of u's depth (crit lifted if needed).
Verdict verify(const SubAction& u, const DeBruijnGraph& graph, const RationalVector& weights, const Rational& abar,
               const CriticalStructure& crit);

struct SeparatingResult {
  /// Values on the nodes of the requested depth.
  SubAction u;
  bool certified = false;
  /// Depth of the certificate, 0 without one.
  int certified_at = 0;
  /// Whether the node-barrier perturbations had to be added.
  bool used_node_barriers = false;
  std::vector<Word> tight_words;
  std::vector<Word> residual_words;
};

struct SeparatingOptions {
  Rational gamma{1, 2};
  /// Add h_B(a, .) for every node a once the component rounds stall.
  bool node_barriers = true;
  std::size_t node_budget = kDefaultNodeBudget;
};

/// Works on the order-`depth` refinement: starts from the lifted calibrated
/// fixed point, perturbs by forward sums and component barriers, averages.
/// Never throws for a missing certificate: check `certified` (the CLI turns
/// a failure into BudgetExceeded).
SeparatingResult separating_subaction(const DeBruijnGraph& graph, const RationalVector& weights, const Rational& abar,
                                      const CriticalStructure& crit, int depth, const SeparatingOptions& options = {});

struct GapReport {
  RationalVector component_constants;
  bool constant_on_components = true;
  Rational global_min;
  std::vector<std::size_t> argmin_nodes;
  Rational critical_min;
  bool min_on_critical = true;
  /// Some component lies entirely inside the argmin set.
  bool min_on_whole_component = true;
};

/// Throws NotCalibrated or NotASubAction on bad inputs.
GapReport gap_analysis(const SubAction& u, const SubAction& v, const DeBruijnGraph& graph,
                       const RationalVector& weights, const Rational& abar, const CriticalStructure& crit);

/// Same function read on the nodes of a finer graph.
SubAction lift(const SubAction& u, const DeBruijnGraph& base, const DeBruijnGraph& fine);

/// Convex combination with rational weights summing to one.
SubAction convex_combination(const std::vector<SubAction>& parts, const RationalVector& coefficients);

}  // namespace ergo
