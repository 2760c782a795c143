#include "ergo/subaction.hpp"

#include "ergo/error.hpp"
#include "ergo/potential.hpp"

#include <algorithm>

namespace ergo {

namespace {

void check_on_graph(const SubAction& u, const DeBruijnGraph& graph) {
  if (u.depth != graph.order() || u.values.size() != graph.node_count())
    throw Error(ErrorKind::IncompatibleOrder, "sub-action does not live on this graph");
}

RationalVector normalized(const DeBruijnGraph& graph, const RationalVector& weights, const Rational& abar,
                          const RationalVector& u) {
  return normalized_weights(graph, weights, abar, u);
}

bool is_subaction(const RationalVector& b) {
  return std::all_of(b.begin(), b.end(), [](const Rational& x) { return x >= 0; });
}

std::vector<std::size_t> zero_edges(const RationalVector& b) {
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < b.size(); ++e)
    if (b[e] == 0) out.push_back(e);
  return out;
}

// w_1, w_2, ... with w_j(a) the least b-sum over forward paths of length j
// from a; stops once the sequence is constant.
std::vector<RationalVector> forward_sums_until_stable(const DeBruijnGraph& graph, const RationalVector& b) {
  std::vector<RationalVector> out;
  RationalVector w(graph.node_count(), Rational(0));
  while (true) {
    RationalVector next(graph.node_count());
    for (std::size_t a = 0; a < graph.node_count(); ++a) {
      bool first = true;
      for (std::size_t e : graph.out_edges(a)) {
        Rational cand = b[e] + w[graph.edge(e).head];
        if (first || cand < next[a]) {
          next[a] = std::move(cand);
          first = false;
        }
      }
    }
    if (next == w) return out;
    out.push_back(next);
    w = std::move(next);
  }
}

struct Attempt {
  RationalVector u;
  std::vector<std::size_t> residual;
  bool used_node_barriers = false;
};

std::vector<std::size_t> residual_edges(const RationalVector& b, const CriticalStructure& crit) {
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < b.size(); ++e)
    if (b[e] == 0 && !crit.is_critical_edge[e]) out.push_back(e);
  return out;
}

// One depth: perturb v by -gamma w_j (forward sums) and +gamma h_B(c, .) (from
// one critical node per component), average, and repeat while the tight set
// keeps shrinking.
Attempt attempt_at_depth(const DeBruijnGraph& g, const RationalVector& weights, const Rational& abar,
                         const CriticalStructure& crit, RationalVector v, const Rational& gamma, bool node_barriers) {
  Attempt out;
  auto b = normalized(g, weights, abar, v);
  auto residual = residual_edges(b, crit);
  auto average = [&](const std::vector<RationalVector>& candidates) {
    RationalVector avg(g.node_count(), Rational(0));
    for (const auto& c : candidates)
      for (std::size_t i = 0; i < avg.size(); ++i) avg[i] += c[i];
    Rational count(static_cast<long>(candidates.size()));
    for (auto& x : avg) x /= count;
    return avg;
  };
  while (!residual.empty()) {
    std::vector<RationalVector> candidates;
    for (const auto& w : forward_sums_until_stable(g, b)) {
      RationalVector c = v;
      for (std::size_t i = 0; i < c.size(); ++i) c[i] -= gamma * w[i];
      candidates.push_back(std::move(c));
    }
    for (const auto& comp : crit.components) {
      auto d = distances_from(g, b, Rational(0), comp.representative);
      RationalVector c = v;
      for (std::size_t i = 0; i < c.size(); ++i) c[i] += gamma * d[i];
      candidates.push_back(std::move(c));
    }
    if (candidates.empty()) break;
    auto next_v = average(candidates);
    auto next_b = normalized(g, weights, abar, next_v);
    auto next_residual = residual_edges(next_b, crit);
    if (next_residual.size() >= residual.size()) break;
    v = std::move(next_v);
    b = std::move(next_b);
    residual = std::move(next_residual);
  }
  if (!residual.empty() && node_barriers) {
    // Barrier distances from the heads of the remaining tight edges: a tight
    // edge t -> a survives h_B(a, .) only if a zero path leads back to t.
    std::vector<RationalVector> candidates{v};
    std::vector<bool> used(g.node_count());
    for (std::size_t e : residual) {
      auto a = g.edge(e).head;
      if (used[a]) continue;
      used[a] = true;
      auto d = distances_from(g, b, Rational(0), a);
      RationalVector c = v;
      for (std::size_t i = 0; i < c.size(); ++i) c[i] += gamma * d[i];
      candidates.push_back(std::move(c));
    }
    v = average(candidates);
    b = normalized(g, weights, abar, v);
    residual = residual_edges(b, crit);
    out.used_node_barriers = true;
  }
  out.u = std::move(v);
  out.residual = std::move(residual);
  return out;
}

}  // namespace

SubAction calibrated_from_boundary(const BoundaryData& bd, const CriticalStructure& crit, const RationalMatrix& h,
                                   int depth) {
  auto reps = crit.representatives();
  if (bd.values.size() != reps.size())
    throw Error(ErrorKind::InvalidArgument, "boundary data needs one value per component");
  auto poly = constraint_polytope(crit, h);
  if (!poly.contains(bd.values)) throw Error(ErrorKind::NotInConstraintSet, "boundary data violates u_j - u_i <= h");
  SubAction u{depth, RationalVector(h.size()), Provenance::CalibratedFromBoundary};
  for (std::size_t x = 0; x < h.size(); ++x) {
    for (std::size_t i = 0; i < reps.size(); ++i) {
      Rational cand = bd.values[i] + h[reps[i]][x];
      if (i == 0 || cand < u.values[x]) u.values[x] = std::move(cand);
    }
  }
  return u;
}

BoundaryData restrict_to_representatives(const SubAction& u, const CriticalStructure& crit) {
  BoundaryData bd;
  for (std::size_t rep : crit.representatives()) bd.values.push_back(u.values.at(rep));
  return bd;
}

DominantCalibrated dominant_calibrated(std::size_t i0, const Rational& u_i0, const CriticalStructure& crit,
                                       const RationalMatrix& h, int depth) {
  auto reps = crit.representatives();
  if (i0 >= reps.size()) throw Error(ErrorKind::InvalidArgument, "component index out of range");
  DominantCalibrated out;
  out.u = SubAction{depth, RationalVector(h.size()), Provenance::Dominant};
  for (std::size_t x = 0; x < h.size(); ++x) out.u.values[x] = u_i0 + h[reps[i0]][x];
  out.boundary = restrict_to_representatives(out.u, crit);

  auto check = calibrated_from_boundary(out.boundary, crit, h, depth);
  if (check.values != out.u.values)
    throw Error(ErrorKind::InvalidArgument, "dominant sub-action disagrees with its boundary representation");

  for (std::size_t i = 0; i < reps.size(); ++i) {
    if (i == i0) continue;
    bool reproduces = true;
    for (std::size_t j = 0; j < reps.size() && reproduces; ++j)
      reproduces = out.boundary.values[j] == out.boundary.values[i] + h[reps[i]][reps[j]];
    if (reproduces) out.index_unique = false;
  }
  return out;
}

ContactSet contact_locus(const SubAction& u, const DeBruijnGraph& graph, const RationalVector& weights,
                         const Rational& abar) {
  check_on_graph(u, graph);
  auto b = normalized(graph, weights, abar, u.values);
  if (!is_subaction(b)) throw Error(ErrorKind::NotASubAction, "some edge has w - abar < u(head) - u(tail)");
  return ContactSet{u.depth, zero_edges(b)};
}

std::vector<std::size_t> non_critical_tight_edges(const ContactSet& tight, const CriticalStructure& crit) {
  std::vector<std::size_t> out;
  for (std::size_t e : tight.tight_edges)
    if (!crit.is_critical_edge[e]) out.push_back(e);
  return out;
}

Verdict verify(const SubAction& u, const DeBruijnGraph& graph, const RationalVector& weights, const Rational& abar,
               const CriticalStructure& crit) {
  check_on_graph(u, graph);
  Verdict out;
  auto b = normalized(graph, weights, abar, u.values);
  out.is_subaction = is_subaction(b);
  out.is_calibrated = lax_oleinik_step(u.values, graph, weights, abar) == u.values;
  out.critical_containment = true;
  out.separating_certificate = out.is_subaction;
  for (std::size_t e = 0; e < b.size(); ++e) {
    if (crit.is_critical_edge[e] && b[e] != 0) out.critical_containment = false;
    if (b[e] == 0 && !crit.is_critical_edge[e]) out.separating_certificate = false;
  }
  return out;
}

SeparatingResult separating_subaction(const DeBruijnGraph& graph, const RationalVector& weights, const Rational& abar,
                                      const CriticalStructure& crit, int depth, const SeparatingOptions& options) {
  if (depth < graph.order()) throw Error(ErrorKind::IncompatibleOrder, "depth is below the graph order");
  if (options.gamma <= 0 || options.gamma >= 1) throw Error(ErrorKind::InvalidArgument, "gamma must lie in (0,1)");

  const auto& sft = graph.sft();
  auto v0 = calibrated_fixed_point(graph, weights, abar, crit);
  DeBruijnGraph target(sft, depth, options.node_budget);
  auto target_weights = lift_edge_values(weights, graph, target);
  auto target_crit = lift_critical(crit, graph, target);

  // A function read off a coarser graph only sees the first sub-edge of each
  // word, so the construction runs on the target graph itself. Tight sets do
  // not depend on gamma; the halving only follows the stated schedule.
  SeparatingResult out;
  auto start = lift_values(v0, graph, target);
  Rational gamma = options.gamma;
  for (int attempt = 0; attempt < 3; ++attempt) {
    auto a = attempt_at_depth(target, target_weights, abar, target_crit, start, gamma, options.node_barriers);
    out.u = SubAction{depth, std::move(a.u), Provenance::Separating};
    out.used_node_barriers = a.used_node_barriers;
    if (a.residual.empty()) {
      out.certified_at = depth;
      break;
    }
    gamma /= 2;
  }

  // The certificate is re-derived on the target graph from scratch.
  auto b = normalized(target, target_weights, abar, out.u.values);
  if (!is_subaction(b)) throw Error(ErrorKind::NotASubAction, "separating construction left the sub-action cone");
  for (std::size_t e = 0; e < b.size(); ++e) {
    if (b[e] != 0) continue;
    out.tight_words.push_back(target.edge_word(e));
    if (!target_crit.is_critical_edge[e]) out.residual_words.push_back(target.edge_word(e));
  }
  out.certified = out.residual_words.empty();
  if (!out.certified) out.certified_at = 0;
  return out;
}

GapReport gap_analysis(const SubAction& u, const SubAction& v, const DeBruijnGraph& graph,
                       const RationalVector& weights, const Rational& abar, const CriticalStructure& crit) {
  check_on_graph(u, graph);
  check_on_graph(v, graph);
  if (lax_oleinik_step(u.values, graph, weights, abar) != u.values)
    throw Error(ErrorKind::NotCalibrated, "u is not a fixed point of the Lax-Oleinik operator");
  if (!is_subaction(normalized(graph, weights, abar, v.values)))
    throw Error(ErrorKind::NotASubAction, "v is not a sub-action");

  GapReport out;
  RationalVector diff(graph.node_count());
  for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = u.values[i] - v.values[i];

  for (const auto& comp : crit.components) {
    const Rational& c = diff[comp.nodes.front()];
    for (std::size_t x : comp.nodes)
      if (diff[x] != c) out.constant_on_components = false;
    out.component_constants.push_back(c);
  }
  out.global_min = *std::min_element(diff.begin(), diff.end());
  for (std::size_t i = 0; i < diff.size(); ++i)
    if (diff[i] == out.global_min) out.argmin_nodes.push_back(i);

  bool first = true;
  for (std::size_t i = 0; i < diff.size(); ++i) {
    if (!crit.is_critical_node(i)) continue;
    if (first || diff[i] < out.critical_min) out.critical_min = diff[i];
    first = false;
  }
  out.min_on_critical = !first && out.critical_min == out.global_min;
  out.min_on_whole_component = std::any_of(crit.components.begin(), crit.components.end(), [&](const Component& comp) {
    return std::all_of(comp.nodes.begin(), comp.nodes.end(), [&](std::size_t x) { return diff[x] == out.global_min; });
  });
  return out;
}

SubAction lift(const SubAction& u, const DeBruijnGraph& base, const DeBruijnGraph& fine) {
  check_on_graph(u, base);
  return SubAction{fine.order(), lift_values(u.values, base, fine), u.provenance};
}

SubAction convex_combination(const std::vector<SubAction>& parts, const RationalVector& coefficients) {
  if (parts.empty() || parts.size() != coefficients.size())
    throw Error(ErrorKind::InvalidArgument, "one coefficient per sub-action is required");
  Rational total(0);
  for (const auto& c : coefficients) {
    if (c < 0) throw Error(ErrorKind::InvalidArgument, "negative convex coefficient");
    total += c;
  }
  if (total != 1) throw Error(ErrorKind::InvalidArgument, "convex coefficients must sum to one");
  SubAction out{parts.front().depth, RationalVector(parts.front().values.size(), Rational(0)), Provenance::UserSupplied};
  for (std::size_t p = 0; p < parts.size(); ++p) {
    if (parts[p].depth != out.depth || parts[p].values.size() != out.values.size())
      throw Error(ErrorKind::IncompatibleOrder, "sub-actions live on different depths");
    for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] += coefficients[p] * parts[p].values[i];
  }
  return out;
}

}  // namespace ergo
