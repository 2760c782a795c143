#include "ergo/tropical.hpp"

#include "ergo/error.hpp"

#include <algorithm>
#include <deque>

namespace ergo {

namespace {

void check_weights(const DeBruijnGraph& graph, const RationalVector& weights) {
  if (weights.size() != graph.edge_count())
    throw Error(ErrorKind::InvalidArgument, "weight vector does not match the edge count");
}

// pi(v) = min over walks ending at v of the normalized sum, read off Karp's
// table (simple paths suffice since no cycle is negative after normalization).
RationalVector walk_potential(const std::vector<RationalVector>& d, const Rational& abar) {
  const std::size_t n = d.front().size();
  RationalVector pi(n);
  for (std::size_t v = 0; v < n; ++v) {
    pi[v] = d[0][v];
    for (std::size_t k = 1; k < n; ++k) pi[v] = std::min(pi[v], Rational(d[k][v] - abar * k));
  }
  return pi;
}

// Normalized potential by Bellman-Ford from a virtual source tied to every node.
RationalVector shortest_potential(const DeBruijnGraph& graph, const RationalVector& weights, const Rational& abar) {
  const std::size_t n = graph.node_count();
  RationalVector pi(n, Rational(0));
  for (std::size_t round = 0; round <= n; ++round) {
    bool changed = false;
    for (std::size_t e = 0; e < graph.edge_count(); ++e) {
      const auto& ed = graph.edge(e);
      Rational cand = pi[ed.tail] + weights[e] - abar;
      if (cand < pi[ed.head]) {
        pi[ed.head] = std::move(cand);
        changed = true;
      }
    }
    if (!changed) return pi;
  }
  throw Error(ErrorKind::InvalidArgument, "negative cycle after normalization");
}

CriticalStructure assemble(const DeBruijnGraph& graph, std::vector<bool> critical) {
  CriticalStructure out;
  const std::size_t n = graph.node_count();
  auto comp = strong_components(n, graph.edges(), critical);
  // Keep only edges whose endpoints share a class; others cannot lie on a cycle.
  for (std::size_t e = 0; e < graph.edge_count(); ++e)
    if (critical[e] && comp[graph.edge(e).tail] != comp[graph.edge(e).head]) critical[e] = false;

  out.node_component.assign(n, std::nullopt);
  out.edge_component.assign(graph.edge_count(), 0);
  std::vector<std::optional<std::size_t>> final_index(n);
  out.components.clear();
  for (std::size_t v = 0; v < n; ++v) {
    bool on_critical = false;
    for (std::size_t e : graph.out_edges(v)) on_critical = on_critical || critical[e];
    if (!on_critical) continue;
    auto c = comp[v];
    if (!final_index[c]) {
      final_index[c] = out.components.size();
      out.components.push_back(Component{{}, {}, v});
    }
    out.node_component[v] = *final_index[c];
    out.components[*final_index[c]].nodes.push_back(v);
  }
  for (std::size_t e = 0; e < graph.edge_count(); ++e) {
    if (!critical[e]) continue;
    auto c = *out.node_component[graph.edge(e).tail];
    out.edge_component[e] = c;
    out.components[c].edges.push_back(e);
    out.critical_edges.push_back(e);
  }
  out.is_critical_edge = std::move(critical);
  return out;
}

}  // namespace

std::vector<std::size_t> CriticalStructure::representatives() const {
  std::vector<std::size_t> reps;
  for (const auto& c : components) reps.push_back(c.representative);
  return reps;
}

ErgodicSummary minimizing_value(const DeBruijnGraph& graph, const RationalVector& weights) {
  check_weights(graph, weights);
  const std::size_t n = graph.node_count();
  std::vector<RationalVector> d(n + 1, RationalVector(n));
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t v = 0; v < n; ++v) {
      bool first = true;
      for (std::size_t e : graph.in_edges(v)) {
        Rational cand = d[k - 1][graph.edge(e).tail] + weights[e];
        if (first || cand < d[k][v]) {
          d[k][v] = std::move(cand);
          first = false;
        }
      }
    }
  }
  std::optional<Rational> abar;
  for (std::size_t v = 0; v < n; ++v) {
    std::optional<Rational> worst;
    for (std::size_t k = 0; k < n; ++k) {
      Rational mean = (d[n][v] - d[k][v]) / Rational(static_cast<long>(n - k));
      if (!worst || mean > *worst) worst = mean;
    }
    if (!abar || *worst < *abar) abar = worst;
  }

  ErgodicSummary out;
  out.abar = *abar;
  auto pi = walk_potential(d, out.abar);
  std::vector<bool> tight(graph.edge_count());
  for (std::size_t e = 0; e < graph.edge_count(); ++e) {
    const auto& ed = graph.edge(e);
    tight[e] = pi[ed.tail] + weights[e] - out.abar == pi[ed.head];
  }
  auto crit = assemble(graph, std::move(tight));
  if (crit.components.empty()) throw Error(ErrorKind::InvalidArgument, "no critical cycle found");

  std::vector<std::optional<std::size_t>> seen(n);
  std::vector<std::size_t> walk;
  std::size_t v = crit.components.front().representative;
  while (!seen[v]) {
    seen[v] = walk.size();
    for (std::size_t e : graph.out_edges(v)) {
      if (crit.is_critical_edge[e]) {
        walk.push_back(e);
        v = graph.edge(e).head;
        break;
      }
    }
  }
  out.witness_cycle.assign(walk.begin() + static_cast<std::ptrdiff_t>(*seen[v]), walk.end());
  return out;
}

RationalMatrix mane_matrix(const DeBruijnGraph& graph, const RationalVector& weights, const Rational& abar) {
  check_weights(graph, weights);
  const std::size_t n = graph.node_count();
  std::vector<std::vector<Extended>> m(n, std::vector<Extended>(n));
  for (std::size_t e = 0; e < graph.edge_count(); ++e) {
    const auto& ed = graph.edge(e);
    m[ed.tail][ed.head] = ext_min(m[ed.tail][ed.head], Extended(weights[e] - abar));
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      if (!m[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (!m[k][j]) continue;
        Rational cand = *m[i][k] + *m[k][j];
        if (!m[i][j] || cand < *m[i][j]) m[i][j] = std::move(cand);
      }
    }
  RationalMatrix phi(n, RationalVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!m[i][j]) throw Error(ErrorKind::NotIrreducible, "graph is not strongly connected");
      phi[i][j] = *m[i][j];
    }
  return phi;
}

CriticalStructure critical_structure(const DeBruijnGraph& graph, const RationalVector& weights, const Rational& abar,
                                     const RationalMatrix& phi) {
  check_weights(graph, weights);
  std::vector<bool> critical(graph.edge_count());
  for (std::size_t e = 0; e < graph.edge_count(); ++e) {
    const auto& ed = graph.edge(e);
    critical[e] = weights[e] - abar + phi[ed.head][ed.tail] == 0;
  }
  return assemble(graph, std::move(critical));
}

CriticalStructure critical_structure_fast(const DeBruijnGraph& graph, const RationalVector& weights,
                                          const Rational& abar) {
  check_weights(graph, weights);
  auto pi = shortest_potential(graph, weights, abar);
  std::vector<bool> tight(graph.edge_count());
  for (std::size_t e = 0; e < graph.edge_count(); ++e) {
    const auto& ed = graph.edge(e);
    tight[e] = pi[ed.tail] + weights[e] - abar == pi[ed.head];
  }
  return assemble(graph, std::move(tight));
}

RationalMatrix peierls_matrix(const DeBruijnGraph& graph, const RationalVector& weights, const Rational& abar,
                              const RationalMatrix& phi, const CriticalStructure& crit) {
  check_weights(graph, weights);
  (void)abar;
  const std::size_t n = graph.node_count();
  std::vector<std::size_t> zs;
  for (std::size_t z = 0; z < n; ++z)
    if (crit.is_critical_node(z)) zs.push_back(z);
  RationalMatrix h(n, RationalVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      bool first = true;
      for (std::size_t z : zs) {
        Rational cand = phi[i][z] + phi[z][j];
        if (first || cand < h[i][j]) {
          h[i][j] = std::move(cand);
          first = false;
        }
      }
    }
  return h;
}

RationalVector lax_oleinik_step(std::span<const Rational> u, const DeBruijnGraph& graph,
                                const RationalVector& weights, const Rational& abar) {
  check_weights(graph, weights);
  if (u.size() != graph.node_count()) throw Error(ErrorKind::IncompatibleOrder, "function does not live on graph");
  RationalVector out(graph.node_count());
  for (std::size_t j = 0; j < graph.node_count(); ++j) {
    bool first = true;
    for (std::size_t e : graph.in_edges(j)) {
      Rational cand = u[graph.edge(e).tail] + weights[e] - abar;
      if (first || cand < out[j]) {
        out[j] = std::move(cand);
        first = false;
      }
    }
  }
  return out;
}

RationalVector distances_from(const DeBruijnGraph& graph, const RationalVector& weights, const Rational& abar,
                              std::size_t source) {
  check_weights(graph, weights);
  const std::size_t n = graph.node_count();
  std::vector<Extended> dist(n);
  dist[source] = Rational(0);
  // Queue-based Bellman-Ford; terminates because no cycle is negative.
  std::deque<std::size_t> queue{source};
  std::vector<bool> queued(n);
  queued[source] = true;
  while (!queue.empty()) {
    auto v = queue.front();
    queue.pop_front();
    queued[v] = false;
    for (std::size_t e : graph.out_edges(v)) {
      auto head = graph.edge(e).head;
      Rational cand = *dist[v] + weights[e] - abar;
      if (!dist[head] || cand < *dist[head]) {
        dist[head] = std::move(cand);
        if (!queued[head]) {
          queue.push_back(head);
          queued[head] = true;
        }
      }
    }
  }
  RationalVector out(n);
  for (std::size_t v = 0; v < n; ++v) {
    if (!dist[v]) throw Error(ErrorKind::NotIrreducible, "graph is not strongly connected");
    out[v] = *dist[v];
  }
  return out;
}

RationalVector calibrated_fixed_point(const DeBruijnGraph& graph, const RationalVector& weights,
                                      const Rational& abar, const CriticalStructure& crit) {
  if (crit.components.empty()) throw Error(ErrorKind::InvalidArgument, "no critical component");
  RationalVector u;
  for (std::size_t rep : crit.representatives()) {
    auto row = distances_from(graph, weights, abar, rep);
    if (u.empty()) {
      u = std::move(row);
      continue;
    }
    for (std::size_t v = 0; v < u.size(); ++v) u[v] = std::min(u[v], row[v]);
  }
  return u;
}

bool ConstraintPolytope::contains(std::span<const Rational> u) const {
  if (u.size() != bounds.size()) return false;
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < u.size(); ++j)
      if (u[j] - u[i] > bounds[i][j]) return false;
  return true;
}

ConstraintPolytope constraint_polytope(const CriticalStructure& crit, const RationalMatrix& h) {
  auto reps = crit.representatives();
  ConstraintPolytope out;
  out.bounds.assign(reps.size(), RationalVector(reps.size()));
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = 0; j < reps.size(); ++j) out.bounds[i][j] = h[reps[i]][reps[j]];
  return out;
}

TropicalSolution solve(const DeBruijnGraph& graph, const RationalVector& weights) {
  TropicalSolution out;
  out.summary = minimizing_value(graph, weights);
  out.phi = mane_matrix(graph, weights, out.summary.abar);
  out.crit = critical_structure(graph, weights, out.summary.abar, out.phi);
  out.h = peierls_matrix(graph, weights, out.summary.abar, out.phi, out.crit);
  return out;
}

RationalVector lift_values(std::span<const Rational> values, const DeBruijnGraph& base, const DeBruijnGraph& fine) {
  if (fine.order() < base.order() || values.size() != base.node_count())
    throw Error(ErrorKind::IncompatibleOrder, "cannot lift to a coarser graph");
  RationalVector out(fine.node_count());
  const auto r = static_cast<std::size_t>(base.order());
  for (std::size_t v = 0; v < fine.node_count(); ++v) {
    std::span<const Symbol> w(fine.node_word(v));
    out[v] = values[*base.find_node(w.first(r))];
  }
  return out;
}

RationalVector lift_edge_values(std::span<const Rational> weights, const DeBruijnGraph& base,
                                const DeBruijnGraph& fine) {
  if (fine.order() < base.order() || weights.size() != base.edge_count())
    throw Error(ErrorKind::IncompatibleOrder, "cannot lift to a coarser graph");
  RationalVector out(fine.edge_count());
  const auto r = static_cast<std::size_t>(base.order());
  for (std::size_t e = 0; e < fine.edge_count(); ++e) {
    auto w = fine.edge_word(e);
    out[e] = weights[*base.find_edge(std::span<const Symbol>(w).first(r + 1))];
  }
  return out;
}

std::optional<std::size_t> critical_itinerary_component(std::span<const Symbol> word, const CriticalStructure& crit,
                                                        const DeBruijnGraph& base) {
  const auto r = static_cast<std::size_t>(base.order());
  if (word.size() < r) return std::nullopt;
  if (word.size() == r) {
    auto v = base.find_node(word);
    return v ? crit.node_component[*v] : std::nullopt;
  }
  std::optional<std::size_t> comp;
  for (std::size_t i = 0; i + r + 1 <= word.size(); ++i) {
    auto e = base.find_edge(word.subspan(i, r + 1));
    if (!e || !crit.is_critical_edge[*e]) return std::nullopt;
    if (comp && *comp != crit.edge_component[*e]) return std::nullopt;
    comp = crit.edge_component[*e];
  }
  return comp;
}

CriticalStructure lift_critical(const CriticalStructure& crit, const DeBruijnGraph& base, const DeBruijnGraph& fine) {
  if (fine.order() < base.order()) throw Error(ErrorKind::IncompatibleOrder, "cannot lift to a coarser graph");
  std::vector<bool> critical(fine.edge_count());
  for (std::size_t e = 0; e < fine.edge_count(); ++e)
    critical[e] = critical_itinerary_component(fine.edge_word(e), crit, base).has_value();
  return assemble(fine, std::move(critical));
}

}  // namespace ergo
