#include "ergo/oracle.hpp"

#include "ergo/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace ergo {

namespace {

using ExtMatrix = std::vector<std::vector<Extended>>;

void require_small(const DeBruijnGraph& graph) {
  if (graph.node_count() > kOracleMaxNodes)
    throw Error(ErrorKind::TooLarge, "oracle limited to " + std::to_string(kOracleMaxNodes) + " nodes");
}

ExtMatrix step_matrix(const DeBruijnGraph& graph, const RationalVector& weights, const Rational& abar) {
  const std::size_t n = graph.node_count();
  ExtMatrix m(n, std::vector<Extended>(n));
  for (std::size_t e = 0; e < graph.edge_count(); ++e)
    m[graph.edge(e).tail][graph.edge(e).head] = ext_min(m[graph.edge(e).tail][graph.edge(e).head],
                                                        Extended(weights[e] - abar));
  return m;
}

ExtMatrix multiply(const ExtMatrix& a, const ExtMatrix& b) {
  const std::size_t n = a.size();
  ExtMatrix c(n, std::vector<Extended>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (!a[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j) c[i][j] = ext_min(c[i][j], ext_add(a[i][k], b[k][j]));
    }
  return c;
}

RationalMatrix finite(const ExtMatrix& m, const char* what) {
  RationalMatrix out(m.size(), RationalVector(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (!m[i][j]) throw Error(ErrorKind::NoPathExists, std::string("no path found for ") + what);
      out[i][j] = *m[i][j];
    }
  return out;
}

std::string key_of(const ExtMatrix& m) {
  std::string s;
  for (const auto& row : m)
    for (const auto& x : row) {
      s += to_string(x);
      s += ';';
    }
  return s;
}

std::uint64_t next_below(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

SftSystem random_sft(std::mt19937_64& rng, int max_alphabet) {
  while (true) {
    int s = 2 + static_cast<int>(next_below(rng, static_cast<std::uint64_t>(std::max(1, max_alphabet - 1))));
    std::vector<std::vector<int>> m(s, std::vector<int>(s));
    for (auto& row : m)
      for (auto& x : row) x = next_below(rng, 5) < 3 ? 1 : 0;
    try {
      return SftSystem(s, m, Rational(1, 2));
    } catch (const Error&) {
    }
  }
}

}  // namespace

std::vector<CycleMean> brute_cycles(const DeBruijnGraph& graph, const RationalVector& weights) {
  require_small(graph);
  const std::size_t n = graph.node_count();
  std::vector<CycleMean> out;
  std::vector<std::size_t> path;
  std::vector<bool> on_path(n);
  Rational sum(0);
  auto dfs = [&](auto&& self, std::size_t start, std::size_t v) -> void {
    for (std::size_t e : graph.out_edges(v)) {
      auto h = graph.edge(e).head;
      if (h == start) {
        Rational total = sum + weights[e];
        out.push_back(CycleMean{path, total / Rational(static_cast<long>(path.size()))});
        continue;
      }
      if (h < start || on_path[h]) continue;
      on_path[h] = true;
      path.push_back(h);
      sum += weights[e];
      self(self, start, h);
      sum -= weights[e];
      path.pop_back();
      on_path[h] = false;
    }
  };
  for (std::size_t s = 0; s < n; ++s) {
    path = {s};
    on_path.assign(n, false);
    on_path[s] = true;
    sum = 0;
    dfs(dfs, s, s);
  }
  return out;
}

Extended path_min_sums(const DeBruijnGraph& graph, const RationalVector& weights, const Rational& abar,
                       std::size_t i, std::size_t j, std::size_t k) {
  require_small(graph);
  const std::size_t n = graph.node_count();
  if (k > 2 * n * n) throw Error(ErrorKind::TooLarge, "path length above 2 n^2");
  std::vector<Extended> dist(n);
  dist[i] = Rational(0);
  for (std::size_t step = 0; step < k; ++step) {
    std::vector<Extended> next(n);
    for (std::size_t e = 0; e < graph.edge_count(); ++e) {
      const auto& ed = graph.edge(e);
      next[ed.head] = ext_min(next[ed.head], ext_add(dist[ed.tail], Extended(weights[e] - abar)));
    }
    dist = std::move(next);
  }
  return dist[j];
}

std::vector<ExtMatrix> min_plus_powers(const DeBruijnGraph& graph, const RationalVector& weights,
                                       const Rational& abar, std::size_t max_power) {
  require_small(graph);
  auto m = step_matrix(graph, weights, abar);
  std::vector<ExtMatrix> out{m};
  while (out.size() < max_power) out.push_back(multiply(out.back(), m));
  return out;
}

RationalMatrix mane_by_paths(const DeBruijnGraph& graph, const RationalVector& weights, const Rational& abar) {
  const std::size_t n = graph.node_count();
  auto powers = min_plus_powers(graph, weights, abar, n * n);
  ExtMatrix best(n, std::vector<Extended>(n));
  for (const auto& p : powers)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) best[i][j] = ext_min(best[i][j], p[i][j]);
  return finite(best, "phi");
}

RationalMatrix peierls_by_window(const DeBruijnGraph& graph, const RationalVector& weights, const Rational& abar) {
  const std::size_t n = graph.node_count();
  auto powers = min_plus_powers(graph, weights, abar, 2 * n * n);
  ExtMatrix best(n, std::vector<Extended>(n));
  for (std::size_t k = n * n; k <= 2 * n * n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) best[i][j] = ext_min(best[i][j], powers[k - 1][i][j]);
  return finite(best, "h");
}

RationalMatrix peierls_by_liminf(const DeBruijnGraph& graph, const RationalVector& weights, const Rational& abar) {
  require_small(graph);
  const std::size_t n = graph.node_count();
  constexpr std::size_t kMaxPower = 200000;
  auto m = step_matrix(graph, weights, abar);
  std::map<std::string, std::size_t> seen;
  std::vector<ExtMatrix> powers{m};
  while (powers.size() <= kMaxPower) {
    auto key = key_of(powers.back());
    if (auto it = seen.find(key); it != seen.end()) {
      // M^k repeats M^t, so the tail is periodic with period k - t.
      ExtMatrix best(n, std::vector<Extended>(n));
      for (std::size_t t = it->second; t + 1 < powers.size(); ++t)
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) best[i][j] = ext_min(best[i][j], powers[t][i][j]);
      return finite(best, "h");
    }
    seen.emplace(std::move(key), powers.size() - 1);
    powers.push_back(multiply(powers.back(), m));
  }
  throw Error(ErrorKind::NotStabilized, "min-plus powers did not become periodic");
}

Rational s_epsilon(const SEpsilonQuery& query, const AnyPotential& potential, const SftSystem& sft,
                   const Rational& abar) {
  if (query.p < 1 || query.k < 1) throw Error(ErrorKind::InvalidArgument, "need p >= 1 and k >= 1");
  const auto* one = std::get_if<OneSidedPotential>(&potential);
  const auto* two = std::get_if<TwoSidedPotential>(&potential);
  const std::size_t window = one ? one->range() : two->future_depth();
  const std::size_t past = one ? 0 : two->past_depth();
  const std::size_t p = query.p;
  if (p + query.k + window + past > 24) throw Error(ErrorKind::TooLarge, "query constrains too many symbols");

  const std::size_t length = std::max(query.k + p, query.k + window - 1);
  std::vector<std::optional<Symbol>> fixed(length);
  auto pin = [&](std::size_t pos, Symbol a) {
    if (fixed[pos] && *fixed[pos] != a) return false;
    fixed[pos] = a;
    return true;
  };
  for (std::size_t i = 0; i < p; ++i) {
    if (!pin(i, symbol_at(query.x, i)) || !pin(query.k + i, symbol_at(query.y, i)))
      throw Error(ErrorKind::NoPathExists, "start and end cylinders are incompatible");
  }
  std::vector<Word> pasts = one ? std::vector<Word>{} : admissible_words(sft, static_cast<int>(past));

  // Cost of the step at `pos`, reading z[pos .. pos+window); for a two-sided
  // table every admissible past is tried.
  auto step_cost = [&](std::span<const Symbol> w) -> Extended {
    if (one) return one->value(w) - abar;
    Extended best;
    for (const auto& y : pasts) {
      if (!sft.allowed(y.back(), w.front())) continue;
      best = ext_min(best, Extended(two->value(y, w.first(window)) - abar));
    }
    return best;
  };

  // Dynamic program over the last max(window - 1, 1) symbols.
  const std::size_t keep = window - 1;
  std::map<Word, Rational> frontier{{Word{}, Rational(0)}};
  for (std::size_t pos = 0; pos < length; ++pos) {
    std::map<Word, Rational> next;
    for (const auto& [tail, sum] : frontier) {
      for (Symbol a = 0; a < sft.alphabet_size(); ++a) {
        if (fixed[pos] && *fixed[pos] != a) continue;
        if (!tail.empty() && !sft.allowed(tail.back(), a)) continue;
        Word w = tail;
        w.push_back(a);
        Rational s = sum;
        if (w.size() >= window && pos + 1 - window < query.k) {
          auto c = step_cost(std::span<const Symbol>(w).last(window));
          if (!c) continue;
          s += *c;
        }
        Word state(w.end() - static_cast<std::ptrdiff_t>(std::min(w.size(), std::max<std::size_t>(keep, 1))), w.end());
        auto it = next.find(state);
        if (it == next.end() || s < it->second) next[state] = s;
      }
    }
    frontier = std::move(next);
  }
  if (frontier.empty()) throw Error(ErrorKind::NoPathExists, "no admissible path for the query");
  Rational best = frontier.begin()->second;
  for (const auto& [tail, s] : frontier) best = std::min(best, s);
  return best;
}

Rational holonomic_value(const TwoSidedPotential& ahat, const SftSystem& sft, std::size_t max_period) {
  const std::size_t q = ahat.future_depth();
  auto pasts = admissible_words(sft, ahat.past_depth());
  std::optional<Rational> best;
  for (std::size_t len = 1; len <= max_period; ++len) {
    for (const auto& w : admissible_words(sft, static_cast<int>(len))) {
      if (!sft.allowed(w.back(), w.front())) continue;
      LassoPoint x{{}, w};
      // Windows of the periodic point, then every joint choice of pasts.
      std::vector<Word> windows;
      for (std::size_t i = 0; i < len; ++i) {
        auto pre = prefix(x, i + q);
        windows.emplace_back(pre.begin() + static_cast<std::ptrdiff_t>(i), pre.end());
      }
      Rational sum(0);
      auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == len) {
          Rational mean = sum / Rational(static_cast<long>(len));
          if (!best || mean < *best) best = mean;
          return;
        }
        for (const auto& y : pasts) {
          if (!sft.allowed(y.back(), windows[i].front())) continue;
          const auto& v = ahat.value(y, windows[i]);
          sum += v;
          self(self, i + 1);
          sum -= v;
        }
      };
      rec(rec, 0);
    }
  }
  if (!best) throw Error(ErrorKind::NoPathExists, "no periodic orbit within the period bound");
  return *best;
}

RationalVector holonomic_lax_oleinik(std::span<const Rational> u, const DeBruijnGraph& graph,
                                     const TwoSidedPotential& ahat, const Rational& abar) {
  const auto q = static_cast<std::size_t>(ahat.future_depth());
  if (q > static_cast<std::size_t>(graph.order()) + 1)
    throw Error(ErrorKind::IncompatibleOrder, "graph too coarse for the two-sided window");
  if (u.size() != graph.node_count()) throw Error(ErrorKind::IncompatibleOrder, "function does not live on graph");
  const auto& sft = graph.sft();
  auto pasts = admissible_words(sft, ahat.past_depth());
  RationalVector out(graph.node_count());
  for (std::size_t j = 0; j < graph.node_count(); ++j) {
    Extended best;
    for (std::size_t e : graph.in_edges(j)) {
      auto w = graph.edge_word(e);
      std::span<const Symbol> win(w.data(), q);
      for (const auto& y : pasts) {
        if (!sft.allowed(y.back(), w.front())) continue;
        best = ext_min(best, Extended(u[graph.edge(e).tail] + ahat.value(y, win) - abar));
      }
    }
    out[j] = *best;
  }
  return out;
}

Extended point_barrier(const LassoPoint& x_in, const LassoPoint& y_in, BarrierKind kind, const DeBruijnGraph& graph,
                       const RationalVector& weights, const Rational& abar, const CriticalStructure& crit,
                       int max_depth, BarrierBracket* bracket) {
  const auto& sft = graph.sft();
  auto x = canonical(x_in);
  auto y = canonical(y_in);
  if (!is_admissible(x, sft) || !is_admissible(y, sft))
    throw Error(ErrorKind::InvalidArgument, "lasso is not admissible");
  const std::size_t r = graph.order();

  // Edge costs along x, read on the graph.
  auto edge_cost = [&](std::size_t i) {
    auto w = prefix(x, i + r + 1);
    return weights[*graph.find_edge(std::span<const Symbol>(w).subspan(i))] - abar;
  };
  auto prefcost = [&](std::size_t m) {
    Rational s(0);
    for (std::size_t i = 0; i < m; ++i) s += edge_cost(i);
    return s;
  };
  const std::size_t pre = x.preperiod.size();
  Rational cycle_cost(0);
  for (std::size_t i = pre; i < pre + x.cycle.size(); ++i) cycle_cost += edge_cost(i);

  if (cycle_cost > 0) {
    if (kind == BarrierKind::Peierls) return std::nullopt;
    Extended best;
    LassoPoint shifted = x;
    const std::size_t bound = pre + y.preperiod.size() + 2 * x.cycle.size() + 1;
    for (std::size_t k = 1; k <= bound; ++k) {
      shifted = lasso_shift(shifted);
      if (canonical(shifted) == y) best = ext_min(best, Extended(prefcost(k)));
    }
    return best;
  }

  auto phi = mane_matrix(graph, weights, abar);
  RationalMatrix h;
  if (kind == BarrierKind::Peierls) h = peierls_matrix(graph, weights, abar, phi, crit);
  const std::size_t target = node_of(y, graph);

  auto value_at = [&](std::size_t p) -> Rational {
    auto xw = prefix(x, p);
    std::size_t start = *graph.find_node(std::span<const Symbol>(xw).subspan(p - r));
    Rational base = prefcost(p - r);
    if (kind == BarrierKind::Peierls) return base + h[start][target];
    Rational d = phi[start][target];
    if (p > r && start == target) d = std::min(d, Rational(0));
    Rational best = base + d;
    // Short paths whose end window overlaps the fixed prefix of x.
    auto yw = prefix(y, p);
    for (std::size_t k = 1; k + r < p; ++k) {
      if (std::equal(xw.begin() + static_cast<std::ptrdiff_t>(k), xw.end(), yw.begin()))
        best = std::min(best, prefcost(k));
    }
    return best;
  };

  const std::size_t period = std::lcm(x.cycle.size(), y.cycle.size());
  const std::size_t settle = r + pre + y.preperiod.size() + period;
  std::optional<Rational> last;
  std::size_t unchanged = 0;
  for (std::size_t p = r; p <= static_cast<std::size_t>(max_depth); ++p) {
    auto v = value_at(p);
    if (last && v == *last) ++unchanged;
    else unchanged = 0;
    last = v;
    if (p >= settle && unchanged >= 2 * period + 1) return v;
  }
  if (bracket) *bracket = BarrierBracket{last, std::nullopt};
  throw Error(ErrorKind::NotStabilized, "barrier not stabilized by depth " + std::to_string(max_depth) +
                                            "; bracket [" + to_string(Extended(last)) + ", inf]");
}

NonwanderingReport is_nonwandering(const LassoPoint& x_in, const OneSidedPotential& b, const DeBruijnGraph& graph,
                                   const Rational& abar, const CriticalStructure& crit, std::size_t max_length) {
  const auto& sft = graph.sft();
  auto x = canonical(x_in);
  if (!is_admissible(x, sft)) throw Error(ErrorKind::InvalidArgument, "lasso is not admissible");
  const std::size_t r = graph.order();
  NonwanderingReport out;
  out.exact = critical_itinerary_component(prefix(x, x.preperiod.size() + x.cycle.size() + r), crit, graph)
                  .has_value();

  // Exact integer arithmetic after scaling by a common denominator.
  boost::multiprecision::mpz_int den = denominator(abar);
  for (const auto& [w, v] : b.table()) den = boost::multiprecision::lcm(den, denominator(v));
  std::map<Word, long long> cost;
  for (const auto& [w, v] : b.table()) {
    Rational scaled = (v - abar) * den;
    cost[w] = static_cast<long long>(numerator(scaled));
  }
  long long spread = 0;
  for (const auto& [w, c] : cost) spread = std::max(spread, c < 0 ? -c : c);
  // Partial sums of any path stay within n * spread of the final value.
  const long long bound = spread * static_cast<long long>(graph.node_count() + 2 * r + 12) + 1;

  const std::size_t range = b.range();
  auto window_cost = [&](std::span<const Symbol> w) { return cost.at(Word(w.begin(), w.begin() + range)); };
  const std::size_t max_p = std::max<std::size_t>(4, x.preperiod.size() + x.cycle.size() + r);
  out.search = true;
  for (std::size_t p = 1; p <= max_p && out.search; ++p) {
    const Rational eps = pow(sft.lambda(), static_cast<unsigned>(p)) * den;
    const std::size_t keep = std::max(p, range);
    // After m symbols the windows starting at 0..m-range are charged. A path of
    // k steps is read at m = k + span, where the last `span` symbols hold the
    // end cylinder and the windows charged beyond step k.
    const std::size_t span = std::max(p, range - 1);
    const std::size_t limit = max_length ? max_length : admissible_words(sft, static_cast<int>(keep)).size() + p + 1;
    const auto xp = prefix(x, p);

    long long start = 0;
    for (std::size_t i = 0; i + range <= p; ++i) start += window_cost(std::span<const Symbol>(xp).subspan(i));
    std::map<Word, std::set<long long>> frontier{{xp, {start}}};
    bool found = false;
    for (std::size_t m = p + 1; m <= limit + span && !found && !frontier.empty(); ++m) {
      std::map<Word, std::set<long long>> next;
      for (const auto& [tail, sums] : frontier) {
        for (Symbol a = 0; a < sft.alphabet_size(); ++a) {
          if (!sft.allowed(tail.back(), a)) continue;
          Word w = tail;
          w.push_back(a);
          long long add = m >= range ? window_cost(std::span<const Symbol>(w).last(range)) : 0;
          Word state(w.end() - static_cast<std::ptrdiff_t>(std::min(w.size(), keep)), w.end());
          auto& dst = next[state];
          for (long long v : sums)
            if (v + add <= bound && v + add >= -bound) dst.insert(v + add);
        }
      }
      std::erase_if(next, [](const auto& kv) { return kv.second.empty(); });
      frontier = std::move(next);
      if (m < span + 1) continue;
      for (const auto& [state, sums] : frontier) {
        if (state.size() < span) continue;
        std::span<const Symbol> tail(state.end() - static_cast<std::ptrdiff_t>(span), state.end());
        if (!std::equal(xp.begin(), xp.end(), tail.begin())) continue;
        long long excess = 0;
        for (std::size_t i = 0; i + range <= span; ++i) excess += window_cost(tail.subspan(i));
        for (long long v : sums) {
          long long total = v - excess;
          if (Rational(total < 0 ? -total : total) < eps) found = true;
        }
      }
    }
    if (!found) {
      out.search = false;
      out.search_exhausted = true;
    }
  }
  return out;
}

RandomInstance random_instance(std::uint64_t seed, const RandomInstanceOptions& options) {
  std::mt19937_64 rng(seed);
  auto sft = random_sft(rng, options.max_alphabet);
  int range = 1 + static_cast<int>(next_below(rng, static_cast<std::uint64_t>(options.max_range)));
  std::map<Word, Rational> table;
  for (const auto& w : admissible_words(sft, range))
    table.emplace(w, Rational(static_cast<long>(next_below(rng, static_cast<std::uint64_t>(options.max_weight + 1)))));
  return RandomInstance{sft, OneSidedPotential(sft, range, std::move(table))};
}

RandomTwoSided random_two_sided(std::uint64_t seed, int max_alphabet, int max_weight) {
  std::mt19937_64 rng(seed);
  auto sft = random_sft(rng, max_alphabet);
  std::map<Window, Rational> table;
  for (const auto& w : admissible_words(sft, 2))
    table.emplace(Window{{w[0]}, {w[1]}},
                  Rational(static_cast<long>(next_below(rng, static_cast<std::uint64_t>(max_weight + 1)))));
  return RandomTwoSided{sft, TwoSidedPotential(sft, 1, 1, std::move(table))};
}

std::vector<LassoPoint> enumerate_lassos(const SftSystem& sft, std::size_t max_pre, std::size_t max_period) {
  std::set<std::pair<Word, Word>> seen;
  std::vector<LassoPoint> out;
  for (std::size_t c = 1; c <= max_period; ++c) {
    for (const auto& cyc : admissible_words(sft, static_cast<int>(c))) {
      if (!sft.allowed(cyc.back(), cyc.front())) continue;
      for (std::size_t pl = 0; pl <= max_pre; ++pl) {
        for (const auto& pre : pl ? admissible_words(sft, static_cast<int>(pl)) : std::vector<Word>{Word{}}) {
          LassoPoint x{pre, cyc};
          if (!is_admissible(x, sft)) continue;
          x = canonical(x);
          if (seen.emplace(x.preperiod, x.cycle).second) out.push_back(x);
        }
      }
    }
  }
  return out;
}

OracleReport cross_check(const SftSystem& sft, const OneSidedPotential& b) {
  OracleReport report;
  auto check = [&](const std::string& name, bool ok) {
    report.lines.push_back(name + ": " + (ok ? "ok" : "MISMATCH"));
    if (!ok) ++report.mismatches;
  };
  DeBruijnGraph graph(sft, b.base_order());
  require_small(graph);
  auto weights = compile_weights(b, graph);
  auto sol = solve(graph, weights);
  const auto& abar = sol.summary.abar;

  auto cycles = brute_cycles(graph, weights);
  Rational brute = cycles.front().mean;
  for (const auto& c : cycles) brute = std::min(brute, c.mean);
  check("abar vs cycle enumeration", brute == abar);
  check("phi vs path minima", mane_by_paths(graph, weights, abar) == sol.phi);
  check("h vs liminf of path minima", peierls_by_liminf(graph, weights, abar) == sol.h);
  bool window_ok = peierls_by_window(graph, weights, abar) == sol.h;
  report.lines.push_back(std::string("h vs window [n^2, 2n^2]: ") + (window_ok ? "ok" : "differs (informational)"));
  if (!window_ok) ++report.window_disagreements;

  auto fast = critical_structure_fast(graph, weights, abar);
  check("critical edges vs tight-cycle test", fast.is_critical_edge == sol.crit.is_critical_edge);

  auto u = calibrated_fixed_point(graph, weights, abar, sol.crit);
  check("calibrated fixed point", lax_oleinik_step(u, graph, weights, abar) == u);

  std::size_t disagreements = 0;
  for (const auto& x : enumerate_lassos(sft, 1, 3)) {
    auto nw = is_nonwandering(x, b, graph, abar, sol.crit);
    if (!nw.agree()) ++disagreements;
  }
  check("non-wandering exact vs search", disagreements == 0);

  bool barriers_ok = true;
  for (std::size_t v = 0; v < graph.node_count(); ++v) {
    if (!sol.crit.is_critical_node(v)) continue;
    for (std::size_t e : graph.out_edges(v)) {
      if (!sol.crit.is_critical_edge[e] || graph.edge(e).head != v) continue;
      // Fixed point inside the critical set: both barriers vanish.
      LassoPoint x{{}, {graph.edge_last_symbol(e)}};
      barriers_ok = barriers_ok && point_barrier(x, x, BarrierKind::Mane, graph, weights, abar, sol.crit) == Rational(0);
      barriers_ok = barriers_ok && point_barrier(x, x, BarrierKind::Peierls, graph, weights, abar, sol.crit) == Rational(0);
    }
  }
  check("point barriers at critical fixed points", barriers_ok);
  return report;
}

}  // namespace ergo
