// Acceptance suite: one PASS/FAIL line per criterion. The exit status is
// nonzero when a criterion fails for a reason not listed as a known deviation.

#include "ergo/cli.hpp"
#include "ergo/error.hpp"
#include "ergo/instance.hpp"
#include "ergo/oracle.hpp"
#include "ergo/subaction.hpp"
#include "fixtures.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <random>
#include <sstream>

using namespace ergo;
using fixtures::q;
using fixtures::qv;

namespace {

constexpr std::uint64_t kRandomInstances = 200;

struct Case {
  std::string name;
  SftSystem sft;
  OneSidedPotential b;
};

struct Outcome {
  bool pass = true;
  bool known_deviation = false;
  std::string detail;
};

std::vector<Case> instance_set() {
  std::vector<Case> out{{"E1", full_shift(2), fixtures::e1_potential()}, {"E2", full_shift(3), fixtures::e2_potential()}};
  for (std::uint64_t seed = 1; seed <= kRandomInstances; ++seed) {
    auto r = random_instance(seed);
    out.push_back({"seed " + std::to_string(seed), r.sft, r.potential});
  }
  return out;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
  std::ostringstream os;
  os.precision(2);
  os << std::fixed << s << " s";
  return os.str();
}

// Boundary data inside the constraint set: min-plus closure of a random vector.
BoundaryData random_boundary(const ConstraintPolytope& poly, std::mt19937_64& rng) {
  const std::size_t r = poly.dimension();
  RationalVector c(r);
  for (auto& x : c) x = Rational(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 3));
  BoundaryData bd{RationalVector(r)};
  for (std::size_t j = 0; j < r; ++j) {
    bd.values[j] = c[0] + poly.bounds[0][j];
    for (std::size_t i = 1; i < r; ++i) bd.values[j] = std::min(bd.values[j], Rational(c[i] + poly.bounds[i][j]));
  }
  return bd;
}

Outcome ac1(const std::vector<Case>& cases) {
  auto t0 = std::chrono::steady_clock::now();
  std::size_t violations = 0;
  for (const auto& c : cases) {
    auto s = fixtures::solve_potential(c.sft, c.b);
    const auto& phi = s.sol.phi;
    const auto& h = s.sol.h;
    const std::size_t n = s.graph.node_count();
    for (std::size_t i = 0; i < n; ++i) {
      bool crit = s.sol.crit.is_critical_node(i);
      if ((phi[i][i] == 0) != crit || (h[i][i] == 0) != crit) ++violations;
      if (crit && phi[i] != h[i]) ++violations;
      for (std::size_t j = 0; j < n; ++j) {
        if (phi[i][j] > h[i][j]) ++violations;
        for (std::size_t k = 0; k < n; ++k) {
          if (phi[i][k] > phi[i][j] + phi[j][k]) ++violations;
          if (h[i][k] > h[i][j] + h[j][k]) ++violations;
        }
      }
    }
  }
  double t = seconds_since(t0);
  return {violations == 0 && t < 30, false,
          std::to_string(cases.size()) + " instances, " + std::to_string(violations) + " violations, " + fmt_seconds(t)};
}

Outcome ac2(const std::vector<Case>& cases) {
  auto t0 = std::chrono::steady_clock::now();
  std::size_t abar_bad = 0, phi_bad = 0, window_bad = 0, liminf_bad = 0;
  std::vector<std::string> window_cases;
  for (const auto& c : cases) {
    auto s = fixtures::solve_potential(c.sft, c.b);
    const auto& abar = s.sol.summary.abar;
    auto cycles = brute_cycles(s.graph, s.weights);
    Rational best = cycles.front().mean;
    for (const auto& cy : cycles) best = std::min(best, cy.mean);
    if (best != abar) ++abar_bad;
    if (mane_by_paths(s.graph, s.weights, abar) != s.sol.phi) ++phi_bad;
    if (peierls_by_window(s.graph, s.weights, abar) != s.sol.h) {
      ++window_bad;
      window_cases.push_back(c.name);
    }
    if (peierls_by_liminf(s.graph, s.weights, abar) != s.sol.h) ++liminf_bad;
  }
  double t = seconds_since(t0);
  std::string detail = "abar " + std::to_string(abar_bad) + ", phi " + std::to_string(phi_bad) + ", h window " +
                       std::to_string(window_bad) + ", h liminf " + std::to_string(liminf_bad) + " mismatches, " +
                       fmt_seconds(t);
  Outcome out{abar_bad + phi_bad + window_bad + liminf_bad == 0 && t < 120, false, detail};
  if (!out.pass && abar_bad + phi_bad + liminf_bad == 0 && t < 120) {
    // The [n^2, 2n^2] window can still favour a cheap non-critical cycle; the
    // liminf of the same fixed-length minima agrees everywhere.
    out.known_deviation = true;
    std::string names;
    for (const auto& n : window_cases) names += (names.empty() ? "" : ", ") + n;
    out.detail += "; window too short on " + names;
  }
  return out;
}

Outcome ac3(const std::vector<Case>& cases) {
  std::mt19937_64 rng(3);
  std::size_t checked = 0, violations = 0;
  for (const auto& c : cases) {
    auto s = fixtures::solve_potential(c.sft, c.b);
    const auto& abar = s.sol.summary.abar;
    auto poly = constraint_polytope(s.sol.crit, s.sol.h);
    for (int trial = 0; trial < 4; ++trial) {
      auto bd = random_boundary(poly, rng);
      auto u = calibrated_from_boundary(bd, s.sol.crit, s.sol.h);
      ++checked;
      if (lax_oleinik_step(u.values, s.graph, s.weights, abar) != u.values) ++violations;
      if (restrict_to_representatives(u, s.sol.crit).values != bd.values) ++violations;
      auto rebuilt = calibrated_from_boundary(restrict_to_representatives(u, s.sol.crit), s.sol.crit, s.sol.h);
      if (rebuilt.values != u.values) ++violations;
    }
    SubAction fixed{s.graph.order(), calibrated_fixed_point(s.graph, s.weights, abar, s.sol.crit)};
    ++checked;
    if (calibrated_from_boundary(restrict_to_representatives(fixed, s.sol.crit), s.sol.crit, s.sol.h).values !=
        fixed.values)
      ++violations;
  }
  return {violations == 0, false,
          std::to_string(checked) + " calibrated sub-actions, " + std::to_string(violations) + " violations"};
}

Outcome ac4(const std::vector<Case>& cases) {
  std::size_t instances = 0, violations = 0;
  for (const auto& c : cases) {
    auto s = fixtures::solve_potential(c.sft, c.b);
    const auto& crit = s.sol.crit;
    if (crit.components.size() < 2 || !crit.node_disjoint) continue;
    ++instances;
    auto reps = crit.representatives();
    for (std::size_t i0 = 0; i0 < reps.size(); ++i0) {
      try {
        auto d = dominant_calibrated(i0, q("1/3"), crit, s.sol.h);
        for (std::size_t x = 0; x < s.graph.node_count(); ++x)
          if (d.u.values[x] != q("1/3") + s.sol.h[reps[i0]][x]) ++violations;
        if (!d.index_unique) ++violations;
      } catch (const Error&) {
        ++violations;
      }
    }
  }
  auto e2 = fixtures::e2();
  bool e2_ok = dominant_calibrated(0, q("0"), e2.sol.crit, e2.sol.h).u.values == qv({"0", "1", "1"}) &&
               dominant_calibrated(1, q("0"), e2.sol.crit, e2.sol.h).u.values == qv({"1", "1", "0"});
  return {violations == 0 && e2_ok && instances > 0, false,
          std::to_string(instances) + " instances with several components, " + std::to_string(violations) +
              " violations, E2 vectors " + (e2_ok ? "match" : "differ")};
}

struct SeparatingRun {
  SeparatingResult result;
  bool verified = false;
};

SeparatingRun separate(const fixtures::Solved& s, int depth, bool node_barriers) {
  SeparatingOptions opt;
  opt.node_barriers = node_barriers;
  SeparatingRun out{separating_subaction(s.graph, s.weights, s.sol.summary.abar, s.sol.crit, depth, opt)};
  DeBruijnGraph g(s.graph.sft(), depth);
  auto w = lift_edge_values(s.weights, s.graph, g);
  auto crit = lift_critical(s.sol.crit, s.graph, g);
  auto v = verify(out.result.u, g, w, s.sol.summary.abar, crit);
  out.verified = v.is_subaction && v.separating_certificate && v.critical_containment;
  return out;
}

Outcome ac5(const std::vector<Case>& cases) {
  auto t0 = std::chrono::steady_clock::now();
  std::size_t random_total = 0, random_ok = 0, plain_ok = 0, false_certificates = 0;
  bool fixtures_ok = true;
  for (const auto& c : cases) {
    auto s = fixtures::solve_potential(c.sft, c.b);
    const bool fixture = c.name == "E1" || c.name == "E2";
    const int max_depth = fixture ? 2 : static_cast<int>(s.graph.node_count()) + 2;
    bool ok = false, plain = false;
    for (int depth = fixture ? 2 : s.graph.order() + 1; depth <= max_depth && !ok; ++depth) {
      auto run = separate(s, depth, true);
      if (run.result.certified && !run.verified) ++false_certificates;
      ok = run.result.certified && run.verified;
      if (ok) plain = !run.result.used_node_barriers;
    }
    if (fixture) {
      fixtures_ok = fixtures_ok && ok;
    } else {
      ++random_total;
      if (ok) ++random_ok;
      if (plain) ++plain_ok;
    }
  }
  bool pass = fixtures_ok && false_certificates == 0 && random_ok * 10 >= random_total * 9;
  return {pass, false,
          std::string("fixtures ") + (fixtures_ok ? "certified" : "NOT certified") + ", random " +
              std::to_string(random_ok) + "/" + std::to_string(random_total) + " certified (" +
              std::to_string(plain_ok) + " without node barriers), " + std::to_string(false_certificates) +
              " false certificates, " + fmt_seconds(seconds_since(t0))};
}

Outcome ac6(const std::vector<Case>& cases) {
  std::mt19937_64 rng(6);
  std::size_t pairs = 0, violations = 0;
  for (const auto& c : cases) {
    auto s = fixtures::solve_potential(c.sft, c.b);
    const auto& abar = s.sol.summary.abar;
    auto poly = constraint_polytope(s.sol.crit, s.sol.h);
    std::vector<SubAction> calibrated;
    for (int t = 0; t < 3; ++t) calibrated.push_back(calibrated_from_boundary(random_boundary(poly, rng), s.sol.crit, s.sol.h));
    auto sep = separating_subaction(s.graph, s.weights, abar, s.sol.crit, s.graph.order());

    std::vector<SubAction> others{sep.u, calibrated[1]};
    others.push_back(convex_combination({calibrated[1], sep.u}, qv({"1/4", "3/4"})));
    others.push_back(convex_combination({calibrated[0], calibrated[2], sep.u}, qv({"1/2", "1/3", "1/6"})));
    // v with normalized weights identically zero on the tight set: v = u.
    for (const auto& u : calibrated) {
      auto vs = others;
      vs.push_back(u);
      for (const auto& v : vs) {
        ++pairs;
        auto g = gap_analysis(u, v, s.graph, s.weights, abar, s.sol.crit);
        if (!g.constant_on_components || !g.min_on_critical) ++violations;
        if (s.sol.crit.node_disjoint && !g.min_on_whole_component) ++violations;
      }
    }
  }
  return {violations == 0, false, std::to_string(pairs) + " (u, v) pairs, " + std::to_string(violations) + " violations"};
}

Outcome ac7() {
  std::size_t instances = 0, value_bad = 0, calib_bad = 0;
  std::mt19937_64 rng(7);
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    auto r = random_two_sided(seed);
    ++instances;
    auto b = reduce_two_sided(r.potential, r.sft);
    DeBruijnGraph g(r.sft, b.base_order());
    auto w = compile_weights(b, g);
    auto sol = solve(g, w);
    if (holonomic_value(r.potential, r.sft, g.node_count()) != sol.summary.abar) ++value_bad;
    auto u = calibrated_fixed_point(g, w, sol.summary.abar, sol.crit);
    if (holonomic_lax_oleinik(u, g, r.potential, sol.summary.abar) != u) ++calib_bad;
    for (int t = 0; t < 5; ++t) {
      RationalVector v(g.node_count());
      for (auto& x : v) x = Rational(static_cast<long>(rng() % 11) - 5, 1 + static_cast<long>(rng() % 4));
      auto hol = holonomic_lax_oleinik(v, g, r.potential, sol.summary.abar);
      auto one = lax_oleinik_step(v, g, w, sol.summary.abar);
      if (hol != one) ++calib_bad;
      // Fixed points of either operator are fixed points of the other.
      if ((hol == v) != (one == v)) ++calib_bad;
    }
  }
  return {value_bad + calib_bad == 0, false,
          std::to_string(instances) + " two-sided instances, " + std::to_string(value_bad) + " value and " +
              std::to_string(calib_bad) + " calibration mismatches"};
}

Outcome ac8(const std::vector<Case>& cases) {
  auto t0 = std::chrono::steady_clock::now();
  std::size_t lassos = 0, disagreements = 0, instances = 0;
  for (const auto& c : cases) {
    const bool fixture = c.name == "E1" || c.name == "E2";
    if (!fixture && instances >= 52) continue;
    ++instances;
    auto s = fixtures::solve_potential(c.sft, c.b);
    for (const auto& x : enumerate_lassos(c.sft, 1, 3)) {
      ++lassos;
      if (!is_nonwandering(x, c.b, s.graph, s.sol.summary.abar, s.sol.crit).agree()) ++disagreements;
    }
  }
  return {disagreements == 0, false,
          std::to_string(lassos) + " lassos on " + std::to_string(instances) + " instances, " +
              std::to_string(disagreements) + " disagreements, " + fmt_seconds(seconds_since(t0))};
}

std::string capture(const std::string& cmd) {
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return "<popen failed>";
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int status = pclose(pipe);
  return out + "\n<exit " + std::to_string(WEXITSTATUS(status)) + ">";
}

Outcome ac9() {
  namespace fs = std::filesystem;
  auto dir = fs::temp_directory_path() / "ergo_acceptance";
  fs::create_directories(dir);
  std::vector<std::string> files{std::string(ERGO_DATA_DIR) + "/e1.json", std::string(ERGO_DATA_DIR) + "/e2.json",
                                 std::string(ERGO_DATA_DIR) + "/two_sided.json"};
  for (std::uint64_t seed : {5u, 34u, 77u}) {
    auto r = random_instance(seed);
    auto path = dir / ("seed" + std::to_string(seed) + ".json");
    write_text_file(path, instance_to_json(Instance{r.sft, r.potential}));
    files.push_back(path.string());
  }
  std::size_t runs = 0, differences = 0;
  for (const auto& f : files) {
    for (const char* cmd : {"solve", "barrier", "calibrate"}) {
      std::string line = std::string(ERGO_CLI_PATH) + " " + cmd + " --instance " + f + " 2>&1";
      auto first = capture(line);
      auto second = capture(line);
      std::ostringstream a, b, e1, e2;
      run_cli({cmd, "--instance", f}, a, e1);
      run_cli({cmd, "--instance", f}, b, e2);
      runs += 2;
      if (first != second) ++differences;
      if (a.str() != b.str() || a.str() + "\n<exit 0>" != first) ++differences;
    }
  }
  return {differences == 0, false,
          std::to_string(runs) + " paired runs, " + std::to_string(differences) + " byte differences"};
}

}  // namespace

int main() {
  auto cases = instance_set();
  std::vector<std::pair<std::string, Outcome>> results;
  auto report = [&](const std::string& id, Outcome o) {
    std::cout << id << " " << (o.pass ? "PASS" : "FAIL") << "  " << o.detail
              << (o.known_deviation ? "  [known deviation]" : "") << std::endl;
    results.emplace_back(id, std::move(o));
  };
  auto guarded = [&](const std::string& id, auto&& fn) {
    try {
      report(id, fn());
    } catch (const std::exception& e) {
      report(id, Outcome{false, false, std::string("threw: ") + e.what()});
    }
  };
  guarded("AC-1", [&] { return ac1(cases); });
  guarded("AC-2", [&] { return ac2(cases); });
  guarded("AC-3", [&] { return ac3(cases); });
  guarded("AC-4", [&] { return ac4(cases); });
  guarded("AC-5", [&] { return ac5(cases); });
  guarded("AC-6", [&] { return ac6(cases); });
  guarded("AC-7", [&] { return ac7(); });
  guarded("AC-8", [&] { return ac8(cases); });
  guarded("AC-9", [&] { return ac9(); });

  int unexplained = 0;
  for (const auto& [id, o] : results)
    if (!o.pass && !o.known_deviation) ++unexplained;
  std::cout << (unexplained ? "acceptance: unexplained failures" : "acceptance: no unexplained failures") << std::endl;
  return unexplained ? 1 : 0;
}
