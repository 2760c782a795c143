#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ergo/oracle.hpp"
#include "ergo/tropical.hpp"
#include "fixtures.hpp"

using namespace ergo;
using fixtures::q;
using fixtures::qv;

TEST_CASE("minimizing value") {
  auto e1 = fixtures::e1();
  CHECK(e1.sol.summary.abar == 0);
  REQUIRE(e1.sol.summary.witness_cycle.size() == 1);
  CHECK(e1.graph.edge_label(e1.sol.summary.witness_cycle[0]) == "00");

  auto one = build_sft(1, {{1}}, q("1/2"));
  auto loop = fixtures::solve_potential(one, fixtures::table(one, 1, {{"0", "7/3"}}));
  CHECK(loop.sol.summary.abar == q("7/3"));

  // 0 -> 1 costs 1, 1 -> 0 and 1 -> 1 cost 3: cycle means 2 and 3.
  auto sft = build_sft(2, {{0, 1}, {1, 1}}, q("1/2"));
  auto two = fixtures::solve_potential(sft, fixtures::table(sft, 2, {{"01", "1"}, {"10", "3"}, {"11", "3"}}));
  CHECK(two.sol.summary.abar == 2);
  CHECK(two.sol.summary.witness_cycle.size() == 2);
}

TEST_CASE("barrier matrices of the fixtures") {
  auto e1 = fixtures::e1();
  CHECK(e1.sol.phi == RationalMatrix{qv({"0", "0"}), qv({"1", "1"})});
  CHECK(e1.sol.h == RationalMatrix{qv({"0", "0"}), qv({"1", "1"})});

  auto e2 = fixtures::e2();
  CHECK(e2.sol.h[0][2] == 1);
  CHECK(e2.sol.h[2][0] == 1);
  CHECK(e2.sol.phi[1][1] == 1);
  CHECK(e2.sol.h[1][1] == 2);

  auto flat = fixtures::solve_potential(full_shift(2), fixtures::table(full_shift(2), 1, {{"0", "5"}, {"1", "5"}}));
  CHECK(flat.sol.summary.abar == 5);
  for (const auto& row : flat.sol.phi)
    for (const auto& x : row) CHECK(x == 0);
  CHECK(flat.sol.crit.critical_edges.size() == 4);
  CHECK(flat.sol.crit.components.size() == 1);
  CHECK(calibrated_fixed_point(flat.graph, flat.weights, flat.sol.summary.abar, flat.sol.crit) == qv({"0", "0"}));
}

TEST_CASE("critical structure of the fixtures") {
  auto e1 = fixtures::e1();
  REQUIRE(e1.sol.crit.critical_edges.size() == 1);
  CHECK(e1.graph.edge_label(e1.sol.crit.critical_edges[0]) == "00");
  REQUIRE(e1.sol.crit.components.size() == 1);
  CHECK(e1.sol.crit.components[0].nodes == std::vector<std::size_t>{0});

  auto e2 = fixtures::e2();
  REQUIRE(e2.sol.crit.components.size() == 2);
  CHECK(e2.sol.crit.representatives() == std::vector<std::size_t>{0, 2});
  CHECK(e2.graph.edge_label(e2.sol.crit.components[1].edges[0]) == "22");
  CHECK(e2.sol.crit.node_disjoint);
}

TEST_CASE("Lax-Oleinik operator and calibrated fixed point") {
  auto e1 = fixtures::e1();
  CHECK(lax_oleinik_step(qv({"0", "0"}), e1.graph, e1.weights, q("0")) == qv({"0", "0"}));
  CHECK(lax_oleinik_step(qv({"0", "5"}), e1.graph, e1.weights, q("0")) == qv({"0", "0"}));
  CHECK(calibrated_fixed_point(e1.graph, e1.weights, q("0"), e1.sol.crit) == qv({"0", "0"}));

  auto e2 = fixtures::e2();
  CHECK(calibrated_fixed_point(e2.graph, e2.weights, q("0"), e2.sol.crit) == qv({"0", "1", "0"}));
}

TEST_CASE("constraint polytope") {
  auto e2 = fixtures::e2();
  auto poly = constraint_polytope(e2.sol.crit, e2.sol.h);
  CHECK(poly.bounds == RationalMatrix{qv({"0", "1"}), qv({"1", "0"})});
  CHECK(poly.contains(qv({"0", "1"})));
  CHECK_FALSE(poly.contains(qv({"0", "2"})));
  CHECK(poly.contains(qv({"-3", "-3"})));
}

TEST_CASE("barrier invariants on random instances") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    auto inst = random_instance(seed);
    auto s = fixtures::solve_potential(inst.sft, inst.potential);
    const auto& phi = s.sol.phi;
    const auto& h = s.sol.h;
    const auto& crit = s.sol.crit;
    const std::size_t n = s.graph.node_count();
    for (std::size_t i = 0; i < n; ++i) {
      CHECK((phi[i][i] == 0) == crit.is_critical_node(i));
      CHECK((h[i][i] == 0) == crit.is_critical_node(i));
      if (crit.is_critical_node(i)) CHECK(phi[i] == h[i]);
      for (std::size_t j = 0; j < n; ++j) {
        CHECK(phi[i][j] <= h[i][j]);
        for (std::size_t k = 0; k < n; ++k) {
          CHECK(phi[i][k] <= phi[i][j] + phi[j][k]);
          CHECK(h[i][k] <= h[i][j] + h[j][k]);
        }
        if (crit.is_critical_node(i) && crit.is_critical_node(j))
          CHECK((crit.node_component[i] == crit.node_component[j]) == (h[i][j] + h[j][i] == 0));
      }
    }
    auto u = calibrated_fixed_point(s.graph, s.weights, s.sol.summary.abar, crit);
    CHECK(lax_oleinik_step(u, s.graph, s.weights, s.sol.summary.abar) == u);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) CHECK(u[j] - u[i] <= phi[i][j]);
    auto fast = critical_structure_fast(s.graph, s.weights, s.sol.summary.abar);
    CHECK(fast.is_critical_edge == crit.is_critical_edge);

    Rational mean(0);
    for (auto e : s.sol.summary.witness_cycle) mean += s.weights[e];
    CHECK(mean / Rational(static_cast<long>(s.sol.summary.witness_cycle.size())) == s.sol.summary.abar);
  }
}

TEST_CASE("lifted critical structure matches a direct solve") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    auto inst = random_instance(seed);
    auto s = fixtures::solve_potential(inst.sft, inst.potential);
    DeBruijnGraph fine(inst.sft, s.graph.order() + 2);
    auto w = lift_edge_values(s.weights, s.graph, fine);
    auto direct = critical_structure_fast(fine, w, s.sol.summary.abar);
    auto lifted = lift_critical(s.sol.crit, s.graph, fine);
    CHECK(direct.is_critical_edge == lifted.is_critical_edge);
    CHECK(direct.components.size() == lifted.components.size());
    CHECK(minimizing_value(fine, w).abar == s.sol.summary.abar);
  }
}

TEST_CASE("decomposition of the Mane potential along a periodic orbit") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    auto inst = random_instance(seed);
    auto s = fixtures::solve_potential(inst.sft, inst.potential);
    const auto& abar = s.sol.summary.abar;
    for (const auto& x : enumerate_lassos(inst.sft, 0, 3)) {
      for (std::size_t l = 1; l < x.cycle.size(); ++l) {
        LassoPoint y = x;
        for (std::size_t i = 0; i < l; ++i) y = lasso_shift(y);
        auto whole = point_barrier(x, x, BarrierKind::Mane, s.graph, s.weights, abar, s.sol.crit);
        auto there = point_barrier(x, y, BarrierKind::Mane, s.graph, s.weights, abar, s.sol.crit);
        auto back = point_barrier(y, x, BarrierKind::Mane, s.graph, s.weights, abar, s.sol.crit);
        CHECK(whole == ext_add(there, back));
      }
    }
  }
}
