#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ergo/error.hpp"
#include "ergo/symbolic.hpp"
#include "fixtures.hpp"

using namespace ergo;
using fixtures::lasso;
using fixtures::q;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("sft validation") {
  CHECK(kind_of([] { build_sft(2, {{1, 0}, {0, 1}}, q("1/2")); }) == ErrorKind::NotIrreducible);
  CHECK(kind_of([] { build_sft(2, {{1, 1}, {0, 0}}, q("1/2")); }) == ErrorKind::EmptyRowOrColumn);
  CHECK(kind_of([] { build_sft(2, {{1, 1}, {1, 1}}, q("1")); }) == ErrorKind::LambdaOutOfRange);
  CHECK(kind_of([] { build_sft(2, {{1, 1}, {1, 1}}, q("0")); }) == ErrorKind::LambdaOutOfRange);
  CHECK(kind_of([] { build_sft(2, {{1, 2}, {1, 1}}, q("1/2")); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { build_sft(2, {{1, 1}}, q("1/2")); }) == ErrorKind::InvalidArgument);
  CHECK_NOTHROW(build_sft(2, {{1, 1}, {1, 0}}, q("1/3")));
  CHECK_NOTHROW(build_sft(1, {{1}}, q("1/2")));
}

TEST_CASE("words") {
  CHECK(format_word(Word{0, 1, 1}, 2) == "011");
  CHECK(parse_word("201", 3) == Word{2, 0, 1});
  CHECK(format_word(Word{10, 0, 3}, 12) == "10,0,3");
  CHECK(parse_word("10,0,3", 12) == Word{10, 0, 3});
  CHECK(kind_of([] { parse_word("3", 3); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_word("0x", 3); }) == ErrorKind::ParseError);

  auto golden = build_sft(2, {{1, 1}, {1, 0}}, q("1/2"));
  CHECK(is_admissible(Word{0, 1, 0, 0}, golden));
  CHECK_FALSE(is_admissible(Word{0, 1, 1}, golden));
}

TEST_CASE("de Bruijn refinement of the full shift") {
  DeBruijnGraph g(full_shift(2), 2);
  REQUIRE(g.node_count() == 4);
  REQUIRE(g.edge_count() == 8);
  CHECK(g.node_label(0) == "00");
  CHECK(g.node_label(3) == "11");
  CHECK(g.edge_label(0) == "000");
  CHECK(g.edge_label(7) == "111");
  auto e = g.find_edge(Word{0, 1, 1});
  REQUIRE(e);
  CHECK(g.node_label(g.edge(*e).tail) == "01");
  CHECK(g.node_label(g.edge(*e).head) == "11");
  CHECK(g.out_edges(1).size() == 2);
  CHECK(g.in_edges(1).size() == 2);
  CHECK(is_strongly_connected(g));
}

TEST_CASE("de Bruijn refinement of the golden mean shift") {
  auto golden = build_sft(2, {{1, 1}, {1, 0}}, q("1/2"));
  DeBruijnGraph g(golden, 2);
  REQUIRE(g.node_count() == 3);
  CHECK(g.node_label(0) == "00");
  CHECK(g.node_label(1) == "01");
  CHECK(g.node_label(2) == "10");
  CHECK(g.edge_count() == 5);
  CHECK_FALSE(g.find_node(Word{1, 1}));
}

TEST_CASE("node budget") {
  CHECK(kind_of([] { DeBruijnGraph(full_shift(3), 6, 100); }) == ErrorKind::BudgetExceeded);
  CHECK_NOTHROW(DeBruijnGraph(full_shift(3), 4, 81));
}

TEST_CASE("lassos") {
  auto x = canonical(lasso("01", "0101"));
  CHECK(x.preperiod.empty());
  CHECK(x.cycle == Word{0, 1});

  auto y = canonical(lasso("10", "00"));
  CHECK(y.preperiod == Word{1});
  CHECK(y.cycle == Word{0});

  CHECK(prefix(lasso("1", "01"), 5) == Word{1, 0, 1, 0, 1});
  CHECK(symbol_at(lasso("1", "01"), 2) == 1);
  CHECK(canonical(lasso_shift(lasso("1", "0"))) == canonical(lasso("", "0")));
  CHECK(format_lasso(lasso("1", "0"), 2) == "1(0)");

  auto sft = full_shift(2);
  CHECK(lasso_distance(lasso("", "0"), lasso("", "0"), sft) == 0);
  CHECK(lasso_distance(lasso("", "0"), lasso("1", "0"), sft) == 1);
  CHECK(lasso_distance(lasso("", "0"), lasso("0", "1"), sft) == q("1/2"));
  CHECK(lasso_distance(lasso("", "01"), lasso("0101", "0"), sft) == q("1/32"));

  auto golden = build_sft(2, {{1, 1}, {1, 0}}, q("1/2"));
  CHECK_FALSE(is_admissible(lasso("1", "1"), golden));
  CHECK(is_admissible(lasso("1", "0"), golden));
  CHECK(node_of(lasso("1", "0"), DeBruijnGraph(golden, 2)) == 2);
}

TEST_CASE("strong components") {
  std::vector<Edge> edges{{0, 1}, {1, 0}, {1, 2}, {2, 2}, {3, 3}};
  auto comp = strong_components(4, edges, std::vector<bool>(edges.size(), true));
  CHECK(comp[0] == comp[1]);
  CHECK(comp[0] != comp[2]);
  CHECK(comp[2] != comp[3]);
  CHECK(comp[0] == 0);

  std::vector<bool> keep{true, false, true, true, true};
  auto split = strong_components(4, edges, keep);
  CHECK(split[0] != split[1]);
}
