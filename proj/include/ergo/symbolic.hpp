#pragma once

// Subshifts of finite type, their points (as lassos) and the de Bruijn
// refinements every solver runs on.

#include "ergo/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ergo {

using Symbol = int;
using Word = std::vector<Symbol>;

inline constexpr std::size_t kDefaultNodeBudget = 1'000'000;

/// One-sided subshift of finite type: alphabet {0..s-1}, an irreducible 0/1
/// transition matrix and the base lambda of the metric d(x,y) = lambda^k.
class SftSystem {
 public:
  /// Validates every invariant; throws NotIrreducible, EmptyRowOrColumn,
  /// LambdaOutOfRange or InvalidArgument.
  SftSystem(int alphabet_size, std::vector<std::vector<int>> matrix, Rational lambda);

  int alphabet_size() const noexcept { return alphabet_size_; }
  bool allowed(Symbol a, Symbol b) const { return matrix_[a][b] != 0; }
  const std::vector<std::vector<int>>& matrix() const noexcept { return matrix_; }
  const Rational& lambda() const noexcept { return lambda_; }

  bool operator==(const SftSystem&) const = default;

 private:
  int alphabet_size_;
  std::vector<std::vector<int>> matrix_;
  Rational lambda_;
};

SftSystem build_sft(int alphabet_size, const std::vector<std::vector<int>>& matrix, const Rational& lambda);

/// Full shift on s symbols with lambda = 1/2.
SftSystem full_shift(int alphabet_size);

bool is_admissible(std::span<const Symbol> word, const SftSystem& sft);

/// Symbols as digits when s <= 10, comma separated otherwise.
std::string format_word(std::span<const Symbol> word, int alphabet_size);
Word parse_word(std::string_view text, int alphabet_size);

/// Eventually periodic point preperiod . cycle^inf.
struct LassoPoint {
  Word preperiod;
  Word cycle;

  bool operator==(const LassoPoint&) const = default;
};

/// Primitive cycle, shortest preperiod. Throws InvalidArgument on an empty cycle.
LassoPoint canonical(LassoPoint x);

bool is_admissible(const LassoPoint& x, const SftSystem& sft);

Symbol symbol_at(const LassoPoint& x, std::size_t index);
Word prefix(const LassoPoint& x, std::size_t length);

LassoPoint lasso_shift(const LassoPoint& x);

/// lambda^k with k the first index where the expansions differ; 0 if equal.
Rational lasso_distance(const LassoPoint& x, const LassoPoint& y, const SftSystem& sft);

std::string format_lasso(const LassoPoint& x, int alphabet_size);

struct Edge {
  std::size_t tail;
  std::size_t head;
};

/// Order-r refinement: nodes are the admissible r-words in lexicographic
/// order, edges the admissible (r+1)-words w with tail = w[0..r-1] and
/// head = w[1..r], also in lexicographic order.
class DeBruijnGraph {
 public:
  DeBruijnGraph(const SftSystem& sft, int order, std::size_t node_budget = kDefaultNodeBudget);

  const SftSystem& sft() const noexcept { return sft_; }
  int order() const noexcept { return order_; }
  std::size_t node_count() const noexcept { return nodes_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  const Word& node_word(std::size_t node) const { return nodes_[node]; }
  const Edge& edge(std::size_t e) const { return edges_[e]; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  Word edge_word(std::size_t e) const;
  Symbol edge_last_symbol(std::size_t e) const { return nodes_[edges_[e].head].back(); }

  std::span<const std::size_t> out_edges(std::size_t node) const { return out_[node]; }
  std::span<const std::size_t> in_edges(std::size_t node) const { return in_[node]; }

  std::optional<std::size_t> find_node(std::span<const Symbol> word) const;
  std::optional<std::size_t> find_edge(std::span<const Symbol> word) const;

  std::string node_label(std::size_t node) const { return format_word(nodes_[node], sft_.alphabet_size()); }
  std::string edge_label(std::size_t e) const { return format_word(edge_word(e), sft_.alphabet_size()); }

 private:
  SftSystem sft_;
  int order_;
  std::vector<Word> nodes_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::vector<std::size_t>> in_;
};

DeBruijnGraph refine(const SftSystem& sft, int order, std::size_t node_budget = kDefaultNodeBudget);

/// Node whose word is the first r symbols of x.
std::size_t node_of(const LassoPoint& x, const DeBruijnGraph& graph);

/// Strongly connected components (Tarjan). Returns a component id per node,
/// ids numbered in order of each component's smallest node. Only edges with
/// keep[e] set participate; isolated nodes get their own id.
std::vector<std::size_t> strong_components(std::size_t node_count, const std::vector<Edge>& edges,
                                           const std::vector<bool>& keep);

bool is_strongly_connected(const DeBruijnGraph& graph);

}  // namespace ergo
