#include "ergo/symbolic.hpp"

#include "ergo/error.hpp"

#include <algorithm>
#include <numeric>

namespace ergo {

SftSystem::SftSystem(int alphabet_size, std::vector<std::vector<int>> matrix, Rational lambda)
    : alphabet_size_(alphabet_size), matrix_(std::move(matrix)), lambda_(std::move(lambda)) {
  if (alphabet_size_ < 1 || alphabet_size_ > 64)
    throw Error(ErrorKind::InvalidArgument, "alphabet size must lie in [1, 64]");
  if (matrix_.size() != static_cast<std::size_t>(alphabet_size_))
    throw Error(ErrorKind::InvalidArgument, "transition matrix must have one row per symbol");
  for (const auto& row : matrix_) {
    if (row.size() != static_cast<std::size_t>(alphabet_size_))
      throw Error(ErrorKind::InvalidArgument, "transition matrix must be square");
    for (int v : row)
      if (v != 0 && v != 1) throw Error(ErrorKind::InvalidArgument, "transition matrix entries must be 0 or 1");
  }
  if (lambda_ <= 0 || lambda_ >= 1) throw Error(ErrorKind::LambdaOutOfRange, "lambda must lie in (0,1)");
  for (int a = 0; a < alphabet_size_; ++a) {
    bool row = false, col = false;
    for (int b = 0; b < alphabet_size_; ++b) {
      row = row || matrix_[a][b];
      col = col || matrix_[b][a];
    }
    if (!row) throw Error(ErrorKind::EmptyRowOrColumn, "row " + std::to_string(a) + " has no allowed successor");
    if (!col) throw Error(ErrorKind::EmptyRowOrColumn, "column " + std::to_string(a) + " has no allowed predecessor");
  }
  std::vector<Edge> edges;
  for (int a = 0; a < alphabet_size_; ++a)
    for (int b = 0; b < alphabet_size_; ++b)
      if (matrix_[a][b]) edges.push_back({static_cast<std::size_t>(a), static_cast<std::size_t>(b)});
  auto comp = strong_components(alphabet_size_, edges, std::vector<bool>(edges.size(), true));
  if (std::any_of(comp.begin(), comp.end(), [](std::size_t c) { return c != 0; }))
    throw Error(ErrorKind::NotIrreducible, "transition graph is not strongly connected");
}

SftSystem build_sft(int alphabet_size, const std::vector<std::vector<int>>& matrix, const Rational& lambda) {
  return SftSystem(alphabet_size, matrix, lambda);
}

SftSystem full_shift(int alphabet_size) {
  return SftSystem(alphabet_size,
                   std::vector<std::vector<int>>(alphabet_size, std::vector<int>(alphabet_size, 1)),
                   Rational(1, 2));
}

bool is_admissible(std::span<const Symbol> word, const SftSystem& sft) {
  for (Symbol s : word)
    if (s < 0 || s >= sft.alphabet_size()) return false;
  for (std::size_t i = 0; i + 1 < word.size(); ++i)
    if (!sft.allowed(word[i], word[i + 1])) return false;
  return true;
}

std::string format_word(std::span<const Symbol> word, int alphabet_size) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (alphabet_size <= 10) {
      out.push_back(static_cast<char>('0' + word[i]));
    } else {
      if (i) out.push_back(',');
      out += std::to_string(word[i]);
    }
  }
  return out;
}

Word parse_word(std::string_view text, int alphabet_size) {
  Word word;
  auto check = [&](long v) {
    if (v < 0 || v >= alphabet_size)
      throw Error(ErrorKind::ParseError, "symbol out of range in word '" + std::string(text) + "'");
    word.push_back(static_cast<Symbol>(v));
  };
  if (alphabet_size <= 10) {
    for (char c : text) {
      if (c < '0' || c > '9') throw Error(ErrorKind::ParseError, "bad word '" + std::string(text) + "'");
      check(c - '0');
    }
  } else {
    std::size_t start = 0;
    while (start <= text.size() && !text.empty()) {
      auto comma = text.find(',', start);
      auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
      if (piece.empty() || !std::all_of(piece.begin(), piece.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw Error(ErrorKind::ParseError, "bad word '" + std::string(text) + "'");
      check(std::stol(std::string(piece)));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  }
  return word;
}

LassoPoint canonical(LassoPoint x) {
  if (x.cycle.empty()) throw Error(ErrorKind::InvalidArgument, "lasso cycle must be non-empty");
  const std::size_t n = x.cycle.size();
  for (std::size_t d = 1; d <= n; ++d) {
    if (n % d) continue;
    bool periodic = true;
    for (std::size_t i = d; i < n && periodic; ++i) periodic = x.cycle[i] == x.cycle[i - d];
    if (periodic) {
      x.cycle.resize(d);
      break;
    }
  }
  while (!x.preperiod.empty() && x.preperiod.back() == x.cycle.back()) {
    x.preperiod.pop_back();
    std::rotate(x.cycle.rbegin(), x.cycle.rbegin() + 1, x.cycle.rend());
  }
  return x;
}

bool is_admissible(const LassoPoint& x, const SftSystem& sft) {
  if (x.cycle.empty()) return false;
  Word w = x.preperiod;
  w.insert(w.end(), x.cycle.begin(), x.cycle.end());
  w.push_back(x.cycle.front());
  return is_admissible(w, sft);
}

Symbol symbol_at(const LassoPoint& x, std::size_t index) {
  if (index < x.preperiod.size()) return x.preperiod[index];
  return x.cycle[(index - x.preperiod.size()) % x.cycle.size()];
}

Word prefix(const LassoPoint& x, std::size_t length) {
  Word w(length);
  for (std::size_t i = 0; i < length; ++i) w[i] = symbol_at(x, i);
  return w;
}

LassoPoint lasso_shift(const LassoPoint& x) {
  LassoPoint y = x;
  if (!y.preperiod.empty()) {
    y.preperiod.erase(y.preperiod.begin());
  } else {
    std::rotate(y.cycle.begin(), y.cycle.begin() + 1, y.cycle.end());
  }
  return canonical(std::move(y));
}

Rational lasso_distance(const LassoPoint& x, const LassoPoint& y, const SftSystem& sft) {
  auto cx = canonical(x), cy = canonical(y);
  if (cx == cy) return 0;
  const std::size_t bound =
      std::max(cx.preperiod.size(), cy.preperiod.size()) + std::lcm(cx.cycle.size(), cy.cycle.size());
  for (std::size_t k = 0; k <= bound; ++k)
    if (symbol_at(cx, k) != symbol_at(cy, k)) return pow(sft.lambda(), static_cast<unsigned>(k));
  // Distinct canonical lassos always differ before the bound.
  throw Error(ErrorKind::InvalidArgument, "lasso comparison failed to separate distinct points");
}

std::string format_lasso(const LassoPoint& x, int alphabet_size) {
  return format_word(x.preperiod, alphabet_size) + "(" + format_word(x.cycle, alphabet_size) + ")";
}

DeBruijnGraph::DeBruijnGraph(const SftSystem& sft, int order, std::size_t node_budget)
    : sft_(sft), order_(order) {
  if (order < 1) throw Error(ErrorKind::InvalidArgument, "refinement order must be at least 1");
  const int s = sft.alphabet_size();
  // Depth-first enumeration in lexicographic order.
  Word current;
  std::vector<int> next_choice;
  current.reserve(order);
  auto extend = [&](auto&& self) -> void {
    if (static_cast<int>(current.size()) == order) {
      if (nodes_.size() >= node_budget)
        throw Error(ErrorKind::BudgetExceeded,
                    "more than " + std::to_string(node_budget) + " admissible words of length " +
                        std::to_string(order));
      nodes_.push_back(current);
      return;
    }
    for (int a = 0; a < s; ++a) {
      if (!current.empty() && !sft.allowed(current.back(), a)) continue;
      current.push_back(a);
      self(self);
      current.pop_back();
    }
  };
  extend(extend);

  out_.resize(nodes_.size());
  in_.resize(nodes_.size());
  Word overlap(order);
  for (std::size_t t = 0; t < nodes_.size(); ++t) {
    std::copy(nodes_[t].begin() + 1, nodes_[t].end(), overlap.begin());
    for (int a = 0; a < s; ++a) {
      if (!sft.allowed(nodes_[t].back(), a)) continue;
      overlap.back() = a;
      auto h = find_node(overlap);
      if (!h) throw Error(ErrorKind::InvalidArgument, "inconsistent refinement");
      out_[t].push_back(edges_.size());
      in_[*h].push_back(edges_.size());
      edges_.push_back({t, *h});
    }
  }
}

Word DeBruijnGraph::edge_word(std::size_t e) const {
  Word w = nodes_[edges_[e].tail];
  w.push_back(nodes_[edges_[e].head].back());
  return w;
}

std::optional<std::size_t> DeBruijnGraph::find_node(std::span<const Symbol> word) const {
  if (word.size() != static_cast<std::size_t>(order_)) return std::nullopt;
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), word, [](const Word& a, std::span<const Symbol> b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  });
  if (it == nodes_.end() || !std::equal(it->begin(), it->end(), word.begin(), word.end())) return std::nullopt;
  return static_cast<std::size_t>(it - nodes_.begin());
}

std::optional<std::size_t> DeBruijnGraph::find_edge(std::span<const Symbol> word) const {
  if (word.size() != static_cast<std::size_t>(order_) + 1) return std::nullopt;
  auto tail = find_node(word.first(order_));
  if (!tail) return std::nullopt;
  for (std::size_t e : out_[*tail])
    if (nodes_[edges_[e].head].back() == word.back()) return e;
  return std::nullopt;
}

DeBruijnGraph refine(const SftSystem& sft, int order, std::size_t node_budget) {
  return DeBruijnGraph(sft, order, node_budget);
}

std::size_t node_of(const LassoPoint& x, const DeBruijnGraph& graph) {
  auto w = prefix(x, graph.order());
  auto node = graph.find_node(w);
  if (!node) throw Error(ErrorKind::InvalidArgument, "lasso is not admissible for this graph");
  return *node;
}

std::vector<std::size_t> strong_components(std::size_t node_count, const std::vector<Edge>& edges,
                                           const std::vector<bool>& keep) {
  std::vector<std::vector<std::size_t>> adj(node_count);
  for (std::size_t e = 0; e < edges.size(); ++e)
    if (keep[e]) adj[edges[e].tail].push_back(edges[e].head);

  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(node_count, kUnset), low(node_count, 0), comp(node_count, kUnset);
  std::vector<bool> on_stack(node_count, false);
  std::vector<std::size_t> stack;
  std::size_t counter = 0, raw_components = 0;

  struct Frame {
    std::size_t node;
    std::size_t next;
  };
  std::vector<Frame> call;
  for (std::size_t root = 0; root < node_count; ++root) {
    if (index[root] != kUnset) continue;
    call.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      auto& f = call.back();
      if (f.next < adj[f.node].size()) {
        std::size_t w = adj[f.node][f.next++];
        if (index[w] == kUnset) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.node] = std::min(low[f.node], index[w]);
        }
        continue;
      }
      std::size_t v = f.node;
      if (low[v] == index[v]) {
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = raw_components;
        } while (w != v);
        ++raw_components;
      }
      call.pop_back();
      if (!call.empty()) low[call.back().node] = std::min(low[call.back().node], low[v]);
    }
  }
  // Renumber by smallest member node.
  std::vector<std::size_t> renumber(raw_components, kUnset);
  std::size_t next_id = 0;
  for (std::size_t v = 0; v < node_count; ++v) {
    if (renumber[comp[v]] == kUnset) renumber[comp[v]] = next_id++;
    comp[v] = renumber[comp[v]];
  }
  return comp;
}

bool is_strongly_connected(const DeBruijnGraph& graph) {
  auto comp = strong_components(graph.node_count(), graph.edges(), std::vector<bool>(graph.edge_count(), true));
  return std::all_of(comp.begin(), comp.end(), [](std::size_t c) { return c == 0; });
}

}  // namespace ergo
