#include "ergo/potential.hpp"

#include "ergo/error.hpp"

#include <cmath>

namespace ergo {

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::CalibratedFromBoundary: return "calibrated-from-boundary";
    case Provenance::Dominant: return "dominant";
    case Provenance::Separating: return "separating";
    case Provenance::UserSupplied: return "user-supplied";
  }
  return "unknown";
}

std::vector<Word> admissible_words(const SftSystem& sft, int length) {
  std::vector<Word> out;
  Word w;
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(w.size()) == length) {
      out.push_back(w);
      return;
    }
    for (int a = 0; a < sft.alphabet_size(); ++a) {
      if (!w.empty() && !sft.allowed(w.back(), a)) continue;
      w.push_back(a);
      self(self);
      w.pop_back();
    }
  };
  rec(rec);
  return out;
}

OneSidedPotential::OneSidedPotential(const SftSystem& sft, int range, std::map<Word, Rational> table)
    : range_(range), table_(std::move(table)) {
  if (range_ < 1) throw Error(ErrorKind::InvalidArgument, "potential range must be at least 1");
  for (const auto& [w, v] : table_) {
    if (static_cast<int>(w.size()) != range_ || !is_admissible(w, sft))
      throw Error(ErrorKind::InvalidArgument,
                  "table entry '" + format_word(w, sft.alphabet_size()) + "' is not an admissible word of length " +
                      std::to_string(range_));
  }
  for (const auto& w : admissible_words(sft, range_))
    if (!table_.count(w))
      throw Error(ErrorKind::InvalidArgument, "missing table entry for word '" + format_word(w, sft.alphabet_size()) + "'");
}

OneSidedPotential OneSidedPotential::from_table_unchecked(int range, std::map<Word, Rational> table) {
  OneSidedPotential p;
  p.range_ = range;
  p.table_ = std::move(table);
  return p;
}

const Rational& OneSidedPotential::value(std::span<const Symbol> word) const {
  if (word.size() < static_cast<std::size_t>(range_))
    throw Error(ErrorKind::IncompatibleOrder, "word shorter than potential range");
  auto it = table_.find(Word(word.begin(), word.begin() + range_));
  if (it == table_.end()) throw Error(ErrorKind::InvalidArgument, "word not in potential table");
  return it->second;
}

TwoSidedPotential::TwoSidedPotential(const SftSystem& sft, int past_depth, int future_depth,
                                     std::map<Window, Rational> table)
    : past_depth_(past_depth), future_depth_(future_depth), table_(std::move(table)) {
  if (past_depth_ < 1 || future_depth_ < 1)
    throw Error(ErrorKind::InvalidArgument, "past and future depths must be at least 1");
  auto joined = [](const Window& w) {
    Word all = w.past;
    all.insert(all.end(), w.future.begin(), w.future.end());
    return all;
  };
  for (const auto& [w, v] : table_) {
    if (static_cast<int>(w.past.size()) != past_depth_ || static_cast<int>(w.future.size()) != future_depth_ ||
        !is_admissible(joined(w), sft))
      throw Error(ErrorKind::InvalidArgument, "two-sided table entry is not an admissible window");
  }
  for (const auto& all : admissible_words(sft, past_depth_ + future_depth_)) {
    Window w{Word(all.begin(), all.begin() + past_depth_), Word(all.begin() + past_depth_, all.end())};
    if (!table_.count(w)) throw Error(ErrorKind::InvalidArgument, "missing two-sided table entry");
  }
}

const Rational& TwoSidedPotential::value(std::span<const Symbol> past, std::span<const Symbol> future) const {
  Window key{Word(past.begin(), past.end()), Word(future.begin(), future.begin() + future_depth_)};
  auto it = table_.find(key);
  if (it == table_.end()) throw Error(ErrorKind::InvalidArgument, "window not in two-sided table");
  return it->second;
}

OneSidedPotential reduce_two_sided(const TwoSidedPotential& ahat, const SftSystem& sft) {
  std::map<Word, Rational> table;
  const auto pasts = admissible_words(sft, ahat.past_depth());
  for (const auto& w : admissible_words(sft, ahat.future_depth())) {
    std::optional<Rational> best;
    for (const auto& y : pasts) {
      if (!sft.allowed(y.back(), w.front())) continue;
      const Rational& v = ahat.value(y, w);
      if (!best || v < *best) best = v;
    }
    // Irreducibility guarantees every symbol has a predecessor.
    if (!best) throw Error(ErrorKind::NoAdmissiblePast, "word without admissible past");
    table.emplace(w, *best);
  }
  return OneSidedPotential(sft, ahat.future_depth(), std::move(table));
}

RationalVector compile_weights(const OneSidedPotential& b, const DeBruijnGraph& graph) {
  if (graph.order() < b.base_order())
    throw Error(ErrorKind::IncompatibleOrder, "graph order " + std::to_string(graph.order()) +
                                                  " is below the potential's base order " +
                                                  std::to_string(b.base_order()));
  RationalVector w;
  w.reserve(graph.edge_count());
  for (std::size_t e = 0; e < graph.edge_count(); ++e) w.push_back(b.value(graph.edge_word(e)));
  return w;
}

RationalVector normalized_weights(const DeBruijnGraph& graph, const RationalVector& weights, const Rational& abar,
                                  const RationalVector& u) {
  RationalVector out(graph.edge_count());
  for (std::size_t e = 0; e < graph.edge_count(); ++e) {
    const auto& ed = graph.edge(e);
    out[e] = weights[e] - abar - u[ed.head] + u[ed.tail];
  }
  return out;
}

NormalizedPotential normalize(const OneSidedPotential& b, const SubAction& u, const Rational& abar,
                              const DeBruijnGraph& graph) {
  if (u.depth != graph.order() || u.values.size() != graph.node_count())
    throw Error(ErrorKind::IncompatibleOrder, "sub-action does not live on this graph");
  auto w = normalized_weights(graph, compile_weights(b, graph), abar, u.values);
  for (std::size_t e = 0; e < w.size(); ++e)
    if (w[e] < 0)
      throw Error(ErrorKind::NotASubAction, "normalized weight of edge " + graph.edge_label(e) + " is " + to_string(w[e]));
  return NormalizedPotential{b, abar, u, std::move(w)};
}

Truncation truncate(const OneSidedPotential& b, int r) {
  if (r < 1 || r > b.range()) throw Error(ErrorKind::InvalidArgument, "truncation range must lie in [1, range]");
  std::map<Word, std::pair<Rational, Rational>> bounds;
  for (const auto& [w, v] : b.table()) {
    Word head(w.begin(), w.begin() + r);
    auto it = bounds.find(head);
    if (it == bounds.end()) {
      bounds.emplace(head, std::make_pair(v, v));
    } else {
      if (v < it->second.first) it->second.first = v;
      if (v > it->second.second) it->second.second = v;
    }
  }
  std::map<Word, Rational> table;
  Rational bound = 0;
  for (auto& [w, mm] : bounds) {
    if (mm.second - mm.first > bound) bound = mm.second - mm.first;
    table.emplace(w, mm.first);
  }
  // Prefixes of admissible words are admissible, so the table stays total.
  auto out = OneSidedPotential::from_table_unchecked(r, std::move(table));
  out.holder = b.holder;
  return Truncation{std::move(out), bound};
}

std::optional<double> holder_truncation_estimate(const OneSidedPotential& b, const SftSystem& sft, int r) {
  if (!b.holder) return std::nullopt;
  return b.holder->constant * std::pow(sft.lambda().convert_to<double>(), r * b.holder->theta);
}

}  // namespace ergo
