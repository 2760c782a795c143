#pragma once

// Locally constant observables and their compilation onto de Bruijn graphs.

#include "ergo/rational.hpp"
#include "ergo/sub_action.hpp"
#include "ergo/symbolic.hpp"

#include <map>
#include <optional>
#include <span>
#include <utility>
#include <variant>

namespace ergo {

/// Hoelder data of the observable a table was sampled from. Only used to
/// report range-truncation estimates.
struct HolderMetadata {
  double theta = 1.0;
  double constant = 0.0;
};

/// B constant on cylinders of length `range`; total on admissible range-words.
class OneSidedPotential {
 public:
  OneSidedPotential(const SftSystem& sft, int range, std::map<Word, Rational> table);

  int range() const noexcept { return range_; }
  const std::map<Word, Rational>& table() const noexcept { return table_; }

  /// Value on the cylinder of the first `range` symbols of `word`.
  const Rational& value(std::span<const Symbol> word) const;

  /// Order of the smallest graph the potential compiles onto.
  int base_order() const noexcept { return range_ > 1 ? range_ - 1 : 1; }

  std::optional<HolderMetadata> holder;

  /// For tables derived from an already validated potential.
  static OneSidedPotential from_table_unchecked(int range, std::map<Word, Rational> table);

 private:
  OneSidedPotential() = default;

  int range_ = 1;
  std::map<Word, Rational> table_;
};

/// A window (y_p..y_1 | x_0..x_{q-1}) with y_1 -> x_0 admissible.
struct Window {
  Word past;
  Word future;

  auto operator<=>(const Window&) const = default;
};

/// Observable on the natural extension that only sees a finite window. The
/// entry for (y | x) is the amount charged on the step leaving x when x was
/// reached with past y, i.e. the observable read after one step of the
/// two-sided shift. Minimizing over pasts then gives the one-sided reduction.
class TwoSidedPotential {
 public:
  TwoSidedPotential(const SftSystem& sft, int past_depth, int future_depth, std::map<Window, Rational> table);

  int past_depth() const noexcept { return past_depth_; }
  int future_depth() const noexcept { return future_depth_; }
  const std::map<Window, Rational>& table() const noexcept { return table_; }
  const Rational& value(std::span<const Symbol> past, std::span<const Symbol> future) const;

 private:
  int past_depth_;
  int future_depth_;
  std::map<Window, Rational> table_;
};

using AnyPotential = std::variant<OneSidedPotential, TwoSidedPotential>;

/// All admissible words of the given length, lexicographic.
std::vector<Word> admissible_words(const SftSystem& sft, int length);

/// B(w) = min over admissible pasts of ahat(past | w).
OneSidedPotential reduce_two_sided(const TwoSidedPotential& ahat, const SftSystem& sft);

/// One weight per edge: b evaluated on the first b.range() symbols of the edge
/// word. Throws IncompatibleOrder when the graph is too coarse.
RationalVector compile_weights(const OneSidedPotential& b, const DeBruijnGraph& graph);

struct NormalizedPotential {
  OneSidedPotential base;
  Rational abar;
  SubAction subaction_used;
  /// w(e) - abar - u(head) + u(tail) on the graph u lives on.
  RationalVector weights;
};

/// Throws IncompatibleOrder when u does not live on `graph`, NotASubAction
/// when some normalized weight is negative.
NormalizedPotential normalize(const OneSidedPotential& b, const SubAction& u, const Rational& abar,
                              const DeBruijnGraph& graph);

/// Same arithmetic on precompiled weights, without the sign check.
RationalVector normalized_weights(const DeBruijnGraph& graph, const RationalVector& weights, const Rational& abar,
                                  const RationalVector& u);

struct Truncation {
  OneSidedPotential potential;
  Rational error_bound;
};

/// Range-r table taking the minimum over admissible extensions.
Truncation truncate(const OneSidedPotential& b, int r);

/// Hoelder estimate constant * lambda^(r * theta) for the sup error of a
/// range-r approximation; nullopt without metadata.
std::optional<double> holder_truncation_estimate(const OneSidedPotential& b, const SftSystem& sft, int r);

}  // namespace ergo
