#pragma once

#include "ergo/potential.hpp"
#include "ergo/rational.hpp"
#include "ergo/symbolic.hpp"
#include "ergo/tropical.hpp"

#include <map>
#include <string>
#include <vector>

namespace fixtures {

inline ergo::Rational q(const char* text) { return ergo::parse_rational(text); }

inline ergo::RationalVector qv(std::initializer_list<const char*> items) {
  ergo::RationalVector out;
  for (const char* s : items) out.push_back(q(s));
  return out;
}

inline ergo::OneSidedPotential table(const ergo::SftSystem& sft, int range,
                                     std::initializer_list<std::pair<const char*, const char*>> entries) {
  std::map<ergo::Word, ergo::Rational> t;
  for (const auto& [w, v] : entries) t.emplace(ergo::parse_word(w, sft.alphabet_size()), q(v));
  return ergo::OneSidedPotential(sft, range, std::move(t));
}

// Full 2-shift, f(0) = 0, f(1) = 1.
inline ergo::OneSidedPotential e1_potential() { return table(ergo::full_shift(2), 1, {{"0", "0"}, {"1", "1"}}); }

// Full 3-shift, f(00) = f(22) = 0 and 1 on every other 2-word.
inline ergo::OneSidedPotential e2_potential() {
  return table(ergo::full_shift(3), 2,
               {{"00", "0"}, {"01", "1"}, {"02", "1"}, {"10", "1"}, {"11", "1"}, {"12", "1"}, {"20", "1"},
                {"21", "1"}, {"22", "0"}});
}

struct Solved {
  ergo::DeBruijnGraph graph;
  ergo::RationalVector weights;
  ergo::TropicalSolution sol;
};

inline Solved solve_potential(const ergo::SftSystem& sft, const ergo::OneSidedPotential& b) {
  ergo::DeBruijnGraph g(sft, b.base_order());
  auto w = ergo::compile_weights(b, g);
  auto sol = ergo::solve(g, w);
  return Solved{std::move(g), std::move(w), std::move(sol)};
}

inline Solved e1() { return solve_potential(ergo::full_shift(2), e1_potential()); }
inline Solved e2() { return solve_potential(ergo::full_shift(3), e2_potential()); }

inline ergo::LassoPoint lasso(const char* pre, const char* cycle, int s = 2) {
  return ergo::LassoPoint{ergo::parse_word(pre, s), ergo::parse_word(cycle, s)};
}

}  // namespace fixtures
