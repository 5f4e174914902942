// Deterministic random formula generation shared by the test binaries.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "intck/syntax.hh"

namespace intck::gen {

// xorshift64: tiny, seed-stable across platforms, good enough for sampling.
struct Rng {
  uint64_t state;
  explicit Rng(uint64_t seed) : state(seed ? seed : 0x9e3779b97f4a7c15ull) {}
  uint64_t next() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  }
  int below(int n) { return static_cast<int>(next() % static_cast<uint64_t>(n)); }
};

inline Formula leaf(Rng& rng, const std::vector<std::string>& vars) {
  int k = rng.below(static_cast<int>(vars.size()) + 2);
  if (k == static_cast<int>(vars.size())) return mk_top();
  if (k == static_cast<int>(vars.size()) + 1) return mk_bot();
  return mk_var(vars[static_cast<size_t>(k)]);
}

// Uniform over the dialect's connectives down to `depth` nesting levels,
// with a 1-in-5 chance of stopping early at a leaf.
inline Formula formula(Rng& rng, Dialect d, const std::vector<std::string>& vars, int depth) {
  if (depth <= 0 || rng.below(5) == 0) return leaf(rng, vars);
  switch (rng.below(5)) {
    case 0:
      return mk_and(formula(rng, d, vars, depth - 1), formula(rng, d, vars, depth - 1));
    case 1:
      return mk_or(formula(rng, d, vars, depth - 1), formula(rng, d, vars, depth - 1));
    case 2:
      return mk_imp(formula(rng, d, vars, depth - 1), formula(rng, d, vars, depth - 1));
    case 3:
      return d == Dialect::Cond
                 ? mk_box_arrow(formula(rng, d, vars, depth - 1), formula(rng, d, vars, depth - 1))
                 : mk_box(formula(rng, d, vars, depth - 1));
    default:
      return d == Dialect::Cond
                 ? mk_dia_arrow(formula(rng, d, vars, depth - 1), formula(rng, d, vars, depth - 1))
                 : mk_dia(formula(rng, d, vars, depth - 1));
  }
}

inline Formula prop_formula(Rng& rng, const std::vector<std::string>& vars, int depth) {
  if (depth <= 0 || rng.below(5) == 0) return leaf(rng, vars);
  switch (rng.below(3)) {
    case 0:
      return mk_and(prop_formula(rng, vars, depth - 1), prop_formula(rng, vars, depth - 1));
    case 1:
      return mk_or(prop_formula(rng, vars, depth - 1), prop_formula(rng, vars, depth - 1));
    default:
      return mk_imp(prop_formula(rng, vars, depth - 1), prop_formula(rng, vars, depth - 1));
  }
}

}  // namespace intck::gen
