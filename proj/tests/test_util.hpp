#pragma once

#include <random>

#include "rea/scalar.hpp"

namespace rea::prop {

// Random Laurent-fraction generator for property tests.
class ScalarGen {
 public:
  explicit ScalarGen(unsigned seed) : rng_(seed) {}

  IntPoly poly(int max_deg, int max_coeff) {
    std::uniform_int_distribution<int> deg(0, max_deg), co(-max_coeff, max_coeff);
    std::vector<Integer> c(static_cast<std::size_t>(deg(rng_)) + 1);
    for (auto& x : c) x = co(rng_);
    return IntPoly(std::move(c));
  }

  ScalarQ scalar() {
    IntPoly n = poly(3, 5);
    IntPoly d;
    do d = poly(2, 4);
    while (d.is_zero());
    return {n, d};
  }

  ScalarQ nonzero() {
    ScalarQ s;
    do s = scalar();
    while (s.is_zero());
    return s;
  }

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  std::mt19937& engine() { return rng_; }

 private:
  std::mt19937 rng_;
};

}  // namespace rea::prop
