// Shared helpers for the test suites: deterministic randomness and generators.
#pragma once

#include <random>
#include <vector>

#include "t237/config.hpp"
#include "t237/rational.hpp"
#include "t237/weierstrass.hpp"

namespace t237::testing {

inline Rational random_rational(std::mt19937_64& rng, long max_num = 9, long max_den = 9) {
  std::uniform_int_distribution<long> num(-max_num, max_num);
  std::uniform_int_distribution<long> den(1, max_den);
  return Rational(num(rng), den(rng));
}

inline BrieskornParams random_brieskorn(std::mt19937_64& rng) {
  BrieskornParams t;
  for (Rational* slot : {&t.t4, &t.t10, &t.t12, &t.t16, &t.t18, &t.t22, &t.t24, &t.t28, &t.t30,
                         &t.t36, &t.t42})
    *slot = random_rational(rng);
  return t;
}

// Random tree-shaped curve configuration with self-intersections in [-5, -2].
inline CurveConfig random_config(std::mt19937_64& rng, int rank) {
  std::vector<std::string> names;
  std::vector<long> selfint;
  std::vector<std::pair<int, int>> edges;
  std::uniform_int_distribution<long> b(2, 5);
  for (int i = 0; i < rank; ++i) {
    names.push_back("C" + std::to_string(i));
    selfint.push_back(-b(rng));
    if (i > 0) {
      std::uniform_int_distribution<int> parent(0, i - 1);
      edges.emplace_back(parent(rng), i);
    }
  }
  return CurveConfig(std::move(names), std::move(selfint), edges);
}

}  // namespace t237::testing
