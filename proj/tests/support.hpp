#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "seshadri/piecewise_linear.hpp"
#include "seshadri/rational.hpp"

namespace seshadri::testing {

inline Rational q(long num, long den = 1) { return Rational(num, den); }
inline Rational q(const char* text) { return Rational::parse(text); }

// Small rationals with denominators up to max_den.
inline Rational random_rational(std::mt19937_64& rng, long lo, long hi, long max_den) {
  std::uniform_int_distribution<long> den_dist(1, max_den);
  const long den = den_dist(rng);
  std::uniform_int_distribution<long> num_dist(lo * den, hi * den);
  return Rational(num_dist(rng), den);
}

inline std::vector<Rational> random_breakpoints(std::mt19937_64& rng, const Rational& a, const Rational& b,
                                                std::size_t interior) {
  std::vector<Rational> ts{a, b};
  std::uniform_int_distribution<long> pick(1, 999);
  while (ts.size() < interior + 2) {
    Rational t = a + (b - a) * Rational(pick(rng), 1000);
    if (std::find(ts.begin(), ts.end(), t) == ts.end()) ts.push_back(t);
  }
  std::sort(ts.begin(), ts.end());
  return ts;
}

// Random PL function on [a, b] with 2..max_points breakpoints and values in [0, 3].
inline PiecewiseLinear random_pl(std::mt19937_64& rng, const Rational& a, const Rational& b,
                                 std::size_t max_points = 12) {
  std::uniform_int_distribution<std::size_t> count(2, max_points);
  auto ts = random_breakpoints(rng, a, b, count(rng) - 2);
  std::vector<Rational> vs;
  for (std::size_t i = 0; i < ts.size(); ++i) vs.push_back(random_rational(rng, 0, 3, 7));
  return PiecewiseLinear(std::move(ts), std::move(vs));
}

// Random concave PL on [0, w]: a peak and decreasing slopes on both sides.
inline PiecewiseLinear random_concave(std::mt19937_64& rng, const Rational& w, std::size_t max_points = 12) {
  std::uniform_int_distribution<std::size_t> count(2, max_points);
  auto ts = random_breakpoints(rng, Rational(0), w, count(rng) - 2);
  std::vector<Rational> slopes;
  for (std::size_t i = 0; i + 1 < ts.size(); ++i) slopes.push_back(random_rational(rng, -4, 4, 5));
  std::sort(slopes.begin(), slopes.end(), [](const Rational& x, const Rational& y) { return y < x; });
  std::vector<Rational> vs{random_rational(rng, 0, 2, 5)};
  for (std::size_t i = 0; i + 1 < ts.size(); ++i) vs.push_back(vs.back() + slopes[i] * (ts[i + 1] - ts[i]));
  Rational lowest = *std::min_element(vs.begin(), vs.end());
  if (lowest < Rational(0)) {
    for (auto& v : vs) v -= lowest;
  }
  return PiecewiseLinear(std::move(ts), std::move(vs));
}

}  // namespace seshadri::testing
