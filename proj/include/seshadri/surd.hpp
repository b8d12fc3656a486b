#pragma once

#include <compare>
#include <string>

#include "seshadri/rational.hpp"

namespace seshadri {

// Nonnegative real of the form coefficient * sqrt(radicand), compared exactly by
// squaring: a sqrt(p) < b sqrt(q) iff a^2 p < b^2 q for nonnegative operands.
struct ScaledRoot {
  Rational coefficient;
  Rational radicand{1};

  static ScaledRoot rational(Rational q) { return {std::move(q), Rational(1)}; }
  static ScaledRoot sqrt_of(Rational q) { return {Rational(1), std::move(q)}; }

  Rational square() const { return coefficient * coefficient * radicand; }
  std::string str() const;

  friend std::strong_ordering operator<=>(const ScaledRoot& a, const ScaledRoot& b) { return a.square() <=> b.square(); }
  friend bool operator==(const ScaledRoot& a, const ScaledRoot& b) { return a.square() == b.square(); }
};

}  // namespace seshadri
