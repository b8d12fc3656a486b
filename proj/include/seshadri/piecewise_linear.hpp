#pragma once

#include <span>
#include <vector>

#include "seshadri/rational.hpp"

namespace seshadri {

// Continuous piecewise-linear function on [t_0, t_k], the linear interpolation of
// (t_i, v_i). Breakpoints are strictly increasing and k >= 1.
class PiecewiseLinear {
 public:
  PiecewiseLinear(std::vector<Rational> breakpoints, std::vector<Rational> values);

  const std::vector<Rational>& breakpoints() const { return breakpoints_; }
  const std::vector<Rational>& values() const { return values_; }
  std::size_t segments() const { return breakpoints_.size() - 1; }

  const Rational& lo() const { return breakpoints_.front(); }
  const Rational& hi() const { return breakpoints_.back(); }
  Rational width() const { return hi() - lo(); }

  // Throws OutOfRange outside [lo, hi].
  Rational operator()(const Rational& t) const;

  Rational min_value() const;
  Rational max_value() const;
  // Exact sum of trapezoids.
  Rational integral() const;

  // Same function with every breakpoint moved by `offset`.
  PiecewiseLinear shifted(const Rational& offset) const;
  // Restriction to [a, b] with lo <= a < b <= hi.
  PiecewiseLinear restricted(const Rational& a, const Rational& b) const;
  // Drops breakpoints whose neighbours are collinear with them.
  PiecewiseLinear simplified() const;

  friend bool operator==(const PiecewiseLinear&, const PiecewiseLinear&) = default;

 private:
  std::vector<Rational> breakpoints_;
  std::vector<Rational> values_;
};

// Sorted union of the breakpoints of both functions, restricted to their common domain.
std::vector<Rational> merged_breakpoints(const PiecewiseLinear& f, const PiecewiseLinear& g);

// max |f - g| over the common domain; exact because |f - g| is PL and attains its
// maximum at a merged breakpoint.
Rational max_norm_distance(const PiecewiseLinear& f, const PiecewiseLinear& g);

}  // namespace seshadri
