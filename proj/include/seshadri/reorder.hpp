#pragma once

#include <optional>
#include <vector>

#include "seshadri/piecewise_linear.hpp"
#include "seshadri/rational.hpp"

namespace seshadri {

// Distribution function s -> length{t : f(t) <= s} of a continuous PL function.
//
// It is piecewise linear between consecutive value levels of f, but jumps at a
// level where f has a flat segment, so it is stored level by level rather than as a
// PiecewiseLinear. For a constant f there is a single level carrying all the mass.
struct Distribution {
  std::vector<Rational> levels;       // distinct breakpoint values of f, increasing
  std::vector<Rational> below;        // length{f < level}
  std::vector<Rational> at_or_below;  // length{f <= level}

  bool is_point_mass() const { return levels.size() == 1; }
  const Rational& total() const { return at_or_below.back(); }

  // length{f <= s} for any s.
  Rational operator()(const Rational& s) const;
  // The distribution as a PL function on [min f, max f] when it has no jumps.
  std::optional<PiecewiseLinear> as_piecewise_linear() const;
};

// Exact measures of sublevel sets, summed segment by segment.
Rational measure_at_or_below(const PiecewiseLinear& f, const Rational& s);
Rational measure_below(const PiecewiseLinear& f, const Rational& s);

Distribution distribution(const PiecewiseLinear& f);

// Increasing rearrangement f#(t) = inf{s : length{f <= s} >= t}, stored on the
// closed [0, b - a] with f#(0) = min f. Continuous, nondecreasing, equimeasurable
// with f.
PiecewiseLinear monotone_reorder(const PiecewiseLinear& f);

struct ReorderCriterion {
  Rational m;
  Rational width;
  bool verdict = false;
  std::optional<Rational> failure_t;  // set iff !verdict; f#(failure_t) < failure_t
};

// Decides f#(t) >= t on (0, m] exactly. `fsharp` must live on [0, w] with
// 0 < m <= w; OutOfRange otherwise.
ReorderCriterion dominates_identity(const PiecewiseLinear& fsharp, const Rational& m);

// sup{t* in (0, b - a] : f#(t) >= t on (0, t*]}, i.e. b - a or the first point
// where f# drops below the identity.
Rational sup_admissible(const PiecewiseLinear& f);

}  // namespace seshadri
