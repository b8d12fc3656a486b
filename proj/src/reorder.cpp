#include "seshadri/reorder.hpp"

#include <algorithm>

#include "seshadri/error.hpp"

namespace seshadri {

namespace {

// Length of {t in segment : f(t) <= s} (strict = false) or {f(t) < s} (strict = true).
Rational segment_measure(const Rational& t0, const Rational& v0, const Rational& t1, const Rational& v1,
                         const Rational& s, bool strict) {
  const Rational dt = t1 - t0;
  if (v0 == v1) return (strict ? v0 < s : v0 <= s) ? dt : Rational(0);
  const Rational& vmin = min(v0, v1);
  const Rational& vmax = max(v0, v1);
  if (s <= vmin) return Rational(0);  // at s = vmin the set is a single point
  if (s >= vmax) return dt;
  return dt * (s - vmin) / (vmax - vmin);
}

Rational sublevel_measure(const PiecewiseLinear& f, const Rational& s, bool strict) {
  const auto& ts = f.breakpoints();
  const auto& vs = f.values();
  Rational sum;
  for (std::size_t i = 0; i + 1 < ts.size(); ++i) sum += segment_measure(ts[i], vs[i], ts[i + 1], vs[i + 1], s, strict);
  return sum;
}

struct Excursion {
  Rational start;    // sup of the nonnegative prefix of g
  Rational witness;  // a point with g < 0
};

// g(t) = f#(t) - t on [0, m]; returns the first place g goes negative, if any.
std::optional<Excursion> first_negative_excursion(const PiecewiseLinear& fsharp, const Rational& m) {
  std::vector<Rational> ts;
  for (const auto& t : fsharp.breakpoints()) {
    if (t < m) ts.push_back(t);
  }
  ts.push_back(m);
  std::vector<Rational> gs;
  gs.reserve(ts.size());
  for (const auto& t : ts) gs.push_back(fsharp(t) - t);

  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (gs[i].sign() >= 0) continue;
    if (i == 0) {
      // negative from the start; stay inside the first negative stretch
      if (ts.size() == 1 || gs[1].sign() < 0) return Excursion{Rational(0), ts.size() == 1 ? m : ts[1]};
      const Rational root = ts[0] + (ts[1] - ts[0]) * gs[0] / (gs[0] - gs[1]);
      return Excursion{Rational(0), root / Rational(2)};
    }
    const Rational root = ts[i - 1] + (ts[i] - ts[i - 1]) * gs[i - 1] / (gs[i - 1] - gs[i]);
    return Excursion{root, ts[i]};
  }
  return std::nullopt;
}

}  // namespace

Rational measure_at_or_below(const PiecewiseLinear& f, const Rational& s) { return sublevel_measure(f, s, false); }

Rational measure_below(const PiecewiseLinear& f, const Rational& s) { return sublevel_measure(f, s, true); }

Rational Distribution::operator()(const Rational& s) const {
  if (s < levels.front()) return Rational(0);
  if (s >= levels.back()) return total();
  auto it = std::upper_bound(levels.begin(), levels.end(), s);
  const auto j = static_cast<std::size_t>(it - levels.begin());  // levels[j-1] <= s < levels[j]
  if (levels[j - 1] == s) return at_or_below[j - 1];
  return at_or_below[j - 1] + (below[j] - at_or_below[j - 1]) * (s - levels[j - 1]) / (levels[j] - levels[j - 1]);
}

std::optional<PiecewiseLinear> Distribution::as_piecewise_linear() const {
  if (is_point_mass()) return std::nullopt;
  for (std::size_t j = 0; j < levels.size(); ++j) {
    if (below[j] != at_or_below[j]) return std::nullopt;
  }
  return PiecewiseLinear(levels, at_or_below);
}

Distribution distribution(const PiecewiseLinear& f) {
  Distribution d;
  d.levels = f.values();
  std::sort(d.levels.begin(), d.levels.end());
  d.levels.erase(std::unique(d.levels.begin(), d.levels.end()), d.levels.end());
  for (const auto& s : d.levels) {
    d.below.push_back(measure_below(f, s));
    d.at_or_below.push_back(measure_at_or_below(f, s));
  }
  return d;
}

PiecewiseLinear monotone_reorder(const PiecewiseLinear& f) {
  const Distribution d = distribution(f);
  if (d.is_point_mass()) return PiecewiseLinear({Rational(0), f.width()}, {d.levels[0], d.levels[0]});

  // Between levels the distribution is strictly increasing and linear, so its
  // generalized inverse interpolates the points below; a jump becomes a flat piece.
  std::vector<Rational> ts;
  std::vector<Rational> vs;
  auto push = [&](const Rational& t, const Rational& v) {
    if (!ts.empty() && ts.back() == t) return;
    ts.push_back(t);
    vs.push_back(v);
  };
  for (std::size_t j = 0; j < d.levels.size(); ++j) {
    push(d.below[j], d.levels[j]);
    push(d.at_or_below[j], d.levels[j]);
  }
  return PiecewiseLinear(std::move(ts), std::move(vs)).simplified();
}

ReorderCriterion dominates_identity(const PiecewiseLinear& fsharp, const Rational& m) {
  if (fsharp.lo().sign() != 0) throw Error(ErrorKind::OutOfRange, "rearranged function must start at 0");
  if (m.sign() <= 0 || m > fsharp.hi()) {
    throw Error(ErrorKind::OutOfRange, "m = " + m.str() + " outside (0, " + fsharp.hi().str() + "]");
  }
  ReorderCriterion out{m, fsharp.width(), true, std::nullopt};
  if (auto excursion = first_negative_excursion(fsharp, m)) {
    out.verdict = false;
    out.failure_t = excursion->witness;
  }
  return out;
}

Rational sup_admissible(const PiecewiseLinear& f) {
  const PiecewiseLinear fsharp = monotone_reorder(f);
  if (auto excursion = first_negative_excursion(fsharp, fsharp.hi())) return excursion->start;
  return fsharp.hi();
}

}  // namespace seshadri
