#include "seshadri/piecewise_linear.hpp"

#include <algorithm>

#include "seshadri/error.hpp"

namespace seshadri {

PiecewiseLinear::PiecewiseLinear(std::vector<Rational> breakpoints, std::vector<Rational> values)
    : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
  if (breakpoints_.size() < 2) throw Error(ErrorKind::DegenerateInput, "piecewise-linear function needs two breakpoints");
  if (breakpoints_.size() != values_.size()) throw Error(ErrorKind::ArityMismatch, "breakpoint/value count mismatch");
  for (std::size_t i = 1; i < breakpoints_.size(); ++i) {
    if (!(breakpoints_[i - 1] < breakpoints_[i])) {
      throw Error(ErrorKind::DegenerateInput, "breakpoints must be strictly increasing");
    }
  }
}

Rational PiecewiseLinear::operator()(const Rational& t) const {
  if (t < lo() || t > hi()) {
    throw Error(ErrorKind::OutOfRange, "evaluation at " + t.str() + " outside [" + lo().str() + ", " + hi().str() + "]");
  }
  auto it = std::lower_bound(breakpoints_.begin(), breakpoints_.end(), t);
  const auto i = static_cast<std::size_t>(it - breakpoints_.begin());
  if (breakpoints_[i] == t) return values_[i];
  const Rational& t0 = breakpoints_[i - 1];
  const Rational& t1 = breakpoints_[i];
  return values_[i - 1] + (values_[i] - values_[i - 1]) * (t - t0) / (t1 - t0);
}

Rational PiecewiseLinear::min_value() const { return *std::min_element(values_.begin(), values_.end()); }

Rational PiecewiseLinear::max_value() const { return *std::max_element(values_.begin(), values_.end()); }

Rational PiecewiseLinear::integral() const {
  Rational sum;
  for (std::size_t i = 0; i + 1 < breakpoints_.size(); ++i) {
    sum += (breakpoints_[i + 1] - breakpoints_[i]) * (values_[i] + values_[i + 1]) / Rational(2);
  }
  return sum;
}

PiecewiseLinear PiecewiseLinear::shifted(const Rational& offset) const {
  std::vector<Rational> ts = breakpoints_;
  for (auto& t : ts) t += offset;
  return PiecewiseLinear(std::move(ts), values_);
}

PiecewiseLinear PiecewiseLinear::restricted(const Rational& a, const Rational& b) const {
  if (!(lo() <= a && a < b && b <= hi())) {
    throw Error(ErrorKind::OutOfRange, "restriction interval not inside the domain");
  }
  std::vector<Rational> ts{a};
  std::vector<Rational> vs{(*this)(a)};
  for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
    if (breakpoints_[i] > a && breakpoints_[i] < b) {
      ts.push_back(breakpoints_[i]);
      vs.push_back(values_[i]);
    }
  }
  ts.push_back(b);
  vs.push_back((*this)(b));
  return PiecewiseLinear(std::move(ts), std::move(vs));
}

PiecewiseLinear PiecewiseLinear::simplified() const {
  std::vector<Rational> ts{breakpoints_.front()};
  std::vector<Rational> vs{values_.front()};
  for (std::size_t i = 1; i + 1 < breakpoints_.size(); ++i) {
    // keep i unless (ts.back, vs.back), (t_i, v_i), (t_{i+1}, v_{i+1}) are collinear
    const Rational lhs = (values_[i] - vs.back()) * (breakpoints_[i + 1] - breakpoints_[i]);
    const Rational rhs = (values_[i + 1] - values_[i]) * (breakpoints_[i] - ts.back());
    if (lhs != rhs) {
      ts.push_back(breakpoints_[i]);
      vs.push_back(values_[i]);
    }
  }
  ts.push_back(breakpoints_.back());
  vs.push_back(values_.back());
  return PiecewiseLinear(std::move(ts), std::move(vs));
}

std::vector<Rational> merged_breakpoints(const PiecewiseLinear& f, const PiecewiseLinear& g) {
  const Rational lo = max(f.lo(), g.lo());
  const Rational hi = min(f.hi(), g.hi());
  if (!(lo < hi)) throw Error(ErrorKind::OutOfRange, "functions share no common domain");
  std::vector<Rational> ts{lo, hi};
  for (const auto* h : {&f, &g}) {
    for (const auto& t : h->breakpoints()) {
      if (t > lo && t < hi) ts.push_back(t);
    }
  }
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  return ts;
}

Rational max_norm_distance(const PiecewiseLinear& f, const PiecewiseLinear& g) {
  Rational best;
  for (const auto& t : merged_breakpoints(f, g)) best = max(best, (f(t) - g(t)).abs());
  return best;
}

}  // namespace seshadri
