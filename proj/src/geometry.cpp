#include "seshadri/geometry.hpp"

#include <algorithm>

#include "seshadri/error.hpp"

namespace seshadri {

const char* to_string(Axis axis) { return axis == Axis::X ? "x" : "y"; }

Rational orient(const Point& a, const Point& b, const Point& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

AffineForm::AffineForm(Rational r0, Rational r1, Rational r2)
    : r0_(std::move(r0)), r1_(std::move(r1)), r2_(std::move(r2)) {
  if (r1_.sign() == 0 && r2_.sign() == 0) throw Error(ErrorKind::DegenerateInput, "affine form with zero linear part");
}

ConvexPolygon ConvexPolygon::make(std::span<const Point> points) {
  std::vector<Point> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) throw Error(ErrorKind::DegenerateInput, "polygon needs at least three distinct points");

  // Andrew's monotone chain; popping on orient <= 0 drops collinear points.
  std::vector<Point> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && orient(hull[k - 2], hull[k - 1], p).sign() <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && orient(hull[k - 2], hull[k - 1], pts[i]).sign() <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  if (hull.size() < 3) throw Error(ErrorKind::DegenerateInput, "points are collinear; hull has zero area");

  const auto start = std::min_element(hull.begin(), hull.end(), [](const Point& a, const Point& b) {
    return a.y != b.y ? a.y < b.y : a.x < b.x;
  });
  std::rotate(hull.begin(), start, hull.end());
  return ConvexPolygon(std::move(hull));
}

Rational ConvexPolygon::area() const {
  Rational twice;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    const Point& p = vertices_[i];
    const Point& q = vertices_[(i + 1) % vertices_.size()];
    twice += p.x * q.y - q.x * p.y;
  }
  return twice / Rational(2);
}

bool ConvexPolygon::contains(const Point& p) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (orient(vertices_[i], vertices_[(i + 1) % vertices_.size()], p).sign() < 0) return false;
  }
  return true;
}

std::pair<Point, Point> ConvexPolygon::edge(std::size_t i) const {
  return {vertices_[i % vertices_.size()], vertices_[(i + 1) % vertices_.size()]};
}

ConvexPolygon make_polygon(std::span<const Point> points) { return ConvexPolygon::make(points); }

Rational polygon_area(const ConvexPolygon& polygon) { return polygon.area(); }

namespace {

// Closure of the part of the polygon where sign * F < 0, if it has interior.
std::optional<ConvexPolygon> clip_side(const ConvexPolygon& polygon, const AffineForm& form, int sign) {
  const auto& vs = polygon.vertices();
  std::vector<Point> kept;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const Point& p = vs[i];
    const Point& q = vs[(i + 1) % vs.size()];
    const Rational fp = Rational(sign) * form(p);
    const Rational fq = Rational(sign) * form(q);
    if (fp.sign() <= 0) kept.push_back(p);
    if (fp.sign() * fq.sign() < 0) {
      const Rational s = fp / (fp - fq);
      kept.push_back(Point{p.x + s * (q.x - p.x), p.y + s * (q.y - p.y)});
    }
  }
  if (kept.size() < 3) return std::nullopt;
  try {
    return ConvexPolygon::make(kept);
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace

CutResult cut_polygon(const ConvexPolygon& polygon, const AffineForm& form) {
  return CutResult{clip_side(polygon, form, 1), clip_side(polygon, form, -1)};
}

Interval x_projection(const ConvexPolygon& polygon, Axis axis) {
  const auto& vs = polygon.vertices();
  Interval out{along(vs.front(), axis), along(vs.front(), axis)};
  for (const auto& v : vs) {
    out.lo = min(out.lo, along(v, axis));
    out.hi = max(out.hi, along(v, axis));
  }
  return out;
}

Interval section(const ConvexPolygon& polygon, Axis axis, const Rational& t) {
  std::optional<Interval> out;
  auto include = [&](const Rational& v) {
    if (!out) {
      out = Interval{v, v};
    } else {
      out->lo = min(out->lo, v);
      out->hi = max(out->hi, v);
    }
  };
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    const auto [p, q] = polygon.edge(i);
    const Rational& tp = along(p, axis);
    const Rational& tq = along(q, axis);
    if (tp == t) include(across(p, axis));
    if ((tp < t && t < tq) || (tq < t && t < tp)) {
      include(across(p, axis) + (across(q, axis) - across(p, axis)) * (t - tp) / (tq - tp));
    }
  }
  if (!out) throw Error(ErrorKind::OutOfRange, "section line misses the polygon");
  return *out;
}

PiecewiseLinear height_profile(const ConvexPolygon& polygon, Axis axis) {
  std::vector<Rational> ts;
  for (const auto& v : polygon.vertices()) ts.push_back(along(v, axis));
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  std::vector<Rational> heights;
  heights.reserve(ts.size());
  for (const auto& t : ts) heights.push_back(section(polygon, axis, t).length());
  return PiecewiseLinear(std::move(ts), std::move(heights));
}

Rational max_chord(const ConvexPolygon& polygon, Axis axis) { return height_profile(polygon, axis).max_value(); }

}  // namespace seshadri
