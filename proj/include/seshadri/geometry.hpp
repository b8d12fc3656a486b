#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "seshadri/piecewise_linear.hpp"
#include "seshadri/rational.hpp"

namespace seshadri {

enum class Axis { X, Y };

const char* to_string(Axis axis);

struct Point {
  Rational x;
  Rational y;

  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;
};

// Coordinate along `axis`, and the complementary coordinate.
inline const Rational& along(const Point& p, Axis axis) { return axis == Axis::X ? p.x : p.y; }
inline const Rational& across(const Point& p, Axis axis) { return axis == Axis::X ? p.y : p.x; }

// Twice the signed area of triangle (a, b, c); positive when counterclockwise.
Rational orient(const Point& a, const Point& b, const Point& c);

// (a1, a2) -> r0 + r1 a1 + r2 a2 with (r1, r2) != (0, 0).
class AffineForm {
 public:
  AffineForm(Rational r0, Rational r1, Rational r2);

  const Rational& r0() const { return r0_; }
  const Rational& r1() const { return r1_; }
  const Rational& r2() const { return r2_; }

  Rational operator()(const Point& p) const { return r0_ + r1_ * p.x + r2_ * p.y; }
  // The form on the n-scaled plane: n r0 + r1 a + r2 b.
  Rational scaled(long n, long a, long b) const { return Rational(n) * r0_ + r1_ * Rational(a) + r2_ * Rational(b); }
  AffineForm negated() const { return AffineForm(-r0_, -r1_, -r2_); }

  friend bool operator==(const AffineForm&, const AffineForm&) = default;

 private:
  Rational r0_, r1_, r2_;
};

struct Interval {
  Rational lo;
  Rational hi;

  Rational length() const { return hi - lo; }
  bool contains(const Interval& inner) const { return lo <= inner.lo && inner.hi <= hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

// Closed, strictly convex polygon with positive area. Vertices are stored
// counterclockwise starting from the lowest (then leftmost) vertex, with no three
// consecutive vertices collinear, so structural equality is value equality.
class ConvexPolygon {
 public:
  // Convex hull of `points`; throws DegenerateInput when the hull has zero area.
  static ConvexPolygon make(std::span<const Point> points);

  const std::vector<Point>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }

  Rational area() const;
  // Closed containment.
  bool contains(const Point& p) const;
  // Edge i runs from vertex i to vertex i + 1 (mod size).
  std::pair<Point, Point> edge(std::size_t i) const;

  friend bool operator==(const ConvexPolygon&, const ConvexPolygon&) = default;

 private:
  explicit ConvexPolygon(std::vector<Point> vertices) : vertices_(std::move(vertices)) {}
  std::vector<Point> vertices_;
};

ConvexPolygon make_polygon(std::span<const Point> points);
inline ConvexPolygon make_polygon(std::initializer_list<Point> points) {
  return make_polygon(std::span<const Point>(points.begin(), points.size()));
}

Rational polygon_area(const ConvexPolygon& polygon);

struct CutResult {
  std::optional<ConvexPolygon> neg;  // closure of {F < 0} part
  std::optional<ConvexPolygon> pos;  // closure of {F > 0} part
};

// Splits along F = 0. A side whose open part is empty is absent.
CutResult cut_polygon(const ConvexPolygon& polygon, const AffineForm& form);

Interval x_projection(const ConvexPolygon& polygon, Axis axis);

// The section of the polygon by the line {along(axis) = t}, as an interval of the
// complementary coordinate. Throws OutOfRange when the line misses the polygon.
Interval section(const ConvexPolygon& polygon, Axis axis, const Rational& t);

// t -> length of the section at t over the projection interval. Concave, and equal
// to the upper boundary chain minus the lower one.
PiecewiseLinear height_profile(const ConvexPolygon& polygon, Axis axis);

Rational max_chord(const ConvexPolygon& polygon, Axis axis);

}  // namespace seshadri
