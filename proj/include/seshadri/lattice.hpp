#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "seshadri/geometry.hpp"

namespace seshadri {

// Exponent pair (alpha, beta) of the monomial x^alpha y^beta.
struct LatticePoint {
  std::int64_t alpha = 0;
  std::int64_t beta = 0;

  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

// Finite subset of N^2, sorted lexicographically without duplicates.
class LatticeSet {
 public:
  LatticeSet() = default;
  explicit LatticeSet(std::vector<LatticePoint> points);

  const std::vector<LatticePoint>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  bool contains(const LatticePoint& p) const;
  bool includes(const LatticeSet& other) const;

  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

  friend bool operator==(const LatticeSet&, const LatticeSet&) = default;

 private:
  std::vector<LatticePoint> points_;
};

LatticeSet set_union(const LatticeSet& a, const LatticeSet& b);
LatticeSet set_difference(const LatticeSet& a, const LatticeSet& b);

class MultiplicitySpec {
 public:
  MultiplicitySpec() = default;
  MultiplicitySpec(std::vector<std::int64_t> multiplicities);  // NOLINT: braced lists read naturally
  MultiplicitySpec(std::initializer_list<std::int64_t> multiplicities)
      : MultiplicitySpec(std::vector<std::int64_t>(multiplicities)) {}

  const std::vector<std::int64_t>& values() const { return m_; }
  std::size_t size() const { return m_.size(); }
  bool empty() const { return m_.empty(); }
  std::int64_t max() const;
  // Number of linear conditions: sum of m_i (m_i + 1) / 2.
  std::int64_t conditions() const;

 private:
  std::vector<std::int64_t> m_;
};

// A family of parallel lines. Vertical lines are indexed by alpha, horizontal ones
// by beta, and a general direction (dx, dy) by dy*alpha - dx*beta.
class Direction {
 public:
  Direction(std::int64_t dx, std::int64_t dy);
  static Direction vertical() { return {0, 1}; }
  static Direction horizontal() { return {1, 0}; }

  std::int64_t dx() const { return dx_; }
  std::int64_t dy() const { return dy_; }
  std::int64_t line_index(const LatticePoint& p) const;
  // Position of p along its line; smaller positions are chosen first.
  std::int64_t position(const LatticePoint& p) const { return dx_ * p.alpha + dy_ * p.beta; }
  std::string name() const;

  friend bool operator==(const Direction&, const Direction&) = default;

 private:
  std::int64_t dx_, dy_;
};

struct ColumnProfile {
  Direction direction = Direction::vertical();
  std::map<std::int64_t, std::int64_t> columns;  // line index -> number of points

  std::int64_t total() const;
};

struct WitnessColumn {
  std::int64_t line = 0;
  std::int64_t size = 0;
  friend bool operator==(const WitnessColumn&, const WitnessColumn&) = default;
};

// m parallel lines holding exactly 1, ..., m points of the subset.
struct WitnessSelection {
  std::int64_t m = 0;
  Direction direction = Direction::vertical();
  std::vector<WitnessColumn> assignment;  // sizes m, m-1, ..., 1 in assignment order
  LatticeSet subset;
};

// Integer points of the closed polygon n*P with both coordinates >= 0.
LatticeSet scaled_points(const ConvexPolygon& polygon, std::int64_t n);

// Splits by the scaled form n r0 + r1 a + r2 b. Points on the line go to the second
// (positive) part, so the two parts always partition D.
std::pair<LatticeSet, LatticeSet> split_by_affine(const LatticeSet& points, const AffineForm& form, std::int64_t scale);

// Throws EmptySet for an empty D.
ColumnProfile column_profile(const LatticeSet& points, const Direction& direction);

// Largest m such that distinct lines can host 1, ..., m points. 0 for an empty profile.
std::int64_t max_parallel_witness(const ColumnProfile& profile);

// Deterministic: lines by count descending (ties to the smaller index), the j-th line
// takes m - j + 1 points with the smallest positions. Throws WitnessTooLarge.
WitnessSelection select_witness_subset(const LatticeSet& points, const Direction& direction, std::int64_t m);

// Checks that `witness` really is a parallel-lines witness drawn from `source`.
bool witness_is_valid(const WitnessSelection& witness, const LatticeSet& source);

// max(-1, count - 1 - sum m_i(m_i+1)/2).
std::int64_t expected_dimension(std::int64_t monomial_count, const MultiplicitySpec& spec);
// Same for all monomials of degree <= d, i.e. count = (d+1)(d+2)/2.
std::int64_t expected_dimension_for_degree(std::int64_t degree, const MultiplicitySpec& spec);

// m repeated r times.
MultiplicitySpec uniform_multiplicities(std::int64_t m, std::size_t r);

}  // namespace seshadri
