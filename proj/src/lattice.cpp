#include "seshadri/lattice.hpp"

#include <algorithm>
#include <numeric>

#include "seshadri/error.hpp"

namespace seshadri {

LatticeSet::LatticeSet(std::vector<LatticePoint> points) : points_(std::move(points)) {
  for (const auto& p : points_) {
    if (p.alpha < 0 || p.beta < 0) throw Error(ErrorKind::OutOfRange, "lattice points must have nonnegative coordinates");
  }
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

bool LatticeSet::contains(const LatticePoint& p) const { return std::binary_search(points_.begin(), points_.end(), p); }

bool LatticeSet::includes(const LatticeSet& other) const {
  return std::includes(points_.begin(), points_.end(), other.points_.begin(), other.points_.end());
}

LatticeSet set_union(const LatticeSet& a, const LatticeSet& b) {
  std::vector<LatticePoint> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return LatticeSet(std::move(out));
}

LatticeSet set_difference(const LatticeSet& a, const LatticeSet& b) {
  std::vector<LatticePoint> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return LatticeSet(std::move(out));
}

MultiplicitySpec::MultiplicitySpec(std::vector<std::int64_t> multiplicities) : m_(std::move(multiplicities)) {
  for (auto m : m_) {
    if (m < 1) throw Error(ErrorKind::OutOfRange, "multiplicities must be positive");
  }
}

std::int64_t MultiplicitySpec::max() const { return m_.empty() ? 0 : *std::max_element(m_.begin(), m_.end()); }

std::int64_t MultiplicitySpec::conditions() const {
  std::int64_t sum = 0;
  for (auto m : m_) sum += m * (m + 1) / 2;
  return sum;
}

Direction::Direction(std::int64_t dx, std::int64_t dy) : dx_(dx), dy_(dy) {
  if (dx == 0 && dy == 0) throw Error(ErrorKind::DegenerateInput, "zero direction");
  if (std::gcd(dx, dy) != 1) throw Error(ErrorKind::DegenerateInput, "direction must be primitive");
}

std::int64_t Direction::line_index(const LatticePoint& p) const {
  if (dx_ == 0) return p.alpha;
  if (dy_ == 0) return p.beta;
  return dy_ * p.alpha - dx_ * p.beta;
}

std::string Direction::name() const {
  if (*this == vertical()) return "vertical";
  if (*this == horizontal()) return "horizontal";
  return "(" + std::to_string(dx_) + "," + std::to_string(dy_) + ")";
}

std::int64_t ColumnProfile::total() const {
  std::int64_t sum = 0;
  for (const auto& [line, count] : columns) sum += count;
  return sum;
}

LatticeSet scaled_points(const ConvexPolygon& polygon, std::int64_t n) {
  if (n < 1) throw Error(ErrorKind::OutOfRange, "scale must be positive");
  const Rational scale(static_cast<long>(n));
  const Interval xs = x_projection(polygon, Axis::X);
  const auto a_lo = std::max<std::int64_t>(0, (xs.lo * scale).ceil().get_si());
  const auto a_hi = (xs.hi * scale).floor().get_si();
  std::vector<LatticePoint> out;
  for (std::int64_t a = a_lo; a <= a_hi; ++a) {
    const Interval ys = section(polygon, Axis::X, Rational(static_cast<long>(a)) / scale);
    const auto b_lo = std::max<std::int64_t>(0, (ys.lo * scale).ceil().get_si());
    const auto b_hi = (ys.hi * scale).floor().get_si();
    for (std::int64_t b = b_lo; b <= b_hi; ++b) out.push_back({a, b});
  }
  return LatticeSet(std::move(out));
}

std::pair<LatticeSet, LatticeSet> split_by_affine(const LatticeSet& points, const AffineForm& form, std::int64_t scale) {
  std::vector<LatticePoint> neg, pos;
  for (const auto& p : points) {
    if (form.scaled(static_cast<long>(scale), static_cast<long>(p.alpha), static_cast<long>(p.beta)).sign() < 0) {
      neg.push_back(p);
    } else {
      pos.push_back(p);
    }
  }
  return {LatticeSet(std::move(neg)), LatticeSet(std::move(pos))};
}

ColumnProfile column_profile(const LatticeSet& points, const Direction& direction) {
  if (points.empty()) throw Error(ErrorKind::EmptySet, "column profile of an empty set");
  ColumnProfile profile{direction, {}};
  for (const auto& p : points) ++profile.columns[direction.line_index(p)];
  return profile;
}

namespace {

// (line, count) sorted by count descending, then by line ascending.
std::vector<std::pair<std::int64_t, std::int64_t>> ranked_columns(const ColumnProfile& profile) {
  std::vector<std::pair<std::int64_t, std::int64_t>> cols(profile.columns.begin(), profile.columns.end());
  std::stable_sort(cols.begin(), cols.end(), [](const auto& a, const auto& b) { return a.second > b.second; });
  return cols;
}

}  // namespace

std::int64_t max_parallel_witness(const ColumnProfile& profile) {
  const auto cols = ranked_columns(profile);
  std::int64_t best = 0;
  for (std::int64_t k = 1; k <= static_cast<std::int64_t>(cols.size()); ++k) {
    bool fits = true;
    for (std::int64_t j = 1; j <= k && fits; ++j) fits = cols[static_cast<std::size_t>(j - 1)].second >= k - j + 1;
    if (!fits) break;
    best = k;
  }
  return best;
}

WitnessSelection select_witness_subset(const LatticeSet& points, const Direction& direction, std::int64_t m) {
  if (m < 1) throw Error(ErrorKind::OutOfRange, "witness size must be positive");
  const ColumnProfile profile = points.empty() ? ColumnProfile{direction, {}} : column_profile(points, direction);
  if (max_parallel_witness(profile) < m) {
    throw Error(ErrorKind::WitnessTooLarge, "no " + std::to_string(m) + " parallel " + direction.name() +
                                                " lines with 1.." + std::to_string(m) + " points");
  }
  const auto cols = ranked_columns(profile);

  std::map<std::int64_t, std::vector<LatticePoint>> by_line;
  for (const auto& p : points) by_line[direction.line_index(p)].push_back(p);

  WitnessSelection out{m, direction, {}, {}};
  std::vector<LatticePoint> chosen;
  for (std::int64_t j = 0; j < m; ++j) {
    const std::int64_t line = cols[static_cast<std::size_t>(j)].first;
    const std::int64_t size = m - j;
    auto& on_line = by_line[line];
    std::sort(on_line.begin(), on_line.end(), [&](const LatticePoint& a, const LatticePoint& b) {
      return direction.position(a) < direction.position(b);
    });
    chosen.insert(chosen.end(), on_line.begin(), on_line.begin() + size);
    out.assignment.push_back({line, size});
  }
  out.subset = LatticeSet(std::move(chosen));
  return out;
}

bool witness_is_valid(const WitnessSelection& witness, const LatticeSet& source) {
  if (witness.m < 1 || static_cast<std::int64_t>(witness.assignment.size()) != witness.m) return false;
  if (static_cast<std::int64_t>(witness.subset.size()) != witness.m * (witness.m + 1) / 2) return false;
  if (!source.includes(witness.subset)) return false;
  const ColumnProfile profile = column_profile(witness.subset, witness.direction);
  std::vector<std::int64_t> sizes;
  for (const auto& [line, count] : profile.columns) sizes.push_back(count);
  std::sort(sizes.begin(), sizes.end());
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] != static_cast<std::int64_t>(i) + 1) return false;
  }
  for (const auto& col : witness.assignment) {
    auto it = profile.columns.find(col.line);
    if (it == profile.columns.end() || it->second != col.size) return false;
  }
  return static_cast<std::int64_t>(sizes.size()) == witness.m;
}

std::int64_t expected_dimension(std::int64_t monomial_count, const MultiplicitySpec& spec) {
  return std::max<std::int64_t>(-1, monomial_count - 1 - spec.conditions());
}

std::int64_t expected_dimension_for_degree(std::int64_t degree, const MultiplicitySpec& spec) {
  if (degree < 0) throw Error(ErrorKind::OutOfRange, "negative degree");
  return expected_dimension((degree + 1) * (degree + 2) / 2, spec);
}

MultiplicitySpec uniform_multiplicities(std::int64_t m, std::size_t r) {
  return MultiplicitySpec(std::vector<std::int64_t>(r, m));
}

}  // namespace seshadri
