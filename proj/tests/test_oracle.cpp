#include <random>
#include <set>

#include "doctest.h"
#include "seshadri/certify.hpp"
#include "seshadri/error.hpp"
#include "seshadri/oracle.hpp"
#include "support.hpp"

using namespace seshadri;
using seshadri::testing::q;

namespace {

LatticeSet degree_at_most(std::int64_t d) {
  std::vector<LatticePoint> pts;
  for (std::int64_t a = 0; a <= d; ++a) {
    for (std::int64_t b = 0; a + b <= d; ++b) pts.push_back({a, b});
  }
  return LatticeSet(pts);
}

// Plain Gauss-Jordan over the rationals; slow but obviously correct.
std::size_t naive_rank(RationalMatrix m) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols && rank < m.rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < m.rows && m.at(pivot, c) == 0) ++pivot;
    if (pivot == m.rows) continue;
    for (std::size_t k = 0; k < m.cols; ++k) std::swap(m.entries[pivot * m.cols + k], m.entries[rank * m.cols + k]);
    for (std::size_t r = 0; r < m.rows; ++r) {
      if (r == rank || m.at(r, c) == 0) continue;
      const Rational f = m.at(r, c) / m.at(rank, c);
      for (std::size_t k = 0; k < m.cols; ++k) m.entries[r * m.cols + k] -= f * m.at(rank, k);
    }
    ++rank;
  }
  return rank;
}

RationalMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, std::size_t rank_cap) {
  // product of rows x k and k x cols integer matrices, so rank <= k
  std::uniform_int_distribution<long> e(-3, 3);
  std::vector<long> a(rows * rank_cap), b(rank_cap * cols);
  for (auto& x : a) x = e(rng);
  for (auto& x : b) x = e(rng);
  RationalMatrix m{rows, cols, {}};
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      long s = 0;
      for (std::size_t k = 0; k < rank_cap; ++k) s += a[r * rank_cap + k] * b[k * cols + c];
      m.entries.push_back(Rational(s, 1 + static_cast<long>((r + c) % 3)));
    }
  }
  return m;
}

}  // namespace

TEST_CASE("interpolation_matrix shapes and entries") {
  auto one = interpolation_matrix(LatticeSet({{0, 0}}), GenericPointSet::explicit_points({Point{q(1, 3), 2}}),
                                  MultiplicitySpec{1});
  CHECK(one.rows == 1);
  CHECK(one.cols == 1);
  CHECK(one.at(0, 0) == 1);

  auto six = interpolation_matrix(degree_at_most(2), GenericPointSet::seeded(1, 0), MultiplicitySpec{3});
  CHECK(six.rows == 6);
  CHECK(six.cols == 6);

  // D on the line beta = 0 with a double point: the d/dy row vanishes
  const Point p{q(2, 3), q(5, 7)};
  auto line = interpolation_matrix(LatticeSet({{0, 0}, {1, 0}, {2, 0}}), GenericPointSet::explicit_points({p}),
                                   MultiplicitySpec{2});
  REQUIRE(line.rows == 3);
  // rows: value, d/dy, d/dx ; columns: 1, x, x^2
  CHECK(line.at(0, 2) == p.x * p.x);
  for (std::size_t c = 0; c < 3; ++c) CHECK(line.at(1, c) == 0);
  CHECK(line.at(2, 0) == 0);
  CHECK(line.at(2, 2) == 2 * p.x);
  CHECK(exact_rank(line) == 2);

  // d^2/dx dy (x^3 y^2) = 3 * 2 x^2 y
  auto mixed = interpolation_matrix(LatticeSet({{3, 2}}), GenericPointSet::explicit_points({p}), MultiplicitySpec{3});
  CHECK(mixed.at(4, 0) == 6 * p.x * p.x * p.y);

  CHECK_THROWS_AS(interpolation_matrix(degree_at_most(1), GenericPointSet::seeded(2, 0), MultiplicitySpec{1}), Error);
}

TEST_CASE("rank algorithms agree with naive elimination") {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<std::size_t> dim(1, 7);
  for (int iter = 0; iter < 200; ++iter) {
    const std::size_t rows = dim(rng), cols = dim(rng), k = dim(rng);
    auto m = random_matrix(rng, rows, cols, k);
    const auto expect = naive_rank(m);
    CHECK(exact_rank(m) == expect);
    CHECK(modular_rank(m, kMersenne61) == expect);
  }
}

TEST_CASE("is_prime") {
  CHECK(is_prime(kMersenne61));
  CHECK(is_prime(2));
  CHECK(is_prime(65537));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(561));
  CHECK_FALSE(is_prime(kMersenne61 - 2));
  CHECK_FALSE(is_prime((std::uint64_t{1} << 62) - 57 + 2));
}

TEST_CASE("GenericPointSet") {
  auto a = GenericPointSet::seeded(12, 5);
  auto b = GenericPointSet::seeded(12, 5);
  CHECK(a.points == b.points);
  CHECK(a.points != GenericPointSet::seeded(12, 6).points);
  std::set<Point> distinct(a.points.begin(), a.points.end());
  CHECK(distinct.size() == 12);
  for (const auto& p : a.points) {
    CHECK(p.x.den() == 65537);
    CHECK(p.x > 0);
    CHECK(p.x < 1);
  }
  CHECK_THROWS_AS(GenericPointSet::explicit_points({Point{1, 2}, Point{1, 2}}), Error);
}

TEST_CASE("system_dimension_exact examples") {
  auto six = system_dimension_exact(degree_at_most(2), MultiplicitySpec{3}, GenericPointSet::seeded(1, 0));
  CHECK(six.actual_dimension == -1);
  CHECK(six.non_special);

  auto line = system_dimension_exact(LatticeSet({{0, 0}, {1, 0}, {2, 0}}), MultiplicitySpec{2},
                                     GenericPointSet::seeded(1, 0));
  CHECK(line.actual_dimension == 0);
  CHECK(line.expected_dimension == -1);
  CHECK_FALSE(line.non_special);
  REQUIRE(line.caveat);  // retried at a fresh seed

  for (std::int64_t d : {1, 3, 5}) {
    auto empty = system_dimension_exact(degree_at_most(d), MultiplicitySpec{}, GenericPointSet::seeded(0, 0));
    CHECK(empty.actual_dimension == d * (d + 3) / 2);
    CHECK(empty.non_special);
  }

  // five double points impose independent conditions on quartics only up to the conic
  auto conic = system_dimension_exact(degree_at_most(4), uniform_multiplicities(2, 5), GenericPointSet::seeded(5, 1));
  CHECK(conic.expected_dimension == -1);
  CHECK(conic.actual_dimension == 0);
  CHECK_FALSE(conic.non_special);
}

TEST_CASE("dimension never drops below the expected one") {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<std::int64_t> deg(1, 6), mult(1, 3), count(0, 4);
  for (int iter = 0; iter < 60; ++iter) {
    const auto d = deg(rng);
    std::vector<std::int64_t> ms;
    for (auto r = count(rng); r > 0; --r) ms.push_back(mult(rng));
    const MultiplicitySpec spec(ms);
    auto v = system_dimension_exact(degree_at_most(d), spec, GenericPointSet::seeded(spec.size(), iter));
    CHECK(v.actual_dimension >= v.expected_dimension);
    CHECK(v.non_special == (v.actual_dimension == v.expected_dimension));
    CHECK(v.expected_dimension == expected_dimension_for_degree(d, spec));
  }
}

TEST_CASE("modular oracle agrees with the exact one") {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<std::int64_t> c(0, 5), mult(1, 3);
  int total = 0, agree = 0;
  for (int iter = 0; iter < 120; ++iter) {
    std::set<LatticePoint> pts;
    std::uniform_int_distribution<std::size_t> size(1, 14);
    const auto want = size(rng);
    while (pts.size() < want) pts.insert({c(rng), c(rng)});
    LatticeSet d(std::vector<LatticePoint>(pts.begin(), pts.end()));
    MultiplicitySpec spec{mult(rng), mult(rng)};
    auto exact = system_dimension_exact(d, spec, GenericPointSet::seeded(2, iter));
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      auto mod = system_dimension_modp(d, spec, seed);
      ++total;
      agree += mod.actual_dimension == exact.actual_dimension;
    }
  }
  CHECK(agree * 100 >= total * 99);

  auto empty = system_dimension_modp(degree_at_most(3), MultiplicitySpec{}, 77);
  CHECK(empty.actual_dimension == 9);
}

TEST_CASE("modular oracle bookkeeping") {
  auto a = system_dimension_modp(degree_at_most(6), MultiplicitySpec{3, 2, 2}, 4);
  auto b = system_dimension_modp(degree_at_most(6), MultiplicitySpec{3, 2, 2}, 4);
  CHECK(a.actual_dimension == b.actual_dimension);
  CHECK(a.caveat == b.caveat);
  CHECK(a.method == OracleMethod::Modular);
  REQUIRE(a.prime);
  CHECK(*a.prime == kMersenne61);
  REQUIRE(a.seed);
  CHECK(*a.seed == 4);
  CHECK(a.caveat);

  for (std::uint64_t bad : {std::uint64_t{4}, std::uint64_t{5}, std::uint64_t{1}}) {
    try {
      (void)system_dimension_modp(degree_at_most(6), MultiplicitySpec{2}, 0, bad);
      FAIL("accepted modulus");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::PrimeTooSmall);
    }
  }
  // a small prime is fine when it exceeds every exponent
  CHECK_NOTHROW(system_dimension_modp(degree_at_most(3), MultiplicitySpec{2}, 0, 7));

  auto explicit_pts = system_dimension_modp(degree_at_most(2), MultiplicitySpec{3},
                                            GenericPointSet::explicit_points({Point{q(1, 2), q(1, 3)}}));
  CHECK(explicit_pts.actual_dimension == -1);
}

TEST_CASE("size guardrail") {
  try {
    (void)system_dimension_exact(degree_at_most(10), uniform_multiplicities(3, 4), GenericPointSet::seeded(4, 0), 100);
    FAIL("guardrail not triggered");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SizeGuardrail);
  }
  CHECK_NOTHROW(system_dimension_exact(degree_at_most(10), uniform_multiplicities(3, 4),
                                       GenericPointSet::seeded(4, 0), 24 * 66));
}

TEST_CASE("single-point systems match the curve test") {
  // |D| = m(m+1)/2 with one point of multiplicity m is non-special exactly when
  // the points of D do not lie on a curve of degree m - 1.
  std::vector<LatticePoint> grid;
  for (std::int64_t a = 0; a < 4; ++a) {
    for (std::int64_t b = 0; b < 4; ++b) grid.push_back({a, b});
  }
  int special = 0, total = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    for (std::size_t j = i + 1; j < grid.size(); ++j) {
      for (std::size_t k = j + 1; k < grid.size(); ++k) {
        LatticeSet d({grid[i], grid[j], grid[k]});
        auto v = system_dimension_exact(d, MultiplicitySpec{2}, GenericPointSet::seeded(1, total));
        CHECK(v.non_special == !lies_on_curve_of_degree(d, 1));
        special += !v.non_special;
        ++total;
      }
    }
  }
  CHECK(total == 560);
  CHECK(special > 0);
  CHECK(veronese_rank(LatticeSet({{0, 0}, {1, 1}, {2, 2}}), 1) == 2);
  CHECK(lies_on_curve_of_degree(LatticeSet({{0, 0}, {1, 1}, {2, 2}, {0, 3}, {3, 0}, {3, 3}}), 2));
}

TEST_CASE("witness from the scaled triangle GKE") {
  auto gke = make_polygon({eckl10_point("G"), eckl10_point("K"), eckl10_point("E")});
  auto d = scaled_points(gke, 26);
  auto w = select_witness_subset(d, Direction::vertical(), 8);
  CHECK(w.subset.size() == 36);
  auto exact = system_dimension_exact(w.subset, MultiplicitySpec{8}, GenericPointSet::seeded(1, 0));
  CHECK(exact.actual_dimension == -1);
  auto mod = system_dimension_modp(w.subset, MultiplicitySpec{8}, 0);
  CHECK(mod.actual_dimension == -1);
}
