#include <algorithm>

#include "doctest.h"
#include "seshadri/certify.hpp"
#include "seshadri/error.hpp"
#include "support.hpp"

using namespace seshadri;
using seshadri::testing::q;

namespace {

ConvexPolygon simplex() { return make_polygon({Point{0, 0}, Point{1, 0}, Point{0, 1}}); }

ConvexPolygon named(std::initializer_list<const char*> names) {
  std::vector<Point> pts;
  for (const char* n : names) pts.push_back(eckl10_point(n));
  return make_polygon(pts);
}

Dissection sliver() {
  const AffineForm cut(q(-1, 100), 1, 0);
  auto parts = cut_polygon(simplex(), cut);
  return Dissection{"sliver", simplex(), {CutStep{cut, *parts.neg}}, *parts.pos};
}

}  // namespace

TEST_CASE("builtin table and polygons") {
  CHECK(eckl10_points().size() == 19);
  CHECK(eckl10_point("E") == Point{q(9, 13), q(4, 13)});
  CHECK(eckl10_point("S") == Point{q(9, 26), 0});
  CHECK_THROWS_AS(eckl10_point("Z"), Error);
  // R lies on the line GE
  const Point r = eckl10_point("R");
  CHECK(r.x - r.y - q(5, 13) == 0);

  const auto dis = builtin_dissection_eckl10();
  REQUIRE(dis.polygon_count() == 10);
  CHECK(dis.polygon(0) == named({"O", "I", "J"}));
  CHECK(dis.polygon(5) == named({"G", "K", "E"}));
  CHECK(dis.polygon(7) == named({"N", "M", "K", "L"}));
  CHECK(dis.polygon(8) == named({"Q", "I", "G", "M", "P"}));
  CHECK(dis.polygon(9) == named({"Q", "P", "N", "H", "J"}));
  for (std::size_t i = 0; i < 8; ++i) CHECK(dis.polygon(i).area() == q(8, 169));
  CHECK(dis.polygon(8).area() == q(41, 676));
  CHECK(dis.polygon(9).area() == q(41, 676));
}

TEST_CASE("validate_dissection") {
  auto report = validate_dissection(builtin_dissection_eckl10());
  CHECK(report.valid());
  CHECK(report.area_sum == q(1, 2));
  CHECK(report.region_area == q(1, 2));
  CHECK(validate_dissection(toy_dissection_halves()).valid());
  CHECK(validate_dissection(sliver()).valid());

  SUBCASE("flipped cut sign") {
    auto dis = builtin_dissection_eckl10();
    dis.steps[1].cut = dis.steps[1].cut.negated();
    auto bad = validate_dissection(dis);
    CHECK_FALSE(bad.valid());
    CHECK(std::any_of(bad.violations.begin(), bad.violations.end(),
                      [](const std::string& v) { return v.find("cut 2") != std::string::npos; }));
    CHECK_THROWS_AS(verify_asymptotic(dis, q(1, 13)), Error);
    CHECK_THROWS_AS(certified_bound(dis), Error);
  }
  SUBCASE("overlapping polygons") {
    auto dis = toy_dissection_halves();
    dis.final_polygon = simplex();
    auto bad = validate_dissection(dis);
    CHECK_FALSE(bad.valid());
    CHECK(bad.area_sum == q(5, 8));
  }
  SUBCASE("polygon outside the region") {
    auto dis = toy_dissection_halves();
    dis.region = make_polygon({Point{0, 0}, Point{q(1, 2), 0}, Point{0, q(1, 2)}});
    CHECK_FALSE(validate_dissection(dis).valid());
  }
}

TEST_CASE("verify_asymptotic") {
  const auto dis = builtin_dissection_eckl10();
  CHECK(verify_asymptotic(dis, q(4, 13) - q(1, 1000)).overall);
  CHECK(verify_asymptotic(dis, q(1, 13)).overall);

  auto at = verify_asymptotic(dis, q(4, 13));
  CHECK_FALSE(at.overall);
  REQUIRE(at.first_failure());
  CHECK(*at.first_failure() == 1);
  CHECK_FALSE(at.per_polygon[5].pass);

  auto ok = verify_asymptotic(dis, q(3, 10));
  REQUIRE(ok.per_polygon.size() == 10);
  for (const auto& p : ok.per_polygon) {
    CAPTURE(p.id);
    CHECK(p.pass);
    // the literal conditions: width and chord exceed m on the axis used
    CHECK(p.width > q(3, 10));
    CHECK(p.max_chord >= p.sup_admissible);
    CHECK(p.max_chord > q(3, 10));
  }
  CHECK(ok.per_polygon[6].axis_used == Axis::Y);
  CHECK(ok.per_polygon[9].axis_used == Axis::Y);
  CHECK(ok.per_polygon[5].axis_used == Axis::X);
  CHECK(ok.per_polygon[9].axes[0].width == q(9, 26));
  CHECK(ok.per_polygon[9].axes[0].sup_admissible == q(3, 13));
  CHECK(ok.per_polygon[6].axes[0].sup_admissible == 0);
}

TEST_CASE("certified_bound") {
  const auto dis = builtin_dissection_eckl10();
  CHECK(certified_bound(dis) == q(4, 13));
  auto bounds = polygon_bounds(dis);
  REQUIRE(bounds.size() == 10);
  for (const auto& b : bounds) CHECK(b == q(4, 13));

  // both halves have bound 1/2, found by hand from their height profiles
  CHECK(certified_bound(toy_dissection_halves()) == q(1, 2));
  CHECK(certified_bound(sliver()) <= q(1, 100));
}

TEST_CASE("the builtin bound is not attained") {
  // every polygon has width exactly 4/13 on its best axis and m < width is strict
  CHECK_FALSE(verify_asymptotic(builtin_dissection_eckl10(), q(4, 13)).overall);
  // a bound coming from the rearrangement alone is attained
  const Rational b = certified_bound(sliver());
  CHECK(verify_asymptotic(sliver(), b).overall);
}

TEST_CASE("certified_bound is the supremum of accepted m") {
  for (const auto& dis : {builtin_dissection_eckl10(), toy_dissection_halves(), sliver()}) {
    const Rational b = certified_bound(dis);
    for (long k : {7L, 100L, 1000000L}) {
      CHECK(verify_asymptotic(dis, b - b / Rational(k)).overall);
      CHECK_FALSE(verify_asymptotic(dis, b + Rational(1, k)).overall);
    }
    Rational lo(0), hi(1);
    for (int i = 0; i < 40; ++i) {
      const Rational mid = (lo + hi) / 2;
      (verify_asymptotic(dis, mid).overall ? lo : hi) = mid;
    }
    CHECK(lo <= b);
    CHECK(b <= hi);
    CHECK(hi - lo <= Rational(1, 1L << 40));
  }
}

TEST_CASE("finite certificate at n = 13 with the exact oracle") {
  const auto dis = builtin_dissection_eckl10();
  CertificateOptions opts;
  opts.oracle = OracleMode::Exact;
  const auto cert = finite_certificate(dis, 13, opts);
  REQUIRE(cert.per_polygon.size() == 10);
  const std::vector<std::int64_t> expect{4, 4, 4, 4, 4, 4, 4, 3, 4, 4};
  for (std::size_t i = 0; i < 10; ++i) {
    const auto& p = cert.per_polygon[i];
    CAPTURE(p.id);
    CHECK(p.multiplicity == expect[i]);
    CHECK(p.multiplicity >= 3);
    CHECK(witness_is_valid(p.witness, p.witness.subset));
    REQUIRE(p.oracle);
    CHECK(p.oracle->actual_dimension == -1);
    CHECK(p.oracle->non_special);
    CHECK(p.oracle->method == OracleMethod::ExactRational);
  }
  CHECK(cert.per_polygon[7].lattice_count == 8);
  CHECK(cert.per_polygon[9].is_final);
  CHECK(cert.per_polygon[9].lattice_count == 15);
  CHECK(cert.per_polygon[9].leaf_expected_dimension == 4);
  CHECK(cert.per_polygon[6].witness.direction == Direction::horizontal());
  CHECK(cert.min_ratio == q(3, 13));
  CHECK(cert.min_multiplicity() == 3);
  CHECK(cert.degree == 13);
  CHECK(cert.target == q(4, 13));
  CHECK(check_certificate(dis, cert).empty());

  // the lattice sets partition the scaled simplex in cut order
  std::int64_t total = 0;
  for (const auto& p : cert.per_polygon) total += p.lattice_count;
  CHECK(total == static_cast<std::int64_t>(scaled_points(dis.region, 13).size()));

  auto tampered = cert;
  tampered.per_polygon[2].multiplicity = 5;
  CHECK_FALSE(check_certificate(dis, tampered).empty());
}

TEST_CASE("every witness up to n = 26 passes the exact oracle") {
  const auto dis = builtin_dissection_eckl10();
  CertificateOptions opts;
  opts.oracle = OracleMode::Exact;
  int built = 0;
  for (std::int64_t n = 1; n <= 26; ++n) {
    CAPTURE(n);
    try {
      const auto cert = finite_certificate(dis, n, opts);
      ++built;
      for (const auto& p : cert.per_polygon) {
        REQUIRE(p.oracle);
        CHECK(p.oracle->actual_dimension == -1);
      }
      // below n = 13 the final leaf can be too small for dimension >= 0
      const auto problems = check_certificate(dis, cert);
      if (n >= 13) CHECK(problems.empty());
      for (const auto& p : problems) CHECK(p.rfind("P10: final leaf", 0) == 0);
      CHECK(cert.min_ratio <= cert.target + Rational(1, n));
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::EmptyPolygonAtScale);
      CHECK(n < 13);
    }
  }
  CHECK(built >= 14);
  CHECK_THROWS_AS(finite_certificate(dis, 1), Error);
}

TEST_CASE("bound_from_certificate") {
  const auto cert = finite_certificate(builtin_dissection_eckl10(), 13);
  const auto b = bound_from_certificate(cert);
  CHECK(b.degree == 13);
  CHECK(b.min_multiplicity == 3);
  CHECK(b.ratio == q(3, 13));
  CHECK(b.sequence_pair == std::pair<std::int64_t, std::int64_t>{13, 2});

  const auto toy = finite_certificate(toy_dissection_halves(), 8, CertificateOptions{OracleMode::None});
  const auto tb = bound_from_certificate(toy);
  CHECK(tb.ratio == Rational(tb.min_multiplicity, 8));
  CHECK(tb.ratio <= q(1, 2) + q(1, 8));
}

TEST_CASE("eckl_sequence_check") {
  auto r = eckl_sequence_check({{132, 40}, {10, 3}}, 10);
  REQUIRE(r.checks.size() == 2);
  CHECK(r.expected_dimensions[0] == 300);
  CHECK(r.checks[0]);
  CHECK(r.ratios[0] == q(1089, 1000));
  CHECK(r.expected_dimensions[1] == -1);
  CHECK_FALSE(r.checks[1]);
  CHECK_FALSE(r.all_pass());
  CHECK(r.limit_estimate == q(3, 10));
  CHECK(r.warnings.empty());

  CHECK(eckl_sequence_check({{132, 40}}, 10).limit_estimate == q(10, 33));
  CHECK_FALSE(eckl_sequence_check({{3, 1}}, 9).warnings.empty());
  CHECK_THROWS_AS(eckl_sequence_check({{10, 0}}, 10), Error);
  CHECK_THROWS_AS(eckl_sequence_check({{0, 3}}, 10), Error);
}

TEST_CASE("nagata_report") {
  auto below = nagata_report(10, q(4, 13));
  CHECK(below.comparison == Comparison::Below);
  CHECK(below.bound * below.bound * 10 == q(160, 169));
  CHECK(below.nagata_target == ScaledRoot::sqrt_of(q(1, 10)));
  CHECK_FALSE(below.nef_statement.empty());
  CHECK(nagata_report(9, q(1, 3)).comparison == Comparison::Equal);
  CHECK(nagata_report(10, q(177, 560)).comparison == Comparison::Below);
  CHECK(nagata_report(10, q(1, 3)).comparison == Comparison::Above);
  CHECK(q(177, 560) > q(4, 13));
}
