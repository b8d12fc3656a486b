#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "seshadri/geometry.hpp"
#include "seshadri/lattice.hpp"
#include "seshadri/oracle.hpp"
#include "seshadri/surd.hpp"

namespace seshadri {

// One peeling step: `peeled` is the part of the remaining region where `cut` < 0.
// It is meant to carry systems of dimension -1.
struct CutStep {
  AffineForm cut;
  ConvexPolygon peeled;

  friend bool operator==(const CutStep&, const CutStep&) = default;
};

// Ordered peeling of convex polygons P_1 .. P_{r-1} from `region`; what is left is
// the final polygon P_r, which carries the system of dimension >= 0.
struct Dissection {
  std::string name;
  ConvexPolygon region;
  std::vector<CutStep> steps;
  ConvexPolygon final_polygon;

  std::size_t polygon_count() const { return steps.size() + 1; }
  // 0-based; index steps.size() is the final polygon.
  const ConvexPolygon& polygon(std::size_t index) const {
    return index < steps.size() ? steps[index].peeled : final_polygon;
  }

  friend bool operator==(const Dissection&, const Dissection&) = default;
};

struct NamedPoint {
  std::string name;
  Point point;
};

// The labelled points O, A, B, ..., S of the ten-point dissection.
const std::vector<NamedPoint>& eckl10_points();
const Point& eckl10_point(const std::string& name);

// Ten polygons cut from the unit simplex whose asymptotic bound is 4/13.
Dissection builtin_dissection_eckl10();

// The simplex halved by x + y = 1/2; small enough to reason about by hand.
Dissection toy_dissection_halves();

struct ValidationReport {
  std::vector<std::string> violations;
  Rational area_sum;
  Rational region_area;

  bool valid() const { return violations.empty(); }
};

// Checks cut signs on every polygon, containment in the region and the exact area
// partition. Violations are listed rather than thrown.
ValidationReport validate_dissection(const Dissection& dissection);

struct AxisCheck {
  Axis axis = Axis::X;
  Rational width;
  Rational sup_admissible;
  Rational max_chord;
  bool pass = false;
};

struct PolygonCheck {
  std::size_t id = 0;  // 1-based polygon number
  Axis axis_used = Axis::X;
  Rational width;
  Rational sup_admissible;
  Rational max_chord;
  bool pass = false;
  std::vector<AxisCheck> axes;  // every axis tried, in order
};

struct AsymptoticReport {
  Rational m;
  std::vector<PolygonCheck> per_polygon;
  bool overall = false;

  std::optional<std::size_t> first_failure() const;
};

// For each polygon, tries the x axis then the y axis: the polygon passes when
// m < width and f#(t) >= t on (0, m] for its height profile f on that axis.
// Throws InvalidDissection when validation fails.
AsymptoticReport verify_asymptotic(const Dissection& dissection, const Rational& m);

// min over polygons of max over axes of min(width, sup_admissible): the supremum
// (not necessarily attained) of the m accepted by verify_asymptotic.
Rational certified_bound(const Dissection& dissection);
// The per-polygon terms of that minimum.
std::vector<Rational> polygon_bounds(const Dissection& dissection);

enum class OracleMode { None, Modular, Exact };

const char* to_string(OracleMode mode);
OracleMode parse_oracle_mode(const std::string& text);

struct CertificateOptions {
  OracleMode oracle = OracleMode::Modular;
  std::uint64_t seed = 0;
  std::uint64_t prime = kMersenne61;
  std::vector<Direction> directions{Direction::vertical(), Direction::horizontal()};
  std::size_t max_cells = kDefaultMaxCells;
};

struct PolygonCertificate {
  std::size_t id = 0;
  bool is_final = false;
  std::int64_t lattice_count = 0;
  std::int64_t multiplicity = 0;  // m_i^(n)
  WitnessSelection witness;
  std::optional<OracleVerdict> oracle;
  // |m_i^(n) - n m| / (n m) for the target m of the certificate.
  Rational deviation;
  // Expected dimension of the leaf system: the witness for a peeled polygon, the
  // whole lattice set (which contains the witness) for the final one.
  std::int64_t leaf_expected_dimension = -1;
};

struct FiniteCertificate {
  std::string dissection_name;
  std::int64_t n = 0;
  std::vector<PolygonCertificate> per_polygon;
  Rational min_ratio;
  std::int64_t degree = 0;
  Rational target;  // certified_bound of the dissection
  OracleMode oracle = OracleMode::None;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> prime;
  std::vector<Direction> directions;
  std::string statement;

  std::int64_t min_multiplicity() const;
};

// Scale-n instance of the asymptotic argument: lattice sets of the n-scaled
// dissection (points on a cut go to the remainder), the largest parallel-lines
// witness per polygon, and optionally an oracle check of each witness system.
// Throws EmptyPolygonAtScale if some polygon gets no lattice points.
FiniteCertificate finite_certificate(const Dissection& dissection, std::int64_t n,
                                     const CertificateOptions& options = {});

// Re-checks the certificate's internal consistency against the dissection.
std::vector<std::string> check_certificate(const Dissection& dissection, const FiniteCertificate& cert);

struct CertificateBound {
  std::int64_t degree = 0;
  std::int64_t min_multiplicity = 0;
  Rational ratio;
  // (d, m - 1): L_d(m^r) non-special of dimension >= 0 in the form used by the
  // sequence criterion.
  std::pair<std::int64_t, std::int64_t> sequence_pair;
};

CertificateBound bound_from_certificate(const FiniteCertificate& cert);

struct EcklSequenceReport {
  std::size_t r = 0;
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
  std::vector<std::int64_t> expected_dimensions;  // of L_d((m+1)^r)
  std::vector<bool> checks;                       // expected dimension >= 0
  std::vector<Rational> ratios;                   // d^2 / (m^2 r)
  Rational limit_estimate;                        // m/d of the last pair
  std::vector<std::string> warnings;

  bool all_pass() const;
};

// Throws OutOfRange for m < 1 or d < 1; r <= 9 only produces a warning.
EcklSequenceReport eckl_sequence_check(const std::vector<std::pair<std::int64_t, std::int64_t>>& pairs, std::size_t r);

enum class Comparison { Below, Equal, Above };

const char* to_string(Comparison c);

struct NagataReport {
  std::size_t r = 0;
  Rational bound;
  ScaledRoot nagata_target;  // sqrt(1/r)
  Comparison comparison = Comparison::Below;
  std::string nef_statement;
};

// Compares bound with 1/sqrt(r) through bound^2 r vs 1.
NagataReport nagata_report(std::size_t r, const Rational& bound);

}  // namespace seshadri
