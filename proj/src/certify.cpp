#include "seshadri/certify.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "seshadri/error.hpp"
#include "seshadri/reorder.hpp"

namespace seshadri {

namespace {

Rational r13(long k) { return Rational(k, 13); }

std::string polygon_label(std::size_t id) { return "P" + std::to_string(id); }

}  // namespace

std::string ScaledRoot::str() const {
  if (radicand == Rational(1)) return coefficient.str();
  if (coefficient == Rational(1)) return "sqrt(" + radicand.str() + ")";
  return coefficient.str() + "*sqrt(" + radicand.str() + ")";
}

const std::vector<NamedPoint>& eckl10_points() {
  static const std::vector<NamedPoint> points{
      {"O", {r13(0), r13(0)}},
      {"A", {Rational(1), Rational(0)}},
      {"B", {Rational(0), Rational(1)}},
      {"C", {r13(9), r13(0)}},
      {"D", {r13(0), r13(9)}},
      {"E", {r13(9), r13(4)}},
      {"F", {r13(4), r13(9)}},
      {"G", {r13(5), r13(0)}},
      {"H", {r13(0), r13(5)}},
      {"I", {r13(4), r13(0)}},
      {"J", {r13(0), r13(4)}},
      {"K", {r13(7), r13(6)}},
      {"L", {r13(6), r13(7)}},
      {"M", {r13(6), r13(3)}},
      {"N", {r13(3), r13(6)}},
      {"P", {Rational(9, 26), Rational(9, 26)}},
      {"Q", {r13(2), r13(2)}},
      {"R", {r13(7), r13(2)}},
      {"S", {Rational(9, 26), Rational(0)}},
  };
  return points;
}

const Point& eckl10_point(const std::string& name) {
  for (const auto& np : eckl10_points()) {
    if (np.name == name) return np.point;
  }
  throw Error(ErrorKind::OutOfRange, "no point named " + name);
}

Dissection builtin_dissection_eckl10() {
  auto poly = [](std::initializer_list<const char*> names) {
    std::vector<Point> pts;
    for (const char* n : names) pts.push_back(eckl10_point(n));
    return make_polygon(pts);
  };
  // Each cut is oriented so that the polygon it peels off is its negative side.
  std::vector<CutStep> steps{
      {AffineForm(-r13(4), 1, 1), poly({"O", "I", "J"})},    // x + y = 4/13 (line IJ)
      {AffineForm(r13(9), -1, 0), poly({"C", "A", "E"})},    // x = 9/13
      {AffineForm(r13(9), 0, -1), poly({"D", "B", "F"})},    // y = 9/13
      {AffineForm(r13(5), -1, 1), poly({"G", "C", "E"})},    // line GE
      {AffineForm(r13(5), 1, -1), poly({"H", "D", "F"})},    // line HF
      {AffineForm(r13(15), -3, 1), poly({"G", "K", "E"})},   // line GK
      {AffineForm(r13(15), 1, -3), poly({"H", "L", "F"})},   // line HL
      {AffineForm(r13(9), -1, -1), poly({"N", "M", "K", "L"})},  // line NM
      {AffineForm(0, -1, 1), poly({"Q", "I", "G", "M", "P"})},   // diagonal QP
  };
  return Dissection{"eckl10", poly({"O", "A", "B"}), std::move(steps), poly({"Q", "P", "N", "H", "J"})};
}

Dissection toy_dissection_halves() {
  const Rational half(1, 2);
  std::vector<CutStep> steps{
      {AffineForm(-half, 1, 1), make_polygon({Point{0, 0}, Point{half, 0}, Point{0, half}})},
  };
  return Dissection{"halves", make_polygon({Point{0, 0}, Point{1, 0}, Point{0, 1}}), std::move(steps),
                    make_polygon({Point{half, 0}, Point{1, 0}, Point{0, 1}, Point{0, half}})};
}

ValidationReport validate_dissection(const Dissection& dis) {
  ValidationReport report;
  report.region_area = dis.region.area();
  const std::size_t count = dis.polygon_count();

  for (std::size_t i = 0; i < count; ++i) {
    const auto& poly = dis.polygon(i);
    report.area_sum += poly.area();
    for (const auto& v : poly.vertices()) {
      if (!dis.region.contains(v)) {
        report.violations.push_back(polygon_label(i + 1) + ": vertex (" + v.x.str() + ", " + v.y.str() +
                                    ") outside the region");
        break;
      }
    }
  }

  for (std::size_t k = 0; k < dis.steps.size(); ++k) {
    const auto& step = dis.steps[k];
    for (const auto& v : step.peeled.vertices()) {
      if (step.cut(v).sign() > 0) {
        report.violations.push_back("cut " + std::to_string(k + 1) + ": positive on a vertex of " +
                                    polygon_label(k + 1) + ", which must lie on the negative side");
        break;
      }
    }
    for (std::size_t j = k + 1; j < count; ++j) {
      for (const auto& v : dis.polygon(j).vertices()) {
        if (step.cut(v).sign() < 0) {
          report.violations.push_back("cut " + std::to_string(k + 1) + ": negative on a vertex of later polygon " +
                                      polygon_label(j + 1));
          break;
        }
      }
    }
  }

  if (report.area_sum != report.region_area) {
    report.violations.push_back("areas sum to " + report.area_sum.str() + ", region area is " +
                                report.region_area.str());
  }
  return report;
}

std::optional<std::size_t> AsymptoticReport::first_failure() const {
  for (const auto& p : per_polygon) {
    if (!p.pass) return p.id;
  }
  return std::nullopt;
}

namespace {

void require_valid(const Dissection& dis) {
  const auto report = validate_dissection(dis);
  if (!report.valid()) throw Error(ErrorKind::InvalidDissection, report.violations.front());
}

AxisCheck check_axis(const ConvexPolygon& poly, Axis axis, const Rational& m) {
  AxisCheck c;
  c.axis = axis;
  const PiecewiseLinear f = height_profile(poly, axis);
  c.width = f.width();
  c.sup_admissible = sup_admissible(f);
  c.max_chord = f.max_value();
  // strict: the criterion needs m < b - a
  c.pass = m < c.width && dominates_identity(monotone_reorder(f), m).verdict;
  return c;
}

}  // namespace

AsymptoticReport verify_asymptotic(const Dissection& dis, const Rational& m) {
  if (m.sign() <= 0) throw Error(ErrorKind::OutOfRange, "m must be positive");
  require_valid(dis);
  AsymptoticReport report{m, {}, true};
  for (std::size_t i = 0; i < dis.polygon_count(); ++i) {
    PolygonCheck pc;
    pc.id = i + 1;
    for (Axis axis : {Axis::X, Axis::Y}) {
      pc.axes.push_back(check_axis(dis.polygon(i), axis, m));
      if (pc.axes.back().pass) break;
    }
    const auto chosen = std::find_if(pc.axes.begin(), pc.axes.end(), [](const AxisCheck& c) { return c.pass; });
    const AxisCheck& used = chosen != pc.axes.end() ? *chosen : pc.axes.front();
    pc.axis_used = used.axis;
    pc.width = used.width;
    pc.sup_admissible = used.sup_admissible;
    pc.max_chord = used.max_chord;
    pc.pass = used.pass;
    report.overall = report.overall && pc.pass;
    report.per_polygon.push_back(std::move(pc));
  }
  return report;
}

std::vector<Rational> polygon_bounds(const Dissection& dis) {
  require_valid(dis);
  std::vector<Rational> out;
  for (std::size_t i = 0; i < dis.polygon_count(); ++i) {
    Rational best;
    for (Axis axis : {Axis::X, Axis::Y}) {
      const PiecewiseLinear f = height_profile(dis.polygon(i), axis);
      best = max(best, min(f.width(), sup_admissible(f)));
    }
    out.push_back(best);
  }
  return out;
}

Rational certified_bound(const Dissection& dis) {
  const auto bounds = polygon_bounds(dis);
  return *std::min_element(bounds.begin(), bounds.end());
}

const char* to_string(OracleMode mode) {
  switch (mode) {
    case OracleMode::None: return "none";
    case OracleMode::Modular: return "modular";
    case OracleMode::Exact: return "exact";
  }
  return "none";
}

OracleMode parse_oracle_mode(const std::string& text) {
  if (text == "none") return OracleMode::None;
  if (text == "modular") return OracleMode::Modular;
  if (text == "exact") return OracleMode::Exact;
  throw Error(ErrorKind::Parse, "oracle mode must be none, modular or exact, got '" + text + "'");
}

std::int64_t FiniteCertificate::min_multiplicity() const {
  std::int64_t out = per_polygon.empty() ? 0 : per_polygon.front().multiplicity;
  for (const auto& p : per_polygon) out = std::min(out, p.multiplicity);
  return out;
}

namespace {

// Lattice sets of the n-scaled polygons, peeled in cut order.
std::vector<LatticeSet> scaled_pieces(const Dissection& dis, std::int64_t n) {
  std::vector<LatticeSet> pieces;
  LatticeSet remaining = scaled_points(dis.region, n);
  for (const auto& step : dis.steps) {
    auto [peeled, rest] = split_by_affine(remaining, step.cut, n);
    pieces.push_back(std::move(peeled));
    remaining = std::move(rest);
  }
  pieces.push_back(std::move(remaining));
  return pieces;
}

std::string certificate_statement(const FiniteCertificate& cert) {
  std::ostringstream s;
  s << "L_D(";
  for (std::size_t i = 0; i < cert.per_polygon.size(); ++i) s << (i ? "," : "") << cert.per_polygon[i].multiplicity;
  s << ") with D = " << cert.n << "*region in N^2 is non-special of dimension >= 0: polygons 1.."
    << cert.per_polygon.size() - 1 << " carry parallel-lines witnesses of dimension -1 peeled in cut order, polygon "
    << cert.per_polygon.size() << " contains its witness and is padded to dimension >= 0";
  return s.str();
}

}  // namespace

FiniteCertificate finite_certificate(const Dissection& dis, std::int64_t n, const CertificateOptions& options) {
  if (n < 1) throw Error(ErrorKind::OutOfRange, "scale n must be positive");
  if (options.directions.empty()) throw Error(ErrorKind::OutOfRange, "at least one line direction is required");
  require_valid(dis);

  FiniteCertificate cert;
  cert.dissection_name = dis.name;
  cert.n = n;
  cert.degree = n;
  cert.target = certified_bound(dis);
  cert.oracle = options.oracle;
  cert.seed = options.seed;
  if (options.oracle == OracleMode::Modular) cert.prime = options.prime;
  cert.directions = options.directions;

  const auto pieces = scaled_pieces(dis, n);
  const Rational scaled_target = Rational(static_cast<long>(n)) * cert.target;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const LatticeSet& piece = pieces[i];
    if (piece.empty()) {
      throw Error(ErrorKind::EmptyPolygonAtScale,
                  polygon_label(i + 1) + " has no lattice points at scale " + std::to_string(n));
    }
    PolygonCertificate pc;
    pc.id = i + 1;
    pc.is_final = i + 1 == pieces.size();
    pc.lattice_count = static_cast<std::int64_t>(piece.size());

    const Direction* best_direction = &options.directions.front();
    for (const auto& d : options.directions) {
      pc.multiplicity = std::max(pc.multiplicity, max_parallel_witness(column_profile(piece, d)));
    }
    for (const auto& d : options.directions) {
      if (max_parallel_witness(column_profile(piece, d)) == pc.multiplicity) {
        best_direction = &d;
        break;
      }
    }
    pc.witness = select_witness_subset(piece, *best_direction, pc.multiplicity);

    const MultiplicitySpec single{{pc.multiplicity}};
    if (options.oracle == OracleMode::Exact) {
      pc.oracle = system_dimension_exact(pc.witness.subset, single, GenericPointSet::seeded(1, options.seed),
                                         options.max_cells);
    } else if (options.oracle == OracleMode::Modular) {
      pc.oracle = system_dimension_modp(pc.witness.subset, single, options.seed, options.prime);
    }
    if (scaled_target.sign() > 0) {
      pc.deviation = (Rational(static_cast<long>(pc.multiplicity)) - scaled_target).abs() / scaled_target;
    }
    pc.leaf_expected_dimension =
        pc.is_final ? expected_dimension(pc.lattice_count, single)
                    : expected_dimension(static_cast<std::int64_t>(pc.witness.subset.size()), single);
    cert.per_polygon.push_back(std::move(pc));
  }
  cert.min_ratio = Rational(static_cast<long>(cert.min_multiplicity()), static_cast<long>(n));
  cert.statement = certificate_statement(cert);
  return cert;
}

std::vector<std::string> check_certificate(const Dissection& dis, const FiniteCertificate& cert) {
  std::vector<std::string> problems;
  if (cert.per_polygon.size() != dis.polygon_count()) {
    problems.push_back("certificate covers " + std::to_string(cert.per_polygon.size()) + " polygons, dissection has " +
                       std::to_string(dis.polygon_count()));
    return problems;
  }
  const auto pieces = scaled_pieces(dis, cert.n);
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const auto& pc = cert.per_polygon[i];
    const std::string label = polygon_label(i + 1);
    if (pc.id != i + 1) problems.push_back(label + ": out of cut order");
    if (pc.lattice_count != static_cast<std::int64_t>(pieces[i].size())) problems.push_back(label + ": lattice count");
    if (pc.witness.m != pc.multiplicity) problems.push_back(label + ": witness size differs from multiplicity");
    if (!witness_is_valid(pc.witness, pieces[i])) problems.push_back(label + ": witness does not validate");
    if (pc.oracle && !pc.oracle->non_special) problems.push_back(label + ": oracle reports the witness system special");
    if (!pc.is_final && pc.leaf_expected_dimension != -1) problems.push_back(label + ": leaf dimension is not -1");
    if (pc.is_final && pc.leaf_expected_dimension < 0) {
      problems.push_back(label + ": final leaf has expected dimension < 0 before padding");
    }
    if (pc.is_final != (i + 1 == pieces.size())) problems.push_back(label + ": final flag misplaced");
  }
  if (cert.min_ratio != Rational(static_cast<long>(cert.min_multiplicity()), static_cast<long>(cert.n))) {
    problems.push_back("min_ratio inconsistent with the multiplicities");
  }
  return problems;
}

CertificateBound bound_from_certificate(const FiniteCertificate& cert) {
  const std::int64_t m = cert.min_multiplicity();
  return CertificateBound{cert.n, m, Rational(static_cast<long>(m), static_cast<long>(cert.n)), {cert.n, m - 1}};
}

bool EcklSequenceReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](bool b) { return b; });
}

EcklSequenceReport eckl_sequence_check(const std::vector<std::pair<std::int64_t, std::int64_t>>& pairs, std::size_t r) {
  if (pairs.empty()) throw Error(ErrorKind::OutOfRange, "need at least one (d, m) pair");
  if (r < 1) throw Error(ErrorKind::OutOfRange, "r must be positive");
  EcklSequenceReport report;
  report.r = r;
  report.pairs = pairs;
  if (r <= 9) report.warnings.push_back("the sequence criterion is stated for r > 9; r = " + std::to_string(r));
  for (const auto& [d, m] : pairs) {
    if (d < 1 || m < 1) throw Error(ErrorKind::OutOfRange, "pairs need d >= 1 and m >= 1");
    const std::int64_t dim = expected_dimension_for_degree(d, uniform_multiplicities(m + 1, r));
    report.expected_dimensions.push_back(dim);
    report.checks.push_back(dim >= 0);
    report.ratios.push_back(Rational(static_cast<long>(d * d), static_cast<long>(m * m) * static_cast<long>(r)));
  }
  report.limit_estimate = Rational(static_cast<long>(pairs.back().second), static_cast<long>(pairs.back().first));
  if (report.ratios.back() < Rational(1)) {
    report.warnings.push_back("d^2/(m^2 r) = " + report.ratios.back().str() + " is below 1");
  }
  return report;
}

const char* to_string(Comparison c) {
  switch (c) {
    case Comparison::Below: return "below";
    case Comparison::Equal: return "equal";
    case Comparison::Above: return "above";
  }
  return "below";
}

NagataReport nagata_report(std::size_t r, const Rational& bound) {
  if (r < 1) throw Error(ErrorKind::OutOfRange, "r must be positive");
  if (bound.sign() <= 0) throw Error(ErrorKind::OutOfRange, "bound must be positive");
  NagataReport report;
  report.r = r;
  report.bound = bound;
  report.nagata_target = ScaledRoot::sqrt_of(Rational(1, static_cast<long>(r)));
  const Rational lhs = bound * bound * Rational(static_cast<long>(r));
  report.comparison = lhs < Rational(1) ? Comparison::Below : (lhs == Rational(1) ? Comparison::Equal : Comparison::Above);
  report.nef_statement = "H - " + bound.str() + " * (E_1 + ... + E_" + std::to_string(r) + ") is nef on X = Bl_" +
                         std::to_string(r) + "(P^2)";
  return report;
}

}  // namespace seshadri
