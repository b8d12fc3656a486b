#include "seshadri/serialize.hpp"

#include "seshadri/error.hpp"

namespace seshadri {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorKind::Parse, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(std::string("missing field '") + key + "'");
  return j.at(key);
}

const json& array_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_array()) fail(std::string("field '") + key + "' must be an array");
  return v;
}

std::int64_t integer(const json& j, const char* what) {
  if (!j.is_number_integer()) fail(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

std::uint64_t unsigned_integer(const json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
    fail(std::string(what) + " must be a nonnegative integer");
  }
  return j.get<std::uint64_t>();
}

json direction_to_json(const Direction& d) { return json::array({d.dx(), d.dy()}); }

Direction direction_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) fail("direction must be [dx, dy]");
  return Direction(integer(j[0], "dx"), integer(j[1], "dy"));
}

json witness_to_json(const WitnessSelection& w) {
  json cols = json::array();
  for (const auto& c : w.assignment) cols.push_back({{"line", c.line}, {"size", c.size}});
  return {{"m", w.m}, {"direction", direction_to_json(w.direction)}, {"assignment", cols}, {"subset", to_json(w.subset)}};
}

WitnessSelection witness_from_json(const json& j) {
  WitnessSelection w;
  w.m = integer(field(j, "m"), "m");
  w.direction = direction_from_json(field(j, "direction"));
  for (const auto& c : array_field(j, "assignment")) {
    w.assignment.push_back({integer(field(c, "line"), "line"), integer(field(c, "size"), "size")});
  }
  w.subset = lattice_from_json(field(j, "subset"));
  return w;
}

}  // namespace

json to_json(const Rational& q) { return q.str(); }

Rational rational_from_json(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<std::int64_t>()));
  fail("rational must be a string \"p/q\" or an integer");
}

json to_json(const Point& p) { return json::array({to_json(p.x), to_json(p.y)}); }

Point point_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) fail("point must be a two-element array");
  return Point{rational_from_json(j[0]), rational_from_json(j[1])};
}

json to_json(const ConvexPolygon& polygon) {
  json out = json::array();
  for (const auto& v : polygon.vertices()) out.push_back(to_json(v));
  return out;
}

ConvexPolygon polygon_from_json(const json& j) {
  if (!j.is_array()) fail("polygon must be an array of points");
  std::vector<Point> pts;
  for (const auto& p : j) pts.push_back(point_from_json(p));
  if (pts.size() < 3) fail("polygon needs at least three points");
  ConvexPolygon poly = make_polygon(pts);
  if (poly.size() != pts.size()) fail("polygon vertices are not in strictly convex position");
  return poly;
}

json to_json(const AffineForm& form) {
  return {{"r0", to_json(form.r0())}, {"r1", to_json(form.r1())}, {"r2", to_json(form.r2())}};
}

AffineForm affine_from_json(const json& j) {
  return AffineForm(rational_from_json(field(j, "r0")), rational_from_json(field(j, "r1")),
                    rational_from_json(field(j, "r2")));
}

json to_json(const PiecewiseLinear& f) {
  json ts = json::array(), vs = json::array();
  for (const auto& t : f.breakpoints()) ts.push_back(to_json(t));
  for (const auto& v : f.values()) vs.push_back(to_json(v));
  return {{"breakpoints", ts}, {"values", vs}};
}

PiecewiseLinear piecewise_from_json(const json& j) {
  std::vector<Rational> ts, vs;
  for (const auto& t : array_field(j, "breakpoints")) ts.push_back(rational_from_json(t));
  for (const auto& v : array_field(j, "values")) vs.push_back(rational_from_json(v));
  return PiecewiseLinear(std::move(ts), std::move(vs));
}

json to_json(const LatticeSet& set) {
  json out = json::array();
  for (const auto& p : set) out.push_back(json::array({p.alpha, p.beta}));
  return out;
}

LatticeSet lattice_from_json(const json& j) {
  if (!j.is_array()) fail("lattice set must be an array of [alpha, beta] pairs");
  std::vector<LatticePoint> pts;
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != 2) fail("lattice point must be [alpha, beta]");
    pts.push_back({integer(p[0], "alpha"), integer(p[1], "beta")});
  }
  const std::size_t given = pts.size();
  LatticeSet set(std::move(pts));
  if (set.size() != given) fail("lattice set contains duplicates");
  return set;
}

json to_json(const Dissection& dis) {
  json steps = json::array();
  for (const auto& s : dis.steps) steps.push_back({{"polygon", to_json(s.peeled)}, {"cut", to_json(s.cut)}});
  return {{"name", dis.name}, {"region", to_json(dis.region)}, {"steps", steps}, {"final", to_json(dis.final_polygon)}};
}

Dissection dissection_from_json(const json& j) {
  const json& name = field(j, "name");
  if (!name.is_string()) fail("name must be a string");
  std::vector<CutStep> steps;
  for (const auto& s : array_field(j, "steps")) {
    steps.push_back(CutStep{affine_from_json(field(s, "cut")), polygon_from_json(field(s, "polygon"))});
  }
  return Dissection{name.get<std::string>(), polygon_from_json(field(j, "region")), std::move(steps),
                    polygon_from_json(field(j, "final"))};
}

json to_json(const OracleVerdict& v) {
  json out{{"actual_dimension", v.actual_dimension},
           {"expected_dimension", v.expected_dimension},
           {"non_special", v.non_special},
           {"method", to_string(v.method)},
           {"prime", nullptr},
           {"seed", nullptr},
           {"caveat", nullptr}};
  if (v.prime) out["prime"] = *v.prime;
  if (v.seed) out["seed"] = *v.seed;
  if (v.caveat) out["caveat"] = *v.caveat;
  return out;
}

OracleVerdict verdict_from_json(const json& j) {
  OracleVerdict v;
  v.actual_dimension = integer(field(j, "actual_dimension"), "actual_dimension");
  v.expected_dimension = integer(field(j, "expected_dimension"), "expected_dimension");
  v.non_special = field(j, "non_special").get<bool>();
  const auto method = field(j, "method").get<std::string>();
  if (method == "exact-rational") {
    v.method = OracleMethod::ExactRational;
  } else if (method == "modular") {
    v.method = OracleMethod::Modular;
  } else {
    fail("unknown oracle method '" + method + "'");
  }
  if (j.contains("prime") && !j["prime"].is_null()) v.prime = unsigned_integer(j["prime"], "prime");
  if (j.contains("seed") && !j["seed"].is_null()) v.seed = unsigned_integer(j["seed"], "seed");
  if (j.contains("caveat") && !j["caveat"].is_null()) v.caveat = j["caveat"].get<std::string>();
  return v;
}

json to_json(const ValidationReport& report) {
  return {{"valid", report.valid()},
          {"area_sum", to_json(report.area_sum)},
          {"region_area", to_json(report.region_area)},
          {"violations", report.violations}};
}

json to_json(const AsymptoticReport& report) {
  json polys = json::array();
  for (const auto& p : report.per_polygon) {
    json axes = json::array();
    for (const auto& a : p.axes) {
      axes.push_back({{"axis", to_string(a.axis)},
                      {"width", to_json(a.width)},
                      {"sup_admissible", to_json(a.sup_admissible)},
                      {"max_chord", to_json(a.max_chord)},
                      {"pass", a.pass}});
    }
    polys.push_back({{"polygon", p.id},
                     {"axis", to_string(p.axis_used)},
                     {"width", to_json(p.width)},
                     {"sup_admissible", to_json(p.sup_admissible)},
                     {"max_chord", to_json(p.max_chord)},
                     {"pass", p.pass},
                     {"axes_tried", axes}});
  }
  return {{"m", to_json(report.m)}, {"overall", report.overall}, {"per_polygon", polys}};
}

json to_json(const NagataReport& report) {
  return {{"r", report.r},
          {"bound", to_json(report.bound)},
          {"nagata_target", report.nagata_target.str()},
          {"comparison", to_string(report.comparison)},
          {"bound_squared_times_r", to_json(report.bound * report.bound * Rational(static_cast<long>(report.r)))},
          {"nef_statement", report.nef_statement}};
}

json to_json(const EcklSequenceReport& report) {
  json rows = json::array();
  for (std::size_t i = 0; i < report.pairs.size(); ++i) {
    rows.push_back({{"d", report.pairs[i].first},
                    {"m", report.pairs[i].second},
                    {"expected_dimension", report.expected_dimensions[i]},
                    {"check", static_cast<bool>(report.checks[i])},
                    {"ratio", to_json(report.ratios[i])}});
  }
  return {{"r", report.r}, {"pairs", rows}, {"limit_estimate", to_json(report.limit_estimate)},
          {"warnings", report.warnings}};
}

json to_json(const FiniteCertificate& cert) {
  json polys = json::array();
  for (const auto& p : cert.per_polygon) {
    polys.push_back({{"polygon", p.id},
                     {"final", p.is_final},
                     {"lattice_count", p.lattice_count},
                     {"multiplicity", p.multiplicity},
                     {"witness", witness_to_json(p.witness)},
                     {"oracle", p.oracle ? to_json(*p.oracle) : json(nullptr)},
                     {"deviation", to_json(p.deviation)},
                     {"leaf_expected_dimension", p.leaf_expected_dimension}});
  }
  json dirs = json::array();
  for (const auto& d : cert.directions) dirs.push_back(direction_to_json(d));
  return {{"tool_version", kToolVersion},
          {"dissection", cert.dissection_name},
          {"n", cert.n},
          {"degree", cert.degree},
          {"target", to_json(cert.target)},
          {"min_ratio", to_json(cert.min_ratio)},
          {"oracle_mode", to_string(cert.oracle)},
          {"seed", cert.seed},
          {"prime", cert.prime ? json(*cert.prime) : json(nullptr)},
          {"directions", dirs},
          {"per_polygon", polys},
          {"statement", cert.statement}};
}

FiniteCertificate certificate_from_json(const json& j) {
  FiniteCertificate cert;
  cert.dissection_name = field(j, "dissection").get<std::string>();
  cert.n = integer(field(j, "n"), "n");
  cert.degree = integer(field(j, "degree"), "degree");
  cert.target = rational_from_json(field(j, "target"));
  cert.min_ratio = rational_from_json(field(j, "min_ratio"));
  cert.oracle = parse_oracle_mode(field(j, "oracle_mode").get<std::string>());
  cert.seed = unsigned_integer(field(j, "seed"), "seed");
  if (!field(j, "prime").is_null()) cert.prime = unsigned_integer(j["prime"], "prime");
  for (const auto& d : array_field(j, "directions")) cert.directions.push_back(direction_from_json(d));
  for (const auto& p : array_field(j, "per_polygon")) {
    PolygonCertificate pc;
    pc.id = static_cast<std::size_t>(integer(field(p, "polygon"), "polygon"));
    pc.is_final = field(p, "final").get<bool>();
    pc.lattice_count = integer(field(p, "lattice_count"), "lattice_count");
    pc.multiplicity = integer(field(p, "multiplicity"), "multiplicity");
    pc.witness = witness_from_json(field(p, "witness"));
    if (!field(p, "oracle").is_null()) pc.oracle = verdict_from_json(p["oracle"]);
    pc.deviation = rational_from_json(field(p, "deviation"));
    pc.leaf_expected_dimension = integer(field(p, "leaf_expected_dimension"), "leaf_expected_dimension");
    cert.per_polygon.push_back(std::move(pc));
  }
  cert.statement = field(j, "statement").get<std::string>();
  return cert;
}

SystemDescription system_from_json(const json& j) {
  SystemDescription sys;
  sys.monomials = lattice_from_json(field(j, "D"));
  std::vector<std::int64_t> ms;
  for (const auto& m : array_field(j, "multiplicities")) ms.push_back(integer(m, "multiplicity"));
  sys.multiplicities = MultiplicitySpec(std::move(ms));
  if (j.contains("points") && !j["points"].is_null()) {
    std::vector<Point> pts;
    for (const auto& p : j["points"]) pts.push_back(point_from_json(p));
    sys.points = std::move(pts);
  }
  if (j.contains("seed")) sys.seed = unsigned_integer(j["seed"], "seed");
  return sys;
}

json to_json(const SystemDescription& sys) {
  json ms = sys.multiplicities.values();
  json out{{"D", to_json(sys.monomials)}, {"multiplicities", ms}, {"seed", sys.seed}};
  if (sys.points) {
    json pts = json::array();
    for (const auto& p : *sys.points) pts.push_back(to_json(p));
    out["points"] = pts;
  }
  return out;
}

json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace seshadri
