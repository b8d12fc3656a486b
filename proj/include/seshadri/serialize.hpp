#pragma once

#include <string>

#include "json.hpp"
#include "seshadri/certify.hpp"
#include "seshadri/oracle.hpp"
#include "seshadri/piecewise_linear.hpp"

namespace seshadri {

using json = nlohmann::json;

inline constexpr const char* kToolVersion = "1.0.0";

// Rationals travel as strings "p/q" (or "p"), points as [x, y], polygons as arrays
// of points, lattice sets as sorted [alpha, beta] integer pairs. All readers throw
// Error(Parse) on malformed input.

json to_json(const Rational& q);
Rational rational_from_json(const json& j);

json to_json(const Point& p);
Point point_from_json(const json& j);

json to_json(const ConvexPolygon& polygon);
ConvexPolygon polygon_from_json(const json& j);

json to_json(const AffineForm& form);
AffineForm affine_from_json(const json& j);

json to_json(const PiecewiseLinear& f);
PiecewiseLinear piecewise_from_json(const json& j);

json to_json(const LatticeSet& set);
LatticeSet lattice_from_json(const json& j);

// {"name", "region", "steps": [{"polygon", "cut": {"r0", "r1", "r2"}}], "final"}
json to_json(const Dissection& dis);
Dissection dissection_from_json(const json& j);

json to_json(const OracleVerdict& v);
OracleVerdict verdict_from_json(const json& j);

json to_json(const ValidationReport& report);
json to_json(const AsymptoticReport& report);
json to_json(const NagataReport& report);
json to_json(const EcklSequenceReport& report);

// Every FiniteCertificate field plus the tool version.
json to_json(const FiniteCertificate& cert);
FiniteCertificate certificate_from_json(const json& j);

// {"D": [[a, b], ...], "multiplicities": [m, ...], "points": optional [[x, y], ...], "seed": int}
struct SystemDescription {
  LatticeSet monomials;
  MultiplicitySpec multiplicities;
  std::optional<std::vector<Point>> points;
  std::uint64_t seed = 0;
};

SystemDescription system_from_json(const json& j);
json to_json(const SystemDescription& sys);

json parse_json_text(const std::string& text);

}  // namespace seshadri
