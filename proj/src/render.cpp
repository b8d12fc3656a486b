#include "seshadri/render.hpp"

#include <sstream>

#include "seshadri/error.hpp"

namespace seshadri {

namespace {

constexpr int kDecimals = 6;

struct Viewport {
  Interval xs;
  Interval ys;
  Rational scale;
  Rational margin;

  std::string x(const Rational& v) const { return (margin + (v - xs.lo) * scale).decimal(kDecimals); }
  std::string y(const Rational& v) const { return (margin + (ys.hi - v) * scale).decimal(kDecimals); }
};

bool on_boundary(const ConvexPolygon& poly, const Point& p) {
  if (!poly.contains(p)) return false;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const auto [a, b] = poly.edge(i);
    if (orient(a, b, p).sign() == 0) return true;
  }
  return false;
}

}  // namespace

std::string render_svg(const Dissection& dis, const RenderSpec& spec) {
  if (spec.size < kMinCanvas) {
    throw Error(ErrorKind::OutOfRange, "canvas must be at least " + std::to_string(kMinCanvas) + " px");
  }
  const auto report = validate_dissection(dis);
  if (!report.valid()) throw Error(ErrorKind::InvalidDissection, report.violations.front());

  const Rational size(spec.size);
  const Rational margin = size / Rational(12);
  const Interval xs = x_projection(dis.region, Axis::X);
  const Interval ys = x_projection(dis.region, Axis::Y);
  const Rational extent = max(xs.length(), ys.length());
  const Viewport vp{xs, ys, (size - Rational(2) * margin) / extent, margin};

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << spec.size << "\" height=\"" << spec.size
      << "\" viewBox=\"0 0 " << spec.size << " " << spec.size << "\">\n";
  svg << "<title>" << dis.name << "</title>\n";

  for (std::size_t i = 0; i < dis.polygon_count(); ++i) {
    const auto& poly = dis.polygon(i);
    svg << "<path class=\"polygon\" id=\"P" << i + 1 << "\" d=\"";
    for (std::size_t k = 0; k < poly.size(); ++k) {
      const Point& v = poly.vertices()[k];
      svg << (k ? " L " : "M ") << vp.x(v.x) << " " << vp.y(v.y);
    }
    svg << " Z\" fill=\"" << spec.fill << "\" stroke=\"" << spec.stroke << "\" stroke-width=\"1\"/>\n";
  }

  for (std::size_t k = 0; k < dis.steps.size(); ++k) {
    const auto& step = dis.steps[k];
    for (std::size_t e = 0; e < step.peeled.size(); ++e) {
      const auto [a, b] = step.peeled.edge(e);
      if (step.cut(a).sign() != 0 || step.cut(b).sign() != 0) continue;
      svg << "<line class=\"cut\" data-step=\"" << k + 1 << "\" x1=\"" << vp.x(a.x) << "\" y1=\"" << vp.y(a.y)
          << "\" x2=\"" << vp.x(b.x) << "\" y2=\"" << vp.y(b.y) << "\" stroke=\"" << spec.stroke
          << "\" stroke-dasharray=\"6 4\"/>\n";
      break;
    }
  }

  if (spec.labels) {
    for (const auto& named : eckl10_points()) {
      bool present = false;
      for (std::size_t i = 0; i < dis.polygon_count() && !present; ++i) present = on_boundary(dis.polygon(i), named.point);
      if (!present) continue;
      svg << "<text class=\"label\" x=\"" << vp.x(named.point.x) << "\" y=\"" << vp.y(named.point.y)
          << "\" data-x=\"" << named.point.x.str() << "\" data-y=\"" << named.point.y.str()
          << "\" font-size=\"12\" dx=\"3\" dy=\"-3\">" << named.name << "</text>\n";
    }
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace seshadri
