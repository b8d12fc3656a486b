#pragma once

#include <string>

#include "seshadri/certify.hpp"

namespace seshadri {

struct RenderSpec {
  std::string output_path;
  int size = 600;  // canvas edge in px, at least 100
  std::string stroke = "#222222";
  std::string fill = "#dce6f2";
  bool labels = true;
};

inline constexpr int kMinCanvas = 100;

// Deterministic SVG of the dissection: one <path class="polygon"> per polygon, one
// dashed <line class="cut"> per cut (the edge of the peeled polygon lying on the cut
// line), and a <text class="label"> for every named point of the built-in table
// lying on some polygon boundary. Geometry is printed with 6 decimals; labels carry
// the exact coordinates. Throws InvalidDissection, or OutOfRange for a small canvas.
std::string render_svg(const Dissection& dissection, const RenderSpec& spec);

}  // namespace seshadri
