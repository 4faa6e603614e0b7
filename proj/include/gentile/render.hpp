#pragma once

#include <string>

#include "gentile/sfc.hpp"
#include "gentile/tiling.hpp"

namespace gt {

struct RenderOptions {
  int width_px = 600;
  std::string stroke = "#000000";
  std::string fill = "#f4f1e8";
  std::string curve_stroke = "#c0392b";
  double stroke_width = 1.0;
  bool show_order_curve = true;
  bool show_R_glyphs = false;
  int depth = 1;
};

// SVG 1.1 documents. Coordinates are printed with 12 significant digits;
// output bytes depend only on the input and the options.
std::string render_tiling(const Tiling& t, const RenderOptions& opts);
std::string render_curve(const CurveRule& rule, const RenderOptions& opts);

}  // namespace gt
