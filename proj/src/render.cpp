#include "gentile/render.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <utility>
#include <vector>

namespace gt {

namespace {

using DPt = std::pair<double, double>;

std::string num(double v) {
  if (v == 0) v = 0;  // no "-0"
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

DPt to_d(const Point& p) { return {p.x.to_double(), p.y.to_double()}; }

class Canvas {
 public:
  Canvas(const Tri& master, int width) {
    if (width <= 0) throw Error(Errc::InvalidArgument, "width must be positive");
    double x0 = 1e300, x1 = -1e300, y0 = 1e300, y1 = -1e300;
    for (const auto& p : master) {
      auto [x, y] = to_d(p);
      x0 = std::min(x0, x);
      x1 = std::max(x1, x);
      y0 = std::min(y0, y);
      y1 = std::max(y1, y);
    }
    const double margin = 10;
    scale_ = (width - 2 * margin) / std::max(x1 - x0, 1e-300);
    x0_ = x0;
    y1_ = y1;
    margin_ = margin;
    width_ = width;
    height_ = static_cast<int>((y1 - y0) * scale_ + 2 * margin + 0.5);
  }

  std::string xy(const DPt& p) const {
    return num(margin_ + (p.first - x0_) * scale_) + "," + num(margin_ + (y1_ - p.second) * scale_);
  }

  std::string header() const {
    return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
           "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           std::to_string(width_) + "\" height=\"" + std::to_string(height_) + "\" viewBox=\"0 0 " +
           std::to_string(width_) + " " + std::to_string(height_) + "\">\n";
  }

 private:
  double scale_ = 1, x0_ = 0, y1_ = 0, margin_ = 0;
  int width_ = 0, height_ = 0;
};

std::string polygon(const Canvas& c, const Tri& t, const RenderOptions& o) {
  std::string s = "<polygon points=\"";
  for (int i = 0; i < 3; ++i) s += (i ? " " : "") + c.xy(to_d(t[i]));
  s += "\" fill=\"" + o.fill + "\" stroke=\"" + o.stroke + "\" stroke-width=\"" + num(o.stroke_width) +
       "\" stroke-linejoin=\"round\"/>\n";
  return s;
}

std::string outline(const Canvas& c, const Tri& t, const RenderOptions& o) {
  std::string s = "<path d=\"M" + c.xy(to_d(t[0])) + " L" + c.xy(to_d(t[1])) + " L" + c.xy(to_d(t[2])) + " Z\"";
  s += " fill=\"none\" stroke=\"" + o.stroke + "\" stroke-width=\"" + num(2 * o.stroke_width) + "\"/>\n";
  return s;
}

// Strokes of the letter R in a unit box, drawn in the master through the
// affine frame A + s (B - A) + t (C - A).
const std::vector<std::vector<DPt>> kGlyph = {
    {{0, 0}, {0, 1}, {0.6, 1}, {0.75, 0.85}, {0.75, 0.7}, {0.6, 0.55}, {0, 0.55}},
    {{0.3, 0.55}, {0.75, 0}},
};

std::string glyphs(const Canvas& c, const std::vector<ExpandedTile>& tiles, const Tri& master, const RenderOptions& o) {
  DPt A = to_d(master[0]), B = to_d(master[1]), C = to_d(master[2]);
  auto in_master = [&](const DPt& g) {
    double s = 0.26 + 0.2 * g.first, t = 0.26 + 0.2 * g.second;
    return DPt{A.first + s * (B.first - A.first) + t * (C.first - A.first),
               A.second + s * (B.second - A.second) + t * (C.second - A.second)};
  };
  std::string out = "<g fill=\"none\" stroke=\"" + o.stroke + "\" stroke-width=\"" + num(o.stroke_width) + "\">\n";
  for (const auto& t : tiles) {
    const auto& m = t.map;
    double a = m.m00.to_double(), b = m.m01.to_double(), cc = m.m10.to_double(), d = m.m11.to_double();
    double tx = m.tx.to_double(), ty = m.ty.to_double();
    for (const auto& stroke : kGlyph) {
      out += "<polyline points=\"";
      bool first = true;
      for (const auto& g : stroke) {
        DPt p = in_master(g);
        DPt q{a * p.first + b * p.second + tx, cc * p.first + d * p.second + ty};
        out += (first ? "" : " ") + c.xy(q);
        first = false;
      }
      out += "\"/>\n";
    }
  }
  out += "</g>\n";
  return out;
}

}  // namespace

std::string render_tiling(const Tiling& t, const RenderOptions& opts) {
  Canvas c(t.master, opts.width_px);
  std::string s = c.header();
  for (const auto& tile : t.tiles) s += polygon(c, tile, opts);
  s += outline(c, t.master, opts);
  s += "</svg>\n";
  return s;
}

std::string render_curve(const CurveRule& rule, const RenderOptions& opts) {
  Canvas c(rule.master, opts.width_px);
  auto tiles = expand(rule, opts.depth);
  std::string s = c.header();
  s += "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" markerWidth=\"6\" "
       "markerHeight=\"6\" orient=\"auto\"><path d=\"M0,0 L10,5 L0,10 Z\" fill=\"" +
       opts.curve_stroke + "\"/></marker></defs>\n";
  for (const auto& t : tiles) s += polygon(c, t.tile, opts);
  s += outline(c, rule.master, opts);
  if (opts.show_R_glyphs) s += glyphs(c, tiles, rule.master, opts);
  if (opts.show_order_curve) {
    s += "<polyline points=\"";
    bool first = true;
    for (const auto& p : polyline(rule, opts.depth)) {
      s += (first ? "" : " ") + c.xy(to_d(p));
      first = false;
    }
    s += "\" fill=\"none\" stroke=\"" + opts.curve_stroke + "\" stroke-width=\"" + num(1.5 * opts.stroke_width) +
         "\" marker-end=\"url(#arrow)\"/>\n";
  }
  s += "</svg>\n";
  return s;
}

}  // namespace gt
