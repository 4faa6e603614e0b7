#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gentile/tiling.hpp"

namespace gt {

struct CurveChild {
  AffineSimilarity map;  // master -> child tile
  bool reversed = false;
  // Interval length of this child. Defaults to the child's area fraction
  // |det(map)|, which must then be rational.
  std::optional<Rational> weight;
};

// A self-similar traversal order: the master is cut into the children's
// images, visited in list order, each traversed by a copy of the whole curve
// (backwards when reversed).
struct CurveRule {
  std::string name;
  Rational radicand{1};
  Tri master;
  std::vector<CurveChild> children;

  std::size_t size() const { return children.size(); }
  Rational area_fraction(std::size_t i) const;
  Rational weight(std::size_t i) const;
  // a_0 = 0 < a_1 < ... < a_r: child i covers [a_i, a_{i+1}).
  std::vector<Rational> breakpoints() const;
  // The depth-1 tiling formed by the children's images.
  Tiling tiling() const;
};

// Builds a rule from tiles listed with vertices corresponding to the master's.
CurveRule rule_from_tiles(const Tri& master, const std::vector<Tri>& tiles, const std::vector<bool>& reversed,
                          const std::string& name = "");

// The rule of the reversed curve: children in the opposite order, flags kept.
CurveRule reversed_rule(const CurveRule& rule);

struct EntryExit {
  Point entry, exit;
};

EntryExit solve_entry_exit(const CurveRule& rule);

struct ContinuityReport {
  bool ok = true;
  std::vector<int> failing;  // junction j sits between children j and j+1 (1-based)
};

ContinuityReport check_continuity(const CurveRule& rule);

struct FaceContinuityReport {
  bool ok = true;
  int level = 0;  // first failing level
  int index = -1; // tiles index and index+1 at that level fail to share a segment
  int checked_depth = 0;
};

FaceContinuityReport check_face_continuity(const CurveRule& rule, int depth);

bool check_measure(const CurveRule& rule);

struct ExpandedTile {
  AffineSimilarity map;  // master -> tile
  bool reversed = false; // traversed backwards
  Tri tile;
  std::vector<int> path; // child index per level
};

// Depth-k tiles in traversal order (r^k of them).
std::vector<ExpandedTile> expand(const CurveRule& rule, int depth);

struct EvalResult {
  ExpandedTile tile;
  Point point;  // where the traversal enters that tile
};

EvalResult evaluate(const CurveRule& rule, const Rational& t, int depth);

// Entry of the first depth-k tile followed by the exit of every tile.
std::vector<Point> polyline(const CurveRule& rule, int depth);
// The polyline's distinct points, in order of first appearance.
std::vector<Point> junction_points(const CurveRule& rule, int depth);

// "sierpinski", "rep3", "kaiser5", "polya". Pólya takes a right-angled master
// (default: legs 1 and 2) and relabels it so the right angle is at C.
CurveRule builtin_curve(const std::string& name, const std::optional<Tri>& master = std::nullopt);
std::vector<std::string> builtin_curve_names();

}  // namespace gt
