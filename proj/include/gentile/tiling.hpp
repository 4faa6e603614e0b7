#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gentile/geometry.hpp"

namespace gt {

// A master triangle (vertices A, B, C) and the tiles subdividing it. Tiles
// produced by the generators list their vertices in the order corresponding
// to A, B, C under the master-to-tile similarity.
struct Tiling {
  Rational radicand{1};
  Tri master;
  std::vector<Tri> tiles;

  std::size_t size() const { return tiles.size(); }
  // Sorts tiles by their sorted vertex lists (the canonical file order).
  void canonicalize();
  friend bool operator==(const Tiling& a, const Tiling& b) {
    return a.radicand == b.radicand && a.master == b.master && a.tiles == b.tiles;
  }
};

// Same set of tiles (as unordered vertex sets) over the same master.
bool same_tile_set(const Tiling& a, const Tiling& b);

enum class ViolationKind {
  DegenerateMaster,
  DegenerateTile,
  NotSimilar,
  OutsideMaster,
  Overlap,
  AreaMismatch,
  Coverage,
  UnequalTileAreas,
};

const char* violation_name(ViolationKind k);

struct Violation {
  ViolationKind kind;
  int tile_a = -1;
  int tile_b = -1;
  int count = 1;  // how many tiles / pairs exhibit this class
};

struct ValidationReport {
  bool ok = true;
  int tile_count = 0;
  std::vector<Violation> violations;
  bool has(ViolationKind k) const;
};

ValidationReport validate_gentiling(const Tiling& t);
ValidationReport validate_reptiling(const Tiling& t);

enum class ShapeKind { Scalene, Isosceles, Equilateral };

// Angle classes of the master: scalene {alpha, beta, gamma} at A, B, C;
// isosceles {lambda (base), tau (top)}; equilateral {alpha}.
struct AngleClasses {
  ShapeKind shape = ShapeKind::Scalene;
  std::vector<std::string> labels;
  std::array<int, 3> of_master_vertex{};  // class index per master vertex
};

AngleClasses angle_classes(const Tri& master);
const char* shape_name(ShapeKind s);

enum class VertexClass { Master, Half, Full };
const char* vertex_class_name(VertexClass c);

struct GraphVertex {
  Point p;
  VertexClass cls = VertexClass::Full;
  bool hanging = false;
  bool on_master_side = false;  // interior of a master side
  int master_index = -1;        // 0..2 for master corners
  int edge_adjacency = 0;       // tiles having this vertex inside a side
  std::vector<int> zeta;        // count per angle class
};

struct TilingGraph {
  AngleClasses classes;
  std::vector<GraphVertex> vertices;           // sorted by (x, y)
  std::vector<std::pair<int, int>> edges;      // primitive segments, sorted
  std::vector<std::array<int, 3>> corner_vertex;  // per tile corner
  std::vector<std::array<int, 3>> corner_class;   // per tile corner
  std::vector<std::array<int, 3>> side_interior;  // vertices inside side opposite corner i
  int f = 0;
  int h = 0;
  int hanging_count() const;
  int find_vertex(const Point& p) const;
};

TilingGraph build_graph(const Tiling& t);
bool check_euler(int f, int h, int r);
bool check_euler(const TilingGraph& g, int r);

struct CornerReport {
  enum Kind { Neither, Fan, Cap } kind = Neither;
  int k = 0;  // tiles touching the master corner
  std::string str() const;
};

std::array<CornerReport, 3> detect_caps_fans(const Tiling& t, const TilingGraph& g);

// Finest grid n (the n^2 grid of the master) underlying the tiling, if every
// tile is a union of cells of some grid.
std::optional<mpz_class> trivial_grid(const Tiling& t);
bool is_trivial_tiling(const Tiling& t);

struct RatioPair {
  int i = 0, j = 0;  // sides, indexed by opposite vertex
  bool rational = false;
  Rational ratio;    // shorter / longer when rational
};

struct RatioReport {
  std::array<RatioPair, 3> pairs;
  bool triangle_rational = false;  // some pair rational with ratio != 1
};

RatioReport side_ratio_rationality(const Tri& master);
inline RatioReport side_ratio_rationality(const Tiling& t) { return side_ratio_rationality(t.master); }

struct AuditFailure {
  int vertex = -1;
  std::string where;  // "full", "boundary", "master-total"
  std::vector<int> found;
  std::vector<int> expected;
};

struct AuditReport {
  bool declined = false;
  std::string reason;
  bool ok = false;
  ShapeKind shape = ShapeKind::Scalene;
  std::vector<AuditFailure> failures;
};

AuditReport audit_vertex_degrees(const Tiling& t, const TilingGraph& g);

}  // namespace gt
