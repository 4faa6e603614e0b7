#include "gentile/tiling.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace gt {

namespace {

struct Box {
  QuadScalar x0, x1, y0, y1;
};

Box box_of(const Tri& t) {
  Box b{t[0].x, t[0].x, t[0].y, t[0].y};
  for (int i = 1; i < 3; ++i) {
    if (t[i].x < b.x0) b.x0 = t[i].x;
    if (t[i].x > b.x1) b.x1 = t[i].x;
    if (t[i].y < b.y0) b.y0 = t[i].y;
    if (t[i].y > b.y1) b.y1 = t[i].y;
  }
  return b;
}

QuadScalar abs_area2(const Tri& t) {
  QuadScalar a = triangle_area2(t);
  return a.sign() < 0 ? -a : a;
}

void add_violation(ValidationReport& r, ViolationKind k, int a, int b, int count) {
  r.ok = false;
  r.violations.push_back({k, a, b, count});
}

}  // namespace

void Tiling::canonicalize() {
  std::vector<std::pair<Tri, Tri>> keyed;
  keyed.reserve(tiles.size());
  for (auto& t : tiles) keyed.emplace_back(sorted_vertices(t), t);
  std::stable_sort(keyed.begin(), keyed.end(),
                   [](const auto& a, const auto& b) { return compare_tris(a.first, b.first) < 0; });
  for (std::size_t i = 0; i < tiles.size(); ++i) tiles[i] = keyed[i].second;
}

bool same_tile_set(const Tiling& a, const Tiling& b) {
  if (a.tiles.size() != b.tiles.size()) return false;
  auto keys = [](const Tiling& t) {
    std::vector<Tri> k;
    for (const auto& x : t.tiles) k.push_back(sorted_vertices(x));
    std::sort(k.begin(), k.end(), [](const Tri& p, const Tri& q) { return compare_tris(p, q) < 0; });
    return k;
  };
  return keys(a) == keys(b);
}

const char* violation_name(ViolationKind k) {
  switch (k) {
    case ViolationKind::DegenerateMaster: return "DegenerateMaster";
    case ViolationKind::DegenerateTile: return "DegenerateTile";
    case ViolationKind::NotSimilar: return "NotSimilar";
    case ViolationKind::OutsideMaster: return "OutsideMaster";
    case ViolationKind::Overlap: return "Overlap";
    case ViolationKind::AreaMismatch: return "AreaMismatch";
    case ViolationKind::Coverage: return "Coverage";
    case ViolationKind::UnequalTileAreas: return "UnequalTileAreas";
  }
  return "?";
}

bool ValidationReport::has(ViolationKind k) const {
  return std::any_of(violations.begin(), violations.end(), [k](const Violation& v) { return v.kind == k; });
}

ValidationReport validate_gentiling(const Tiling& t) {
  ValidationReport r;
  r.tile_count = static_cast<int>(t.tiles.size());
  QuadScalar master_area = abs_area2(t.master);
  if (master_area.is_zero()) {
    add_violation(r, ViolationKind::DegenerateMaster, -1, -1, 1);
    return r;
  }
  const int n = static_cast<int>(t.tiles.size());

  int first_degenerate = -1, degenerate = 0;
  int first_dissimilar = -1, dissimilar = 0;
  int first_outside = -1, outside = 0;
  QuadScalar sum = 0;
  std::vector<char> usable(n, 1);
  for (int i = 0; i < n; ++i) {
    QuadScalar a = abs_area2(t.tiles[i]);
    sum += a;
    if (a.is_zero()) {
      if (first_degenerate < 0) first_degenerate = i;
      ++degenerate;
      usable[i] = 0;
      continue;
    }
    if (!similar(t.tiles[i], t.master)) {
      if (first_dissimilar < 0) first_dissimilar = i;
      ++dissimilar;
    }
    if (!triangle_in_triangle(t.tiles[i], t.master)) {
      if (first_outside < 0) first_outside = i;
      ++outside;
    }
  }
  if (degenerate) add_violation(r, ViolationKind::DegenerateTile, first_degenerate, -1, degenerate);
  if (dissimilar) add_violation(r, ViolationKind::NotSimilar, first_dissimilar, -1, dissimilar);
  if (outside) add_violation(r, ViolationKind::OutsideMaster, first_outside, -1, outside);

  // Sweep over x so that only tiles with overlapping x-ranges are compared.
  std::vector<Box> boxes;
  boxes.reserve(n);
  for (const auto& tile : t.tiles) boxes.push_back(box_of(tile));
  std::vector<int> order;
  for (int i = 0; i < n; ++i)
    if (usable[i]) order.push_back(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    int c = compare(boxes[a].x0, boxes[b].x0);
    return c != 0 ? c < 0 : a < b;
  });
  std::vector<int> active;
  std::pair<int, int> first_overlap{-1, -1};
  int overlaps = 0;
  for (int i : order) {
    active.erase(std::remove_if(active.begin(), active.end(), [&](int j) { return boxes[j].x1 <= boxes[i].x0; }),
                 active.end());
    for (int j : active) {
      if (boxes[j].y1 <= boxes[i].y0 || boxes[i].y1 <= boxes[j].y0) continue;
      if (interiors_intersect(t.tiles[i], t.tiles[j])) {
        std::pair<int, int> p{std::min(i, j), std::max(i, j)};
        if (first_overlap.first < 0 || p < first_overlap) first_overlap = p;
        ++overlaps;
      }
    }
    active.push_back(i);
  }
  if (overlaps) add_violation(r, ViolationKind::Overlap, first_overlap.first, first_overlap.second, overlaps);
  if (sum != master_area) {
    add_violation(r, ViolationKind::AreaMismatch, -1, -1, 1);
  } else if (overlaps || outside) {
    // Equal total area with overlapping or protruding tiles leaves a gap.
    add_violation(r, ViolationKind::Coverage, -1, -1, 1);
  }
  return r;
}

ValidationReport validate_reptiling(const Tiling& t) {
  ValidationReport r = validate_gentiling(t);
  if (t.tiles.empty()) return r;
  QuadScalar a0 = abs_area2(t.tiles[0]);
  int first = -1, count = 0;
  for (int i = 1; i < static_cast<int>(t.tiles.size()); ++i) {
    if (abs_area2(t.tiles[i]) != a0) {
      if (first < 0) first = i;
      ++count;
    }
  }
  if (count) add_violation(r, ViolationKind::UnequalTileAreas, 0, first, count);
  return r;
}

const char* shape_name(ShapeKind s) {
  switch (s) {
    case ShapeKind::Scalene: return "scalene";
    case ShapeKind::Isosceles: return "isosceles";
    case ShapeKind::Equilateral: return "equilateral";
  }
  return "?";
}

const char* vertex_class_name(VertexClass c) {
  switch (c) {
    case VertexClass::Master: return "master";
    case VertexClass::Half: return "half";
    case VertexClass::Full: return "full";
  }
  return "?";
}

AngleClasses angle_classes(const Tri& m) {
  AngleClasses ac;
  auto s = side_lengths2(m);
  bool e01 = s[0] == s[1], e02 = s[0] == s[2], e12 = s[1] == s[2];
  if (e01 && e02) {
    ac.shape = ShapeKind::Equilateral;
    ac.labels = {"alpha"};
    ac.of_master_vertex = {0, 0, 0};
  } else if (e01 || e02 || e12) {
    ac.shape = ShapeKind::Isosceles;
    ac.labels = {"lambda", "tau"};
    // Equal sides are opposite the equal (base) angles.
    int top = e01 ? 2 : (e02 ? 1 : 0);
    for (int i = 0; i < 3; ++i) ac.of_master_vertex[i] = i == top ? 1 : 0;
  } else {
    ac.shape = ShapeKind::Scalene;
    ac.labels = {"alpha", "beta", "gamma"};
    ac.of_master_vertex = {0, 1, 2};
  }
  return ac;
}

int TilingGraph::hanging_count() const {
  return static_cast<int>(std::count_if(vertices.begin(), vertices.end(), [](const GraphVertex& v) { return v.hanging; }));
}

int TilingGraph::find_vertex(const Point& p) const {
  int lo = 0, hi = static_cast<int>(vertices.size());
  while (lo < hi) {
    int mid = (lo + hi) / 2;
    int c = compare_points(vertices[mid].p, p);
    if (c == 0) return mid;
    if (c < 0)
      lo = mid + 1;
    else
      hi = mid;
  }
  return -1;
}

TilingGraph build_graph(const Tiling& t) {
  TilingGraph g;
  g.classes = angle_classes(t.master);
  const int n = static_cast<int>(t.tiles.size());

  std::vector<Point> pts;
  for (const auto& tile : t.tiles)
    for (const auto& p : tile) pts.push_back(p);
  for (const auto& p : t.master) pts.push_back(p);
  std::sort(pts.begin(), pts.end(), PointLess<QuadScalar>());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  g.vertices.resize(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    g.vertices[i].p = pts[i];
    g.vertices[i].zeta.assign(g.classes.labels.size(), 0);
  }
  for (int m = 0; m < 3; ++m) g.vertices[g.find_vertex(t.master[m])].master_index = m;
  for (auto& v : g.vertices) {
    if (v.master_index >= 0) continue;
    for (int s = 0; s < 3; ++s)
      if (strictly_inside_segment(v.p, t.master[s], t.master[(s + 1) % 3])) v.on_master_side = true;
  }

  g.corner_vertex.resize(n);
  g.corner_class.resize(n);
  g.side_interior.assign(n, {0, 0, 0});
  for (int i = 0; i < n; ++i) {
    const Tri& tile = t.tiles[i];
    for (int c = 0; c < 3; ++c) {
      g.corner_vertex[i][c] = g.find_vertex(tile[c]);
      int cls = -1;
      for (int m = 0; m < 3 && cls < 0; ++m)
        if (angle_equal(tile, c, t.master, m)) cls = g.classes.of_master_vertex[m];
      g.corner_class[i][c] = cls;
      if (cls >= 0) g.vertices[g.corner_vertex[i][c]].zeta[cls]++;
    }
  }

  std::set<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    const Tri& tile = t.tiles[i];
    for (int s = 0; s < 3; ++s) {
      const Point& a = tile[(s + 1) % 3];
      const Point& b = tile[(s + 2) % 3];
      const QuadScalar& xlo = a.x < b.x ? a.x : b.x;
      const QuadScalar& xhi = a.x < b.x ? b.x : a.x;
      auto first = std::lower_bound(g.vertices.begin(), g.vertices.end(), xlo,
                                    [](const GraphVertex& v, const QuadScalar& x) { return v.p.x < x; });
      std::vector<std::pair<QuadScalar, int>> inner;
      Point dir = b - a;
      for (auto it = first; it != g.vertices.end() && it->p.x <= xhi; ++it) {
        if (strictly_inside_segment(it->p, a, b)) inner.emplace_back(dot(it->p - a, dir), static_cast<int>(it - g.vertices.begin()));
      }
      g.side_interior[i][s] = static_cast<int>(inner.size());
      std::sort(inner.begin(), inner.end(), [](const auto& p, const auto& q) { return p.first < q.first; });
      std::vector<int> chain{g.find_vertex(a)};
      for (auto& [key, idx] : inner) {
        g.vertices[idx].edge_adjacency++;
        chain.push_back(idx);
      }
      chain.push_back(g.find_vertex(b));
      for (std::size_t k = 0; k + 1 < chain.size(); ++k)
        edges.insert({std::min(chain[k], chain[k + 1]), std::max(chain[k], chain[k + 1])});
    }
  }
  g.edges.assign(edges.begin(), edges.end());

  for (auto& v : g.vertices) {
    if (v.master_index >= 0) {
      v.cls = VertexClass::Master;
    } else if (v.on_master_side) {
      v.cls = VertexClass::Half;
      ++g.h;
    } else if (v.edge_adjacency == 1) {
      v.cls = VertexClass::Half;
      v.hanging = true;
      ++g.h;
    } else {
      v.cls = VertexClass::Full;
      ++g.f;
    }
  }
  return g;
}

bool check_euler(int f, int h, int r) { return r == 2 * f + h + 1; }
bool check_euler(const TilingGraph& g, int r) { return check_euler(g.f, g.h, r); }

std::string CornerReport::str() const {
  switch (kind) {
    case Fan: return "fan(" + std::to_string(k) + ")";
    case Cap: return "cap";
    case Neither: return "neither";
  }
  return "?";
}

std::array<CornerReport, 3> detect_caps_fans(const Tiling& t, const TilingGraph& g) {
  std::array<CornerReport, 3> out;
  for (int m = 0; m < 3; ++m) {
    int v = g.find_vertex(t.master[m]);
    int count = 0, tile = -1, corner = -1;
    for (int i = 0; i < static_cast<int>(t.tiles.size()); ++i)
      for (int c = 0; c < 3; ++c)
        if (g.corner_vertex[i][c] == v) {
          ++count;
          tile = i;
          corner = c;
        }
    out[m].k = count;
    if (count >= 2) {
      out[m].kind = CornerReport::Fan;
    } else if (count == 1 && g.side_interior[tile][corner] > 0) {
      out[m].kind = CornerReport::Cap;
    }
  }
  return out;
}

std::optional<mpz_class> trivial_grid(const Tiling& t) {
  const Tri& m = t.master;
  Point e1 = m[1] - m[0], e2 = m[2] - m[0];
  QuadScalar det = cross(e1, e2);
  if (det.is_zero()) return std::nullopt;
  QuadScalar e1n = norm2(e1);
  mpz_class grid = 1;
  for (const auto& tile : t.tiles) {
    // Tile edges must be parallel to the master's: a +/- homothety under
    // some relabelling of its corners.
    bool homothetic = false;
    for (const auto& p : kPerms) {
      Point d1 = tile[p[1]] - tile[p[0]], d2 = tile[p[2]] - tile[p[0]];
      QuadScalar s = dot(d1, e1) / e1n;
      if (d1 == s * e1 && d2 == s * e2) {
        homothetic = true;
        break;
      }
    }
    if (!homothetic) return std::nullopt;
    for (const auto& v : tile) {
      Point w = v - m[0];
      QuadScalar l1 = cross(w, e2) / det, l2 = cross(e1, w) / det;
      if (!l1.is_rational() || !l2.is_rational()) return std::nullopt;
      mpz_class d1 = l1.a().denominator(), d2 = l2.a().denominator();
      mpz_lcm(grid.get_mpz_t(), grid.get_mpz_t(), d1.get_mpz_t());
      mpz_lcm(grid.get_mpz_t(), grid.get_mpz_t(), d2.get_mpz_t());
    }
  }
  return grid;
}

bool is_trivial_tiling(const Tiling& t) { return trivial_grid(t).has_value(); }

RatioReport side_ratio_rationality(const Tri& master) {
  RatioReport r;
  auto s = side_lengths2(master);
  const int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  for (int k = 0; k < 3; ++k) {
    int i = pairs[k][0], j = pairs[k][1];
    RatioPair& rp = r.pairs[k];
    rp.i = i;
    rp.j = j;
    QuadScalar q = s[i] <= s[j] ? s[i] / s[j] : s[j] / s[i];
    Rational root;
    if (q.is_rational() && rational_sqrt(q.a(), &root)) {
      rp.rational = true;
      rp.ratio = root;
      if (root != Rational(1)) r.triangle_rational = true;
    }
  }
  return r;
}

AuditReport audit_vertex_degrees(const Tiling& t, const TilingGraph& g) {
  AuditReport r;
  r.shape = g.classes.shape;
  ValidationReport v = validate_reptiling(t);
  if (!v.ok) {
    r.declined = true;
    r.reason = "not a valid reptiling";
    return r;
  }
  if (g.hanging_count() > 0) {
    r.declined = true;
    r.reason = "hanging vertices present";
    return r;
  }
  std::vector<int> full, boundary, total;
  switch (g.classes.shape) {
    case ShapeKind::Scalene:
      full = {2, 2, 2};
      boundary = {1, 1, 1};
      total = {1, 1, 1};
      break;
    case ShapeKind::Isosceles:
      full = {4, 2};
      boundary = {2, 1};
      total = {2, 1};
      break;
    case ShapeKind::Equilateral:
      full = {6};
      boundary = {3};
      total = {3};
      break;
  }
  std::vector<int> master_sum(g.classes.labels.size(), 0);
  for (int i = 0; i < static_cast<int>(g.vertices.size()); ++i) {
    const GraphVertex& gv = g.vertices[i];
    if (gv.master_index >= 0) {
      for (std::size_t c = 0; c < master_sum.size(); ++c) master_sum[c] += gv.zeta[c];
    } else if (gv.on_master_side) {
      if (gv.zeta != boundary) r.failures.push_back({i, "boundary", gv.zeta, boundary});
    } else {
      if (gv.zeta != full) r.failures.push_back({i, "full", gv.zeta, full});
    }
  }
  if (master_sum != total) r.failures.push_back({-1, "master-total", master_sum, total});
  r.ok = r.failures.empty();
  return r;
}

}  // namespace gt
