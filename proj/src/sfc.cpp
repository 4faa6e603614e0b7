#include "gentile/sfc.hpp"

#include <algorithm>

#include "gentile/constructions.hpp"

namespace gt {

namespace {

QuadScalar abs_q(const QuadScalar& q) { return q.sign() < 0 ? -q : q; }

// Solves A z = b exactly; false when A is singular.
bool solve_linear(std::vector<std::vector<QuadScalar>> A, std::vector<QuadScalar> b, std::vector<QuadScalar>* z) {
  const std::size_t n = b.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && A[piv][c].is_zero()) ++piv;
    if (piv == n) return false;
    std::swap(A[piv], A[c]);
    std::swap(b[piv], b[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || A[r][c].is_zero()) continue;
      QuadScalar f = A[r][c] / A[c][c];
      for (std::size_t k = c; k < n; ++k) A[r][k] -= f * A[c][k];
      b[r] -= f * b[c];
    }
  }
  z->resize(n);
  for (std::size_t i = 0; i < n; ++i) (*z)[i] = b[i] / A[i][i];
  return true;
}

Point entry_of(const ExpandedTile& t, const EntryExit& ee) { return t.map.apply(t.reversed ? ee.exit : ee.entry); }
Point exit_of(const ExpandedTile& t, const EntryExit& ee) { return t.map.apply(t.reversed ? ee.entry : ee.exit); }

}  // namespace

Rational CurveRule::area_fraction(std::size_t i) const {
  QuadScalar d = abs_q(children[i].map.det());
  if (!d.is_rational()) throw Error(Errc::PreconditionFailed, "child area fraction is not rational");
  return d.a();
}

Rational CurveRule::weight(std::size_t i) const {
  return children[i].weight ? *children[i].weight : area_fraction(i);
}

std::vector<Rational> CurveRule::breakpoints() const {
  std::vector<Rational> a{Rational(0)};
  for (std::size_t i = 0; i < children.size(); ++i) a.push_back(a.back() + weight(i));
  return a;
}

Tiling CurveRule::tiling() const {
  Tiling t;
  t.radicand = radicand;
  t.master = master;
  for (const auto& c : children) t.tiles.push_back(c.map.apply(master));
  return t;
}

CurveRule rule_from_tiles(const Tri& master, const std::vector<Tri>& tiles, const std::vector<bool>& reversed,
                          const std::string& name) {
  if (tiles.size() != reversed.size()) throw Error(Errc::InvalidArgument, "one reversal flag per tile");
  CurveRule r;
  r.name = name;
  r.master = master;
  r.radicand = radicand_of(master);
  for (std::size_t i = 0; i < tiles.size(); ++i) {
    Rational d = radicand_of(tiles[i]);
    if (d != Rational(1)) r.radicand = d;
    r.children.push_back({similarity_from_triangles(master, tiles[i]), reversed[i], std::nullopt});
  }
  return r;
}

CurveRule reversed_rule(const CurveRule& rule) {
  CurveRule r = rule;
  // A child run forwards by the original is run backwards by the reverse
  // curve, which is that curve run forwards: the flags stay as they are.
  std::reverse(r.children.begin(), r.children.end());
  return r;
}

EntryExit solve_entry_exit(const CurveRule& rule) {
  if (rule.children.empty()) throw Error(Errc::SingularFixedPointSystem, "rule has no children");
  // Unknowns (Ex, Ey, Xx, Xy). E = phi_1(rev_1 ? X : E), X = phi_r(rev_r ? E : X).
  std::vector<std::vector<QuadScalar>> A(4, std::vector<QuadScalar>(4));
  std::vector<QuadScalar> b(4);
  auto put = [&](int row, const CurveChild& c, bool use_exit) {
    int lhs = row, rhs = use_exit ? 2 : 0;
    A[lhs][lhs] += QuadScalar(1);
    A[lhs + 1][lhs + 1] += QuadScalar(1);
    A[lhs][rhs] -= c.map.m00;
    A[lhs][rhs + 1] -= c.map.m01;
    A[lhs + 1][rhs] -= c.map.m10;
    A[lhs + 1][rhs + 1] -= c.map.m11;
    b[lhs] = c.map.tx;
    b[lhs + 1] = c.map.ty;
  };
  const CurveChild& first = rule.children.front();
  const CurveChild& last = rule.children.back();
  put(0, first, first.reversed);
  put(2, last, !last.reversed);
  std::vector<QuadScalar> z;
  if (!solve_linear(A, b, &z)) throw Error(Errc::SingularFixedPointSystem, "entry/exit system is singular");
  return {Point{z[0], z[1]}, Point{z[2], z[3]}};
}

ContinuityReport check_continuity(const CurveRule& rule) {
  ContinuityReport rep;
  EntryExit ee = solve_entry_exit(rule);
  for (std::size_t i = 0; i + 1 < rule.children.size(); ++i) {
    const auto& a = rule.children[i];
    const auto& b = rule.children[i + 1];
    Point out = a.map.apply(a.reversed ? ee.entry : ee.exit);
    Point in = b.map.apply(b.reversed ? ee.exit : ee.entry);
    if (out != in) {
      rep.ok = false;
      rep.failing.push_back(static_cast<int>(i) + 1);
    }
  }
  return rep;
}

std::vector<ExpandedTile> expand(const CurveRule& rule, int depth) {
  if (depth < 0) throw Error(Errc::InvalidArgument, "depth must be nonnegative");
  std::vector<ExpandedTile> level{{AffineSimilarity{}, false, rule.master, {}}};
  for (int k = 0; k < depth; ++k) {
    std::vector<ExpandedTile> next;
    next.reserve(level.size() * rule.children.size());
    for (const auto& node : level) {
      const int r = static_cast<int>(rule.children.size());
      for (int s = 0; s < r; ++s) {
        int c = node.reversed ? r - 1 - s : s;
        const auto& ch = rule.children[c];
        ExpandedTile t;
        t.map = node.map.compose(ch.map);
        t.reversed = node.reversed != ch.reversed;
        t.tile = t.map.apply(rule.master);
        t.path = node.path;
        t.path.push_back(c);
        next.push_back(std::move(t));
      }
    }
    level = std::move(next);
  }
  return level;
}

FaceContinuityReport check_face_continuity(const CurveRule& rule, int depth) {
  FaceContinuityReport rep;
  for (int k = 1; k <= depth; ++k) {
    auto tiles = expand(rule, k);
    for (std::size_t i = 0; i + 1 < tiles.size(); ++i) {
      if (!triangles_share_edge_piece(tiles[i].tile, tiles[i + 1].tile)) {
        rep.ok = false;
        rep.level = k;
        rep.index = static_cast<int>(i);
        return rep;
      }
    }
    rep.checked_depth = k;
  }
  return rep;
}

bool check_measure(const CurveRule& rule) {
  Rational sum;
  for (std::size_t i = 0; i < rule.children.size(); ++i) {
    QuadScalar d = abs_q(rule.children[i].map.det());
    if (!d.is_rational()) return false;
    Rational w = rule.weight(i);
    if (w.sign() <= 0 || w != d.a()) return false;
    sum += w;
  }
  return sum == Rational(1);
}

EvalResult evaluate(const CurveRule& rule, const Rational& t, int depth) {
  if (t.sign() < 0 || t >= Rational(1)) throw Error(Errc::InvalidArgument, "t must lie in [0, 1)");
  EntryExit ee = solve_entry_exit(rule);
  auto a = rule.breakpoints();
  const int r = static_cast<int>(rule.children.size());
  ExpandedTile node{AffineSimilarity{}, false, rule.master, {}};
  // u is the parameter in the node's own frame; left_closed picks [a_i, a_i+1)
  // versus (a_i, a_i+1] at interval ends (reversed children flip it).
  Rational u = t;
  bool left_closed = true;
  bool reversed = false;
  for (int k = 0; k < depth; ++k) {
    int c = 0;
    for (int i = 0; i < r; ++i) {
      bool in = left_closed ? (a[i] <= u && u < a[i + 1]) : (a[i] < u && u <= a[i + 1]);
      if (in) {
        c = i;
        break;
      }
    }
    const auto& ch = rule.children[c];
    Rational v = (u - a[c]) / (a[c + 1] - a[c]);
    if (ch.reversed) {
      v = Rational(1) - v;
      left_closed = !left_closed;
    }
    u = v;
    node.map = node.map.compose(ch.map);
    reversed = reversed != ch.reversed;
    node.path.push_back(c);
  }
  node.tile = node.map.apply(rule.master);
  node.reversed = reversed;
  EvalResult res;
  res.point = entry_of(node, ee);
  res.tile = std::move(node);
  return res;
}

std::vector<Point> polyline(const CurveRule& rule, int depth) {
  EntryExit ee = solve_entry_exit(rule);
  auto tiles = expand(rule, depth);
  std::vector<Point> out{entry_of(tiles.front(), ee)};
  for (const auto& t : tiles) out.push_back(exit_of(t, ee));
  return out;
}

std::vector<Point> junction_points(const CurveRule& rule, int depth) {
  std::vector<Point> out;
  for (const auto& p : polyline(rule, depth))
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  return out;
}

namespace {

CurveRule from_images(const std::string& name, const Tri& master, const std::vector<Tri>& images,
                      const std::vector<bool>& rev) {
  return rule_from_tiles(master, images, rev, name);
}

CurveRule sierpinski_rule() {
  Tri m{pt(0, 0), pt(2, 0), pt(1, 1)};
  return from_images("sierpinski", m, {{pt(0, 0), pt(1, 1), pt(1, 0)}, {pt(1, 1), pt(2, 0), pt(1, 0)}},
                     {false, false});
}

CurveRule rep3_rule() {
  QuadScalar s3 = QuadScalar::sqrt_of(3);
  Point A = pt(0, 1), B = pt(s3, 0), C = pt(0, 0);
  Point D = pt(s3 / QuadScalar(3), 0), E = pt(s3 / QuadScalar(2), Rational(1, 2));
  // Each child sends A, B, C to the 30, 60 and 90 degree corners of its tile.
  return from_images("rep3", {A, B, C}, {{D, A, C}, {D, A, E}, {D, B, E}}, {false, true, false});
}

CurveRule kaiser5_rule() {
  QuadScalar s3 = QuadScalar::sqrt_of(3);
  Point A = pt(s3, 1), B = pt(QuadScalar(2) * s3, 0), C = pt(0, 0);
  Point D1 = pt(QuadScalar(2) * s3 / QuadScalar(3), 0), D2 = pt(QuadScalar(4) * s3 / QuadScalar(3), 0);
  Point G = pt(s3, Rational(1, 3));
  return from_images("kaiser5", {A, B, C}, {{D1, C, A}, {G, A, D1}, {G, D1, D2}, {G, D2, A}, {D2, B, A}},
                     {true, true, true, true, false});
}

CurveRule polya_rule(Tri m) {
  auto right_at = [&](int i) { return dot(m[(i + 1) % 3] - m[i], m[(i + 2) % 3] - m[i]).is_zero(); };
  int k = -1;
  for (int i = 0; i < 3; ++i)
    if (right_at(i)) k = i;
  if (k < 0) throw Error(Errc::NotRightTriangle, "Pólya curve needs a right angle");
  // Rotate labels so the right angle is at C.
  Tri r{m[(k + 1) % 3], m[(k + 2) % 3], m[k]};
  const Point &A = r[0], &B = r[1], &C = r[2];
  Point ab = B - A;
  QuadScalar t = dot(C - A, ab) / norm2(ab);
  Point H = A + t * ab;
  return from_images("polya", r, {{A, C, H}, {C, B, H}}, {false, false});
}

}  // namespace

std::vector<std::string> builtin_curve_names() { return {"sierpinski", "rep3", "polya", "kaiser5"}; }

CurveRule builtin_curve(const std::string& name, const std::optional<Tri>& master) {
  if (name == "sierpinski") return sierpinski_rule();
  if (name == "rep3") return rep3_rule();
  if (name == "kaiser5") return kaiser5_rule();
  if (name == "polya") return polya_rule(master ? *master : master_right_legs(1, 2));
  throw Error(Errc::UnknownCurve, "unknown curve '" + name + "'");
}

}  // namespace gt
