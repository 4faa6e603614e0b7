#include "gentile/constructions.hpp"

#include <numeric>

namespace gt {

namespace {

Tiling make_tiling(const Tri& master, std::vector<Tri> tiles) {
  Tiling t;
  t.master = master;
  t.radicand = radicand_of(master);
  for (const auto& tile : tiles) {
    Rational d = radicand_of(tile);
    if (d != Rational(1)) t.radicand = d;
  }
  t.tiles = std::move(tiles);
  t.canonicalize();
  return t;
}

// Grid cells of the n-grid of `m`, vertex order following m's.
void grid_cells(const Tri& m, int n, std::vector<Tri>& out) {
  QuadScalar inv = Rational(1, n);
  Point u = inv * (m[1] - m[0]);
  Point w = inv * (m[2] - m[0]);
  auto at = [&](int i, int j) { return m[0] + QuadScalar(i) * u + QuadScalar(j) * w; };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; i + j < n; ++j) {
      out.push_back({at(i, j), at(i + 1, j), at(i, j + 1)});
      if (i + j <= n - 2) out.push_back({at(i + 1, j + 1), at(i, j + 1), at(i + 1, j)});
    }
  }
}

}  // namespace

Rational radicand_of(const Tri& t) {
  for (const auto& p : t) {
    if (!p.x.is_rational()) return p.x.radicand();
    if (!p.y.is_rational()) return p.y.radicand();
  }
  return Rational(1);
}

Tri master_right_legs(const Rational& leg_ca, const Rational& leg_cb) {
  if (leg_ca.sign() <= 0 || leg_cb.sign() <= 0) throw Error(Errc::InvalidArgument, "legs must be positive");
  return {pt(0, leg_ca), pt(leg_cb, 0), pt(0, 0)};
}

Tri master_isosceles(const Rational& base2, const Rational& leg2) {
  if (base2.sign() <= 0 || leg2.sign() <= 0) throw Error(Errc::InvalidArgument, "squared lengths must be positive");
  Rational h2 = Rational(4) * leg2 / base2 - Rational(1);
  if (h2.sign() <= 0) throw Error(Errc::InvalidArgument, "legs too short for the base");
  return {pt(1, QuadScalar(0, 1, h2)), pt(2, 0), pt(0, 0)};
}

Tri master_equilateral() { return {pt(1, QuadScalar::sqrt_of(3)), pt(2, 0), pt(0, 0)}; }

Tri master_ratio(long p, long q) {
  if (p <= 0 || q <= 0) throw Error(Errc::InvalidArgument, "p and q must be positive");
  return {pt(Rational(p, 3), QuadScalar(0, Rational(2 * p, 3), 2)), pt(q, 0), pt(0, 0)};
}

void check_split_params(const SplitParams& s, bool need_integer_q) {
  if (s.p < 1 || s.r < 1 || !(s.p < s.r && s.r < 3 * s.p))
    throw Error(Errc::InvalidParams, "need positive integers with p < r < 3p");
  long q2 = s.p * s.p + s.p * s.r;
  if (s.q && *s.q * *s.q != q2) throw Error(Errc::InvalidParams, "q^2 must equal p^2 + p*r");
  if (need_integer_q) {
    Rational root;
    if (!rational_sqrt(Rational(q2), &root)) throw Error(Errc::InvalidParams, "refinement needs an integer q");
  }
}

namespace {

// Points of the corner-split layout in a working frame with the doubled
// corner Y at the origin and Z on the positive x-axis; mirrored at the end.
struct SplitLayout {
  Tri master;
  std::vector<std::pair<Tri, long>> scaled;  // tile and its integer scale
  std::vector<Tri> units;                    // parallelogram unit tiles
  Rational q2;
};

SplitLayout split_layout(const SplitParams& s) {
  const Rational p(s.p), r(s.r);
  const Rational q2 = p * p + p * r;
  const Rational D = q2 * (Rational(4) * p * p - q2);
  const QuadScalar rootD = QuadScalar::sqrt_of(D);
  const Rational two_p = Rational(2) * p;
  const QuadScalar cos2 = (r - p) / two_p;
  const QuadScalar sin2 = rootD / QuadScalar(Rational(2) * p * p);
  const Rational span = two_p + r;

  Point Y = pt(0, 0);
  Point Z = pt(p * p + q2, 0);
  Point X = pt(QuadScalar(span * r) * cos2, QuadScalar(span * r) * sin2);
  Point U = pt(q2, 0);
  Point Up = pt(QuadScalar(q2) * cos2, QuadScalar(q2) * sin2);
  Point W = pt(r * q2 / two_p, QuadScalar(r / two_p) * rootD);
  Point V = Z + QuadScalar(p / span) * (X - Z);
  Point Sp = X + QuadScalar(r / span) * (Z - X);
  Point S = X + QuadScalar(r / span) * (Y - X);
  Point Spp = W + (S - Up);

  auto mirror = [&](const Point& a) { return pt(QuadScalar(p * p + q2) - a.x, a.y); };
  auto mt = [&](const Tri& t) { return Tri{mirror(t[0]), mirror(t[1]), mirror(t[2])}; };

  SplitLayout L;
  L.q2 = q2;
  L.master = mt({X, Y, Z});
  long q = s.q ? *s.q : 0;
  L.scaled = {{mt({Y, U, W}), q},  {mt({Y, Up, W}), q}, {mt({Z, U, V}), s.p},  {mt({U, V, W}), s.p},
              {mt({W, V, Sp}), s.p}, {mt({Spp, Sp, S}), s.p}, {mt({X, S, Sp}), s.r}};

  const long cols = s.r - s.p, rows = s.p;
  Point e1 = QuadScalar(Rational(1, cols)) * (S - Up);
  Point e2 = QuadScalar(Rational(1, rows)) * (W - Up);
  for (long i = 0; i < cols; ++i) {
    for (long j = 0; j < rows; ++j) {
      Point a = Up + QuadScalar(i) * e1 + QuadScalar(j) * e2;
      Point b = a + e1, c = a + e2, d = a + e1 + e2;
      Tri t1{a, b, d}, t2{a, d, c};
      if (!similar(t1, L.master)) {
        t1 = {a, b, c};
        t2 = {b, d, c};
      }
      L.units.push_back(mt(t1));
      L.units.push_back(mt(t2));
    }
  }
  return L;
}

}  // namespace

Tri master_split_family(const SplitParams& s) {
  check_split_params(s, false);
  return split_layout(s).master;
}

Tiling trivial_reptiling(const Tri& master, int n) {
  if (n < 2) throw Error(Errc::InvalidArgument, "n must be at least 2");
  if (triangle_area2(master).is_zero()) throw Error(Errc::DegenerateSource, "degenerate master");
  std::vector<Tri> tiles;
  grid_cells(master, n, tiles);
  return make_tiling(master, std::move(tiles));
}

Tiling trivial_gentiling(const Tri& master, int r) {
  if (r < 4 || r == 5)
    throw Error(Errc::InvalidArgument,
                "r must be 4 or at least 6: no oblique triangle is a 2- or 3-gentile (right triangles have a "
                "2-gentiling), and only one special isosceles triangle is a 5-gentile");
  if (triangle_area2(master).is_zero()) throw Error(Errc::DegenerateSource, "degenerate master");
  const bool odd = r % 2 == 1;
  const int k = odd ? (r - 3) / 2 : r / 2;
  QuadScalar inv = Rational(1, k);
  Point u = inv * (master[1] - master[0]);
  Point w = inv * (master[2] - master[0]);
  auto at = [&](int i, int j) { return master[0] + QuadScalar(i) * u + QuadScalar(j) * w; };
  // One corner block of scale k-1 at A, then the cells along the far side.
  std::vector<Tri> tiles;
  tiles.push_back({at(0, 0), at(k - 1, 0), at(0, k - 1)});
  for (int i = 0; i < k; ++i) tiles.push_back({at(i, k - 1 - i), at(i + 1, k - 1 - i), at(i, k - i)});
  for (int i = 0; i + 1 < k; ++i) tiles.push_back({at(i + 1, k - 1 - i), at(i, k - 1 - i), at(i + 1, k - 2 - i)});
  if (odd) {
    // Split the unit cell at B into its four half-size cells.
    Tri cell{at(k - 1, 0), at(k, 0), at(k - 1, 1)};
    auto it = std::find(tiles.begin(), tiles.end(), cell);
    tiles.erase(it);
    grid_cells(cell, 2, tiles);
  }
  return make_tiling(master, std::move(tiles));
}

Tiling rhombus_flip(const Tri& master, long p, long q, int n) {
  if (!(p > q && q >= 1) || std::gcd(p, q) != 1)
    throw Error(Errc::InvalidArgument, "need coprime p > q >= 1");
  if (n < p + q) throw Error(Errc::NTooSmall, "n must be at least p + q");
  // Corner K whose two sides have lengths in ratio p : q.
  int K = -1, shortEnd = -1, longEnd = -1;
  for (int k = 0; k < 3 && K < 0; ++k) {
    int i = (k + 1) % 3, j = (k + 2) % 3;
    QuadScalar li = norm2(master[i] - master[k]), lj = norm2(master[j] - master[k]);
    QuadScalar pp(Rational(p * p)), qq(Rational(q * q));
    if (qq * li == pp * lj) {
      K = k;
      longEnd = i;
      shortEnd = j;
    } else if (qq * lj == pp * li) {
      K = k;
      longEnd = j;
      shortEnd = i;
    }
  }
  if (K < 0) throw Error(Errc::RatioNotRational, "no pair of sides with length ratio p : q");
  QuadScalar inv = Rational(1, n);
  Point ua = inv * (master[shortEnd] - master[K]);
  Point ub = inv * (master[longEnd] - master[K]);
  const Point& O = master[K];
  Point diag = QuadScalar(p) * ua + QuadScalar(q) * ub;
  // Parallelogram O, O + p*ua, O + p*ua + q*ub, O + q*ub in skew coordinates.
  QuadScalar det = cross(ua, ub);
  auto inside = [&](const Tri& t) {
    Point c = t[0] + t[1] + t[2] - QuadScalar(3) * O;
    QuadScalar s = cross(c, ub) / det, r = cross(ua, c) / det;  // centroid * 3
    return s.sign() > 0 && s < QuadScalar(3 * p) && r.sign() > 0 && r < QuadScalar(3 * q);
  };
  QuadScalar dd = dot(diag, diag);
  auto reflect = [&](const Point& v) {
    Point rel = v - O;
    return O + (QuadScalar(2) * dot(rel, diag) / dd) * diag - rel;
  };
  std::vector<Tri> cells, tiles;
  grid_cells(master, n, cells);
  for (const auto& c : cells) {
    if (inside(c))
      tiles.push_back({reflect(c[0]), reflect(c[1]), reflect(c[2])});
    else
      tiles.push_back(c);
  }
  return make_tiling(master, std::move(tiles));
}

Tiling corner_split(const SplitParams& s, bool refine) {
  check_split_params(s, refine);
  SplitParams full = s;
  if (refine && !full.q) {
    Rational root;
    rational_sqrt(Rational(s.p * s.p + s.p * s.r), &root);
    full.q = root.numerator().get_si();
  }
  SplitLayout L = split_layout(full);
  std::vector<Tri> tiles;
  for (auto& [tile, scale] : L.scaled) {
    Tri t = orient_like(tile, L.master);
    if (refine && scale > 1)
      grid_cells(t, static_cast<int>(scale), tiles);
    else
      tiles.push_back(t);
  }
  for (auto& u : L.units) tiles.push_back(orient_like(u, L.master));
  return make_tiling(L.master, std::move(tiles));
}

Tiling right_2gentiling(const Tri& m) {
  int R = -1;
  for (int i = 0; i < 3; ++i)
    if (dot(m[(i + 1) % 3] - m[i], m[(i + 2) % 3] - m[i]).is_zero()) R = i;
  if (R < 0 || triangle_area2(m).is_zero()) throw Error(Errc::NotRightTriangle, "master has no right angle");
  const Point& P = m[(R + 1) % 3];
  const Point& Q = m[(R + 2) % 3];
  Point hyp = Q - P;
  Point H = P + (dot(m[R] - P, hyp) / norm2(hyp)) * hyp;
  std::vector<Tri> tiles{orient_like(Tri{m[R], P, H}, m), orient_like(Tri{m[R], Q, H}, m)};
  return make_tiling(m, std::move(tiles));
}

Tiling snover_reptiling(long l, long m) {
  if (l < 1 || m < 1) throw Error(Errc::InvalidArgument, "l and m must be positive");
  Tri M = master_right_legs(Rational(l), Rational(m));
  const Point &A = M[0], &B = M[1], &C = M[2];
  Point hyp = B - A;
  Point H = A + (dot(C - A, hyp) / norm2(hyp)) * hyp;
  std::vector<Tri> tiles;
  // (A, C, H) has hypotenuse l and (C, B, H) has hypotenuse m, relative to
  // the master's hypotenuse sqrt(l^2 + m^2).
  Tri left{A, C, H}, right{C, B, H};
  if (l == 1)
    tiles.push_back(left);
  else
    grid_cells(left, static_cast<int>(l), tiles);
  if (m == 1)
    tiles.push_back(right);
  else
    grid_cells(right, static_cast<int>(m), tiles);
  return make_tiling(M, std::move(tiles));
}

Tiling kaiser_5gentiling() {
  QuadScalar s3 = QuadScalar::sqrt_of(3);
  Point C = pt(0, 0), B = pt(QuadScalar(2) * s3, 0), A = pt(s3, 1);
  Point D1 = pt(QuadScalar(Rational(2, 3)) * s3, 0);
  Point D2 = pt(QuadScalar(Rational(4, 3)) * s3, 0);
  Point G = pt(s3, Rational(1, 3));
  Tri M{A, B, C};
  std::vector<Tri> tiles;
  for (const Tri& t : {Tri{C, D1, A}, Tri{G, A, D1}, Tri{G, D1, D2}, Tri{G, D2, A}, Tri{B, D2, A}})
    tiles.push_back(orient_like(t, M));
  return make_tiling(M, std::move(tiles));
}

Tiling rep3_306090() {
  QuadScalar s3 = QuadScalar::sqrt_of(3);
  Point A = pt(0, 1), B = pt(s3, 0), C = pt(0, 0);
  Point D = pt(QuadScalar(Rational(1, 3)) * s3, 0);
  Point E = pt(QuadScalar(Rational(1, 2)) * s3, Rational(1, 2));
  Tri M{A, B, C};
  std::vector<Tri> tiles;
  for (const Tri& t : {Tri{A, C, D}, Tri{A, E, D}, Tri{B, E, D}}) tiles.push_back(orient_like(t, M));
  return make_tiling(M, std::move(tiles));
}

Tiling sierpinski_split() {
  Tri M{pt(0, 0), pt(2, 0), pt(1, 1)};
  std::vector<Tri> tiles{{pt(0, 0), pt(1, 1), pt(1, 0)}, {pt(1, 1), pt(2, 0), pt(1, 0)}};
  return make_tiling(M, std::move(tiles));
}

}  // namespace gt
