#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "gentile/error.hpp"
#include "gentile/quad.hpp"

namespace gt {

template <class S>
struct PointT {
  S x, y;

  friend PointT operator+(const PointT& p, const PointT& q) { return {p.x + q.x, p.y + q.y}; }
  friend PointT operator-(const PointT& p, const PointT& q) { return {p.x - q.x, p.y - q.y}; }
  friend PointT operator*(const S& s, const PointT& p) { return {s * p.x, s * p.y}; }
  friend bool operator==(const PointT& p, const PointT& q) { return p.x == q.x && p.y == q.y; }
  friend bool operator!=(const PointT& p, const PointT& q) { return !(p == q); }
};

template <class S>
using TriT = std::array<PointT<S>, 3>;

using Point = PointT<QuadScalar>;
using Tri = TriT<QuadScalar>;

inline Point pt(const QuadScalar& x, const QuadScalar& y) { return Point{x, y}; }

// Lexicographic order by (x, y), decided exactly.
template <class S>
int compare_points(const PointT<S>& p, const PointT<S>& q) {
  int c = compare(p.x, q.x);
  return c != 0 ? c : compare(p.y, q.y);
}

template <class S>
struct PointLess {
  bool operator()(const PointT<S>& p, const PointT<S>& q) const { return compare_points(p, q) < 0; }
};

template <class S>
S dot(const PointT<S>& u, const PointT<S>& v) { return u.x * v.x + u.y * v.y; }

template <class S>
S cross(const PointT<S>& u, const PointT<S>& v) { return u.x * v.y - u.y * v.x; }

template <class S>
S norm2(const PointT<S>& u) { return dot(u, u); }

// Twice the signed area of (p1, p2, p3); positive when counterclockwise.
template <class S>
S triangle_area2(const PointT<S>& p1, const PointT<S>& p2, const PointT<S>& p3) {
  return cross(p2 - p1, p3 - p1);
}

template <class S>
S triangle_area2(const TriT<S>& t) { return triangle_area2(t[0], t[1], t[2]); }

template <class S>
int orient(const PointT<S>& o, const PointT<S>& a, const PointT<S>& b) { return cross(a - o, b - o).sign(); }

// p lies on the closed segment [a, b].
template <class S>
bool on_segment(const PointT<S>& p, const PointT<S>& a, const PointT<S>& b) {
  if (orient(a, b, p) != 0) return false;
  return dot(p - a, b - a).sign() >= 0 && dot(p - b, a - b).sign() >= 0;
}

// p lies on the open segment (a, b).
template <class S>
bool strictly_inside_segment(const PointT<S>& p, const PointT<S>& a, const PointT<S>& b) {
  if (orient(a, b, p) != 0) return false;
  return dot(p - a, b - a).sign() > 0 && dot(p - b, a - b).sign() > 0;
}

// Squared side lengths, side i opposite vertex i.
template <class S>
std::array<S, 3> side_lengths2(const TriT<S>& t) {
  return {norm2(t[2] - t[1]), norm2(t[0] - t[2]), norm2(t[1] - t[0])};
}

// Closed-triangle containment of p (orientation agnostic).
template <class S>
bool point_in_triangle(const PointT<S>& p, const TriT<S>& t) {
  int s = triangle_area2(t).sign();
  for (int i = 0; i < 3; ++i)
    if (orient(t[i], t[(i + 1) % 3], p) * s < 0) return false;
  return true;
}

// Open-triangle containment.
template <class S>
bool point_strictly_in_triangle(const PointT<S>& p, const TriT<S>& t) {
  int s = triangle_area2(t).sign();
  for (int i = 0; i < 3; ++i)
    if (orient(t[i], t[(i + 1) % 3], p) * s <= 0) return false;
  return true;
}

template <class S>
bool triangle_in_triangle(const TriT<S>& inner, const TriT<S>& outer) {
  for (const auto& p : inner)
    if (!point_in_triangle(p, outer)) return false;
  return true;
}

// Interiors of two non-degenerate triangles intersect. Two convex polygons have
// disjoint interiors iff one of their edge lines weakly separates them.
template <class S>
bool interiors_intersect(const TriT<S>& t1, const TriT<S>& t2) {
  auto separated_by = [](const TriT<S>& a, const TriT<S>& b) {
    int s = triangle_area2(a).sign();
    for (int i = 0; i < 3; ++i) {
      bool all_out = true;
      for (const auto& p : b) {
        if (orient(a[i], a[(i + 1) % 3], p) * s > 0) {
          all_out = false;
          break;
        }
      }
      if (all_out) return true;
    }
    return false;
  };
  return !separated_by(t1, t2) && !separated_by(t2, t1);
}

// The closed segments [a,b] and [c,d] overlap in a piece of positive length.
template <class S>
bool segments_share_length(const PointT<S>& a, const PointT<S>& b, const PointT<S>& c, const PointT<S>& d) {
  if (orient(a, b, c) != 0 || orient(a, b, d) != 0) return false;
  PointT<S> u = b - a;
  S t0 = S(0), t1 = dot(u, u);
  S s0 = dot(c - a, u), s1 = dot(d - a, u);
  if (s0 > s1) std::swap(s0, s1);
  S lo = s0 > t0 ? s0 : t0;
  S hi = s1 < t1 ? s1 : t1;
  return hi > lo;
}

template <class S>
bool triangles_share_edge_piece(const TriT<S>& t1, const TriT<S>& t2) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (segments_share_length(t1[i], t1[(i + 1) % 3], t2[j], t2[(j + 1) % 3])) return true;
  return false;
}

// Angle at vertex i of t equals the angle at vertex j of u, decided by exact
// cosines: sign of the dot product plus equality of squared cosines.
template <class S>
bool angle_equal(const TriT<S>& t, int i, const TriT<S>& u, int j) {
  PointT<S> a1 = t[(i + 1) % 3] - t[i], a2 = t[(i + 2) % 3] - t[i];
  PointT<S> b1 = u[(j + 1) % 3] - u[j], b2 = u[(j + 2) % 3] - u[j];
  S da = dot(a1, a2), db = dot(b1, b2);
  if (da.sign() != db.sign()) return false;
  return da * da * norm2(b1) * norm2(b2) == db * db * norm2(a1) * norm2(a2);
}

// t similar to m with vertex i of t corresponding to vertex i of m.
template <class S>
bool similar_in_order(const TriT<S>& t, const TriT<S>& m) {
  auto ts = side_lengths2(t), ms = side_lengths2(m);
  return ts[0] * ms[1] == ts[1] * ms[0] && ts[0] * ms[2] == ts[2] * ms[0];
}

inline constexpr std::array<std::array<int, 3>, 6> kPerms = {{
    {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};

// First vertex permutation p (in kPerms order) with (t[p0], t[p1], t[p2])
// similar to m in order.
template <class S>
std::optional<std::array<int, 3>> matching_perm(const TriT<S>& t, const TriT<S>& m) {
  for (const auto& p : kPerms) {
    TriT<S> u{t[p[0]], t[p[1]], t[p[2]]};
    if (similar_in_order(u, m)) return p;
  }
  return std::nullopt;
}

template <class S>
bool similar(const TriT<S>& t, const TriT<S>& m) { return matching_perm(t, m).has_value(); }

// Reorders t's vertices so that they correspond to m's vertices.
template <class S>
TriT<S> orient_like(const TriT<S>& t, const TriT<S>& m) {
  auto p = matching_perm(t, m);
  if (!p) throw Error(Errc::NotASimilarity, "triangle not similar to reference");
  return {t[(*p)[0]], t[(*p)[1]], t[(*p)[2]]};
}

template <class S>
TriT<S> sorted_vertices(TriT<S> t) {
  std::sort(t.begin(), t.end(), PointLess<S>());
  return t;
}

template <class S>
int compare_tris(const TriT<S>& a, const TriT<S>& b) {
  for (int i = 0; i < 3; ++i) {
    int c = compare_points(a[i], b[i]);
    if (c != 0) return c;
  }
  return 0;
}

// Affine map p -> M p + t whose linear part is a scaled orthogonal matrix.
template <class S>
struct SimilarityT {
  S m00 = S(1), m01 = S(0), m10 = S(0), m11 = S(1), tx = S(0), ty = S(0);

  PointT<S> apply(const PointT<S>& p) const { return {m00 * p.x + m01 * p.y + tx, m10 * p.x + m11 * p.y + ty}; }
  PointT<S> apply_linear(const PointT<S>& p) const { return {m00 * p.x + m01 * p.y, m10 * p.x + m11 * p.y}; }
  TriT<S> apply(const TriT<S>& t) const { return {apply(t[0]), apply(t[1]), apply(t[2])}; }
  S det() const { return m00 * m11 - m01 * m10; }

  // (this o other)(p) = this(other(p)).
  SimilarityT compose(const SimilarityT& o) const {
    SimilarityT r;
    r.m00 = m00 * o.m00 + m01 * o.m10;
    r.m01 = m00 * o.m01 + m01 * o.m11;
    r.m10 = m10 * o.m00 + m11 * o.m10;
    r.m11 = m10 * o.m01 + m11 * o.m11;
    r.tx = m00 * o.tx + m01 * o.ty + tx;
    r.ty = m10 * o.tx + m11 * o.ty + ty;
    return r;
  }

  SimilarityT inverse() const {
    S d = det();
    if (d.sign() == 0) throw Error(Errc::DivisionByZero, "singular map");
    SimilarityT r;
    r.m00 = m11 / d;
    r.m01 = -m01 / d;
    r.m10 = -m10 / d;
    r.m11 = m00 / d;
    r.tx = -(r.m00 * tx + r.m01 * ty);
    r.ty = -(r.m10 * tx + r.m11 * ty);
    return r;
  }

  bool is_similarity() const {
    return m00 * m00 + m10 * m10 == m01 * m01 + m11 * m11 && (m00 * m01 + m10 * m11).sign() == 0 &&
           det().sign() != 0;
  }

  friend bool operator==(const SimilarityT& a, const SimilarityT& b) {
    return a.m00 == b.m00 && a.m01 == b.m01 && a.m10 == b.m10 && a.m11 == b.m11 && a.tx == b.tx && a.ty == b.ty;
  }
};

using AffineSimilarity = SimilarityT<QuadScalar>;

// The unique affine map sending src[i] to dst[i]; it must be a similarity.
template <class S>
SimilarityT<S> similarity_from_triangles(const TriT<S>& src, const TriT<S>& dst) {
  PointT<S> p1 = src[1] - src[0], p2 = src[2] - src[0];
  PointT<S> q1 = dst[1] - dst[0], q2 = dst[2] - dst[0];
  S det = cross(p1, p2);
  if (det.sign() == 0) throw Error(Errc::DegenerateSource, "source triangle has zero area");
  // M = [q1 q2] * [p1 p2]^{-1}
  S i00 = p2.y / det, i01 = -p2.x / det, i10 = -p1.y / det, i11 = p1.x / det;
  SimilarityT<S> m;
  m.m00 = q1.x * i00 + q2.x * i10;
  m.m01 = q1.x * i01 + q2.x * i11;
  m.m10 = q1.y * i00 + q2.y * i10;
  m.m11 = q1.y * i01 + q2.y * i11;
  m.tx = dst[0].x - (m.m00 * src[0].x + m.m01 * src[0].y);
  m.ty = dst[0].y - (m.m10 * src[0].x + m.m11 * src[0].y);
  if (!m.is_similarity()) throw Error(Errc::NotASimilarity, "affine map between the triangles is not a similarity");
  return m;
}

}  // namespace gt
