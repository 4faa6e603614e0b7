#include "gentile/enumeration.hpp"

#include <algorithm>

#include "gentile/constructions.hpp"
#include "gentile/multiquad.hpp"

namespace gt {

namespace {

using P = PointT<MQ>;
using T = TriT<MQ>;

int half_of(const P& r) { return (r.y.sign() > 0 || (r.y.sign() == 0 && r.x.sign() > 0)) ? 0 : 1; }

bool same_direction(const P& a, const P& b) { return cross(a, b).sign() == 0 && dot(a, b).sign() > 0; }

// Points p + eps*u for small eps lie in the closed triangle t. u must not be
// parallel to an edge of t through p.
bool enters(const T& t, const P& p, const P& u) {
  for (int k = 0; k < 3; ++k) {
    if (t[k] == p) {
      P a = t[(k + 1) % 3] - p, b = t[(k + 2) % 3] - p;
      if (cross(a, b).sign() < 0) std::swap(a, b);
      return cross(a, u).sign() > 0 && cross(u, b).sign() > 0;
    }
  }
  for (int k = 0; k < 3; ++k) {
    const P &a = t[k], &b = t[(k + 1) % 3];
    if (strictly_inside_segment(p, a, b)) {
      P e = b - a;
      return cross(e, u).sign() == cross(e, t[(k + 2) % 3] - a).sign();
    }
  }
  return point_strictly_in_triangle(p, t);
}

void add_edge_rays(const T& t, const P& p, std::vector<P>& rays) {
  auto add = [&](const P& r) {
    for (const auto& q : rays)
      if (same_direction(q, r)) return;
    rays.push_back(r);
  };
  for (int k = 0; k < 3; ++k) {
    if (t[k] == p) {
      add(t[(k + 1) % 3] - p);
      add(t[(k + 2) % 3] - p);
      return;
    }
  }
  for (int k = 0; k < 3; ++k) {
    const P &a = t[k], &b = t[(k + 1) % 3];
    if (strictly_inside_segment(p, a, b)) {
      // Whole-edge vectors keep squared lengths rational.
      add(a - b);
      add(b - a);
      return;
    }
  }
}

class Search {
 public:
  Search(const Tri& master, int n, const SearchBudget& budget, const EnumerationOptions& opts)
      : n_(n), budget_(budget), opts_(opts), master_q_(master) {
    auto sq = side_lengths2(master);
    for (int i = 0; i < 3; ++i) {
      if (!sq[i].is_rational()) throw Error(Errc::UnsupportedMaster, "squared side lengths must be rational");
      s_[i] = sq[i].a();
    }
    d_ = radicand_of(master);
    std::vector<Rational> gens;
    if (d_ != Rational(1)) gens.push_back(d_);
    gens.push_back(s_[0] * s_[1]);
    gens.push_back(s_[1] * s_[2]);
    field_ = MQField::generated_by(gens);
    for (int i = 0; i < 3; ++i)
      master_[i] = P{MQ::from_quad(master[i].x, *field_), MQ::from_quad(master[i].y, *field_)};
    // Smallest angle sits opposite the shortest side.
    int k = static_cast<int>(std::min_element(s_.begin(), s_.end()) - s_.begin());
    min_n1_ = s_[(k + 1) % 3];
    min_n2_ = s_[(k + 2) % 3];
    min_dot_ = (min_n1_ + min_n2_ - s_[k]) / Rational(2);
  }

  EnumerationResult run() {
    dfs();
    EnumerationResult r;
    std::sort(found_.begin(), found_.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& f : found_) r.tilings.push_back(std::move(f.second));
    r.exhaustive = !stopped_;
    r.nodes = nodes_;
    r.unrepresentable = unrepresentable_;
    return r;
  }

 private:
  // Side between corners i and j of the master, squared.
  const Rational& side2(int i, int j) const { return s_[3 - i - j]; }

  bool covered(const P& p, const P& u) const {
    if (!enters(master_, p, u)) return true;
    for (const auto& t : placed_)
      if (enters(t, p, u)) return true;
    return false;
  }

  // First uncovered sector (r1, r2) at p in counterclockwise order, if any.
  bool open_sector(const P& p, P* r1, P* r2) const {
    std::vector<P> rays;
    add_edge_rays(master_, p, rays);
    for (const auto& t : placed_) add_edge_rays(t, p, rays);
    if (rays.empty()) return false;
    std::sort(rays.begin(), rays.end(), [](const P& a, const P& b) {
      int ha = half_of(a), hb = half_of(b);
      if (ha != hb) return ha < hb;
      return cross(a, b).sign() > 0;
    });
    const std::size_t m = rays.size();
    for (std::size_t i = 0; i < m; ++i) {
      const P& a = rays[i];
      const P& b = rays[(i + 1) % m];
      P probe;
      if (m == 1) {
        probe = P{-a.x, -a.y};
      } else {
        int c = cross(a, b).sign();
        if (c > 0) probe = a + b;
        else if (c == 0) probe = P{-a.y, a.x};
        else probe = P{-(a.x + b.x), -(a.y + b.y)};
      }
      if (!covered(p, probe)) {
        *r1 = a;
        *r2 = b;
        return true;
      }
    }
    return false;
  }

  // Tiles with a corner at p, one edge along w, lying counterclockwise of w.
  std::vector<T> placements(const P& p, const P& w) const {
    std::vector<T> out;
    MQ w2 = norm2(w);
    if (!w2.is_rational()) throw Error(Errc::UnsupportedMaster, "edge length outside the search field");
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        if (i == j) continue;
        const int l = 3 - i - j;
        const Rational& sij = side2(i, j);
        MQ c = MQ::sqrt_of(sij / (Rational(n_ * n_) * w2.rational_part()), *field_);
        P E = c * w;
        P e = master_[j] - master_[i];
        for (int refl = 0; refl < 2; ++refl) {
          MQ mx, my;
          if (!refl) {
            mx = (E.x * e.x + E.y * e.y) / MQ(sij);
            my = (E.y * e.x - E.x * e.y) / MQ(sij);
          } else {
            mx = (E.x * e.x - E.y * e.y) / MQ(sij);
            my = (E.x * e.y + E.y * e.x) / MQ(sij);
          }
          auto L = [&](const P& z) {
            MQ zy = refl ? -z.y : z.y;
            return P{mx * z.x - my * zy, mx * zy + my * z.x};
          };
          if (cross(w, L(master_[l] - master_[i])).sign() <= 0) continue;
          T t;
          for (int k = 0; k < 3; ++k) t[k] = p + L(master_[k] - master_[i]);
          bool dup = false;
          for (const auto& o : out)
            if (sorted_vertices(o) == sorted_vertices(t)) dup = true;
          if (!dup) out.push_back(t);
          break;
        }
      }
    }
    if (opts_.reverse_order) std::reverse(out.begin(), out.end());
    return out;
  }

  // The tile leaves a sliver before r2 narrower than the smallest angle.
  bool leaves_sliver(const T& t, const P& p, const P& r1, const P& r2) const {
    P f;
    bool got = false;
    for (const auto& q : t) {
      if (q == p) continue;
      P v = q - p;
      if (same_direction(v, r1)) continue;
      f = v;
      got = true;
    }
    if (!got) return false;
    if (cross(f, r2).sign() <= 0) return false;
    MQ dd = dot(f, r2);
    if (dd.sign() <= 0) return false;
    MQ lhs = dd * dd * MQ(min_n1_ * min_n2_);
    MQ rhs = MQ(min_dot_ * min_dot_) * norm2(f) * norm2(r2);
    return lhs > rhs;
  }

  bool fits(const T& t) const {
    if (!triangle_in_triangle(t, master_)) return false;
    for (const auto& o : placed_)
      if (interiors_intersect(t, o)) return false;
    return true;
  }

  void record() {
    Tiling out;
    out.radicand = d_;
    out.master = master_q_;
    for (const auto& t : placed_) {
      Tri q;
      for (int k = 0; k < 3; ++k) {
        auto x = t[k].x.to_quad(d_), y = t[k].y.to_quad(d_);
        if (!x || !y) {
          ++unrepresentable_;
          return;
        }
        q[k] = Point{*x, *y};
      }
      out.tiles.push_back(orient_like(q, master_q_));
    }
    out.canonicalize();
    for (const auto& f : found_)
      if (same_tile_set(f.second, out)) return;
    std::vector<Tri> key;
    for (const auto& t : out.tiles) key.push_back(sorted_vertices(t));
    found_.emplace_back(TileKey{std::move(key)}, std::move(out));
    if (static_cast<long long>(found_.size()) >= budget_.max_tilings) stopped_ = true;
  }

  void dfs() {
    if (stopped_) return;
    if (static_cast<int>(placed_.size()) == n_ * n_) {
      record();
      return;
    }
    std::vector<P> cand(master_.begin(), master_.end());
    for (const auto& t : placed_) cand.insert(cand.end(), t.begin(), t.end());
    std::sort(cand.begin(), cand.end(), PointLess<MQ>());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    P p, r1, r2;
    bool any = false;
    for (const auto& c : cand) {
      if (open_sector(c, &r1, &r2)) {
        p = c;
        any = true;
        break;
      }
    }
    if (!any) return;
    for (const auto& t : placements(p, r1)) {
      if (++nodes_ > budget_.max_nodes) {
        stopped_ = true;
        return;
      }
      if (leaves_sliver(t, p, r1, r2) || !fits(t)) continue;
      placed_.push_back(t);
      dfs();
      placed_.pop_back();
      if (stopped_) return;
    }
  }

  struct TileKey {
    std::vector<Tri> tris;
    bool operator<(const TileKey& o) const {
      return std::lexicographical_compare(tris.begin(), tris.end(), o.tris.begin(), o.tris.end(),
                                          [](const Tri& a, const Tri& b) { return compare_tris(a, b) < 0; });
    }
  };

  int n_;
  SearchBudget budget_;
  EnumerationOptions opts_;
  Tri master_q_;
  T master_;
  std::array<Rational, 3> s_;
  Rational d_;
  std::shared_ptr<const MQField> field_;
  Rational min_n1_, min_n2_, min_dot_;
  std::vector<T> placed_;
  std::vector<std::pair<TileKey, Tiling>> found_;
  long long nodes_ = 0;
  long long unrepresentable_ = 0;
  bool stopped_ = false;
};

}  // namespace

EnumerationResult enumerate_reptilings(const Tri& master, int n, const SearchBudget& budget,
                                       const EnumerationOptions& opts) {
  if (n < 2) throw Error(Errc::InvalidArgument, "n must be at least 2");
  if (triangle_area2(master).is_zero()) throw Error(Errc::DegenerateSource, "degenerate master");
  Search s(master, n, budget, opts);
  return s.run();
}

}  // namespace gt
