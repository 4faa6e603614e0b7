#include "gentile/angles.hpp"

#include <algorithm>
#include <tuple>

namespace gt {

AngleSpec AngleSpec::rational_pi(const Rational& a, const Rational& b, const Rational& c) {
  if (a.sign() <= 0 || b.sign() <= 0 || c.sign() <= 0) throw Error(Errc::InvalidArgument, "angles must be positive");
  if (a + b + c != Rational(1)) throw Error(Errc::InvalidArgument, "angles must sum to pi");
  AngleSpec s;
  s.mode = Mode::RationalPi;
  s.angles = {a, b, c};
  return s;
}

AngleSpec AngleSpec::family(int k) {
  if (k < 2) throw Error(Errc::InvalidArgument, "family needs k >= 2");
  AngleSpec s;
  s.mode = Mode::Family;
  s.k = k;
  return s;
}

AngleSpec AngleSpec::two_pi_over_m(int m, int k) {
  if (m < 3 || k < 1) throw Error(Errc::InvalidArgument, "need m >= 3 and k >= 1");
  Rational a(2, m), b(2 * k, m);
  Rational c = Rational(1) - a - b;
  if (c.sign() <= 0) throw Error(Errc::InvalidArgument, "angles do not fit in a triangle");
  AngleSpec s = rational_pi(a, b, c);
  s.mode = Mode::TwoPiOverM;
  s.m = m;
  s.k = k;
  return s;
}

std::vector<VertexSignature> vertex_signatures(const AngleSpec& spec, Target target) {
  const int t = target == Target::Full ? 2 : 1;
  std::vector<VertexSignature> out;
  if (spec.mode == AngleSpec::Mode::Family) {
    // alpha is generic: the pi-part forces d_gamma = t and the alpha-part
    // forces d_alpha + k d_beta = (k+1) t.
    const int rhs = (spec.k + 1) * t;
    for (int db = 0; db * spec.k <= rhs; ++db) out.push_back({rhs - spec.k * db, db, t, target});
  } else {
    const Rational T(t);
    const auto& a = spec.angles;
    auto bound = [&](const Rational& x) {
      Rational q = T / x;
      mpz_class c;
      mpz_cdiv_q(c.get_mpz_t(), q.numerator().get_mpz_t(), q.denominator().get_mpz_t());
      return static_cast<int>(c.get_si());
    };
    const int ba = bound(a[0]), bb = bound(a[1]);
    for (int da = 0; da <= ba; ++da) {
      for (int db = 0; db <= bb; ++db) {
        Rational rest = T - Rational(da) * a[0] - Rational(db) * a[1];
        if (rest.sign() < 0) break;
        Rational dc = rest / a[2];
        if (dc.is_integer()) out.push_back({da, db, static_cast<int>(dc.numerator().get_si()), target});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const VertexSignature& x, const VertexSignature& y) {
    return std::tie(x.da, x.db, x.dc) < std::tie(y.da, y.db, y.dc);
  });
  return out;
}

std::vector<std::array<Rational, 3>> splitting_candidates(int k) {
  if (k < 3) throw Error(Errc::InvalidArgument, "k must be at least 3");
  std::vector<std::array<Rational, 3>> out;
  const Rational half(1, 2), two(2), five(5);
  // Isosceles with the split corner at the apex, (a, a, k a): acute only if
  // k pi / (k + 2) < pi / 2.
  {
    Rational top(k, k + 2);
    if (top < half) {
      Rational base(1, k + 2);
      if (five * base <= two) out.push_back({base, base, top});
    }
  }
  // Isosceles with split base corners, (a, k a, k a): 5 beta <= 2 pi.
  {
    Rational a(1, 2 * k + 1), b(k, 2 * k + 1);
    if (b < half && five * b <= two) out.push_back({a, b, b});
  }
  // Scalene: alpha = 2pi/m with m odd, the split corner delta = k alpha.
  for (int m = 3; m <= 8 * k + 8; m += 2) {
    Rational a(2, m), d(2 * k, m);
    Rational phi = Rational(1) - a - d;
    if (phi.sign() <= 0) continue;
    if (!(a < half && d < half && phi < half)) continue;
    Rational gap = (phi - d).abs();
    if (!(gap.sign() > 0 && gap < a)) continue;
    std::array<Rational, 3> t{a, d, phi};
    std::sort(t.begin(), t.end());
    if (five * t[1] <= two) out.push_back(t);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ObtuseVerdict obtuse_split_check(const std::array<Rational, 3>& angles, int k) {
  ObtuseVerdict v;
  std::array<Rational, 3> s = angles;
  std::sort(s.begin(), s.end());
  if (s[0].sign() <= 0 || s[0] + s[1] + s[2] != Rational(1)) {
    v.declined = true;
    v.reason = "angles must be positive and sum to pi";
    return v;
  }
  if (!(s[2] > Rational(2, 3))) {
    v.declined = true;
    v.reason = "largest angle must exceed 2pi/3";
    return v;
  }
  if (k < 3) {
    v.declined = true;
    v.reason = "k must be at least 3";
    return v;
  }
  const Rational &a = s[0], &b = s[1], &g = s[2];
  // Gamma: 3 gamma > 2pi and 2 gamma > pi, so every vertex holds its quota of
  // gamma angles exactly and the gamma corner cannot be split.
  bool gamma_full = Rational(3) * g > Rational(2) && Rational(2) * g > Rational(1);
  // Alpha: k >= 2 angles each at least alpha exceed alpha.
  v.corner[0] = "angle-sum";
  v.corner[2] = gamma_full ? "gamma-capacity" : "";
  // Beta: only alpha angles fit, so a split needs beta = k alpha; then the
  // beta angles are also capacity-bound.
  if (b != Rational(k) * a) {
    v.corner[1] = "angle-sum";
  } else if (Rational(2) * g + Rational(3) * b > Rational(2) && g + Rational(2) * b > Rational(1)) {
    v.corner[1] = "beta-capacity";
  }
  v.impossible = gamma_full && !v.corner[1].empty();
  v.limiting = v.impossible ? "gamma-capacity" : "";
  if (!v.impossible) v.reason = "counting argument inconclusive";
  return v;
}

std::vector<SideRelation> side_relation_search(const std::array<QuadScalar, 3>& sq, int bound, bool descending) {
  std::vector<SideRelation> out;
  std::vector<int> range;
  for (int i = 1; i <= bound; ++i) range.push_back(i);
  if (descending) std::reverse(range.begin(), range.end());
  for (int lhs = 0; lhs < 3; ++lhs) {
    int j = lhs == 0 ? 1 : 0, kk = lhs == 2 ? 1 : 2;
    const QuadScalar &si = sq[lhs], &sj = sq[j], &sk = sq[kk];
    QuadScalar prod = sj * sk;
    for (int l : range) {
      QuadScalar ls = QuadScalar(l * l) * si;
      for (int m : range) {
        QuadScalar lm = ls - QuadScalar(m * m) * sj;
        for (int n : range) {
          QuadScalar D = lm - QuadScalar(n * n) * sk;
          if (D.sign() < 0) continue;
          if (D * D == QuadScalar(4 * m * m * n * n) * prod) out.push_back({lhs, l, m, n});
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SideRelation> side_relation_search(const Tri& master, int bound) {
  return side_relation_search(side_lengths2(master), bound);
}

}  // namespace gt
