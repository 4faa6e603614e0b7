#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "corpus.hpp"
#include "gen.hpp"
#include "gentile/angles.hpp"
#include "gentile/constructions.hpp"
#include "gentile/error.hpp"

using namespace gt;
using testgen::Gen;

namespace {

using Triple = std::array<Rational, 3>;

Triple tri_pi(long long a, long long b, long long c, long long den) {
  return {Rational(a, den), Rational(b, den), Rational(c, den)};
}

std::set<std::array<int, 3>> as_set(const std::vector<VertexSignature>& v) {
  std::set<std::array<int, 3>> s;
  for (const auto& x : v) s.insert({x.da, x.db, x.dc});
  return s;
}

// All (da, db, dc) with da*a + db*b + dc*c = target, by plain enumeration.
std::set<std::array<int, 3>> brute_signatures(const Triple& t, const Rational& target) {
  std::set<std::array<int, 3>> s;
  auto cap = [&](const Rational& x) {
    Rational q = target / x;
    return static_cast<int>(q.to_double()) + 1;
  };
  for (int i = 0; i <= cap(t[0]); ++i)
    for (int j = 0; j <= cap(t[1]); ++j)
      for (int k = 0; k <= cap(t[2]); ++k)
        if (Rational(i) * t[0] + Rational(j) * t[1] + Rational(k) * t[2] == target && i + j + k > 0)
          s.insert({i, j, k});
  return s;
}

// Random rational-pi triangle with denominator up to 30.
Triple random_triangle(Gen& g) {
  for (;;) {
    long long den = g.integer(3, 30);
    long long a = g.integer(1, den - 2), b = g.integer(1, den - a - 1), c = den - a - b;
    if (c >= 1) return tri_pi(a, b, c, den);
  }
}

}  // namespace

TEST(Signatures, KnownFullVertices) {
  auto s13 = as_set(vertex_signatures(AngleSpec::rational_pi(Rational(2, 13), Rational(5, 13), Rational(6, 13)),
                                      Target::Full));
  EXPECT_TRUE(s13.count({1, 0, 4}));
  EXPECT_TRUE(s13.count({0, 4, 1}));
  auto s15 = as_set(vertex_signatures(AngleSpec::rational_pi(Rational(2, 15), Rational(6, 15), Rational(7, 15)),
                                      Target::Full));
  EXPECT_TRUE(s15.count({1, 0, 4}));
  EXPECT_TRUE(s15.count({0, 5, 0}));
}

TEST(SignaturesProperty, MatchBruteForceAndSatisfyIdentity) {
  Gen g(21);
  for (int i = 0; i < 150; ++i) {
    Triple t = random_triangle(g);
    for (Target target : {Target::Half, Target::Full}) {
      Rational goal = target == Target::Full ? Rational(2) : Rational(1);
      auto sigs = vertex_signatures(AngleSpec::rational_pi(t[0], t[1], t[2]), target);
      for (const auto& s : sigs)
        EXPECT_EQ(Rational(s.da) * t[0] + Rational(s.db) * t[1] + Rational(s.dc) * t[2], goal);
      EXPECT_EQ(as_set(sigs), brute_signatures(t, goal));
    }
  }
}

TEST(SignaturesProperty, LargestAngleAtMostOnceInStraightVertex) {
  Gen g(22);
  int checked = 0;
  while (checked < 300) {
    Triple t = random_triangle(g);
    if (t[0] == Rational(1, 2) || t[1] == Rational(1, 2) || t[2] == Rational(1, 2)) continue;
    int w = static_cast<int>(std::max_element(t.begin(), t.end()) - t.begin());
    bool strict = true;
    for (int i = 0; i < 3; ++i)
      if (i != w && t[i] == t[w]) strict = false;
    if (!strict) continue;
    for (const auto& s : vertex_signatures(AngleSpec::rational_pi(t[0], t[1], t[2]), Target::Half)) {
      int dw = w == 0 ? s.da : w == 1 ? s.db : s.dc;
      EXPECT_LE(dw, 1);
    }
    ++checked;
  }
}

TEST(Signatures, GenericFamily) {
  // alpha, k alpha, pi - (k+1) alpha with alpha generic: the alpha and pi
  // coefficients vanish separately.
  for (int k = 2; k <= 6; ++k) {
    for (Target target : {Target::Half, Target::Full}) {
      int dc = target == Target::Full ? 2 : 1;
      std::set<std::array<int, 3>> expect;
      for (int db = 0; db * k <= dc * (k + 1); ++db) expect.insert({dc * (k + 1) - db * k, db, dc});
      EXPECT_EQ(as_set(vertex_signatures(AngleSpec::family(k), target)), expect) << "k=" << k;
    }
  }
}

TEST(Signatures, TwoPiOverMMatchesRationalMode) {
  for (int m = 7; m <= 20; ++m) {
    for (int k = 1; 2 * (k + 1) < m; ++k) {
      Triple t{Rational(2, m), Rational(2 * k, m), Rational(1) - Rational(2 * (k + 1), m)};
      for (Target target : {Target::Half, Target::Full})
        EXPECT_EQ(as_set(vertex_signatures(AngleSpec::two_pi_over_m(m, k), target)),
                  as_set(vertex_signatures(AngleSpec::rational_pi(t[0], t[1], t[2]), target)));
    }
  }
}

TEST(Signatures, RejectsInvalidSpecs) {
  EXPECT_THROW(AngleSpec::rational_pi(Rational(1, 2), Rational(1, 2), Rational(1, 2)), Error);
  EXPECT_THROW(AngleSpec::rational_pi(Rational(0), Rational(1, 2), Rational(1, 2)), Error);
  EXPECT_THROW(AngleSpec::family(1), Error);
}

TEST(Splitting, ThreeSplittingCandidates) {
  auto c = splitting_candidates(3);
  std::vector<Triple> expect{tri_pi(2, 5, 6, 13), tri_pi(2, 6, 7, 15)};
  std::sort(c.begin(), c.end());
  std::sort(expect.begin(), expect.end());
  EXPECT_EQ(c, expect);
}

TEST(Splitting, NoCandidatesFromFourToTwelve) {
  for (int k = 4; k <= 12; ++k) EXPECT_TRUE(splitting_candidates(k).empty()) << "k=" << k;
}

TEST(Splitting, RejectsSmallK) { EXPECT_THROW(splitting_candidates(2), Error); }

TEST(Splitting, ObtuseCheckDeclinesAcute) {
  auto v = obtuse_split_check(tri_pi(2, 5, 6, 13), 3);
  EXPECT_TRUE(v.declined);
  EXPECT_FALSE(v.impossible);
}

TEST(SideRelations, RightTriangleMatchesIntegerBruteForce) {
  Tri m = master_right_legs(3, 4);  // side lengths 4, 3, 5 opposite A, B, C
  std::array<int, 3> L{4, 3, 5};
  const int bound = 8;
  std::vector<SideRelation> expect;
  for (int lhs = 0; lhs < 3; ++lhs) {
    int j = lhs == 0 ? 1 : 0, k = lhs == 2 ? 1 : 2;
    for (int a = 1; a <= bound; ++a)
      for (int b = 1; b <= bound; ++b)
        for (int c = 1; c <= bound; ++c)
          if (a * L[lhs] == b * L[j] + c * L[k]) expect.push_back({lhs, a, b, c});
  }
  std::sort(expect.begin(), expect.end());
  EXPECT_EQ(side_relation_search(m, bound), expect);
}

TEST(SideRelationsProperty, IndependentOfSearchOrder) {
  Gen g(23);
  for (int i = 0; i < 20; ++i) {
    std::array<QuadScalar, 3> sq{QuadScalar(g.integer(1, 30)), QuadScalar(g.integer(1, 30)),
                                 QuadScalar(g.integer(1, 30))};
    EXPECT_EQ(side_relation_search(sq, 6, false), side_relation_search(sq, 6, true));
  }
}

TEST(SideRelations, IrrationalRatiosHaveNone) {
  std::array<QuadScalar, 3> sq{QuadScalar(2), QuadScalar(3), QuadScalar(7)};
  EXPECT_TRUE(side_relation_search(sq, 10).empty());
}

TEST(Signatures, EquilateralIsStarsAndBars) {
  auto sigs = vertex_signatures(AngleSpec::rational_pi(Rational(1, 3), Rational(1, 3), Rational(1, 3)), Target::Full);
  std::set<std::array<int, 3>> expect;
  for (int a = 0; a <= 6; ++a)
    for (int b = 0; a + b <= 6; ++b) expect.insert({a, b, 6 - a - b});
  std::set<std::array<int, 3>> got;
  for (const auto& s : sigs) got.insert({s.da, s.db, s.dc});
  EXPECT_EQ(got, expect);
  EXPECT_EQ(expect.size(), 28u);
}

TEST(SideRelations, SmallIntegerSides) {
  auto r = side_relation_search(std::array<QuadScalar, 3>{QuadScalar(4), QuadScalar(9), QuadScalar(16)}, 8);
  EXPECT_NE(std::find(r.begin(), r.end(), SideRelation{0, 5, 2, 1}), r.end());  // 10 = 6 + 4
  auto eq = side_relation_search(std::array<QuadScalar, 3>{QuadScalar(1), QuadScalar(1), QuadScalar(1)}, 4);
  for (int lhs = 0; lhs < 3; ++lhs) EXPECT_NE(std::find(eq.begin(), eq.end(), SideRelation{lhs, 2, 1, 1}), eq.end());
  EXPECT_TRUE(side_relation_search(corpus::scalene_master(), 20).empty());
}

TEST(Splitting, ObtuseCapacity) {
  auto v = obtuse_split_check({Rational(1, 12), Rational(1, 6), Rational(3, 4)}, 3);
  EXPECT_TRUE(v.impossible);
  EXPECT_EQ(v.limiting, "gamma-capacity");
  auto w = obtuse_split_check({Rational(1, 10), Rational(1, 5), Rational(7, 10)}, 5);
  EXPECT_TRUE(w.impossible);
  // exactly 2pi/3 is not above the threshold
  auto b = obtuse_split_check({Rational(1, 12), Rational(1, 4), Rational(2, 3)}, 3);
  EXPECT_TRUE(b.declined);
  EXPECT_FALSE(b.impossible);
}
