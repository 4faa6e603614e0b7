#pragma once

#include <array>
#include <string>
#include <vector>

#include "gentile/geometry.hpp"

namespace gt {

// Angles are stored as fractions of pi.
struct AngleSpec {
  enum class Mode { RationalPi, Family, TwoPiOverM };
  Mode mode = Mode::RationalPi;
  std::array<Rational, 3> angles;  // RationalPi / TwoPiOverM
  int k = 0;                       // Family: alpha, k*alpha, pi - (k+1)*alpha
  int m = 0;                       // TwoPiOverM

  static AngleSpec rational_pi(const Rational& a, const Rational& b, const Rational& c);
  static AngleSpec family(int k);
  // alpha = 2pi/m, k*alpha, and the remainder.
  static AngleSpec two_pi_over_m(int m, int k);
};

enum class Target { Half, Full };  // pi, 2pi

struct VertexSignature {
  int da = 0, db = 0, dc = 0;
  Target target = Target::Full;
  friend bool operator==(const VertexSignature& x, const VertexSignature& y) {
    return x.da == y.da && x.db == y.db && x.dc == y.dc && x.target == y.target;
  }
};

std::vector<VertexSignature> vertex_signatures(const AngleSpec& spec, Target target);

// Acute triangles that survive the angle-counting argument for k-splitting
// gentilings, as ascending fractions of pi.
std::vector<std::array<Rational, 3>> splitting_candidates(int k);

struct ObtuseVerdict {
  bool declined = false;
  std::string reason;      // why declined
  bool impossible = false;
  std::string limiting;    // first exhausted resource
  std::array<std::string, 3> corner;  // per ascending angle: why it cannot split
};

ObtuseVerdict obtuse_split_check(const std::array<Rational, 3>& angles, int k);

struct SideRelation {
  int lhs = 0;  // lambda * L[lhs] = mu * L[j] + nu * L[k], j < k the others
  int lambda = 0, mu = 0, nu = 0;
  friend bool operator==(const SideRelation& a, const SideRelation& b) {
    return a.lhs == b.lhs && a.lambda == b.lambda && a.mu == b.mu && a.nu == b.nu;
  }
  friend bool operator<(const SideRelation& a, const SideRelation& b) {
    return std::tie(a.lhs, a.lambda, a.mu, a.nu) < std::tie(b.lhs, b.lambda, b.mu, b.nu);
  }
};

// Integer relations between side lengths given their squares. Each candidate
// is certified exactly: with D = l^2 s_i - m^2 s_j - n^2 s_k the relation
// holds iff D >= 0 and D^2 = 4 m^2 n^2 s_j s_k.
std::vector<SideRelation> side_relation_search(const std::array<QuadScalar, 3>& squared, int bound,
                                               bool descending = false);
std::vector<SideRelation> side_relation_search(const Tri& master, int bound);

}  // namespace gt
