#pragma once

#include <optional>

#include "gentile/tiling.hpp"

namespace gt {

// Radicand shared by the coordinates of a triangle (1 when all are rational).
Rational radicand_of(const Tri& t);

// Canonical placements: C at the origin, B on the positive x-axis, A above.
Tri master_right_legs(const Rational& leg_ca, const Rational& leg_cb);
// Isosceles with base CB of length 2 and squared base : squared leg = base2 : leg2.
Tri master_isosceles(const Rational& base2, const Rational& leg2);
Tri master_equilateral();
// |CA| = p, |CB| = q, cos(C) = 1/3; coordinates lie in Q(sqrt 2).
Tri master_ratio(long p, long q);

// Corner-split family: angles alpha, 2*alpha, pi - 3*alpha with
// cos(alpha) = q / (2p) and q^2 = p^2 + p*r. q may be irrational (only q^2 is
// needed) unless the tiling is refined into a reptiling.
struct SplitParams {
  long p = 0;
  long r = 0;
  std::optional<long> q;
};

void check_split_params(const SplitParams& s, bool need_integer_q);
Tri master_split_family(const SplitParams& s);

Tiling trivial_reptiling(const Tri& master, int n);
Tiling trivial_gentiling(const Tri& master, int r);
Tiling rhombus_flip(const Tri& master, long p, long q, int n);
Tiling corner_split(const SplitParams& s, bool refine);
Tiling right_2gentiling(const Tri& master);
Tiling snover_reptiling(long l, long m);
Tiling kaiser_5gentiling();
Tiling rep3_306090();

// The two-tile split of the isosceles right triangle (0,0),(2,0),(1,1).
Tiling sierpinski_split();

}  // namespace gt
