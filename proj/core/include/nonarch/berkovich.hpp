#pragma once

#include <optional>
#include <vector>

#include "nonarch/ext_rational.hpp"
#include "nonarch/padic.hpp"
#include "nonarch/polynomial.hpp"

namespace nonarch {

/// The point b_{a,r} of the Berkovich affine line: sup-seminorm over the
/// closed ball B(a, r), with log-radius rho = -log_p r (+inf for r = 0).
struct BallPoint {
  PadicNumber center;
  ExtRational logradius = ExtRational::pos_inf();
};

/// -log_p |f|_b = min_i (v(a_i) + i rho) over the coefficients of f about
/// the centre of b; v(f(a)) for a type-1 point.
ExtRational seminorm(const Polynomial& f, const BallPoint& b);

bool same_point(const BallPoint& b1, const BallPoint& b2);

/// 1 for r = 0, 2 otherwise (log-radii are rational).
int classify_type(const BallPoint& b);

struct JoinResult {
  BallPoint point;
  /// The two centres agree at working precision; point is then type 1.
  bool coincident = false;
};

/// Smallest ball containing a1 and a2.
JoinResult join(const PadicNumber& a1, const PadicNumber& a2);

/// b_{z, v(z) + n + 1/(p-1)}
BallPoint ladder_point(const PadicNumber& z, long n, unsigned long p);

/// Ray of points b_{z,rho} for rho running from rho_start down to rho_end.
struct Segment {
  PadicNumber anchor;
  ExtRational rho_start;
  ExtRational rho_end;

  BallPoint start() const { return {anchor, rho_start}; }
  BallPoint end() const { return {anchor, rho_end}; }
  bool contains(const BallPoint& b) const;
};

/// [x, y] realized as at most two anchored rays meeting at the join of the
/// centres (or nested when one ball contains the other).
std::vector<Segment> segment_between(const BallPoint& x, const BallPoint& y);

}  // namespace nonarch
