#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "nonarch/berkovich.hpp"
#include "nonarch/padic.hpp"
#include "nonarch/series.hpp"

namespace nonarch {

/// A value together with the valuation of its truncation error; the true
/// quantity lies in value + p^error Z_p. error is +inf for exact results.
struct Certified {
  PadicNumber value;
  ExtRational error = ExtRational::pos_inf();

  /// error - v(value); +inf for exact values.
  ExtRational relative_error() const;
  /// Whether two certified values can describe the same quantity.
  bool agrees_with(const Certified& other) const;
};

/// mu(n) by trial division.
int moebius(long n);

enum class CurrentRing { kZ, kZp, kZmodN };

/**
 * Current on the Tate tree: values on cusp edges e_j and spine edges e'_j.
 *
 * Values are stored for j in [jmin, jmax]. A periodic current repeats that
 * block with period jmax - jmin + 1. A windowed current has zero cusp values
 * outside the block and spine values extended through the relation
 * c(e'_{j+1}) = c(e'_j) + c(e_{j+1}).
 */
struct Current {
  CurrentRing ring = CurrentRing::kZ;
  long modulus = 0;       // n for Z/nZ
  unsigned long p = 0;    // for Z_p
  bool periodic = false;
  long jmin = 0;
  long jmax = 0;
  std::vector<mpq_class> cusp;   // index j - jmin
  std::vector<mpq_class> spine;

  static Current windowed(long jmin, long jmax, CurrentRing ring = CurrentRing::kZ);
  static Current with_period(long jmin, long period, CurrentRing ring = CurrentRing::kZ);

  long period() const { return jmax - jmin + 1; }
  mpq_class cusp_at(long j) const;
  mpq_class spine_at(long j) const;
  void set(long j, const mpq_class& cusp_value, const mpq_class& spine_value);
  /// Fills spine values from spine(jmin) and the cusp values.
  void propagate_spine(const mpq_class& spine_at_jmin);
};

struct CurrentViolation {
  long index = 0;
  std::string reason;
};

std::optional<CurrentViolation> validate_current(const Current& c);

Current operator+(const Current& a, const Current& b);
Current operator*(const mpq_class& s, const Current& c);
/// Same values on every edge.
bool same_current(const Current& a, const Current& b);

/// c0: zero on cusps, one on the spine.
Current identity_current();

/// scalar * x^m * prod (x - q^j)^{k_j}
struct FactoredFunction {
  long m = 0;
  std::map<long, long> zeros;
  std::optional<mpq_class> scalar;
};

/// Tate parameter q with 0 < v(q) < inf.
void validate_q(const PadicNumber& q);

/// alpha(c) at z, truncated to M whole periods on each side for periodic
/// currents.
Certified alpha_eval(const Current& c, const PadicNumber& q, const PadicNumber& z, long periods = 8);
/// -log_p |alpha(c)|_b.
ExtRational alpha_seminorm(const Current& c, const PadicNumber& q, const BallPoint& b,
                           long periods = 8);

/// The current whose alpha is f up to a scalar; spine(0) is read off as the
/// slope of f on the annulus 0 < v(x) < v(q).
Current current_from_slopes(const FactoredFunction& f, const PadicNumber& q);

/// Factored form of alpha(c) for a windowed integer current.
FactoredFunction factored_alpha(const Current& c);

/// Evaluates f at z (scalar 1 when absent).
PadicNumber factored_eval(const FactoredFunction& f, const PadicNumber& q, const PadicNumber& z);

struct DeltaValue {
  std::optional<Certified> value;
  /// z is a cusp q^j with c(e_j) != 0: ord_z = -1 and no value.
  bool pole = false;
};

/// delta(c)/dx at z.
DeltaValue delta_eval(const Current& c, const PadicNumber& q, const PadicNumber& z,
                      long periods = 8);

/// c_n restricted to cusp indices <= J n.
Current moebius_current(long n, long big_j);

/// sum_{j <= J} mu(j) q^{jn}/(1 - q^{jn}) with error n(J+1)v(q).
Certified delta_at_one(long n, const PadicNumber& q, long big_j);

/// delta(c_P)(1) for c_P = a_0 c_0 + sum a_n c_n; error min (v(a_n) + n(J+1)v(q)).
Certified poly_current_eval(const std::vector<PadicNumber>& coeffs, const PadicNumber& q,
                            long big_j);

/// prod_{|k| <= M} f(q^{lk} z)/f(q^{lk} z0); needs m = 0 and sum k_j = 0.
Certified theta_product(const FactoredFunction& f, const PadicNumber& q, long l,
                        const PadicNumber& z, const PadicNumber& z0, long big_m);
/// F(q^l z)/F(z) for the truncated theta product F.
Certified theta_automorphy(const FactoredFunction& f, const PadicNumber& q, long l,
                           const PadicNumber& z, const PadicNumber& z0, long big_m);

/// Germ alpha(c)(z + T)/alpha(c)(z) to degree D.
BoundedSeries alpha_germ(const Current& c, const PadicNumber& q, const PadicNumber& z, long degree);

struct LadderResult {
  /// ord_z(delta(c)); -1 for a cusp. Meaningful only when stabilized.
  long ord = 0;
  bool cusp = false;
  /// I(n) = least m whose splitting point z_{1,m} lies on [z, z'_n].
  std::vector<long> indices;
  std::vector<mpq_class> ratios;  // I(n)/n
  std::vector<long> increments;   // I(n) - I(n-1), n >= 2
  bool stabilized = false;
  /// Estimate of ord + 1.
  mpq_class estimate;
};

LadderResult ladder_ord(const Current& c, const PadicNumber& q, const PadicNumber& z, long nmax);

}  // namespace nonarch
