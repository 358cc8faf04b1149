#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "nonarch/padic.hpp"
#include "nonarch/polynomial.hpp"

namespace nonarch {

/// v(a_k) >= slope * k + intercept for every k past the explicit coefficients.
struct AffineTail {
  mpq_class slope;
  mpq_class intercept;

  ExtRational at(long k) const { return ExtRational(mpq_class(slope * k + intercept)); }
};

/**
 * Power series sum a_k X^k: explicit coefficients for degrees 0..D and an
 * optional affine lower bound on the valuations of everything beyond D.
 * Without a tail the series is the polynomial given by its coefficients.
 */
class BoundedSeries {
 public:
  BoundedSeries() = default;
  BoundedSeries(unsigned long p, std::vector<PadicNumber> coeffs,
                std::optional<AffineTail> tail = std::nullopt);
  static BoundedSeries from_polynomial(unsigned long p, const Polynomial& f);

  unsigned long prime() const { return p_; }
  const std::vector<PadicNumber>& coeffs() const { return coeffs_; }
  const std::optional<AffineTail>& tail() const { return tail_; }
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_polynomial() const { return !tail_; }

  /// Certified lower bound on v(a_k); +inf for known zeros.
  ExtRational lower_bound(long k) const;

  /// inf over k >= from of (lower_bound(k) - s*k); -inf if the tail slope
  /// is below s.
  ExtRational minorant(const mpq_class& s, long from = 0) const;

  /// Re-expansion about z: the series of f(X + z). Needs slope + v(z) > 0
  /// when a tail is present; each shifted coefficient is capped at the
  /// precision the tail allows.
  BoundedSeries taylor_shift(const PadicNumber& z) const;

  friend BoundedSeries operator*(const BoundedSeries& a, const BoundedSeries& b);

 private:
  unsigned long p_ = 0;
  std::vector<PadicNumber> coeffs_;
  std::optional<AffineTail> tail_;
};

/// v_p(k!) by Legendre's formula.
long vp_factorial(unsigned long k, unsigned long p);

/// C(m, k) = m(m-1)...(m-k+1)/k! in Q_p. With a finite absprec the result
/// is rounded there; a result that would be zero at that precision raises
/// PrecisionError.
PadicNumber binom_fractional(const mpq_class& m, unsigned long k, unsigned long p,
                             long absprec = Qp::kExact);

/// Slope/intercept of the certified tail of (1 + g)^(1/p^m), derived from
/// the valuation data of g = f - 1 alone.
AffineTail root_tail_bound(const BoundedSeries& f, unsigned long m);

/// Binomial expansion of f^(1/p^m) for f(0) = 1. Explicit coefficients go
/// up to `degree` (default: f's degree for a series with a tail, 2p deg f for
/// a polynomial) and never past the degree f is known to.
BoundedSeries series_p_power_root(const BoundedSeries& f, unsigned long m, long degree = -1);

struct LogRadius {
  /// -inf for polynomials.
  ExtRational value;
  /// Set when no pair of explicit coefficients descends as fast as the tail
  /// bound, so the tail may be slack and the true radius larger.
  bool undecidable = false;
};

/// The log-radius rho beyond which the series converges at every ball point
/// b_{0,r} with -log_p r > rho.
LogRadius convergence_logradius(const BoundedSeries& f);

}  // namespace nonarch
