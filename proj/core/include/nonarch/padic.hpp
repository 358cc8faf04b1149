#pragma once

#include <limits>
#include <string>

#include <gmpxx.h>

#include "nonarch/ext_rational.hpp"

namespace nonarch {

/// Default absolute precision (in powers of p) for rounded computations.
inline constexpr long kDefaultPrecision = 64;

/**
 * Element of Q_p carried at a tracked absolute precision.
 *
 * A value is either exact (a rational number, absprec == kExact) or known
 * modulo p^absprec. Nonzero values are stored as p^val * unit with the unit
 * coprime to p; inexact units are integers reduced mod p^(absprec - val).
 * A value congruent to 0 modulo p^absprec is "zero at precision" and has
 * no valuation. Arithmetic propagates precision the usual capped-absolute
 * way and never rounds silently.
 *
 * A prime of 0 is allowed for the exact zero only; it adopts the prime of
 * whatever it is combined with.
 */
class Qp {
 public:
  static constexpr long kExact = std::numeric_limits<long>::max();
  static constexpr long kZeroVal = std::numeric_limits<long>::max();

  Qp() = default;
  explicit Qp(unsigned long p) : p_(p) {}

  static Qp exact(unsigned long p, const mpq_class& q);
  static Qp approx(unsigned long p, const mpq_class& q, long absprec);
  static Qp from_digits(unsigned long p, long val, const mpz_class& unit, long absprec);
  static Qp zero(unsigned long p, long absprec = kExact);

  unsigned long prime() const { return p_; }
  bool is_exact() const { return absprec_ == kExact; }
  bool is_zero() const { return val_ == kZeroVal; }
  bool is_exact_zero() const { return is_zero() && is_exact(); }

  /// kZeroVal when the value is zero at its precision.
  long valuation() const { return val_; }
  long absprec() const { return absprec_; }
  long relprec() const;
  const mpq_class& unit() const { return unit_; }

  /// The exact rational p^val * unit (0 for a zero).
  mpq_class lift() const;

  /// Residue in [0, p^n) of an element of Z_p known to at least n digits.
  mpz_class residue(long n) const;

  /// Drops digits beyond absolute precision n (no-op if already coarser).
  Qp round(long n) const;

  ExtRational precision() const;
  ExtRational ext_valuation() const;

  Qp operator-() const;
  Qp inverse() const;
  Qp pow(long e) const;

  friend Qp operator+(const Qp& a, const Qp& b);
  friend Qp operator-(const Qp& a, const Qp& b) { return a + (-b); }
  friend Qp operator*(const Qp& a, const Qp& b);
  friend Qp operator/(const Qp& a, const Qp& b) { return a * b.inverse(); }

  bool equals_at_precision(const Qp& other) const { return (*this - other).is_zero(); }

  std::string to_string() const;

 private:
  static Qp make(unsigned long p, const mpq_class& q, long absprec);
  static unsigned long common_prime(const Qp& a, const Qp& b);

  unsigned long p_ = 0;
  long val_ = kZeroVal;
  mpq_class unit_{0};
  long absprec_ = kExact;
};

/**
 * Element of Q_p or of the ramified quadratic extension Q_p(pi), pi^2 = p.
 *
 * Stored as a + b*pi with a, b in Q_p. Because v(a) is an integer and
 * v(b*pi) is a half-integer the two never cancel, so
 * v(a + b*pi) = min(v(a), v(b) + 1/2) exactly.
 */
class PadicNumber {
 public:
  PadicNumber() = default;
  PadicNumber(const Qp& a) : a_(a), b_(a.prime()) {}  // NOLINT
  PadicNumber(const Qp& a, const Qp& b);

  static PadicNumber exact(unsigned long p, const mpq_class& q) { return Qp::exact(p, q); }
  static PadicNumber exact(unsigned long p, long n) { return Qp::exact(p, mpq_class(n)); }
  static PadicNumber approx(unsigned long p, const mpq_class& q, long absprec) {
    return Qp::approx(p, q, absprec);
  }
  /// The uniformizer pi of Q_p(pi).
  static PadicNumber pi(unsigned long p);

  unsigned long prime() const { return a_.prime() ? a_.prime() : b_.prime(); }
  bool ramified() const { return ramified_; }
  const Qp& a() const { return a_; }
  const Qp& b() const { return b_; }

  /// +inf exactly when the value is zero at its precision.
  ExtRational valuation() const;
  /// Absolute precision; +inf for exact values.
  ExtRational precision() const;

  bool is_zero() const { return valuation().is_pos_inf(); }
  bool is_exact() const { return a_.is_exact() && b_.is_exact(); }
  bool is_exact_zero() const { return a_.is_exact_zero() && b_.is_exact_zero(); }
  /// Exact element of Q.
  bool is_rational() const { return a_.is_exact() && b_.is_exact_zero(); }
  /// Requires is_rational().
  mpq_class rational() const;

  /// Caps the absolute precision at n (rational, may be half-integral).
  PadicNumber round(const ExtRational& n) const;

  PadicNumber conjugate() const;
  PadicNumber operator-() const;
  PadicNumber inverse() const;
  PadicNumber pow(long e) const;

  friend PadicNumber operator+(const PadicNumber& x, const PadicNumber& y);
  friend PadicNumber operator-(const PadicNumber& x, const PadicNumber& y) { return x + (-y); }
  friend PadicNumber operator*(const PadicNumber& x, const PadicNumber& y);
  friend PadicNumber operator/(const PadicNumber& x, const PadicNumber& y) {
    return x * y.inverse();
  }
  PadicNumber& operator+=(const PadicNumber& y) { return *this = *this + y; }
  PadicNumber& operator-=(const PadicNumber& y) { return *this = *this - y; }
  PadicNumber& operator*=(const PadicNumber& y) { return *this = *this * y; }

  bool equals_at_precision(const PadicNumber& other) const { return (*this - other).is_zero(); }

  std::string to_string() const;

 private:
  Qp a_;
  Qp b_;
  bool ramified_ = false;
};

/// Lower bound on the valuation: the valuation itself when determined,
/// otherwise the precision (+inf for an exact zero).
ExtRational valuation_lower_bound(const PadicNumber& x);

}  // namespace nonarch
