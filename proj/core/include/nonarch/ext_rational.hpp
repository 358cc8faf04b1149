#pragma once

#include <compare>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace nonarch {

/**
 * A rational number extended by -inf and +inf.
 *
 * Valuations, log-radii and error valuations all live here: the zero
 * element has valuation +inf, a type-1 point has log-radius +inf, and an
 * entire series has convergence log-radius -inf.
 */
class ExtRational {
 public:
  enum class Kind { kNegInf, kFinite, kPosInf };

  ExtRational() = default;
  ExtRational(const mpq_class& q) : value_(q) { value_.canonicalize(); }  // NOLINT
  ExtRational(long n) : value_(n) {}                                      // NOLINT
  ExtRational(long num, long den);

  static ExtRational pos_inf() { return ExtRational(Kind::kPosInf); }
  static ExtRational neg_inf() { return ExtRational(Kind::kNegInf); }

  /// Parses "a/b", "a", "inf", "+inf" or "-inf".
  static ExtRational parse(std::string_view text);

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::kFinite; }
  bool is_pos_inf() const { return kind_ == Kind::kPosInf; }
  bool is_neg_inf() const { return kind_ == Kind::kNegInf; }

  /// Requires is_finite().
  const mpq_class& value() const;

  /// Smallest integer >= value; requires is_finite().
  mpz_class ceil() const;
  mpz_class floor() const;

  std::string to_string() const;

  ExtRational operator-() const;
  friend ExtRational operator+(const ExtRational& a, const ExtRational& b);
  friend ExtRational operator-(const ExtRational& a, const ExtRational& b) { return a + (-b); }
  /// Scaling by a finite rational; 0 * inf is rejected.
  friend ExtRational operator*(const ExtRational& a, const mpq_class& s);
  friend ExtRational operator*(const mpq_class& s, const ExtRational& a) { return a * s; }

  friend bool operator==(const ExtRational& a, const ExtRational& b);
  friend std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b);

 private:
  explicit ExtRational(Kind k) : kind_(k) {}

  Kind kind_ = Kind::kFinite;
  mpq_class value_{0};
};

const ExtRational& min(const ExtRational& a, const ExtRational& b);
const ExtRational& max(const ExtRational& a, const ExtRational& b);

/// Exact rational parsing of "a", "-a", "a/b" (decimal integers).
mpq_class parse_rational(std::string_view text);

/// Canonical "a/b" (or "a" for integers) rendering.
std::string rational_string(const mpq_class& q);

/// Multiplicity of the prime p in a nonzero integer.
long integer_valuation(const mpz_class& n, unsigned long p);

/// Multiplicity of p in a nonzero rational (may be negative).
long rational_valuation(const mpq_class& q, unsigned long p);

mpz_class ipow(unsigned long base, unsigned long exponent);

bool is_prime(unsigned long n);

}  // namespace nonarch
