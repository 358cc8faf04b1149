#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "nonarch/padic.hpp"

namespace nonarch {

/// Dense polynomial over Q_p or Q_p(pi); coefficient i multiplies X^i.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<PadicNumber> coeffs);

  static Polynomial constant(const PadicNumber& c);
  static Polynomial monomial(const PadicNumber& c, std::size_t k);
  /// X - a
  static Polynomial linear_factor(const PadicNumber& a);
  static Polynomial from_rationals(unsigned long p, const std::vector<mpq_class>& coeffs);

  const std::vector<PadicNumber>& coeffs() const { return coeffs_; }
  /// -1 for the empty polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  PadicNumber coeff(std::size_t k) const;

  PadicNumber eval(const PadicNumber& x) const;
  /// f(X + a)
  Polynomial taylor_shift(const PadicNumber& a) const;
  Polynomial derivative() const;
  Polynomial pow(unsigned long e) const;

  friend Polynomial operator+(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator-(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator*(const Polynomial& f, const Polynomial& g);

 private:
  std::vector<PadicNumber> coeffs_;
};

}  // namespace nonarch
