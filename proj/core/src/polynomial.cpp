#include "nonarch/polynomial.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace nonarch {

Polynomial::Polynomial(std::vector<PadicNumber> coeffs) : coeffs_(std::move(coeffs)) {}

Polynomial Polynomial::constant(const PadicNumber& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const PadicNumber& c, std::size_t k) {
  std::vector<PadicNumber> v(k + 1, PadicNumber(Qp(c.prime())));
  v[k] = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::linear_factor(const PadicNumber& a) {
  return Polynomial({-a, PadicNumber::exact(a.prime(), 1)});
}

Polynomial Polynomial::from_rationals(unsigned long p, const std::vector<mpq_class>& coeffs) {
  std::vector<PadicNumber> v;
  v.reserve(coeffs.size());
  for (const auto& c : coeffs) v.push_back(PadicNumber::exact(p, c));
  return Polynomial(std::move(v));
}

PadicNumber Polynomial::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : PadicNumber();
}

PadicNumber Polynomial::eval(const PadicNumber& x) const {
  PadicNumber acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::taylor_shift(const PadicNumber& a) const {
  // Horner in the ring of polynomials: acc <- acc * (X + a) + c_i.
  std::vector<PadicNumber> acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    std::vector<PadicNumber> next(acc.size() + 1);
    for (std::size_t i = 0; i < acc.size(); ++i) {
      next[i + 1] += acc[i];
      next[i] += acc[i] * a;
    }
    next[0] += *it;
    acc = std::move(next);
  }
  return Polynomial(std::move(acc));
}

Polynomial Polynomial::derivative() const {
  std::vector<PadicNumber> v;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    v.push_back(PadicNumber::exact(coeffs_[i].prime(), static_cast<long>(i)) * coeffs_[i]);
  }
  return Polynomial(std::move(v));
}

Polynomial Polynomial::pow(unsigned long e) const {
  if (coeffs_.empty()) {
    if (e == 0) throw std::invalid_argument("Polynomial: 0^0");
    return *this;
  }
  Polynomial result = constant(PadicNumber::exact(coeffs_.front().prime(), 1));
  for (unsigned long i = 0; i < e; ++i) result = result * *this;
  return result;
}

Polynomial operator+(const Polynomial& f, const Polynomial& g) {
  std::vector<PadicNumber> v(std::max(f.coeffs_.size(), g.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.coeff(i) + g.coeff(i);
  return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& f, const Polynomial& g) {
  std::vector<PadicNumber> v(std::max(f.coeffs_.size(), g.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.coeff(i) - g.coeff(i);
  return Polynomial(std::move(v));
}

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
  if (f.coeffs_.empty() || g.coeffs_.empty()) return Polynomial();
  std::vector<PadicNumber> v(f.coeffs_.size() + g.coeffs_.size() - 1);
  for (std::size_t i = 0; i < f.coeffs_.size(); ++i) {
    if (f.coeffs_[i].is_exact_zero()) continue;
    for (std::size_t j = 0; j < g.coeffs_.size(); ++j) v[i + j] += f.coeffs_[i] * g.coeffs_[j];
  }
  return Polynomial(std::move(v));
}

}  // namespace nonarch
