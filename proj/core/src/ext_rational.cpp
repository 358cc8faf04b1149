#include "nonarch/ext_rational.hpp"

#include <stdexcept>

namespace nonarch {

ExtRational::ExtRational(long num, long den) : value_(num, den) {
  if (den == 0) throw std::invalid_argument("ExtRational: zero denominator");
  value_.canonicalize();
}

ExtRational ExtRational::parse(std::string_view text) {
  if (text == "inf" || text == "+inf") return pos_inf();
  if (text == "-inf") return neg_inf();
  return ExtRational(parse_rational(text));
}

const mpq_class& ExtRational::value() const {
  if (!is_finite()) throw std::logic_error("ExtRational: value of an infinite quantity");
  return value_;
}

mpz_class ExtRational::ceil() const {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), value().get_num_mpz_t(), value_.get_den_mpz_t());
  return r;
}

mpz_class ExtRational::floor() const {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), value().get_num_mpz_t(), value_.get_den_mpz_t());
  return r;
}

std::string ExtRational::to_string() const {
  switch (kind_) {
    case Kind::kNegInf: return "-inf";
    case Kind::kPosInf: return "inf";
    case Kind::kFinite: break;
  }
  return rational_string(value_);
}

ExtRational ExtRational::operator-() const {
  switch (kind_) {
    case Kind::kNegInf: return pos_inf();
    case Kind::kPosInf: return neg_inf();
    case Kind::kFinite: break;
  }
  return ExtRational(mpq_class(-value_));
}

ExtRational operator+(const ExtRational& a, const ExtRational& b) {
  if (a.is_finite() && b.is_finite()) return ExtRational(mpq_class(a.value_ + b.value_));
  if ((a.is_pos_inf() && b.is_neg_inf()) || (a.is_neg_inf() && b.is_pos_inf())) {
    throw std::domain_error("ExtRational: inf - inf is undefined");
  }
  return a.is_finite() ? b : a;
}

ExtRational operator*(const ExtRational& a, const mpq_class& s) {
  if (a.is_finite()) return ExtRational(mpq_class(a.value_ * s));
  if (s == 0) throw std::domain_error("ExtRational: 0 * inf is undefined");
  return s > 0 ? a : -a;
}

bool operator==(const ExtRational& a, const ExtRational& b) {
  if (a.kind_ != b.kind_) return false;
  return !a.is_finite() || a.value_ == b.value_;
}

std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b) {
  if (a.kind_ != b.kind_) {
    return static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_);
  }
  if (!a.is_finite()) return std::strong_ordering::equal;
  int c = cmp(a.value_, b.value_);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

const ExtRational& min(const ExtRational& a, const ExtRational& b) { return b < a ? b : a; }
const ExtRational& max(const ExtRational& a, const ExtRational& b) { return a < b ? b : a; }

mpq_class parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational");
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational: " + s);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

std::string rational_string(const mpq_class& q) {
  mpq_class c(q);
  c.canonicalize();
  return c.get_str(10);
}

long integer_valuation(const mpz_class& n, unsigned long p) {
  if (n == 0) throw std::domain_error("valuation of 0");
  mpz_class m(n);
  mpz_class pz(p);
  return static_cast<long>(mpz_remove(m.get_mpz_t(), m.get_mpz_t(), pz.get_mpz_t()));
}

long rational_valuation(const mpq_class& q, unsigned long p) {
  return integer_valuation(q.get_num(), p) - integer_valuation(q.get_den(), p);
}

mpz_class ipow(unsigned long base, unsigned long exponent) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exponent);
  return r;
}

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace nonarch
