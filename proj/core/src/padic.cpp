#include "nonarch/padic.hpp"

#include <algorithm>
#include <stdexcept>

#include "nonarch/errors.hpp"

namespace nonarch {

namespace {

long add_prec(long a, long b) {
  if (a == Qp::kExact || b == Qp::kExact) return Qp::kExact;
  return a + b;
}

mpq_class scale_by_p_power(const mpq_class& q, unsigned long p, long e) {
  mpq_class r(q);
  if (e > 0) {
    r *= mpq_class(ipow(p, static_cast<unsigned long>(e)));
  } else if (e < 0) {
    r /= mpq_class(ipow(p, static_cast<unsigned long>(-e)));
  }
  r.canonicalize();
  return r;
}

}  // namespace

Qp Qp::make(unsigned long p, const mpq_class& q, long absprec) {
  Qp r(p);
  r.absprec_ = absprec;
  if (q == 0) return r;
  if (p < 2) throw std::invalid_argument("Qp: nonzero value requires a prime");
  const long v = rational_valuation(q, p);
  if (absprec != kExact && v >= absprec) return r;
  mpq_class u = scale_by_p_power(q, p, -v);
  r.val_ = v;
  if (absprec == kExact) {
    r.unit_ = u;
    return r;
  }
  const mpz_class mod = ipow(p, static_cast<unsigned long>(absprec - v));
  mpz_class inv;
  if (mpz_invert(inv.get_mpz_t(), u.get_den_mpz_t(), mod.get_mpz_t()) == 0) {
    throw std::logic_error("Qp: unit denominator not invertible");
  }
  mpz_class res = u.get_num() * inv;
  mpz_fdiv_r(res.get_mpz_t(), res.get_mpz_t(), mod.get_mpz_t());
  r.unit_ = mpq_class(res);
  return r;
}

unsigned long Qp::common_prime(const Qp& a, const Qp& b) {
  if (a.p_ == 0) return b.p_;
  if (b.p_ == 0 || a.p_ == b.p_) return a.p_;
  throw std::invalid_argument("Qp: mixing different primes");
}

Qp Qp::exact(unsigned long p, const mpq_class& q) { return make(p, q, kExact); }

Qp Qp::approx(unsigned long p, const mpq_class& q, long absprec) { return make(p, q, absprec); }

Qp Qp::from_digits(unsigned long p, long val, const mpz_class& unit, long absprec) {
  if (absprec == kExact) throw std::invalid_argument("Qp::from_digits needs a finite precision");
  if (unit != 0 && integer_valuation(unit, p) != 0) {
    throw std::invalid_argument("Qp::from_digits: unit divisible by p");
  }
  return make(p, scale_by_p_power(mpq_class(unit), p, val), absprec);
}

Qp Qp::zero(unsigned long p, long absprec) {
  Qp r(p);
  r.absprec_ = absprec;
  return r;
}

long Qp::relprec() const {
  if (is_exact()) return kExact;
  if (is_zero()) return 0;
  return absprec_ - val_;
}

mpq_class Qp::lift() const {
  if (is_zero()) return 0;
  return scale_by_p_power(unit_, p_, val_);
}

mpz_class Qp::residue(long n) const {
  if (n < 0) throw std::invalid_argument("Qp::residue: negative digit count");
  if (absprec_ < n) throw PrecisionError("residue mod p^" + std::to_string(n) +
                                         " needs more digits than are known");
  if (is_zero()) return 0;
  if (val_ < 0) throw std::domain_error("Qp::residue: value is not in Z_p");
  const mpz_class mod = ipow(p_, static_cast<unsigned long>(n));
  const mpq_class q = lift();
  mpz_class inv;
  if (mpz_invert(inv.get_mpz_t(), q.get_den_mpz_t(), mod.get_mpz_t()) == 0) {
    if (n == 0) return 0;
    throw std::logic_error("Qp::residue: denominator not invertible");
  }
  mpz_class res = q.get_num() * inv;
  mpz_fdiv_r(res.get_mpz_t(), res.get_mpz_t(), mod.get_mpz_t());
  return res;
}

Qp Qp::round(long n) const {
  if (n >= absprec_) return *this;
  return make(p_, lift(), n);
}

ExtRational Qp::precision() const {
  return is_exact() ? ExtRational::pos_inf() : ExtRational(absprec_);
}

ExtRational Qp::ext_valuation() const {
  return is_zero() ? ExtRational::pos_inf() : ExtRational(val_);
}

Qp Qp::operator-() const {
  if (is_zero()) return *this;
  return make(p_, -lift(), absprec_);
}

Qp Qp::inverse() const {
  if (is_exact_zero()) throw std::domain_error("Qp: division by zero");
  if (is_zero()) throw PrecisionError("Qp: inverting a value that is zero at precision");
  const long absprec = is_exact() ? kExact : -val_ + relprec();
  return make(p_, 1 / lift(), absprec);
}

Qp Qp::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  if (is_exact()) {
    const mpq_class q = lift();
    mpq_class r;
    mpz_pow_ui(r.get_num_mpz_t(), q.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(r.get_den_mpz_t(), q.get_den_mpz_t(), static_cast<unsigned long>(e));
    return make(p_, r, kExact);
  }
  Qp result = exact(p_, 1);
  Qp base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Qp operator+(const Qp& a, const Qp& b) {
  const unsigned long p = Qp::common_prime(a, b);
  if (a.is_exact_zero()) return b.p_ ? b : Qp(p);
  if (b.is_exact_zero()) return a;
  return Qp::make(p, a.lift() + b.lift(), std::min(a.absprec_, b.absprec_));
}

Qp operator*(const Qp& a, const Qp& b) {
  const unsigned long p = Qp::common_prime(a, b);
  if (a.is_exact_zero() || b.is_exact_zero()) return Qp(p);
  if (a.is_exact() && b.is_exact()) return Qp::make(p, a.lift() * b.lift(), Qp::kExact);
  if (a.is_zero() || b.is_zero()) {
    // A zero known mod p^k times y is known mod p^(k + v(y)).
    long absprec;
    if (a.is_zero() && b.is_zero()) {
      absprec = add_prec(a.absprec_, b.absprec_);
    } else if (a.is_zero()) {
      absprec = a.absprec_ + b.val_;
    } else {
      absprec = b.absprec_ + a.val_;
    }
    return Qp::zero(p, absprec);
  }
  const long val = a.val_ + b.val_;
  const long rel = std::min(a.relprec(), b.relprec());
  return Qp::make(p, a.lift() * b.lift(), val + rel);
}

std::string Qp::to_string() const {
  std::string s = is_zero() ? std::string("0") : rational_string(lift());
  if (!is_exact()) s += " + O(" + std::to_string(p_) + "^" + std::to_string(absprec_) + ")";
  return s;
}

// ---------------------------------------------------------------------------

PadicNumber::PadicNumber(const Qp& a, const Qp& b) : a_(a), b_(b), ramified_(true) {
  if (a.prime() && b.prime() && a.prime() != b.prime()) {
    throw std::invalid_argument("PadicNumber: components over different primes");
  }
  if (a_.prime() == 0) a_ = Qp(b.prime());
  if (b_.prime() == 0) b_ = Qp(a.prime());
}

PadicNumber PadicNumber::pi(unsigned long p) { return PadicNumber(Qp(p), Qp::exact(p, 1)); }

ExtRational PadicNumber::precision() const {
  if (!ramified_) return a_.precision();
  return min(a_.precision(), b_.precision() + ExtRational(1, 2));
}

ExtRational PadicNumber::valuation() const {
  if (!ramified_) return a_.ext_valuation();
  const ExtRational candidate =
      min(a_.ext_valuation(), b_.ext_valuation() + ExtRational(1, 2));
  return candidate < precision() ? candidate : ExtRational::pos_inf();
}

mpq_class PadicNumber::rational() const {
  if (!is_rational()) throw std::logic_error("PadicNumber: not an exact rational");
  return a_.lift();
}

PadicNumber PadicNumber::round(const ExtRational& n) const {
  if (n.is_pos_inf()) return *this;
  if (!n.is_finite()) throw std::invalid_argument("PadicNumber::round: -inf precision");
  PadicNumber r = *this;
  r.a_ = a_.round(n.ceil().get_si());
  if (ramified_) r.b_ = b_.round((n - ExtRational(1, 2)).ceil().get_si());
  return r;
}

PadicNumber PadicNumber::conjugate() const {
  PadicNumber r = *this;
  r.b_ = -b_;
  return r;
}

PadicNumber PadicNumber::operator-() const {
  PadicNumber r = *this;
  r.a_ = -a_;
  r.b_ = -b_;
  return r;
}

PadicNumber operator+(const PadicNumber& x, const PadicNumber& y) {
  PadicNumber r;
  r.a_ = x.a_ + y.a_;
  r.b_ = x.b_ + y.b_;
  r.ramified_ = x.ramified_ || y.ramified_;
  return r;
}

PadicNumber operator*(const PadicNumber& x, const PadicNumber& y) {
  PadicNumber r;
  r.ramified_ = x.ramified_ || y.ramified_;
  if (!r.ramified_) {
    r.a_ = x.a_ * y.a_;
    r.b_ = Qp(r.a_.prime());
    return r;
  }
  const unsigned long p = x.prime() ? x.prime() : y.prime();
  r.a_ = x.a_ * y.a_ + Qp::exact(p, p) * x.b_ * y.b_;
  r.b_ = x.a_ * y.b_ + x.b_ * y.a_;
  return r;
}

PadicNumber PadicNumber::inverse() const {
  if (!ramified_) return PadicNumber(a_.inverse());
  if (is_exact_zero()) throw std::domain_error("PadicNumber: division by zero");
  const unsigned long p = prime();
  const Qp norm = a_ * a_ - Qp::exact(p, p) * b_ * b_;
  if (norm.is_zero()) throw PrecisionError("PadicNumber: inverting a value that is zero at precision");
  const Qp inv = norm.inverse();
  return PadicNumber(a_ * inv, -b_ * inv);
}

PadicNumber PadicNumber::pow(long e) const {
  if (!ramified_) return PadicNumber(a_.pow(e));
  if (e < 0) return inverse().pow(-e);
  PadicNumber result = PadicNumber(Qp::exact(prime(), 1), Qp(prime()));
  PadicNumber base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

std::string PadicNumber::to_string() const {
  if (!ramified_) return a_.to_string();
  return "(" + a_.to_string() + ") + (" + b_.to_string() + ")*pi";
}

ExtRational valuation_lower_bound(const PadicNumber& x) {
  const ExtRational v = x.valuation();
  return v.is_pos_inf() ? x.precision() : v;
}

}  // namespace nonarch
