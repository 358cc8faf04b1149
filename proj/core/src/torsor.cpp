#include "nonarch/torsor.hpp"

#include <stdexcept>
#include <utility>

#include "nonarch/errors.hpp"

namespace nonarch {

RamifiedGerm::RamifiedGerm(BoundedSeries series) : f(std::move(series)) {
  if (f.coeffs().empty() || !f.coeffs()[0].is_rational() || f.coeffs()[0].rational() != 1) {
    throw std::invalid_argument("RamifiedGerm: f(0) must be exactly 1");
  }
  e0 = ramification_index(f);
}

long ramification_index(const BoundedSeries& f) {
  for (long k = 1; k <= f.degree(); ++k) {
    const PadicNumber& c = f.coeffs()[static_cast<std::size_t>(k)];
    if (c.is_exact_zero()) continue;
    if (c.is_zero()) {
      throw PrecisionError("ramification_index: coefficient " + std::to_string(k) +
                           " vanishes only at working precision");
    }
    return k;
  }
  if (f.is_polynomial()) throw std::invalid_argument("ramification_index: constant germ");
  throw PrecisionError("ramification_index: no nonzero coefficient up to degree " +
                       std::to_string(f.degree()));
}

mpq_class splitting_logradius_exact(long big_n, long n, unsigned long p) {
  if (big_n < 1 || n < 0 || !is_prime(p)) {
    throw std::invalid_argument("splitting_logradius_exact: need N >= 1, n >= 0, p prime");
  }
  mpq_class r = (mpq_class(n) + mpq_class(1, p - 1)) / big_n;
  r.canonicalize();
  return r;
}

LogRadius splitting_logradius_numeric(const RamifiedGerm& germ, long n) {
  if (n < 0) throw std::invalid_argument("splitting_logradius_numeric: n must be nonnegative");
  return convergence_logradius(series_p_power_root(germ.f, static_cast<unsigned long>(n)));
}

mpq_class splitting_logradius_bound(const BoundedSeries& f, long n) {
  if (n < 1) throw std::invalid_argument("splitting_logradius_bound: n must be positive");
  return -root_tail_bound(f, static_cast<unsigned long>(n)).slope;
}

ArtinSchreierData artin_schreier_certificate(long e, unsigned long p) {
  if (e < 1) throw std::invalid_argument("artin_schreier_certificate: e must be positive");
  if (!is_prime(p)) throw std::invalid_argument("artin_schreier_certificate: p must be prime");
  ArtinSchreierData out;
  out.e = e;
  out.p = p;
  long d = e;
  while (d % static_cast<long>(p) == 0) {
    d /= static_cast<long>(p);
    ++out.m;
  }
  out.d = d;
  out.genus = (d - 1) * static_cast<long>(p - 1) / 2;
  out.forces_vertex = out.genus >= 1;
  out.residue_equation = "T^" + std::to_string(p) + " - T = X^" + std::to_string(e);
  return out;
}

long dlog_ord(const BoundedSeries& f, const PadicNumber& shift) {
  const BoundedSeries g = f.taylor_shift(shift);
  if (g.coeffs().empty()) throw std::invalid_argument("dlog_ord: f is identically zero");
  const PadicNumber& c0 = g.coeffs()[0];
  if (c0.is_exact_zero()) return -1;
  if (c0.is_zero()) throw PrecisionError("dlog_ord: f(z) vanishes only at working precision");
  return ramification_index(g) - 1;
}

}  // namespace nonarch
