#pragma once

#include <string>

#include <gmpxx.h>

#include "nonarch/series.hpp"

namespace nonarch {

/// Germ f at 0 with f(0) = 1, pulling back the Kummer torsors of G_m.
struct RamifiedGerm {
  BoundedSeries f;
  long e0 = 0;

  explicit RamifiedGerm(BoundedSeries series);
};

/// min{k >= 1 : a_k != 0}; PrecisionError if the first candidate is zero
/// only at precision, invalid_argument for a constant germ.
long ramification_index(const BoundedSeries& f);

/// (n + 1/(p-1))/N for the model germ 1 + X^N.
mpq_class splitting_logradius_exact(long big_n, long n, unsigned long p);

/// Convergence log-radius of the p^n-th root series of the germ.
LogRadius splitting_logradius_numeric(const RamifiedGerm& germ, long n);

/// Certified log-radius beyond which the p^n-th root of f exists, from the
/// tail bound alone (no coefficients are expanded).
mpq_class splitting_logradius_bound(const BoundedSeries& f, long n);

struct ArtinSchreierData {
  long e = 0;
  unsigned long p = 0;
  long m = 0;
  long d = 0;
  long genus = 0;
  /// g >= 1, i.e. e is not a power of p.
  bool forces_vertex = false;
  std::string residue_equation;
};

ArtinSchreierData artin_schreier_certificate(long e, unsigned long p);

/// Order at X = shift of (df/f)/dx, where f is re-expanded about shift.
long dlog_ord(const BoundedSeries& f, const PadicNumber& shift);

}  // namespace nonarch
