#pragma once

#include <array>
#include <optional>
#include <set>
#include <vector>

#include <gmpxx.h>

#include "nonarch/berkovich.hpp"
#include "nonarch/padic.hpp"

namespace nonarch {

/// Finite family of poles I in K0 (Q_p when C = 1, Q_p(pi) when C = 2) and
/// an expansion point x outside I.
struct PoleFamily {
  unsigned long p = 0;
  std::vector<PadicNumber> poles;
  PadicNumber x;
  int degree = 1;  // C = [K0 : Q_p]
};

void validate_family(const PoleFamily& fam);

struct OrderSetResult {
  long nmax = 0;
  /// Achieved orders k <= nmax.
  std::set<long> orders;
  /// u[n] = #(orders within [0, n]), n = 0..nmax.
  std::vector<long> u;
  /// dims[n] = dim_{Q_p} of the image of phi_n, n = 0..nmax+1.
  std::vector<long> dims;
  bool ill_conditioned = false;
};

/// Order at x of sum a_i/(X - i). The order of a nonzero combination is
/// below #I, so the default window #I certifies it.
long order_of_combination(const std::vector<PadicNumber>& a, const PoleFamily& fam,
                          long window = -1);

/// Which orders in [0, nmax] are achieved. `prec` caps inexact inputs only.
OrderSetResult order_set(const PoleFamily& fam, long nmax, long prec = kDefaultPrecision);

/// Smallest k in `orders` with k + 1 not a power of p.
std::optional<long> select_nonppower_order(const std::set<long>& orders, unsigned long p);

bool is_power_of(unsigned long n, unsigned long p);

struct NonPPowerCombination {
  long order = 0;
  std::vector<PadicNumber> coeffs;  // in Z_p, at least one unit
};

/// A combination with coefficients in Z_p whose order k has k+1 not a
/// power of p; MathFailure when the window [0, nmax] holds no such order.
NonPPowerCombination find_nonppower_order(const PoleFamily& fam, long nmax,
                                          long prec = kDefaultPrecision);

/// Representative of a in [0, p^n) with v_p(result - a) >= n.
mpz_class integer_approximation(const PadicNumber& a, long n);

/// prod ((z - i)/(x - i))^{e_i}
PadicNumber finite_product_eval(const std::vector<PadicNumber>& poles,
                                const std::vector<long>& exponents, const PadicNumber& x,
                                const PadicNumber& z);
/// Log-seminorm of the same product at a ball point.
ExtRational finite_product_eval(const std::vector<PadicNumber>& poles,
                                const std::vector<long>& exponents, const PadicNumber& x,
                                const BallPoint& b);

/// t, g(t), g^2(t), ... (count terms) for g = [[a, b], [c, d]].
std::vector<PadicNumber> moebius_orbit(const std::array<PadicNumber, 4>& g, const PadicNumber& t,
                                       long count);

}  // namespace nonarch
