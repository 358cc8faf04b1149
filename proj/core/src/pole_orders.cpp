#include "nonarch/pole_orders.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "nonarch/errors.hpp"
#include "nonarch/linalg.hpp"

namespace nonarch {

namespace {

PadicNumber cap(const PadicNumber& v, long prec) {
  return v.is_exact() ? v : v.round(ExtRational(prec));
}

/// Rows of phi_n: coefficient of T^k in 1/(X - i) about x, i.e.
/// -(i - x)^{-(k+1)}, split into Q_p components when C = 2.
QpMatrix phi_rows(const PoleFamily& fam, long n) {
  QpMatrix rows;
  std::vector<PadicNumber> inv;
  for (const auto& i : fam.poles) inv.push_back((i - fam.x).inverse());
  std::vector<PadicNumber> power = inv;
  for (long k = 0; k < n; ++k) {
    std::vector<Qp> ra;
    std::vector<Qp> rb;
    for (std::size_t c = 0; c < inv.size(); ++c) {
      const PadicNumber e = -power[c];
      ra.push_back(e.a());
      rb.push_back(e.b());
      power[c] = power[c] * inv[c];
    }
    rows.push_back(std::move(ra));
    if (fam.degree == 2) rows.push_back(std::move(rb));
  }
  return rows;
}

/// Coefficient of T^k of sum a_i/(X - i) about x.
PadicNumber expansion_coeff(const std::vector<PadicNumber>& a, const PoleFamily& fam, long k) {
  PadicNumber acc(Qp(fam.p));
  for (std::size_t c = 0; c < a.size(); ++c) {
    if (a[c].is_exact_zero()) continue;
    acc -= a[c] * (fam.poles[c] - fam.x).pow(-(k + 1));
  }
  return acc;
}

}  // namespace

void validate_family(const PoleFamily& fam) {
  if (!is_prime(fam.p)) throw std::invalid_argument("pole family: p must be prime");
  if (fam.degree != 1 && fam.degree != 2) throw std::invalid_argument("pole family: C must be 1 or 2");
  auto check = [&](const PadicNumber& v) {
    if (v.prime() != 0 && v.prime() != fam.p) throw std::invalid_argument("pole family: mixed primes");
    if (fam.degree == 1 && v.ramified() && !v.b().is_exact_zero()) {
      throw std::invalid_argument("pole family: ramified value with C = 1");
    }
  };
  check(fam.x);
  for (std::size_t i = 0; i < fam.poles.size(); ++i) {
    check(fam.poles[i]);
    const PadicNumber d = fam.poles[i] - fam.x;
    if (d.is_zero()) throw std::invalid_argument("pole family: x coincides with a pole");
    for (std::size_t j = 0; j < i; ++j) {
      if ((fam.poles[i] - fam.poles[j]).is_zero()) {
        throw std::invalid_argument("pole family: poles not distinct at working precision");
      }
    }
  }
}

long order_of_combination(const std::vector<PadicNumber>& a, const PoleFamily& fam, long window) {
  validate_family(fam);
  if (a.size() != fam.poles.size()) throw std::invalid_argument("order_of_combination: size mismatch");
  if (std::all_of(a.begin(), a.end(), [](const PadicNumber& c) { return c.is_exact_zero(); })) {
    throw std::invalid_argument("order_of_combination: zero coefficient vector");
  }
  for (const auto& c : a) {
    if (c.ramified() && !c.b().is_exact_zero()) {
      throw std::invalid_argument("order_of_combination: coefficients must lie in Q_p");
    }
  }
  if (window < 0) window = static_cast<long>(fam.poles.size());
  for (long k = 0; k < window; ++k) {
    const PadicNumber c = expansion_coeff(a, fam, k);
    if (c.is_exact_zero()) continue;
    if (c.is_zero()) {
      throw PrecisionError("order_of_combination: coefficient of T^" + std::to_string(k) +
                           " vanishes only at working precision");
    }
    return k;
  }
  throw PrecisionError("order_of_combination: order is at least the window " +
                       std::to_string(window));
}

OrderSetResult order_set(const PoleFamily& fam_in, long nmax, long prec) {
  if (nmax < 0) throw std::invalid_argument("order_set: nmax must be nonnegative");
  PoleFamily fam = fam_in;
  fam.x = cap(fam.x, prec);
  for (auto& i : fam.poles) i = cap(i, prec);
  validate_family(fam);

  OrderSetResult out;
  out.nmax = nmax;
  const QpMatrix all_rows = phi_rows(fam, nmax + 1);
  const std::size_t per_order = static_cast<std::size_t>(fam.degree);
  for (long n = 0; n <= nmax + 1; ++n) {
    const QpMatrix rows(all_rows.begin(),
                        all_rows.begin() + static_cast<std::ptrdiff_t>(per_order * n));
    const KernelResult k = certified_kernel(rows, fam.poles.size(), fam.p);
    out.dims.push_back(k.rank);
    out.ill_conditioned = out.ill_conditioned || k.ill_conditioned;
  }
  long count = 0;
  for (long k = 0; k <= nmax; ++k) {
    if (out.dims[k + 1] > out.dims[k]) {
      out.orders.insert(k);
      ++count;
    }
    out.u.push_back(count);
  }
  return out;
}

bool is_power_of(unsigned long n, unsigned long p) {
  if (n == 0) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

std::optional<long> select_nonppower_order(const std::set<long>& orders, unsigned long p) {
  for (long k : orders) {
    if (k >= 0 && !is_power_of(static_cast<unsigned long>(k + 1), p)) return k;
  }
  return std::nullopt;
}

NonPPowerCombination find_nonppower_order(const PoleFamily& fam_in, long nmax, long prec) {
  PoleFamily fam = fam_in;
  fam.x = cap(fam.x, prec);
  for (auto& i : fam.poles) i = cap(i, prec);
  const OrderSetResult set = order_set(fam, nmax, prec);
  const std::optional<long> k = select_nonppower_order(set.orders, fam.p);
  if (!k) {
    throw MathFailure("no achieved order k <= " + std::to_string(nmax) +
                      " has k+1 outside the powers of " + std::to_string(fam.p));
  }
  const QpMatrix rows = phi_rows(fam, *k);
  const KernelResult ker = certified_kernel(rows, fam.poles.size(), fam.p);
  if (ker.ill_conditioned) throw PrecisionError("find_nonppower_order: kernel not certified");
  for (const auto& v : ker.basis) {
    std::vector<PadicNumber> a(v.begin(), v.end());
    const PadicNumber c = expansion_coeff(a, fam, *k);
    if (c.is_zero()) continue;
    long worst = 0;
    for (const auto& e : v) {
      if (!e.is_zero()) worst = std::max(worst, -e.valuation());
    }
    const PadicNumber scale = PadicNumber::exact(fam.p, mpq_class(ipow(fam.p, static_cast<unsigned long>(worst))));
    for (auto& e : a) e = e * scale;
    return {*k, std::move(a)};
  }
  throw PrecisionError("find_nonppower_order: no kernel vector certifies order " + std::to_string(*k));
}

mpz_class integer_approximation(const PadicNumber& a, long n) {
  if (a.ramified() && !a.b().is_exact_zero()) {
    throw std::invalid_argument("integer_approximation: value must lie in Z_p");
  }
  return a.a().residue(n);
}

PadicNumber finite_product_eval(const std::vector<PadicNumber>& poles,
                                const std::vector<long>& exponents, const PadicNumber& x,
                                const PadicNumber& z) {
  if (poles.size() != exponents.size()) throw std::invalid_argument("finite_product_eval: size mismatch");
  if (poles.empty()) return PadicNumber::exact(x.prime() ? x.prime() : z.prime(), 1);
  PadicNumber acc = PadicNumber::exact(poles.front().prime(), 1);
  for (std::size_t c = 0; c < poles.size(); ++c) {
    const PadicNumber num = z - poles[c];
    const PadicNumber den = x - poles[c];
    if (num.is_zero() || den.is_zero()) throw MathFailure("finite_product_eval: pole collision");
    acc *= (num / den).pow(exponents[c]);
  }
  return acc;
}

ExtRational finite_product_eval(const std::vector<PadicNumber>& poles,
                                const std::vector<long>& exponents, const PadicNumber& x,
                                const BallPoint& b) {
  if (poles.size() != exponents.size()) throw std::invalid_argument("finite_product_eval: size mismatch");
  ExtRational acc(0);
  for (std::size_t c = 0; c < poles.size(); ++c) {
    const PadicNumber den = x - poles[c];
    if (den.is_zero()) throw MathFailure("finite_product_eval: pole collision");
    const ExtRational s = seminorm(Polynomial::linear_factor(poles[c]), b);
    if (s.is_pos_inf()) throw MathFailure("finite_product_eval: pole collision");
    acc = acc + (s - den.valuation()) * mpq_class(exponents[c]);
  }
  return acc;
}

std::vector<PadicNumber> moebius_orbit(const std::array<PadicNumber, 4>& g, const PadicNumber& t,
                                       long count) {
  std::vector<PadicNumber> out;
  PadicNumber cur = t;
  for (long i = 0; i < count; ++i) {
    out.push_back(cur);
    if (i + 1 == count) break;
    const PadicNumber den = g[2] * cur + g[3];
    if (den.is_zero()) throw MathFailure("moebius_orbit: orbit reaches infinity");
    cur = (g[0] * cur + g[1]) / den;
  }
  return out;
}

}  // namespace nonarch
