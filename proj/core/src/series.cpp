#include "nonarch/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "nonarch/errors.hpp"

namespace nonarch {

BoundedSeries::BoundedSeries(unsigned long p, std::vector<PadicNumber> coeffs,
                             std::optional<AffineTail> tail)
    : p_(p), coeffs_(std::move(coeffs)), tail_(std::move(tail)) {
  if (!is_prime(p)) throw std::invalid_argument("BoundedSeries: p must be prime");
  for (const auto& c : coeffs_) {
    if (c.prime() != 0 && c.prime() != p) {
      throw std::invalid_argument("BoundedSeries: coefficient over another prime");
    }
  }
}

BoundedSeries BoundedSeries::from_polynomial(unsigned long p, const Polynomial& f) {
  return BoundedSeries(p, f.coeffs());
}

ExtRational BoundedSeries::lower_bound(long k) const {
  if (k < 0) throw std::invalid_argument("BoundedSeries: negative degree");
  if (k <= degree()) return valuation_lower_bound(coeffs_[static_cast<std::size_t>(k)]);
  return tail_ ? tail_->at(k) : ExtRational::pos_inf();
}

ExtRational BoundedSeries::minorant(const mpq_class& s, long from) const {
  ExtRational best = ExtRational::pos_inf();
  for (long k = std::max(from, 0L); k <= degree(); ++k) {
    const ExtRational lb = lower_bound(k);
    if (lb.is_pos_inf()) continue;
    best = min(best, lb - ExtRational(mpq_class(s * k)));
  }
  if (tail_) {
    if (s > tail_->slope) return ExtRational::neg_inf();
    const long k = std::max(from, degree() + 1);
    best = min(best, ExtRational(mpq_class((tail_->slope - s) * k + tail_->intercept)));
  }
  return best;
}

BoundedSeries BoundedSeries::taylor_shift(const PadicNumber& z) const {
  const Polynomial shifted = Polynomial(coeffs_).taylor_shift(z);
  std::vector<PadicNumber> out = shifted.coeffs();
  out.resize(coeffs_.size());
  if (!tail_) return BoundedSeries(p_, std::move(out));

  const ExtRational vz = z.valuation();
  if (vz.is_pos_inf()) return *this;
  const mpq_class rate = tail_->slope + vz.value();
  if (rate <= 0) {
    throw std::domain_error("BoundedSeries::taylor_shift: centre outside the disk of convergence");
  }
  // Omitted terms a_k z^(k-i) C(k,i), k > D, have valuation at least
  // rate*(D+1) + intercept - i*v(z).
  const long d = degree();
  for (long i = 0; i <= d; ++i) {
    const mpq_class cap = rate * (d + 1) + tail_->intercept - vz.value() * i;
    out[static_cast<std::size_t>(i)] = out[static_cast<std::size_t>(i)].round(ExtRational(cap));
  }
  return BoundedSeries(p_, std::move(out), tail_);
}

BoundedSeries operator*(const BoundedSeries& a, const BoundedSeries& b) {
  if (a.p_ != b.p_) throw std::invalid_argument("BoundedSeries: mixing primes");
  long d = -1;
  if (a.tail_ && b.tail_) {
    d = std::min(a.degree(), b.degree());
  } else if (a.tail_) {
    d = a.degree();
  } else if (b.tail_) {
    d = b.degree();
  } else {
    if (a.coeffs_.empty() || b.coeffs_.empty()) return BoundedSeries(a.p_, {});
    d = a.degree() + b.degree();
  }
  std::vector<PadicNumber> out(static_cast<std::size_t>(d + 1));
  for (long i = 0; i <= std::min(d, a.degree()); ++i) {
    const PadicNumber& ai = a.coeffs_[static_cast<std::size_t>(i)];
    if (ai.is_exact_zero()) continue;
    for (long j = 0; j <= std::min(d - i, b.degree()); ++j) {
      out[static_cast<std::size_t>(i + j)] += ai * b.coeffs_[static_cast<std::size_t>(j)];
    }
  }
  if (!a.tail_ && !b.tail_) return BoundedSeries(a.p_, std::move(out));

  mpq_class s;
  if (a.tail_ && b.tail_) {
    s = std::min(a.tail_->slope, b.tail_->slope);
  } else {
    s = a.tail_ ? a.tail_->slope : b.tail_->slope;
  }
  const ExtRational ma = a.minorant(s);
  const ExtRational mb = b.minorant(s);
  if (ma.is_pos_inf() || mb.is_pos_inf()) {
    // One factor is identically zero.
    return BoundedSeries(a.p_, std::vector<PadicNumber>(out.size(), PadicNumber()));
  }
  return BoundedSeries(a.p_, std::move(out), AffineTail{s, (ma + mb).value()});
}

long vp_factorial(unsigned long k, unsigned long p) {
  if (p < 2) throw std::invalid_argument("vp_factorial: p must be at least 2");
  long total = 0;
  while (k > 0) {
    k /= p;
    total += static_cast<long>(k);
  }
  return total;
}

namespace {

mpq_class binom_exact(const mpq_class& m, unsigned long k) {
  mpq_class r = 1;
  for (unsigned long i = 0; i < k; ++i) {
    r *= (m - i);
    r /= (i + 1);
  }
  r.canonicalize();
  return r;
}

}  // namespace

PadicNumber binom_fractional(const mpq_class& m, unsigned long k, unsigned long p, long absprec) {
  if (!is_prime(p)) throw std::invalid_argument("binom_fractional: p must be prime");
  const mpq_class value = binom_exact(m, k);
  if (absprec == Qp::kExact) return PadicNumber::exact(p, value);
  if (value != 0 && rational_valuation(value, p) >= absprec) {
    throw PrecisionError("binom_fractional: C(" + rational_string(m) + ", " + std::to_string(k) +
                         ") vanishes modulo p^" + std::to_string(absprec));
  }
  if (value == 0) {
    throw PrecisionError("binom_fractional: C(" + rational_string(m) + ", " + std::to_string(k) +
                         ") is zero and carries no digits");
  }
  return PadicNumber::approx(p, value, absprec);
}

namespace {

long first_nonzero_index(const BoundedSeries& f) {
  for (long i = 1; i <= f.degree(); ++i) {
    if (!f.coeffs()[static_cast<std::size_t>(i)].is_exact_zero()) return i;
  }
  return f.degree() + 1;
}

/// Slopes of the lower convex hull of the finite points (i, y_i).
std::vector<mpq_class> lower_hull_slopes(const std::vector<std::pair<long, mpq_class>>& pts) {
  std::vector<std::pair<long, mpq_class>> hull;
  for (const auto& pt : pts) {
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull.back();
      // Drop b when it lies on or above the segment a -> pt.
      const mpq_class lhs = (b.second - a.second) * (pt.first - a.first);
      const mpq_class rhs = (pt.second - a.second) * (b.first - a.first);
      if (lhs >= rhs) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(pt);
  }
  std::vector<mpq_class> slopes;
  for (std::size_t i = 1; i < hull.size(); ++i) {
    slopes.emplace_back(mpq_class(hull[i].second - hull[i - 1].second) /
                        (hull[i].first - hull[i - 1].first));
  }
  return slopes;
}

}  // namespace

AffineTail root_tail_bound(const BoundedSeries& f, unsigned long m) {
  const unsigned long p = f.prime();
  const mpq_class big_k = mpq_class(static_cast<long>(m)) + mpq_class(1, p - 1);
  const long e0 = first_nonzero_index(f);

  // Points (i, lower bound of g_i) for i >= 1, with the first tail index
  // standing in for the whole tail.
  std::vector<std::pair<long, mpq_class>> pts;
  for (long i = 1; i <= f.degree(); ++i) {
    const ExtRational lb = f.lower_bound(i);
    if (lb.is_finite()) pts.emplace_back(i, lb.value());
  }
  if (f.tail()) pts.emplace_back(f.degree() + 1, f.tail()->at(f.degree() + 1).value());
  if (pts.empty()) throw std::invalid_argument("root_tail_bound: f is constant");

  // h(s) = s + min(t(s) - K, 0)/e0 is concave; its maximum sits on a hull
  // slope of t, on the tail slope, or where t(s) crosses K.
  std::vector<mpq_class> candidates = lower_hull_slopes(pts);
  for (const auto& [i, y] : pts) candidates.emplace_back(mpq_class(y - big_k) / i);
  if (f.tail()) candidates.push_back(f.tail()->slope);

  bool found = false;
  mpq_class best_h;
  mpq_class best_t;
  for (const auto& s : candidates) {
    if (f.tail() && s > f.tail()->slope) continue;
    const ExtRational t = f.minorant(s, 1);
    if (!t.is_finite()) continue;
    const mpq_class excess = t.value() - big_k;
    const mpq_class h = s + (excess < 0 ? mpq_class(excess / e0) : mpq_class(0));
    if (!found || h > best_h) {
      found = true;
      best_h = h;
      best_t = t.value();
    }
  }
  if (!found) throw std::logic_error("root_tail_bound: no admissible slope");
  const mpq_class beta = best_t >= big_k ? mpq_class(best_t - static_cast<long>(m))
                                         : mpq_class(1, p - 1);
  return AffineTail{best_h, beta};
}

BoundedSeries series_p_power_root(const BoundedSeries& f, unsigned long m, long degree) {
  const unsigned long p = f.prime();
  if (f.coeffs().empty() || !f.coeffs()[0].is_rational() || f.coeffs()[0].rational() != 1) {
    throw std::invalid_argument("series_p_power_root: constant term must be exactly 1");
  }
  const long e0 = first_nonzero_index(f);
  if (m == 0 || (e0 > f.degree() && !f.tail())) return f;

  long d_out = degree;
  if (d_out < 0) d_out = f.tail() ? f.degree() : 2 * static_cast<long>(p) * f.degree();
  if (f.tail()) d_out = std::min(d_out, f.degree());

  std::vector<PadicNumber> g(static_cast<std::size_t>(d_out + 1), PadicNumber(Qp(p)));
  for (long i = 1; i <= std::min(d_out, f.degree()); ++i) {
    g[static_cast<std::size_t>(i)] = f.coeffs()[static_cast<std::size_t>(i)];
  }

  const mpq_class r = mpq_class(1) / mpq_class(ipow(p, m));
  std::vector<PadicNumber> out(static_cast<std::size_t>(d_out + 1), PadicNumber(Qp(p)));
  out[0] = PadicNumber::exact(p, 1);
  std::vector<PadicNumber> power = g;  // g^k truncated to d_out
  mpq_class b = 1;
  for (long k = 1; k * e0 <= d_out; ++k) {
    b *= (r - (k - 1));
    b /= k;
    const PadicNumber bk = PadicNumber::exact(p, b);
    for (long d = k * e0; d <= d_out; ++d) {
      const PadicNumber& c = power[static_cast<std::size_t>(d)];
      if (!c.is_exact_zero()) out[static_cast<std::size_t>(d)] += bk * c;
    }
    if ((k + 1) * e0 > d_out) break;
    std::vector<PadicNumber> next(static_cast<std::size_t>(d_out + 1), PadicNumber(Qp(p)));
    for (long i = k * e0; i <= d_out; ++i) {
      const PadicNumber& pi = power[static_cast<std::size_t>(i)];
      if (pi.is_exact_zero()) continue;
      for (long j = e0; i + j <= d_out; ++j) {
        const PadicNumber& gj = g[static_cast<std::size_t>(j)];
        if (!gj.is_exact_zero()) next[static_cast<std::size_t>(i + j)] += pi * gj;
      }
    }
    power = std::move(next);
  }
  return BoundedSeries(p, std::move(out), root_tail_bound(f, m));
}

LogRadius convergence_logradius(const BoundedSeries& f) {
  if (!f.tail()) return {ExtRational::neg_inf(), false};
  const mpq_class alpha = f.tail()->slope;
  std::vector<std::pair<long, mpq_class>> pts;
  for (long i = 1; i <= f.degree(); ++i) {
    const PadicNumber& c = f.coeffs()[static_cast<std::size_t>(i)];
    const ExtRational v = c.valuation();
    if (v.is_finite()) pts.emplace_back(i, v.value());
  }
  const std::vector<mpq_class> slopes = lower_hull_slopes(pts);
  const bool witnessed = !slopes.empty() && slopes.front() <= alpha;
  return {ExtRational(mpq_class(-alpha)), !witnessed};
}

}  // namespace nonarch
