#include "nonarch/tate.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "nonarch/errors.hpp"
#include "nonarch/torsor.hpp"

namespace nonarch {

ExtRational Certified::relative_error() const {
  if (error.is_pos_inf()) return error;
  const ExtRational v = value.valuation();
  if (v.is_pos_inf()) return error;
  return error - v;
}

bool Certified::agrees_with(const Certified& other) const {
  const ExtRational tol = min(error, other.error);
  const PadicNumber diff = value - other.value;
  return valuation_lower_bound(diff) >= tol;
}

int moebius(long n) {
  if (n < 1) throw std::invalid_argument("moebius: argument must be positive");
  int sign = 1;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    n /= d;
    if (n % d == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

namespace {

long floor_mod(long a, long m) {
  const long r = a % m;
  return r < 0 ? r + m : r;
}

bool ring_equal(const Current& c, const mpq_class& x, const mpq_class& y) {
  if (c.ring != CurrentRing::kZmodN) return x == y;
  const mpq_class d = x - y;
  if (d.get_den() != 1) return false;
  return mpz_divisible_ui_p(d.get_num_mpz_t(), static_cast<unsigned long>(c.modulus)) != 0;
}

void require_compatible(const Current& a, const Current& b) {
  if (a.ring != b.ring || a.modulus != b.modulus || a.p != b.p) {
    throw std::invalid_argument("currents over different rings");
  }
}

PadicNumber qpow(const PadicNumber& q, long j) { return q.pow(j); }

void require_integer_current(const Current& c, const char* what) {
  if (c.ring != CurrentRing::kZ) throw std::invalid_argument(std::string(what) + ": needs an integer current");
  for (std::size_t i = 0; i < c.cusp.size(); ++i) {
    if (c.cusp[i].get_den() != 1 || c.spine[i].get_den() != 1) {
      throw std::invalid_argument(std::string(what) + ": non-integer current value");
    }
  }
}

long to_long(const mpq_class& v) {
  if (v.get_den() != 1 || !v.get_num().fits_slong_p()) {
    throw std::invalid_argument("current value is not a machine integer");
  }
  return v.get_num().get_si();
}

bool all_cusps_zero(const Current& c) {
  return std::all_of(c.cusp.begin(), c.cusp.end(), [](const mpq_class& v) { return v == 0; });
}

/// Cusp indices visited when truncating to M whole periods each side.
std::pair<long, long> summation_range(const Current& c, long periods) {
  if (!c.periodic) return {std::min(c.jmin, 0L), std::max(c.jmax, 0L)};
  if (periods < 1) throw std::invalid_argument("truncation needs at least one period");
  const long span = periods * c.period();
  return {-span + 1, span};
}

}  // namespace

Current Current::windowed(long jmin, long jmax, CurrentRing ring) {
  if (jmax < jmin) throw std::invalid_argument("Current: empty window");
  Current c;
  c.ring = ring;
  c.jmin = jmin;
  c.jmax = jmax;
  c.cusp.assign(static_cast<std::size_t>(jmax - jmin + 1), mpq_class(0));
  c.spine = c.cusp;
  return c;
}

Current Current::with_period(long jmin, long period, CurrentRing ring) {
  if (period < 1) throw std::invalid_argument("Current: period must be positive");
  Current c = windowed(jmin, jmin + period - 1, ring);
  c.periodic = true;
  return c;
}

mpq_class Current::cusp_at(long j) const {
  if (periodic) return cusp[static_cast<std::size_t>(floor_mod(j - jmin, period()))];
  if (j < jmin || j > jmax) return 0;
  return cusp[static_cast<std::size_t>(j - jmin)];
}

mpq_class Current::spine_at(long j) const {
  if (periodic) return spine[static_cast<std::size_t>(floor_mod(j - jmin, period()))];
  if (j > jmax) return spine.back();
  if (j < jmin) return spine.front() - cusp.front();
  return spine[static_cast<std::size_t>(j - jmin)];
}

void Current::set(long j, const mpq_class& cusp_value, const mpq_class& spine_value) {
  if (j < jmin || j > jmax) throw std::out_of_range("Current::set: index outside the stored block");
  cusp[static_cast<std::size_t>(j - jmin)] = cusp_value;
  spine[static_cast<std::size_t>(j - jmin)] = spine_value;
}

void Current::propagate_spine(const mpq_class& spine_at_jmin) {
  spine[0] = spine_at_jmin;
  for (std::size_t i = 1; i < spine.size(); ++i) spine[i] = spine[i - 1] + cusp[i];
}

std::optional<CurrentViolation> validate_current(const Current& c) {
  if (c.cusp.size() != c.spine.size() || c.cusp.size() != static_cast<std::size_t>(c.period())) {
    return CurrentViolation{c.jmin, "stored block does not match the window"};
  }
  if (c.ring == CurrentRing::kZmodN && c.modulus < 1) {
    return CurrentViolation{c.jmin, "Z/nZ current without a positive modulus"};
  }
  for (long j = c.jmin; j <= c.jmax; ++j) {
    for (const mpq_class* v : {&c.cusp[static_cast<std::size_t>(j - c.jmin)],
                               &c.spine[static_cast<std::size_t>(j - c.jmin)]}) {
      if (c.ring == CurrentRing::kZp) {
        if (c.p == 0 || mpz_divisible_ui_p(v->get_den_mpz_t(), c.p)) {
          return CurrentViolation{j, "value outside Z_p"};
        }
      } else if (v->get_den() != 1) {
        return CurrentViolation{j, "non-integer value"};
      }
    }
  }
  for (long j = c.jmin; j < c.jmax; ++j) {
    if (!ring_equal(c, c.spine_at(j + 1), c.spine_at(j) + c.cusp_at(j + 1))) {
      return CurrentViolation{j + 1, "c(e'_{j+1}) != c(e'_j) + c(e_{j+1})"};
    }
  }
  if (c.periodic) {
    mpq_class total = 0;
    for (const auto& v : c.cusp) total += v;
    if (!ring_equal(c, total, 0)) return CurrentViolation{c.jmin, "cusp values do not sum to zero over a period"};
    if (!ring_equal(c, c.spine.front(), c.spine.back() + c.cusp.front())) {
      return CurrentViolation{c.jmin + c.period(), "relation fails across the period boundary"};
    }
  }
  return std::nullopt;
}

Current operator+(const Current& a, const Current& b) {
  require_compatible(a, b);
  Current out;
  if (a.periodic != b.periodic) throw std::invalid_argument("adding a periodic and a windowed current");
  if (a.periodic) {
    const long l = std::lcm(a.period(), b.period());
    out = Current::with_period(std::min(a.jmin, b.jmin), l, a.ring);
  } else {
    out = Current::windowed(std::min(a.jmin, b.jmin), std::max(a.jmax, b.jmax), a.ring);
  }
  out.modulus = a.modulus;
  out.p = a.p;
  for (long j = out.jmin; j <= out.jmax; ++j) {
    out.set(j, a.cusp_at(j) + b.cusp_at(j), a.spine_at(j) + b.spine_at(j));
  }
  return out;
}

Current operator*(const mpq_class& s, const Current& c) {
  if (c.ring != CurrentRing::kZp && s.get_den() != 1) {
    throw std::invalid_argument("non-integer scalar on an integer current");
  }
  Current out = c;
  for (auto& v : out.cusp) v *= s;
  for (auto& v : out.spine) v *= s;
  return out;
}

bool same_current(const Current& a, const Current& b) {
  require_compatible(a, b);
  long lo = std::min(a.jmin, b.jmin) - 1;
  long hi = std::max(a.jmax, b.jmax) + 1;
  if (a.periodic || b.periodic) {
    const long l = std::lcm(a.periodic ? a.period() : 1, b.periodic ? b.period() : 1);
    lo -= l;
    hi += l;
  }
  for (long j = lo; j <= hi; ++j) {
    if (!ring_equal(a, a.cusp_at(j), b.cusp_at(j)) || !ring_equal(a, a.spine_at(j), b.spine_at(j))) {
      return false;
    }
  }
  return true;
}

Current identity_current() {
  Current c = Current::windowed(0, 0);
  c.set(0, 0, 1);
  return c;
}

void validate_q(const PadicNumber& q) {
  const ExtRational v = q.valuation();
  if (!v.is_finite() || v <= ExtRational(0)) {
    throw std::invalid_argument("Tate parameter must satisfy 0 < v(q) < inf");
  }
}

Certified alpha_eval(const Current& c, const PadicNumber& q, const PadicNumber& z, long periods) {
  validate_q(q);
  require_integer_current(c, "alpha_eval");
  if (z.is_zero()) throw std::invalid_argument("alpha_eval: z must be nonzero");
  const auto [lo, hi] = summation_range(c, periods);
  PadicNumber acc = z.pow(to_long(c.spine_at(0)));
  for (long j = lo; j <= hi; ++j) {
    const long k = to_long(c.cusp_at(j));
    if (k == 0) continue;
    const PadicNumber qj = qpow(q, j);
    const PadicNumber num = z - qj;
    if (num.is_zero()) throw MathFailure("alpha_eval: z is a zero or pole of alpha(c)");
    acc *= (j >= 1 ? num / z : num / qj).pow(k);
  }
  Certified out{acc, ExtRational::pos_inf()};
  if (c.periodic && !all_cusps_zero(c)) {
    const mpq_class vq = q.valuation().value();
    const mpq_class vz = z.valuation().value();
    const long span = periods * c.period();
    const mpq_class rel = std::min(mpq_class((span + 1) * vq - vz), mpq_class(vz + span * vq));
    if (rel <= 0) throw PrecisionError("alpha_eval: tail not certified; increase the number of periods");
    out.error = acc.valuation() + ExtRational(rel);
  }
  return out;
}

ExtRational alpha_seminorm(const Current& c, const PadicNumber& q, const BallPoint& b, long periods) {
  validate_q(q);
  require_integer_current(c, "alpha_seminorm");
  const ExtRational sx = seminorm(Polynomial::linear_factor(PadicNumber(Qp(q.prime()))), b);
  const ExtRational vq = q.valuation();
  const auto [lo, hi] = summation_range(c, periods);
  if (c.periodic && !all_cusps_zero(c)) {
    // Omitted factors have norm exactly 1 only when |q^j| sits on the
    // correct side of |x|_b for every omitted j.
    if (!(vq * mpq_class(hi + 1) > sx && vq * mpq_class(lo - 1) < sx)) {
      throw PrecisionError("alpha_seminorm: ball not inside the truncated range");
    }
  }
  ExtRational acc = sx * mpq_class(to_long(c.spine_at(0)));
  for (long j = lo; j <= hi; ++j) {
    const long k = to_long(c.cusp_at(j));
    if (k == 0) continue;
    const ExtRational f = seminorm(Polynomial::linear_factor(qpow(q, j)), b);
    if (f.is_pos_inf()) throw MathFailure("alpha_seminorm: type-1 point at a zero or pole");
    const ExtRational base = j >= 1 ? sx : vq * mpq_class(j);
    acc = acc + (f - base) * mpq_class(k);
  }
  return acc;
}

Current current_from_slopes(const FactoredFunction& f, const PadicNumber& q) {
  validate_q(q);
  long lo = 0;
  long hi = 0;
  for (const auto& [j, k] : f.zeros) {
    if (k == 0) continue;
    lo = std::min(lo, j);
    hi = std::max(hi, j);
  }
  if (f.scalar && *f.scalar == 0) throw std::invalid_argument("current_from_slopes: zero scalar");
  Current c = Current::windowed(lo, hi);
  for (const auto& [j, k] : f.zeros) c.cusp[static_cast<std::size_t>(j - lo)] = k;

  // Slope of -log_p|f| on the annulus 0 < v(x) < v(q), from two radii.
  const mpq_class vq = q.valuation().value();
  const mpq_class r1 = vq / 3;
  const mpq_class r2 = 2 * vq / 3;
  auto log_norm = [&](const mpq_class& rho) {
    const BallPoint b{PadicNumber(Qp(q.prime())), ExtRational(rho)};
    ExtRational acc(mpq_class(f.m * rho));
    for (const auto& [j, k] : f.zeros) {
      if (k == 0) continue;
      acc = acc + seminorm(Polynomial::linear_factor(q.pow(j)), b) * mpq_class(k);
    }
    return acc.value();
  };
  const mpq_class slope = (log_norm(r2) - log_norm(r1)) / (r2 - r1);
  if (slope.get_den() != 1) throw std::logic_error("current_from_slopes: non-integral slope");

  // spine(0) = slope; the relation fixes the rest.
  mpq_class s = slope;
  for (long j = 0; j > lo; --j) s -= c.cusp_at(j);
  c.propagate_spine(s);
  return c;
}

FactoredFunction factored_alpha(const Current& c) {
  require_integer_current(c, "factored_alpha");
  if (c.periodic && !all_cusps_zero(c)) {
    throw std::invalid_argument("factored_alpha: periodic current has infinitely many zeros");
  }
  FactoredFunction f;
  long m = to_long(c.spine_at(0));
  if (!c.periodic) {
    for (long j = c.jmin; j <= c.jmax; ++j) {
      const long k = to_long(c.cusp_at(j));
      if (k == 0) continue;
      f.zeros[j] = k;
      if (j >= 1) m -= k;
    }
  }
  f.m = m;
  return f;
}

PadicNumber factored_eval(const FactoredFunction& f, const PadicNumber& q, const PadicNumber& z) {
  const unsigned long p = q.prime();
  PadicNumber acc = PadicNumber::exact(p, f.scalar.value_or(mpq_class(1)));
  if (f.m != 0) {
    if (z.is_zero()) throw MathFailure("factored_eval: zero or pole at 0");
    acc *= z.pow(f.m);
  }
  for (const auto& [j, k] : f.zeros) {
    if (k == 0) continue;
    const PadicNumber d = z - q.pow(j);
    if (d.is_zero()) {
      if (k > 0 && d.is_exact_zero()) return PadicNumber(Qp(p));
      throw MathFailure("factored_eval: pole collision");
    }
    acc *= d.pow(k);
  }
  return acc;
}

DeltaValue delta_eval(const Current& c, const PadicNumber& q, const PadicNumber& z, long periods) {
  validate_q(q);
  if (c.ring == CurrentRing::kZmodN) throw std::invalid_argument("delta_eval: needs a Z or Z_p current");
  if (z.is_zero()) throw std::invalid_argument("delta_eval: z must be nonzero");
  const unsigned long p = q.prime();
  const auto [lo, hi] = summation_range(c, periods);
  const ExtRational vq = q.valuation();
  const ExtRational vz = z.valuation();

  // Cusps the point could sit on.
  std::vector<long> suspects;
  if (c.periodic) {
    const mpq_class ratio = vz.value() / vq.value();
    if (ratio.get_den() == 1) suspects.push_back(ratio.get_num().get_si());
  } else {
    for (long j = c.jmin; j <= c.jmax; ++j) suspects.push_back(j);
  }
  for (long j : suspects) {
    if (c.cusp_at(j) == 0) continue;
    const PadicNumber d = z - qpow(q, j);
    if (d.is_exact_zero()) return DeltaValue{std::nullopt, true};
    if (d.is_zero()) throw PrecisionError("delta_eval: z agrees with a cusp at working precision");
  }

  const PadicNumber zinv = z.inverse();
  PadicNumber acc = PadicNumber::exact(p, c.spine_at(0)) * zinv;
  for (long j = lo; j <= hi; ++j) {
    const mpq_class cj = c.cusp_at(j);
    if (cj == 0) continue;
    PadicNumber term = (z - qpow(q, j)).inverse();
    if (j >= 1) term -= zinv;
    acc += PadicNumber::exact(p, cj) * term;
  }
  Certified out{acc, ExtRational::pos_inf()};
  if (c.periodic && !all_cusps_zero(c)) {
    const mpq_class span = periods * c.period();
    const mpq_class e_pos = (span + 1) * vq.value() - 2 * vz.value();
    const mpq_class e_neg = span * vq.value();
    if ((span + 1) * vq.value() <= vz.value() || -span * vq.value() >= vz.value()) {
      throw PrecisionError("delta_eval: z outside the truncated range; increase the number of periods");
    }
    out.error = ExtRational(std::min(e_pos, e_neg));
  }
  return DeltaValue{out, false};
}

Current moebius_current(long n, long big_j) {
  if (n < 1 || big_j < 0) throw std::invalid_argument("moebius_current: need n >= 1 and J >= 0");
  Current c = Current::windowed(0, big_j * n);
  mpq_class partial = 0;
  for (long j = 1; j <= big_j * n; ++j) {
    mpq_class cusp = 0;
    if (j % n == 0) {
      cusp = moebius(j / n);
      partial += cusp;
    }
    c.set(j, cusp, partial);
  }
  return c;
}

Certified delta_at_one(long n, const PadicNumber& q, long big_j) {
  validate_q(q);
  const Current c = moebius_current(n, big_j);
  const DeltaValue d = delta_eval(c, q, PadicNumber::exact(q.prime(), 1));
  Certified out = *d.value;
  out.error = q.valuation() * mpq_class(n * (big_j + 1));
  return out;
}

Certified poly_current_eval(const std::vector<PadicNumber>& coeffs, const PadicNumber& q, long big_j) {
  validate_q(q);
  const unsigned long p = q.prime();
  Current cp = Current::windowed(0, 0, CurrentRing::kZp);
  cp.p = p;
  ExtRational error = ExtRational::pos_inf();
  for (std::size_t n = 0; n < coeffs.size(); ++n) {
    const PadicNumber& a = coeffs[n];
    if (a.ramified() && !a.b().is_exact_zero()) throw std::invalid_argument("poly_current_eval: coefficients must lie in Z_p");
    if (a.is_zero() && a.is_exact()) continue;
    const mpq_class an = a.a().lift();
    if (an != 0 && rational_valuation(an, p) < 0) throw std::invalid_argument("poly_current_eval: coefficients must lie in Z_p");
    Current base = n == 0 ? identity_current() : moebius_current(static_cast<long>(n), big_j);
    base.ring = CurrentRing::kZp;
    base.p = p;
    cp = cp + an * base;
    const ExtRational qn = q.valuation() * mpq_class(static_cast<long>(n));
    if (n >= 1 && an != 0) error = min(error, ExtRational(rational_valuation(an, p)) + qn * mpq_class(big_j + 1));
    if (!a.is_exact()) error = min(error, a.precision() + qn);
  }
  const DeltaValue d = delta_eval(cp, q, PadicNumber::exact(p, 1));
  Certified out = *d.value;
  out.error = error;
  return out;
}

Certified theta_product(const FactoredFunction& f, const PadicNumber& q, long l, const PadicNumber& z,
                        const PadicNumber& z0, long big_m) {
  validate_q(q);
  if (l < 1 || big_m < 0) throw std::invalid_argument("theta_product: need l >= 1 and M >= 0");
  if (z.is_zero() || z0.is_zero()) throw std::invalid_argument("theta_product: points must be nonzero");
  long degree = f.m;
  for (const auto& [j, k] : f.zeros) degree += k;
  if (f.m != 0 || degree != 0) {
    throw MathFailure("theta_product: tail not certifiable (divisor must have degree 0 away from 0)");
  }
  const unsigned long p = q.prime();
  PadicNumber acc = PadicNumber::exact(p, 1);
  const PadicNumber ql = q.pow(l);
  for (long k = -big_m; k <= big_m; ++k) {
    const PadicNumber shift = ql.pow(k);
    const PadicNumber zk = shift * z;
    const PadicNumber z0k = shift * z0;
    for (const auto& [j, mult] : f.zeros) {
      if (mult == 0) continue;
      const PadicNumber qj = q.pow(j);
      const PadicNumber num = zk - qj;
      const PadicNumber den = z0k - qj;
      if (num.is_zero() || den.is_zero()) throw MathFailure("theta_product: pole collision");
      acc *= (num / den).pow(mult);
    }
  }
  Certified out{acc, ExtRational::pos_inf()};
  const mpq_class vq = q.valuation().value();
  const mpq_class vz = z.valuation().value();
  const mpq_class vz0 = z0.valuation().value();
  bool any = false;
  mpq_class rel;
  for (const auto& [j, mult] : f.zeros) {
    if (mult == 0) continue;
    const mpq_class pos = (l * (big_m + 1) - j) * vq + std::min(vz, vz0);
    const mpq_class neg = (j + l * (big_m + 1)) * vq - std::max(vz, vz0);
    const mpq_class e = std::min(pos, neg);
    rel = any ? std::min(rel, e) : e;
    any = true;
  }
  if (any) {
    if (rel <= 0) throw MathFailure("theta_product: tail not certifiable at M = " + std::to_string(big_m));
    out.error = acc.valuation() + ExtRational(rel);
  }
  return out;
}

Certified theta_automorphy(const FactoredFunction& f, const PadicNumber& q, long l, const PadicNumber& z,
                           const PadicNumber& z0, long big_m) {
  const Certified shifted = theta_product(f, q, l, q.pow(l) * z, z0, big_m);
  const Certified base = theta_product(f, q, l, z, z0, big_m);
  const PadicNumber ratio = shifted.value / base.value;
  const ExtRational rel = min(shifted.relative_error(), base.relative_error());
  return Certified{ratio, rel.is_pos_inf() ? rel : ratio.valuation() + rel};
}

namespace {

/// (1 + T/w)^k to degree D.
BoundedSeries binomial_series(const PadicNumber& w, long k, long degree) {
  const unsigned long p = w.prime();
  const PadicNumber winv = w.inverse();
  const bool finite = k >= 0 && k <= degree;
  const long top = finite ? k : degree;
  std::vector<PadicNumber> coeffs;
  mpq_class binom = 1;
  PadicNumber wpow = PadicNumber::exact(p, 1);
  for (long i = 0; i <= top; ++i) {
    coeffs.push_back(PadicNumber::exact(p, binom) * wpow);
    binom *= (k - i);
    binom /= (i + 1);
    wpow *= winv;
  }
  if (finite) return BoundedSeries(p, std::move(coeffs));
  // Integer binomials: v(C(k,i) w^{-i}) >= -i v(w).
  return BoundedSeries(p, std::move(coeffs), AffineTail{mpq_class(-w.valuation().value()), 0});
}

}  // namespace

BoundedSeries alpha_germ(const Current& c, const PadicNumber& q, const PadicNumber& z, long degree) {
  validate_q(q);
  const FactoredFunction f = factored_alpha(c);
  const unsigned long p = q.prime();
  BoundedSeries germ(p, {PadicNumber::exact(p, 1)});
  if (f.m != 0) germ = germ * binomial_series(z, f.m, degree);
  for (const auto& [j, k] : f.zeros) {
    const PadicNumber w = z - q.pow(j);
    if (w.is_zero()) throw MathFailure("alpha_germ: z is a zero or pole of alpha(c)");
    germ = germ * binomial_series(w, k, degree);
  }
  if (germ.degree() > degree) {
    std::vector<PadicNumber> head(germ.coeffs().begin(), germ.coeffs().begin() + degree + 1);
    // Beyond the cut a polynomial germ still has finitely many terms; bound
    // them by the worst slope among its roots.
    mpq_class slope = 0;
    bool first = true;
    if (f.m != 0) {
      slope = -z.valuation().value();
      first = false;
    }
    for (const auto& [j, k] : f.zeros) {
      const mpq_class s = -(z - q.pow(j)).valuation().value();
      slope = first ? s : std::min(slope, s);
      first = false;
    }
    germ = BoundedSeries(p, std::move(head), AffineTail{slope, 0});
  }
  return germ;
}

LadderResult ladder_ord(const Current& c, const PadicNumber& q, const PadicNumber& z, long nmax) {
  validate_q(q);
  require_integer_current(c, "ladder_ord");
  if (nmax < 1) throw std::invalid_argument("ladder_ord: nmax must be positive");
  if (z.is_zero()) throw std::invalid_argument("ladder_ord: z must be nonzero");
  LadderResult out;
  const FactoredFunction f = factored_alpha(c);
  for (const auto& [j, k] : f.zeros) {
    if (k != 0 && (z - q.pow(j)).is_zero()) {
      out.cusp = true;
      out.ord = -1;
      out.stabilized = true;
      out.estimate = 0;
      return out;
    }
  }
  const unsigned long p = q.prime();
  const BoundedSeries germ = alpha_germ(c, q, z, 16);
  bool constant = germ.is_polynomial();
  for (long i = 1; i <= germ.degree(); ++i) constant = constant && germ.coeffs()[i].is_exact_zero();
  if (constant) throw std::invalid_argument("ladder_ord: alpha(c) is constant near z");

  const mpq_class offset = z.valuation().value() + mpq_class(1, p - 1);
  constexpr long kMaxLevel = 400;
  long m = 1;
  for (long n = 1; n <= nmax; ++n) {
    const mpq_class target = offset + n;
    while (splitting_logradius_bound(germ, m) < target) {
      if (++m > kMaxLevel) throw MathFailure("ladder_ord: splitting radius beyond level cap");
    }
    out.indices.push_back(m);
    out.ratios.emplace_back(mpq_class(m, n));
    out.ratios.back().canonicalize();
    if (n >= 2) out.increments.push_back(m - out.indices[out.indices.size() - 2]);
  }
  const auto& inc = out.increments;
  out.stabilized = inc.size() >= 3 && inc[inc.size() - 1] == inc[inc.size() - 2] &&
                   inc[inc.size() - 2] == inc[inc.size() - 3];
  out.estimate = out.stabilized ? mpq_class(inc.back()) : out.ratios.back();
  out.ord = out.stabilized ? inc.back() - 1 : -2;
  return out;
}

}  // namespace nonarch
