#include "nonarch/berkovich.hpp"

#include <stdexcept>

#include "nonarch/errors.hpp"

namespace nonarch {

namespace {

/// v(a - a') as a lower bound when it is not determined.
ExtRational distance_valuation(const PadicNumber& a, const PadicNumber& b) {
  return valuation_lower_bound(a - b);
}

}  // namespace

ExtRational seminorm(const Polynomial& f, const BallPoint& b) {
  const Polynomial shifted = f.taylor_shift(b.center);
  const auto& c = shifted.coeffs();
  if (b.logradius.is_pos_inf()) {
    if (c.empty()) return ExtRational::pos_inf();
    if (c[0].is_zero() && !c[0].is_exact_zero()) {
      throw PrecisionError("seminorm: value at a type-1 point vanishes at working precision");
    }
    return c[0].valuation();
  }
  if (!b.logradius.is_finite()) throw std::invalid_argument("seminorm: log-radius -inf");
  const mpq_class& rho = b.logradius.value();
  ExtRational determined = ExtRational::pos_inf();
  ExtRational undetermined = ExtRational::pos_inf();
  for (std::size_t i = 0; i < c.size(); ++i) {
    const ExtRational shift(mpq_class(rho * static_cast<long>(i)));
    if (c[i].is_exact_zero()) continue;
    if (c[i].is_zero()) {
      undetermined = min(undetermined, c[i].precision() + shift);
    } else {
      determined = min(determined, c[i].valuation() + shift);
    }
  }
  if (undetermined <= determined && !undetermined.is_pos_inf()) {
    throw PrecisionError("seminorm: a coefficient's valuation is not determined at working precision");
  }
  return determined;
}

bool same_point(const BallPoint& b1, const BallPoint& b2) {
  if (b1.logradius != b2.logradius) return false;
  const PadicNumber d = b1.center - b2.center;
  if (d.is_exact_zero()) return true;
  if (b1.logradius.is_pos_inf()) {
    if (d.is_zero()) throw PrecisionError("same_point: type-1 centres agree only to working precision");
    return false;
  }
  if (d.is_zero()) {
    if (d.precision() >= b1.logradius) return true;
    throw PrecisionError("same_point: centres not separated at working precision");
  }
  return d.valuation() >= b1.logradius;
}

int classify_type(const BallPoint& b) { return b.logradius.is_pos_inf() ? 1 : 2; }

JoinResult join(const PadicNumber& a1, const PadicNumber& a2) {
  const PadicNumber d = a1 - a2;
  if (d.is_zero()) return {BallPoint{a1, ExtRational::pos_inf()}, true};
  return {BallPoint{a1, d.valuation()}, false};
}

BallPoint ladder_point(const PadicNumber& z, long n, unsigned long p) {
  if (n < 0) throw std::invalid_argument("ladder_point: n must be nonnegative");
  if (z.is_exact_zero()) throw std::invalid_argument("ladder_point: z must be nonzero");
  if (z.is_zero()) throw PrecisionError("ladder_point: z vanishes at working precision");
  return {z, z.valuation() + ExtRational(n) + ExtRational(mpq_class(1, p - 1))};
}

bool Segment::contains(const BallPoint& b) const {
  if (b.logradius > rho_start || b.logradius < rho_end) return false;
  const ExtRational d = distance_valuation(anchor, b.center);
  return d >= b.logradius;
}

std::vector<Segment> segment_between(const BallPoint& x, const BallPoint& y) {
  const ExtRational d = distance_valuation(x.center, y.center);
  const ExtRational meet = min(d, min(x.logradius, y.logradius));
  std::vector<Segment> out;
  out.push_back(Segment{x.center, x.logradius, meet});
  if (y.logradius > meet) out.push_back(Segment{y.center, y.logradius, meet});
  return out;
}

}  // namespace nonarch
