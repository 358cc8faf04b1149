#include <gtest/gtest.h>

#include "generators.hpp"
#include "nonarch/errors.hpp"
#include "nonarch/tate.hpp"
#include "nonarch/torsor.hpp"
#include "oracles.hpp"

using namespace nonarch;

namespace {

PadicNumber ex(unsigned long p, const mpq_class& q) { return PadicNumber::exact(p, q); }

Current zero_current() { return Current::windowed(0, 0); }

}  // namespace

TEST(Moebius, Table) {
  for (long n = 1; n < 200; ++n) EXPECT_EQ(moebius(n), oracle::moebius(n)) << n;
}

TEST(CurrentValidation, Examples) {
  EXPECT_FALSE(validate_current(identity_current()));
  Current c = Current::windowed(0, 3);
  c.set(0, 0, 1);
  c.set(1, 0, 1);
  c.set(2, 0, 2);  // spine jumps with zero cusp value at 2
  c.set(3, 0, 2);
  const auto bad = validate_current(c);
  ASSERT_TRUE(bad);
  EXPECT_EQ(bad->index, 2);
  for (long n = 1; n <= 4; ++n)
    for (long j = 1; j <= 6; ++j) EXPECT_FALSE(validate_current(moebius_current(n, j)));
}

TEST(CurrentValidation, RingConstraints) {
  Current c = Current::windowed(0, 1, CurrentRing::kZ);
  c.set(0, mpq_class(1, 2), mpq_class(1, 2));
  c.set(1, 0, mpq_class(1, 2));
  EXPECT_TRUE(validate_current(c));
  c.ring = CurrentRing::kZp;
  c.p = 3;
  EXPECT_FALSE(validate_current(c));
  c.p = 2;
  EXPECT_TRUE(validate_current(c));
}

TEST(MoebiusCurrent, Values) {
  const Current c = moebius_current(1, 4);
  const long mu[] = {1, -1, -1, 0};
  for (long j = 1; j <= 4; ++j) EXPECT_EQ(c.cusp_at(j), mu[j - 1]);
  for (long j = -5; j <= 0; ++j) EXPECT_EQ(c.spine_at(j), 0);
  const Current c2 = moebius_current(2, 3);
  EXPECT_EQ(c2.cusp_at(2), 1);
  EXPECT_EQ(c2.cusp_at(3), 0);
  EXPECT_EQ(c2.cusp_at(4), -1);
}

TEST(CurrentArithmetic, PeriodicSumUsesLcm) {
  Current a = Current::with_period(0, 2);
  a.set(0, 1, 0);
  a.set(1, -1, -1);
  Current b = Current::with_period(0, 3);
  b.set(0, 1, 1);
  b.set(1, 0, 1);
  b.set(2, -1, 0);
  ASSERT_FALSE(validate_current(a));
  ASSERT_FALSE(validate_current(b));
  const Current s = a + b;
  EXPECT_EQ(s.period(), 6);
  for (long j = -7; j < 14; ++j) {
    EXPECT_EQ(s.cusp_at(j), a.cusp_at(j) + b.cusp_at(j));
    EXPECT_EQ(s.spine_at(j), a.spine_at(j) + b.spine_at(j));
  }
  EXPECT_TRUE(same_current(mpq_class(2) * a, a + a));
}

TEST(Alpha, IdentityCurrentIsX) {
  const PadicNumber q = ex(3, 3);
  for (long z : {2L, -5L, 7L}) {
    const Certified v = alpha_eval(identity_current(), q, ex(3, z));
    EXPECT_TRUE(valuation_lower_bound(v.value - ex(3, z)) >= v.error);
  }
  const Certified one = alpha_eval(zero_current(), q, ex(3, 5));
  EXPECT_EQ(one.value.rational(), 1);
}

TEST(Alpha, FiniteProductOracle) {
  // Cusp value 1 at e_1 with spine 0 below: alpha = 1 - q/x up to a scalar.
  const PadicNumber q = ex(5, 5);
  Current c = Current::windowed(1, 1);
  c.set(1, 1, 1);
  c.propagate_spine(1);
  const FactoredFunction f = factored_alpha(c);
  ASSERT_EQ(f.zeros.size(), 1u);
  const PadicNumber z1 = ex(5, 1), z2 = ex(5, 12);
  const Certified a1 = alpha_eval(c, q, z1), a2 = alpha_eval(c, q, z2);
  const PadicNumber ratio = a1.value / a2.value;
  EXPECT_EQ(f.m, -1);
  EXPECT_EQ(ratio.rational(), mpq_class(1 - 5) / mpq_class(12 - 5, 12));
}

TEST(Alpha, RatiosMatchFactoredForm) {
  gen::Rng rng(71);
  for (int i = 0; i < 30; ++i) {
    const Current c = gen::windowed_current(rng);
    const PadicNumber q = ex(3, 3);
    const FactoredFunction f = factored_alpha(c);
    const PadicNumber z1 = ex(3, -2), z2 = ex(3, mpq_class(5, 7));
    const Certified a1 = alpha_eval(c, q, z1), a2 = alpha_eval(c, q, z2);
    const PadicNumber want = factored_eval(f, q, z1) / factored_eval(f, q, z2);
    EXPECT_TRUE(valuation_lower_bound(a1.value / a2.value - want) >= min(a1.relative_error(), a2.relative_error()) + want.valuation());
  }
}

TEST(Alpha, SeminormMatchesSlopes) {
  const PadicNumber q = ex(3, 3);
  const Current c = identity_current();
  for (long r = 0; r < 4; ++r) {
    const BallPoint b{ex(3, 0), ExtRational(mpq_class(r, 4))};
    EXPECT_EQ(alpha_seminorm(c, q, b), ExtRational(mpq_class(r, 4)));
  }
}

TEST(CurrentFromSlopes, Examples) {
  const PadicNumber q = ex(5, 25);
  FactoredFunction x;
  x.m = 1;
  EXPECT_TRUE(same_current(current_from_slopes(x, q), identity_current()));
  FactoredFunction k;
  k.scalar = mpq_class(7);
  EXPECT_TRUE(same_current(current_from_slopes(k, q), zero_current()));
}

TEST(CurrentFromSlopes, RoundTrip) {
  gen::Rng rng(72);
  for (int i = 0; i < 40; ++i) {
    const Current c = gen::windowed_current(rng);
    EXPECT_TRUE(same_current(current_from_slopes(factored_alpha(c), ex(2, 4)), c));
  }
}

TEST(Delta, Examples) {
  const PadicNumber q = ex(3, 3);
  const DeltaValue d = delta_eval(identity_current(), q, ex(3, 1));
  ASSERT_TRUE(d.value);
  EXPECT_TRUE(valuation_lower_bound(d.value->value - ex(3, 1)) >= d.value->error);
  const DeltaValue z = delta_eval(zero_current(), q, ex(3, 4));
  ASSERT_TRUE(z.value);
  EXPECT_TRUE(z.value->value.is_zero());
}

TEST(Delta, PoleAtCusp) {
  const PadicNumber q = ex(3, 3);
  Current c = Current::windowed(1, 1);
  c.set(1, 2, 2);
  EXPECT_TRUE(delta_eval(c, q, ex(3, 3)).pole);
}

TEST(Delta, Linear) {
  gen::Rng rng(73);
  const PadicNumber q = ex(5, 5);
  for (int i = 0; i < 20; ++i) {
    const Current c1 = gen::windowed_current(rng), c2 = gen::windowed_current(rng);
    const long a = rng.uniform(-3, 3), b = rng.uniform(-3, 3);
    const PadicNumber z = ex(5, mpq_class(rng.uniform(2, 40), 3));
    const DeltaValue lhs = delta_eval(mpq_class(a) * c1 + mpq_class(b) * c2, q, z);
    const DeltaValue d1 = delta_eval(c1, q, z), d2 = delta_eval(c2, q, z);
    if (lhs.pole || d1.pole || d2.pole) continue;
    const PadicNumber rhs = ex(5, a) * d1.value->value + ex(5, b) * d2.value->value;
    const ExtRational err = min(lhs.value->error, min(d1.value->error, d2.value->error));
    EXPECT_TRUE(valuation_lower_bound(lhs.value->value - rhs) >= err);
  }
}

TEST(DeltaAtOne, Examples) {
  const Certified d = delta_at_one(1, ex(3, 3), 10);
  EXPECT_EQ(d.error, ExtRational(11));
  EXPECT_TRUE(valuation_lower_bound(d.value - ex(3, 3)) >= ExtRational(11));
  for (unsigned long p : {2UL, 3UL, 7UL}) {
    const PadicNumber q = ex(p, static_cast<long>(p * p));
    const Certified d2 = delta_at_one(2, q, 2);
    EXPECT_TRUE(valuation_lower_bound(d2.value - q.pow(2)) >= ExtRational(3 * 2 * 2));
  }
  const Certified empty = delta_at_one(3, ex(5, 5), 0);
  EXPECT_TRUE(empty.value.is_zero());
  EXPECT_EQ(empty.error, ExtRational(3));
}

TEST(DeltaAtOne, AgreesWithDoubleSum) {
  for (unsigned long p : {2UL, 3UL}) {
    for (long n = 1; n <= 3; ++n) {
      for (long j = 1; j <= 8; ++j) {
        const mpq_class q(static_cast<long>(p));
        const Certified d = delta_at_one(n, ex(p, q), j);
        EXPECT_TRUE(valuation_lower_bound(d.value - ex(p, oracle::delta_at_one(n, q, j))) >= d.error);
      }
    }
  }
}

TEST(PolyCurrent, Examples) {
  const PadicNumber q = ex(3, 3);
  const auto check = [&](const std::vector<PadicNumber>& coeffs, const PadicNumber& want) {
    const Certified v = poly_current_eval(coeffs, q, 10);
    EXPECT_TRUE(valuation_lower_bound(v.value - want) >= v.error);
  };
  check({ex(3, 0), ex(3, 1)}, q);
  check({ex(3, 1)}, ex(3, 1));
  check({ex(3, 0), ex(3, -1), ex(3, 1)}, q * q - q);
}

TEST(Theta, ConstantAndNormalization) {
  const PadicNumber q = ex(3, 3);
  const FactoredFunction none;
  const Certified c = theta_product(none, q, 1, ex(3, 5), ex(3, -1), 4);
  EXPECT_EQ(c.value.rational(), 1);
  FactoredFunction f;
  f.zeros = {{0, 1}, {1, -1}};
  const Certified n = theta_product(f, q, 2, ex(3, -2), ex(3, -2), 4);
  EXPECT_TRUE(valuation_lower_bound(n.value - ex(3, 1)) >= n.error);
}

TEST(Theta, RejectsNonzeroDegree) {
  FactoredFunction f;
  f.zeros = {{0, 1}};
  EXPECT_THROW(theta_product(f, ex(3, 3), 1, ex(3, 5), ex(3, -1), 4), MathFailure);
}

TEST(Theta, AutomorphyFactorIsConstant) {
  gen::Rng rng(74);
  for (int i = 0; i < 5; ++i) {
    const FactoredFunction f = gen::degree_zero_function(rng);
    const PadicNumber q = ex(5, 5);
    for (long l = 1; l <= 2; ++l) {
      const Certified a = theta_automorphy(f, q, l, ex(5, -2), ex(5, -1), 8);
      const Certified b = theta_automorphy(f, q, l, ex(5, mpq_class(-7, 3)), ex(5, -1), 8);
      EXPECT_TRUE(a.agrees_with(b));
      EXPECT_TRUE(a.relative_error() > ExtRational(3));
    }
  }
}

TEST(Ladder, CuspShortCircuit) {
  Current c = Current::windowed(1, 1);
  c.set(1, 1, 1);
  const LadderResult r = ladder_ord(c, ex(3, 3), ex(3, 3), 6);
  EXPECT_TRUE(r.cusp);
  EXPECT_EQ(r.ord, -1);
}

TEST(Ladder, MatchesPartialFractionOracle) {
  gen::Rng rng(75);
  for (int i = 0; i < 9; ++i) {
    const unsigned long p = i % 2 ? 3 : 5;
    const gen::OrdCase oc = gen::ord_case(rng, p, i % 3);
    const PadicNumber q = ex(p, static_cast<long>(p));
    const Current c = current_from_slopes(oc.f, q);
    const LadderResult r = ladder_ord(c, q, ex(p, oc.z), 6);
    EXPECT_TRUE(r.stabilized);
    EXPECT_EQ(r.ord, oc.ord);
    EXPECT_EQ(r.estimate, oc.ord + 1);
    EXPECT_EQ(dlog_ord(alpha_germ(c, q, ex(p, oc.z), 12), ex(p, 0)), oc.ord);
  }
}

TEST(Ladder, IndicesGrowWithSlopeE0) {
  gen::Rng rng(76);
  const gen::OrdCase oc = gen::ord_case(rng, 3, 2);
  const PadicNumber q = ex(3, 3);
  const LadderResult r = ladder_ord(current_from_slopes(oc.f, q), q, ex(3, oc.z), 8);
  ASSERT_GE(r.increments.size(), 3u);
  for (std::size_t k = r.increments.size() - 3; k < r.increments.size(); ++k) EXPECT_EQ(r.increments[k], 3);
}

TEST(TateParameter, Validation) {
  EXPECT_THROW(validate_q(ex(3, 1)), std::invalid_argument);
  EXPECT_THROW(validate_q(ex(3, 0)), std::invalid_argument);
  EXPECT_NO_THROW(validate_q(ex(3, 9)));
}
