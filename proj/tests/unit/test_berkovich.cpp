#include <gtest/gtest.h>

#include "generators.hpp"
#include "nonarch/berkovich.hpp"

using namespace nonarch;

namespace {

PadicNumber ex(unsigned long p, const mpq_class& q) { return PadicNumber::exact(p, q); }
BallPoint ball(unsigned long p, const mpq_class& a, const ExtRational& rho) { return {ex(p, a), rho}; }

}  // namespace

TEST(Seminorm, Examples) {
  const unsigned long p = 3;
  const Polynomial x = Polynomial::monomial(ex(p, 1), 1);
  for (long rho : {-2L, 0L, 3L}) EXPECT_EQ(seminorm(x, ball(p, 0, rho)), ExtRational(rho));
  EXPECT_EQ(seminorm(Polynomial::constant(ex(p, 3)), ball(p, 5, 2)), ExtRational(1));
  const Polynomial f = Polynomial::from_rationals(p, {0, 3, 1});
  EXPECT_EQ(seminorm(f, ball(p, 0, 1)), ExtRational(2));
}

TEST(Seminorm, TypeOneIsValuationOfValue) {
  const Polynomial f = Polynomial::from_rationals(5, {-26, 0, 1});
  EXPECT_EQ(seminorm(f, ball(5, 1, ExtRational::pos_inf())), ExtRational(2));
}

TEST(Seminorm, MultiplicativeAndUltrametric) {
  gen::Rng rng(31);
  for (int i = 0; i < 100; ++i) {
    const unsigned long p = i % 2 ? 2 : 3;
    const Polynomial f(gen::zp_polynomial(rng, p, 3));
    const Polynomial g(gen::zp_polynomial(rng, p, 3));
    if (f.coeffs().empty() || g.coeffs().empty()) continue;
    const BallPoint b = ball(p, rng.uniform(-9, 9), mpq_class(rng.uniform(-4, 8), rng.uniform(1, 3)));
    const ExtRational sf = seminorm(f, b), sg = seminorm(g, b);
    if (sf.is_pos_inf() || sg.is_pos_inf()) continue;
    EXPECT_EQ(seminorm(f * g, b), sf + sg);
    EXPECT_GE(seminorm(f + g, b), min(sf, sg));
  }
}

TEST(Seminorm, IndependentOfCentreWithinBall) {
  const unsigned long p = 3;
  const Polynomial f = Polynomial::from_rationals(p, {2, -7, 0, 5});
  const BallPoint b1 = ball(p, 1, 2);
  const BallPoint b2 = ball(p, 1 + 9 * 4, 2);
  ASSERT_TRUE(same_point(b1, b2));
  EXPECT_EQ(seminorm(f, b1), seminorm(f, b2));
}

TEST(SamePoint, Examples) {
  EXPECT_TRUE(same_point(ball(3, 0, 0), ball(3, 1, 0)));
  EXPECT_FALSE(same_point(ball(3, 0, ExtRational::pos_inf()), ball(3, 3, ExtRational::pos_inf())));
  EXPECT_TRUE(same_point(ball(3, 7, mpq_class(5, 2)), ball(3, 7, mpq_class(5, 2))));
  EXPECT_FALSE(same_point(ball(3, 0, 1), ball(3, 0, 2)));
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify_type(ball(3, 4, ExtRational::pos_inf())), 1);
  EXPECT_EQ(classify_type(ball(3, 0, mpq_class(1, 2))), 2);
  EXPECT_EQ(classify_type(ball(3, 0, 0)), 2);
}

TEST(Join, Examples) {
  EXPECT_TRUE(same_point(join(ex(3, 0), ex(3, 1)).point, ball(3, 0, 0)));
  EXPECT_TRUE(same_point(join(ex(3, 0), ex(3, 3)).point, ball(3, 0, 1)));
  EXPECT_TRUE(same_point(join(ex(3, 3), ex(3, 3 + 27)).point, ball(3, 3, 3)));
  const JoinResult same = join(ex(5, 2), ex(5, 2));
  EXPECT_TRUE(same.coincident);
  EXPECT_EQ(classify_type(same.point), 1);
}

TEST(Ladder, Examples) {
  EXPECT_TRUE(same_point(ladder_point(ex(3, 2), 0, 3), ball(3, 2, mpq_class(1, 2))));
  EXPECT_TRUE(same_point(ladder_point(ex(2, 1), 2, 2), ball(2, 1, 3)));
  ExtRational prev = ExtRational::neg_inf();
  for (long n = 0; n < 8; ++n) {
    const BallPoint b = ladder_point(ex(5, 10), n, 5);
    EXPECT_GT(b.logradius, prev);
    prev = b.logradius;
  }
}

TEST(Segment, ContainsEndpointsAndJoin) {
  const BallPoint x = ball(3, 0, 4);
  const BallPoint y = ball(3, 9, 5);
  const auto segs = segment_between(x, y);
  ASSERT_FALSE(segs.empty());
  auto on = [&](const BallPoint& b) {
    for (const auto& s : segs)
      if (s.contains(b)) return true;
    return false;
  };
  EXPECT_TRUE(on(x));
  EXPECT_TRUE(on(y));
  EXPECT_TRUE(on(ball(3, 0, 2)));   // the join b_{0,2}
  EXPECT_TRUE(on(ball(3, 9, 3)));
  EXPECT_FALSE(on(ball(3, 0, 1)));  // above the join
  EXPECT_FALSE(on(ball(3, 1, 3)));  // different branch
}
