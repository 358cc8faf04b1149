#include <gtest/gtest.h>

#include "generators.hpp"
#include "nonarch/errors.hpp"
#include "nonarch/torsor.hpp"

using namespace nonarch;

namespace {

PadicNumber ex(unsigned long p, const mpq_class& q) { return PadicNumber::exact(p, q); }

BoundedSeries poly(unsigned long p, const std::vector<mpq_class>& c) {
  return BoundedSeries::from_polynomial(p, Polynomial::from_rationals(p, c));
}

}  // namespace

TEST(Ramification, Examples) {
  EXPECT_EQ(ramification_index(poly(3, {1, 0, 1})), 2);
  EXPECT_EQ(ramification_index(poly(3, {1, 3, 0, 1})), 1);
  EXPECT_EQ(dlog_ord(poly(3, {1, 0, 1}), ex(3, 0)) + 1, 2);
  EXPECT_THROW(ramification_index(poly(3, {1})), std::invalid_argument);
}

TEST(Ramification, UndeterminedLeadingTermIsPrecisionError) {
  const BoundedSeries f(3, {ex(3, 1), PadicNumber::approx(3, 0, 4), ex(3, 1)});
  EXPECT_THROW(ramification_index(f), PrecisionError);
}

TEST(SplittingExact, Examples) {
  EXPECT_EQ(splitting_logradius_exact(2, 4, 3), mpq_class(9, 4));
  EXPECT_EQ(splitting_logradius_exact(1, 1, 2), 2);
  for (long big_n = 1; big_n <= 5; ++big_n)
    for (long n = 1; n < 8; ++n)
      EXPECT_EQ(splitting_logradius_exact(big_n, n + 1, 5) - splitting_logradius_exact(big_n, n, 5), mpq_class(1, big_n));
}

TEST(SplittingNumeric, Examples) {
  const RamifiedGerm g(poly(3, {1, 0, 1}));
  EXPECT_EQ(splitting_logradius_numeric(g, 3).value, ExtRational(mpq_class(7, 4)));
  EXPECT_TRUE(splitting_logradius_numeric(RamifiedGerm(poly(3, {1, 1})), 0).value.is_neg_inf());
  // X -> pX moves every log-radius down by one.
  const RamifiedGerm h(poly(3, {1, 0, 9}));
  EXPECT_EQ(splitting_logradius_numeric(h, 3).value, ExtRational(mpq_class(3, 4)));
}

TEST(SplittingNumeric, AgreesWithExactOnModelGerms) {
  for (unsigned long p : {2UL, 3UL, 5UL, 7UL}) {
    for (long big_n = 1; big_n <= 4; ++big_n) {
      std::vector<mpq_class> c(static_cast<std::size_t>(big_n + 1), mpq_class(0));
      c.front() = c.back() = 1;
      const RamifiedGerm g(poly(p, c));
      EXPECT_EQ(g.e0, big_n);
      for (long n = 1; n <= 6; ++n) {
        EXPECT_EQ(splitting_logradius_numeric(g, n).value, ExtRational(splitting_logradius_exact(big_n, n, p)));
      }
    }
  }
}

TEST(SplittingNumeric, AsymptoticLawOnGeneralGerm) {
  // 1 + X^2 + 5X^3 + X^5: rho_n - n/e0 is eventually constant.
  const RamifiedGerm g(poly(5, {1, 0, 1, 5, 0, 1}));
  ASSERT_EQ(g.e0, 2);
  std::vector<ExtRational> shifted;
  for (long n = 1; n <= 6; ++n) {
    const LogRadius r = splitting_logradius_numeric(g, n);
    shifted.push_back(r.value - ExtRational(mpq_class(n, 2)));
  }
  EXPECT_EQ(shifted[4], shifted[5]);
  EXPECT_EQ(shifted[3], shifted[4]);
}

TEST(SplittingBound, IsBelowNumericRadius) {
  for (unsigned long p : {2UL, 3UL, 5UL}) {
    const BoundedSeries f = poly(p, {1, 0, 1});
    for (long n = 1; n <= 5; ++n) {
      EXPECT_GE(splitting_logradius_bound(f, n), splitting_logradius_numeric(RamifiedGerm(f), n).value.value());
    }
  }
}

TEST(ArtinSchreier, Examples) {
  EXPECT_EQ(artin_schreier_certificate(1, 5).genus, 0);
  for (unsigned long p : {2UL, 3UL, 5UL}) {
    const auto c = artin_schreier_certificate(static_cast<long>(p * p), p);
    EXPECT_EQ(c.genus, 0);
    EXPECT_EQ(c.m, 2);
    EXPECT_FALSE(c.forces_vertex);
  }
  const auto c = artin_schreier_certificate(6, 5);
  EXPECT_EQ(c.d, 6);
  EXPECT_EQ(c.genus, 10);
  EXPECT_TRUE(c.forces_vertex);
  EXPECT_EQ(c.residue_equation, "T^5 - T = X^6");
  EXPECT_THROW(artin_schreier_certificate(0, 5), std::invalid_argument);
}

TEST(DlogOrd, Examples) {
  EXPECT_EQ(dlog_ord(poly(3, {0, 1}), ex(3, 0)), -1);
  EXPECT_EQ(dlog_ord(poly(3, {1, 0, 1}), ex(3, 0)), 1);
  // (x - 2)^3 about x = 2 + 0: shifted constant term is 0.
  EXPECT_EQ(dlog_ord(poly(5, {-8, 12, -6, 1}), ex(5, 2)), -1);
}

TEST(DlogOrd, MatchesRamificationIndex) {
  gen::Rng rng(41);
  for (int i = 0; i < 60; ++i) {
    std::vector<mpq_class> c{1};
    const long lead = rng.uniform(1, 5);
    for (long k = 1; k < lead; ++k) c.push_back(0);
    c.push_back(rng.nonzero(-9, 9));
    for (long k = 0; k < 3; ++k) c.push_back(rng.uniform(-9, 9));
    const BoundedSeries f = poly(3, c);
    EXPECT_EQ(dlog_ord(f, ex(3, 0)) + 1, ramification_index(f));
    EXPECT_EQ(ramification_index(f), lead);
  }
}
