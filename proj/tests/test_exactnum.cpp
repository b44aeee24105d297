#include <gtest/gtest.h>

#include <random>

#include "padic/ratfunc.hpp"

using namespace padic;

namespace {

Rational q(long a, long b = 1) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

Cyclotomic c(long p, long a, long b = 1) { return Cyclotomic(p, q(a, b)); }

TruncatedSeries poly(long p, std::vector<long> coeffs, long order) {
  std::vector<Cyclotomic> cs;
  for (long x : coeffs) cs.push_back(c(p, x));
  return TruncatedSeries(p, 0, cs, order);
}

}  // namespace

TEST(Valuation, Examples) {
  EXPECT_EQ(val_p(q(12), 2), 2);
  EXPECT_EQ(val_p(q(5, 9), 3), -2);
  EXPECT_EQ(val_p(q(0), 5), kInfinity);
  EXPECT_EQ(val_p(std::int64_t{-48}, 2), 4);
}

TEST(Valuation, MultiplicativeAndUltrametric) {
  std::mt19937_64 rng(11);
  for (long p : {2L, 3L, 5L, 7L}) {
    for (int i = 0; i < 300; ++i) {
      const Rational x = q(static_cast<long>(rng() % 2001) - 1000, static_cast<long>(rng() % 500) + 1);
      const Rational y = q(static_cast<long>(rng() % 2001) - 1000, static_cast<long>(rng() % 500) + 1);
      if (x == 0 || y == 0) continue;
      EXPECT_EQ(val_p(Rational(x * y), p), val_p(x, p) + val_p(y, p));
      if (x + y != 0) EXPECT_GE(val_p(Rational(x + y), p), std::min(val_p(x, p), val_p(y, p)));
    }
  }
}

TEST(Valuation, RejectsCompositeModulus) {
  EXPECT_THROW(require_prime(4), Error);
  EXPECT_THROW(val_p(q(3), 1), Error);
}

TEST(FracPart, Examples) {
  EXPECT_EQ(frac_p(q(3, 4), 2), q(3, 4));
  EXPECT_EQ(frac_p(q(7), 2), q(0));
  EXPECT_EQ(frac_p(q(1, 3) + 2, 3), q(1, 3));
  EXPECT_EQ(frac_p(q(-1, 4), 2), q(3, 4));
}

TEST(FracPart, DifferenceIsIntegral) {
  std::mt19937_64 rng(5);
  for (long p : {2L, 3L, 5L}) {
    for (int i = 0; i < 200; ++i) {
      const Rational x = q(static_cast<long>(rng() % 4001) - 2000, ipow64(p, static_cast<int>(rng() % 4)));
      const Rational f = frac_p(x, p);
      EXPECT_GE(f, 0);
      EXPECT_LT(f, 1);
      EXPECT_GE(val_p(Rational(x - f), p), 0);
    }
  }
}

TEST(AdditiveCharacter, Examples) {
  EXPECT_EQ(psi(q(1, 2), 2), c(2, -1));
  EXPECT_EQ(psi(q(1, 4), 2), Cyclotomic::root_of_unity(2, 2, 1));
  EXPECT_EQ(psi(q(1, 4), 2) * psi(q(1, 4), 2), c(2, -1));
  Cyclotomic s = Cyclotomic::zero(3);
  for (long a = 0; a < 3; ++a) s += psi(q(a, 3), 3);
  EXPECT_TRUE(s.is_zero());
  EXPECT_THROW(psi(q(1, 6), 2), Error);
}

TEST(AdditiveCharacter, Homomorphism) {
  std::mt19937_64 rng(3);
  for (long p : {2L, 3L, 5L}) {
    for (int i = 0; i < 100; ++i) {
      const Rational x = q(static_cast<long>(rng() % 200) - 100, ipow64(p, static_cast<int>(rng() % 3)));
      const Rational y = q(static_cast<long>(rng() % 200) - 100, ipow64(p, static_cast<int>(rng() % 3)));
      EXPECT_EQ(psi(Rational(x + y), p), psi(x, p) * psi(y, p));
      EXPECT_EQ(psi(Rational(x + 7), p), psi(x, p));
    }
  }
}

TEST(Cyclotomic, FullSumsOfRootsVanish) {
  for (long p : {2L, 3L, 5L})
    for (int k = 1; k <= 3; ++k) {
      Cyclotomic s = Cyclotomic::zero(p);
      for (std::int64_t e = 0; e < ipow64(p, k); ++e) s += Cyclotomic::root_of_unity(p, k, e);
      EXPECT_TRUE(s.is_zero()) << p << "^" << k;
    }
}

TEST(Cyclotomic, FieldOperations) {
  const Cyclotomic z = Cyclotomic::root_of_unity(3, 2, 1);
  const Cyclotomic x = z * c(3, 2) + c(3, 1, 5);
  EXPECT_EQ(x * x.inverse(), c(3, 1));
  EXPECT_EQ((x - x).is_zero(), true);
  EXPECT_EQ(Cyclotomic::root_of_unity(3, 2, 3), Cyclotomic::root_of_unity(3, 1, 1));
  EXPECT_TRUE(Cyclotomic::root_of_unity(2, 3, 4) == c(2, -1));
}

TEST(Series, ProductExample) {
  const TruncatedSeries a = poly(2, {1, 1}, 5);
  const TruncatedSeries b = poly(2, {1, -1}, 5);
  const TruncatedSeries prod = a * b;
  EXPECT_EQ(prod, poly(2, {1, 0, -1}, 5));
  EXPECT_EQ(prod.trunc_order(), 5);
}

TEST(Series, EqualityUpToOrder) {
  const SeriesEquality eq = compare_up_to_order(poly(2, {1, 0, 0, 1}, 2), poly(2, {1}, 2), 2);
  EXPECT_EQ(eq.outcome, SeriesComparison::kEqual);
  EXPECT_EQ(eq.order_compared, 2);
  const SeriesEquality ne = compare_up_to_order(poly(2, {1, 1}, 4), poly(2, {1, 2}, 4), 4);
  EXPECT_EQ(ne.outcome, SeriesComparison::kNotEqual);
  EXPECT_EQ(ne.first_mismatch, 1);
  const SeriesEquality inc = compare_up_to_order(poly(2, {1}, 2), poly(2, {1}, 6), 4);
  EXPECT_EQ(inc.outcome, SeriesComparison::kInconclusive);
}

TEST(Series, CoefficientAboveOrderThrows) {
  EXPECT_THROW(poly(3, {1, 2}, 1).coeff(2), Error);
}

TEST(RationalFunction, GeometricClosureMatchesSummation) {
  // c·Σ_j t^{jk} against the closed record c/(1 - t^k).
  const long p = 3, k = 2;
  const Cyclotomic coef = c(p, 5, 7);
  const RationalFunction closed = RationalFunction::geometric(p, q(1), k).scaled(coef);
  std::vector<Cyclotomic> explicit_sum(6, Cyclotomic::zero(p));
  for (long j = 0; j * k <= 5; ++j) explicit_sum[j * k] = coef;
  EXPECT_EQ(closed.to_series(5), TruncatedSeries(p, 0, explicit_sum, 5));
}

TEST(RationalFunction, GammaValues) {
  EXPECT_EQ(gamma_p(2).evaluate_at(q(1, 4)), c(2, -3, 4));
  EXPECT_TRUE(gamma_p(2).evaluate_at(q(1)).is_zero());
  for (long p : {2L, 3L, 5L}) {
    // γ(s)γ(1-s) = 1; s -> 1-s is t -> 1/(p t).
    const RationalFunction g = gamma_p(p);
    EXPECT_EQ(g * g.substitute_reciprocal(q(1, p)), RationalFunction::constant(p, q(1)));
    EXPECT_EQ(gamma_p_reflected(p), g.substitute_reciprocal(q(1)));
  }
}

TEST(RationalFunction, ArithmeticAgreesWithSeries) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 30; ++i) {
    const long p = std::vector<long>{2, 3, 5}[rng() % 3];
    const RationalFunction a = RationalFunction::polynomial(p, -1, {c(p, rng() % 7), c(p, 1), c(p, -2)}) *
                               RationalFunction::geometric(p, q(1, p), 1);
    const RationalFunction b = RationalFunction::polynomial(p, 0, {c(p, 1), c(p, rng() % 5)}) *
                               RationalFunction::geometric(p, q(1, p * p), 2);
    EXPECT_EQ((a + b).to_series(6), a.to_series(6) + b.to_series(6));
    EXPECT_EQ((a * b).to_series(6), (a.to_series(8) * b.to_series(8)).truncated(6));
    EXPECT_EQ((a - a), RationalFunction(p));
    EXPECT_EQ((a * b) / b, a);
  }
}

TEST(RationalFunction, PoleIsReported) {
  const RationalFunction f = RationalFunction::geometric(2, q(1, 2), 1);
  EXPECT_THROW(f.evaluate_at(q(2)), Error);
  const RationalFunction removable =
      RationalFunction::polynomial(2, 0, {c(2, 1), c(2, -1, 2)}) * RationalFunction::geometric(2, q(1, 2), 1);
  EXPECT_EQ(removable.evaluate_at(q(2)), c(2, 1));
}
