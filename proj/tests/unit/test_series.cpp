#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pdbell/egf.hpp"
#include "pdbell/errors.hpp"
#include "pdbell/polynomial_families.hpp"
#include "pdbell/sequences.hpp"
#include "pdbell/series.hpp"

using namespace pdbell;

namespace {

TruncatedSeries random_series(int order, bool unit) {
  std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
  for (auto& v : c) v = oracle::random_rational(9);
  c[0] = unit ? Rational(oracle::uniform(1, 3)) : Rational(0);
  return TruncatedSeries(order, std::move(c));
}

}  // namespace

TEST(Series, Basics) {
  const int N = 10;
  const auto one = TruncatedSeries::constant(1, N);
  const auto t = TruncatedSeries::variable(N);
  EXPECT_EQ(exp(TruncatedSeries(N)), one);
  const auto e = exp(t);
  for (int n = 0; n <= N; ++n) EXPECT_EQ(e.coeff(n), make_rational(1, factorial(n)));
  EXPECT_EQ((one / (one - t)) * (one - t), one);
  EXPECT_EQ(expm1_series(N), e - one);
  EXPECT_EQ(pow(t, 0), one);
  EXPECT_EQ(pow(t, 3).coeff(3), 1);
}

TEST(Series, OrderDiscipline) {
  const TruncatedSeries a(5), b(8);
  EXPECT_EQ((a + b).order(), 5);
  EXPECT_EQ((a * b).order(), 5);
  EXPECT_THROW(static_cast<void>(a.coeff(6)), TruncationError);
  EXPECT_THROW(static_cast<void>(a.coeff(-1)), DomainError);
  EXPECT_EQ(TruncatedSeries(3, {1, 2, 3, 4, 5, 6}).coefficients().size(), 4u);
}

TEST(Series, PreconditionErrorsAreDistinct) {
  const auto t = TruncatedSeries::variable(6);
  const auto one = TruncatedSeries::constant(1, 6);
  EXPECT_THROW(one / t, NonUnitDivisorError);
  EXPECT_THROW(exp(one), NonZeroConstantError);
  EXPECT_THROW(parse_egf_family("nope"), InputError);
}

TEST(Series, ArithmeticProperties) {
  for (int i = 0; i < 40; ++i) {
    const int order = static_cast<int>(oracle::uniform(0, 12));
    const auto a = random_series(order, oracle::uniform(0, 1) == 1);
    const auto b = random_series(order, true);
    EXPECT_EQ((a * b) / b, a);
    const auto x = random_series(order, false);
    const auto y = random_series(order, false);
    EXPECT_EQ(exp(x + y), exp(x) * exp(y));
    EXPECT_EQ(pow(b, 3), b * b * b);
  }
}

TEST(Series, ComposeExamples) {
  const int N = 15;
  const auto u = TruncatedSeries::variable(N);
  EXPECT_EQ(compose_expm1(u), expm1_series(N));
  for (int k = 0; k <= 6; ++k) {
    const auto s = compose_expm1(pow(u, static_cast<unsigned>(k)) * make_rational(1, factorial(k)));
    for (int n = 0; n <= N; ++n) EXPECT_EQ(s.egf_coeff(n), Rational(stirling2(n, k)));
  }
  const auto one = TruncatedSeries::constant(1, N);
  const auto ob = compose_expm1(one / (one - u));
  for (int n = 0; n <= N; ++n) EXPECT_EQ(ob.egf_coeff(n), Rational(ordered_bell(n)));
}

TEST(Series, ComposeRoutesAgree) {
  for (int i = 0; i < 25; ++i) {
    const int order = static_cast<int>(oracle::uniform(0, 20));
    const auto a = random_series(order, oracle::uniform(0, 1) == 1);
    EXPECT_EQ(compose_expm1(a), compose_expm1_transport(a));
  }
}

TEST(Series, FamilyExamples) {
  EXPECT_EQ(egf_family(EgfFamily::partial_derangement, 0, 6).egf_coeff(4), 9);
  EXPECT_EQ(egf_family(EgfFamily::deranged_bell, 0, 6).egf_coeff(3), 5);
  EXPECT_EQ(egf_family(EgfFamily::higher_bernoulli, 1, 6).egf_coeff(1), make_rational(-1, 2));
  const auto pdb0 = egf_pdb(0, 1, 5);
  const std::vector<int> expected{1, 0, 1, 5, 28, 199};
  for (int n = 0; n <= 5; ++n) EXPECT_EQ(pdb0.egf_coeff(n), expected[static_cast<std::size_t>(n)]);
  EXPECT_EQ(egf_pdb(1, 1, 5).egf_coeff(3), 4);
  EXPECT_EQ(egf_pdb(0, 0, 8), TruncatedSeries::constant(1, 8));
  for (EgfFamily f : all_egf_families()) EXPECT_EQ(parse_egf_family(to_string(f)), f);
}

TEST(Series, FamiliesMatchDirectValues) {
  const int N = 20;
  for (int r = 0; r <= 4; ++r) {
    const auto pd = egf_family(EgfFamily::partial_derangement, r, N);
    const auto sc = egf_family(EgfFamily::stirling_column, r, N);
    const auto hb = egf_family(EgfFamily::higher_bernoulli, r, N);
    for (int n = 0; n <= N; ++n) {
      EXPECT_EQ(pd.egf_coeff(n), Rational(partial_derangement(n, r)));
      EXPECT_EQ(sc.egf_coeff(n), Rational(oracle::stirling_explicit(n, r)));
      EXPECT_EQ(hb.egf_coeff(n), oracle::higher_bernoulli_cauchy(n, r));
    }
    for (const Rational& y : {Rational(1), Rational(-1), make_rational(1, 2), make_rational(-7, 3)}) {
      const auto s = egf_pdb(r, y, N);
      for (int n = 0; n <= N; ++n) EXPECT_EQ(s.egf_coeff(n), pdb_poly(n, r).evaluate(y));
    }
  }
  const auto ob = egf_family(EgfFamily::ordered_bell, 0, N);
  const auto db = egf_family(EgfFamily::deranged_bell, 0, N);
  for (int n = 0; n <= N; ++n) {
    EXPECT_EQ(ob.egf_coeff(n), Rational(oracle::ordered_bell_recurrence(n)));
    EXPECT_EQ(db.egf_coeff(n), Rational(deranged_bell(n)));
  }
}
