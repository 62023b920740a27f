#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "ultrazeta/elementary.hpp"
#include "ultrazeta/errors.hpp"
#include "ultrazeta/heat_kernel.hpp"
#include "ultrazeta/hinf_zeta.hpp"
#include "ultrazeta/igusa.hpp"
#include "ultrazeta/laurent.hpp"
#include "ultrazeta/poles.hpp"

using namespace ultrazeta;

namespace {

double dist(ComplexL a, ComplexL b) { return static_cast<double>(std::abs(a - b)); }

}  // namespace

TEST(Elementary, IndicatorMatchesMonomialClosedForm) {
  for (unsigned p : {2u, 3u}) {
    auto F = FieldSpec::qp(p);
    std::vector<unsigned> N{1, 2};
    auto exact = elementary_integral_exact(indicator_ball(F, 2, 0), N, {1, 1});
    auto closed = to_complex(monomial_zeta_closed(p, N));
    for (ComplexL s : {ComplexL(0.5, 0), ComplexL(1.2, 3.0), ComplexL(-0.3, 0.1)})
      EXPECT_LT(dist(exact.evaluate_s(s), closed.evaluate_s(s)), 1e-14);
  }
}

TEST(Elementary, SupportOffZeroIsEntire) {
  auto F = FieldSpec::qp(3);
  GridShape s = GridShape::make(F, 1, 0, 1);
  auto ghat = indicator_cell(s, 1);
  auto e = elementary_integral_exact_freq(ghat, {1}, {1});
  EXPECT_TRUE(e.is_polynomial());
  RationalGrid r(s);
  r.values()[1] = 1;
  auto exact = elementary_integral_exact_freq(r, {1}, {1});
  EXPECT_TRUE(exact.is_polynomial());
  EXPECT_EQ(exact.num(), Poly<Rational>::constant(Rational(1, 3)));
}

TEST(Elementary, ExactMatchesDirectSum) {
  std::mt19937_64 rng(71);
  for (unsigned p : {2u, 3u}) {
    for (int trial = 0; trial < 4; ++trial) {
      auto g = random_grid(GridShape::make(FieldSpec::qp(p), 2, 1, 1), rng);
      std::vector<unsigned> N{1, 2}, v{1, 2};
      auto exact = elementary_integral_exact(g, N, v);
      for (ComplexL s : {ComplexL(0.2, 0), ComplexL(1.5, -2.0), ComplexL(0.05, 7.0)}) {
        auto direct = elementary_integral(g, N, v, s);
        EXPECT_LT(dist(exact.evaluate_s(s), direct.value), 1e-10);
        EXPECT_LT(direct.tail_bound, 1e-12);
      }
    }
  }
}

TEST(Elementary, FunctionalEquation) {
  std::mt19937_64 rng(72);
  for (unsigned beta : {1u, 2u}) {
    for (int n : {1, 2}) {
      auto g = random_grid(GridShape::make(FieldSpec::qp(3), n, 1, 1), rng);
      std::vector<unsigned> N(static_cast<std::size_t>(n), 1), v(static_cast<std::size_t>(n), 1);
      N[0] = 2;
      auto samples = functional_equation_samples(N, v, beta, 10);
      ASSERT_EQ(samples.size(), 10u);
      auto rep = functional_equation_check(g, N, v, beta, samples);
      EXPECT_LT(rep.max_discrepancy, 1e-10) << "beta=" << beta << " n=" << n;
    }
  }
}

TEST(Mixed, SphereSumValues) {
  auto F = FieldSpec::qp(3);
  auto one = indicator_ball(F, 1, 0);
  auto a = mixed_integral(one, {0}, {}, {1.0L}, {});
  EXPECT_LT(dist(a.value, oracle::sphere_sum(3, 0, 1.0L)), 1e-14);
  auto b = mixed_integral(one, {}, {0}, {}, {0.5L});
  EXPECT_NEAR(static_cast<double>(b.value.real()), (2.0 / 3.0) / (1 - 1 / std::sqrt(3.0)), 1e-14);
  auto c = mixed_integral(one, {}, {0}, {}, {1e-9L});
  EXPECT_NEAR(static_cast<double>(c.value.real()), 1.0, 1e-8);
  EXPECT_THROW(mixed_integral(one, {}, {0}, {}, {1.2L}), DivergentError);
  EXPECT_THROW(mixed_integral(one, {0}, {}, {-0.5L}, {}), DivergentError);
}

TEST(Mixed, TwoAxesMatchElementaryIntegral) {
  std::mt19937_64 rng(73);
  auto g = random_grid(GridShape::make(FieldSpec::qp(2), 2, 1, 1), rng);
  auto ii = mixed_integral(g, {0, 1}, {}, {1.0L, 0.5L}, {});
  EXPECT_LT(dist(ii.value, elementary_integral(g, {2, 1}, {1, 1}, ComplexL(0.5L, 0)).value), 1e-12);
  auto ij = mixed_integral(g, {0}, {1}, {1.0L}, {0.5L});
  EXPECT_LT(dist(ij.value, elementary_integral(g, {2, 1}, {3, 1}, ComplexL(-0.5L, 0)).value), 1e-12);
}

TEST(Poles, Progressions) {
  EXPECT_EQ(GeneralizedProgression::arithmetic(1.0).terms(3), (std::vector<double>{0, 1, 2, 3}));
  EXPECT_EQ(GeneralizedProgression::parse("1,1,1,...").terms(3), (std::vector<double>{0, 0, 1, 2}));
  auto fin = GeneralizedProgression::parse("2,0.5");
  EXPECT_EQ(fin.terms(5), (std::vector<double>{0, 1, 1.5}));
  EXPECT_THROW(GeneralizedProgression::parse("0.5,1,..."), ValidationError);
  EXPECT_THROW(GeneralizedProgression::parse("1,-1"), ValidationError);
  auto data = parse_resolution_data("(1,1);(2,2)");
  ASSERT_EQ(data.size(), 2u);
  EXPECT_EQ(data[1].N, 2u);
  EXPECT_EQ(data[1].v, 2u);
  EXPECT_THROW(parse_resolution_data("(0,1)"), ValidationError);
}

TEST(Poles, SingleDatum) {
  auto out = predict_poles({{1, 2}}, {GeneralizedProgression::parse("2,1,...")}, 3);
  std::vector<double> values;
  for (const auto& c : out) values.push_back(c.value);
  EXPECT_EQ(values, (std::vector<double>{-2, -3, -4, -5}));
}

TEST(Poles, SncData) {
  auto out = predict_poles({{1, 1}, {2, 2}},
                           {GeneralizedProgression{{1.0, 0.5}, true}, GeneralizedProgression::arithmetic(1.0)}, 8);
  ASSERT_GE(out.size(), 8u);
  for (std::size_t i = 0; i < 8; ++i) EXPECT_DOUBLE_EQ(out[i].value, -1.0 - 0.5 * static_cast<double>(i));
  for (std::size_t i = 0; i < out.size(); ++i) {
    EXPECT_LT(out[i].value, 0);
    if (i) EXPECT_LT(out[i].value, out[i - 1].value);
    EXPECT_FALSE(out[i].sources.empty());
  }
  EXPECT_THROW(predict_poles({{1, 1}}, {}, 3), ValidationError);
}

TEST(Hinf, ModesAgree) {
  auto Z = HinfZeta::fermat(FieldSpec::qp(3), 2, 2, 1.0);
  for (ComplexL s : {ComplexL(0.7, 0), ComplexL(0.1, 2.0), ComplexL(3.0, -1.0)}) {
    auto a = Z.evaluate(s, HinfMode::SphereSeries);
    auto b = Z.evaluate(s, HinfMode::Factored);
    EXPECT_LT(dist(a.value, b.value), 1e-10);
    EXPECT_LT(a.tail_bound, 1e-14);
  }
  EXPECT_THROW(Z.evaluate(ComplexL(-1.5 + 1e-8, 0), HinfMode::Factored), PoleProximity);
  EXPECT_THROW(Z.evaluate(ComplexL(-1.2, 0), HinfMode::SphereSeries), DivergentError);
}

TEST(Hinf, LocatedPolesArePredicted) {
  for (auto [n, d, alpha] : {std::tuple{1, 2, 1.0}, std::tuple{2, 2, 1.0}, std::tuple{2, 2, 2.0}}) {
    auto Z = HinfZeta::fermat(FieldSpec::qp(5), n, d, alpha);
    auto cand = Z.candidate_poles(20);
    auto found = Z.locate_real_poles(-4.6123, -0.3, 0.0137);
    EXPECT_FALSE(found.empty());
    for (double x : found) {
      double best = 1e9;
      for (double c : cand) best = std::min(best, std::abs(x - c));
      EXPECT_LT(best, 1e-4) << "n=" << n << " d=" << d << " alpha=" << alpha << " pole " << x;
    }
  }
}

TEST(Hinf, LinearFormHasConstantZ0) {
  HinfZeta Z(FieldSpec::qp(3), IntPolynomial::parse("x1"), 1.0);
  EXPECT_TRUE(Z.Z0().is_polynomial());
  EXPECT_EQ(Z.Z0().num(), Poly<Rational>::constant(Rational(2, 3)));
}

TEST(Hinf, ResidueAtMinusOne) {
  // n = 3 keeps the poles of Z1 away from -1.
  auto Z = HinfZeta::fermat(FieldSpec::qp(5), 3, 2, 1.0);
  auto lau = laurent_at(Z.Z0(), -1, -1, 0);
  ASSERT_EQ(lau.pole_order(), 1);
  ComplexL predicted = lau.value(-1) * Z.z1(ComplexL(-1, 0), HinfMode::Factored).value;
  long double h = 1e-7L;
  ComplexL numeric = h * Z.evaluate(ComplexL(-1 + h, 0), HinfMode::Factored, 0).value;
  EXPECT_LT(dist(numeric, predicted), 1e-5 * std::abs(static_cast<double>(predicted.real())));
}

TEST(Heat, NormsAgreeAndIncrease) {
  for (int n : {1, 2}) {
    for (double t : {0.1, 1.0}) {
      for (double alpha : {1.0, 2.0}) {
        HeatKernel K(FieldSpec::qp(3), n, t, alpha);
        double prev = 0;
        for (int l = 0; l <= 20; ++l) {
          auto a = K.sobolev_norm(l);
          auto b = K.sobolev_norm_split(l);
          EXPECT_TRUE(std::isfinite(a.norm));
          EXPECT_LT(a.tail_bound, 1e-12);
          EXPECT_LT(b.tail_bound, 1e-12);
          EXPECT_NEAR(a.squared, b.squared, 1e-12 * a.squared);
          EXPECT_GE(a.norm, prev);
          prev = a.norm;
        }
      }
    }
  }
}

TEST(Heat, L2NormOracleAndScaling) {
  HeatKernel K(FieldSpec::qp(2), 1, 0.5, 1.0);
  long double sum = 0;
  for (long j = -200; j <= 40; ++j) sum += std::pow(2.0L, j) * 0.5L * std::exp(-2 * 0.5L * std::pow(2.0L, j));
  EXPECT_NEAR(K.sobolev_norm(0).squared, static_cast<double>(sum), 1e-13);

  HeatKernel K1(FieldSpec::qp(3), 2, 1.0, 2.0), K9(FieldSpec::qp(3), 2, 9.0, 2.0);
  for (long j = -3; j <= 2; ++j) {
    EXPECT_NEAR(K9.on_sphere(j), K1.on_sphere(j + 1), 1e-15);
    EXPECT_NEAR(K9.on_sphere(j), std::exp(-9.0 * std::pow(3.0, 2.0 * static_cast<double>(j))), 1e-15);
  }
}
