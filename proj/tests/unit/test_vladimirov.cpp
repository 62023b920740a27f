#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "oracles.hpp"
#include "ultrazeta/errors.hpp"
#include "ultrazeta/sobolev.hpp"
#include "ultrazeta/vladimirov.hpp"

using namespace ultrazeta;

namespace {

GridFunction random_g(std::mt19937_64& rng, FieldSpec F, int n, int L = 1, int m = 1) {
  return random_grid(GridShape::make(F, n, L, m), rng);
}

Complex pair(const SpectralFunction& T, const GridFunction& g) { return pairing(T, g); }

}  // namespace

TEST(Gamma, ExactValueAndReflection) {
  EXPECT_EQ(gamma_factor_exact(2, 2), Rational(-4, 3));
  EXPECT_NEAR(static_cast<double>(gamma_factor(2, 2).real()), -4.0 / 3.0, 1e-15);
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> re(-3, 3), im(-4, 4);
  for (unsigned q : {2u, 3u, 5u}) {
    for (int trial = 0; trial < 40; ++trial) {
      ComplexL a(re(rng), im(rng));
      ComplexL prod;
      try {
        prod = gamma_factor(q, a) * gamma_factor(q, ComplexL(1) - a);
      } catch (const PoleOfGamma&) {
        continue;
      }
      EXPECT_NEAR(static_cast<double>(std::abs(prod - ComplexL(1))), 0, 1e-12);
    }
  }
}

TEST(Gamma, PoleDetection) {
  for (unsigned q : {2u, 3u}) {
    const long double period = 2 * std::numbers::pi_v<long double> / std::log(static_cast<long double>(q));
    for (int j = -3; j <= 3; ++j) {
      for (long double base : {0.0L, 1.0L}) {
        ComplexL mu(base, j * period);
        EXPECT_THROW(gamma_factor(q, mu + ComplexL(5e-10L, 0)), PoleOfGamma);
        EXPECT_THROW(gamma_factor(q, mu + ComplexL(0, -5e-10L)), PoleOfGamma);
        EXPECT_NO_THROW(gamma_factor(q, mu + ComplexL(1e-6L, 0)));
      }
    }
  }
}

TEST(PseudoDiff, ParseAndShift) {
  auto op = PseudoDiffOp::parse("x1^2+x2^2:1.3;x1:0.5", 2);
  ASSERT_EQ(op.symbols.size(), 2u);
  EXPECT_EQ(op.sobolev_shift(), 2 * (2 * 2 + 1 * 1));
  auto c = PseudoDiffOp::parse("x1:0.5+2i", 1);
  EXPECT_NEAR(c.symbols[0].exponent.imag(), 2.0, 1e-15);
  EXPECT_THROW(PseudoDiffOp::parse("x1:-0.5", 1), ValidationError);
  EXPECT_THROW(PseudoDiffOp::parse("x1", 1), ValidationError);
}

TEST(PseudoDiff, ZeroOrderIsIdentityAndExponentsAdd) {
  std::mt19937_64 rng(8);
  auto F = FieldSpec::qp(3);
  for (int trial = 0; trial < 5; ++trial) {
    auto g = random_g(rng, F, 2), h = random_g(rng, F, 2);
    EXPECT_NEAR(std::abs(pair(vladimirov({0.0, 0.0}, g), h) - pairing(g, h)), 0, 1e-12);

    auto ab = apply_pseudodiff(vladimirov_operator({0.4, 0.0}), vladimirov({0.3, 0.7}, g));
    auto direct = vladimirov({0.7, 0.7}, g);
    auto merged = merge_multipliers(ab.multipliers());
    ASSERT_EQ(merged.size(), direct.multipliers().size());
    for (std::size_t i = 0; i < merged.size(); ++i) {
      EXPECT_EQ(merged[i].symbol.terms(), direct.multipliers()[i].symbol.terms());
      EXPECT_NEAR(std::abs(merged[i].exponent - direct.multipliers()[i].exponent), 0, 1e-15);
    }
    EXPECT_NEAR(std::abs(pair(ab, h) - pair(direct, h)), 0, 1e-12);
  }
}

TEST(PseudoDiff, SobolevContinuity) {
  std::mt19937_64 rng(21);
  auto F = FieldSpec::qp(2);
  for (const char* text : {"x1:0.5", "x1:1.3", "x1^2+x2^2:0.5", "x1^2+x2^2:1.3"}) {
    auto op = PseudoDiffOp::parse(text, 2);
    for (int trial = 0; trial < 5; ++trial) {
      auto g = random_g(rng, F, 2);
      auto Pg = apply_pseudodiff(op, g);
      for (int l : {0, 2, 4})
        EXPECT_LE(sobolev_norm(Pg, l), sobolev_norm(g, l + op.sobolev_shift()) * (1 + 1e-12)) << text << " l=" << l;
    }
  }
}

TEST(PseudoDiff, AdjointIdentity) {
  std::mt19937_64 rng(31);
  auto F = FieldSpec::qp(3);
  auto op = PseudoDiffOp::parse("x1:0.6+0.4i;x2:1.2", 2);
  for (int trial = 0; trial < 5; ++trial) {
    auto T = apply_pseudodiff(PseudoDiffOp::parse("x1:0.3", 2), random_g(rng, F, 2));
    auto g = random_g(rng, F, 2);
    Complex lhs = pairing(apply_adjoint(op, T), g);
    Complex rhs = pairing(T, apply_pseudodiff(op, g));
    EXPECT_NEAR(std::abs(lhs - rhs), 0, 1e-12);
  }
}

TEST(PseudoDiff, SpaceEvaluation) {
  auto F = FieldSpec::qp(3);
  auto one = indicator_ball(F, 1, 0);
  Complex v = evaluate_in_space_at_origin(vladimirov({1.0}, one));
  Complex oracle_value = static_cast<Complex>(oracle::sphere_sum(3, 0, 1.0L));
  EXPECT_NEAR(std::abs(v - oracle_value), 0, 1e-12);
  EXPECT_NEAR(v.real(), 0.75, 1e-12);

  std::mt19937_64 rng(2);
  auto g = random_g(rng, F, 1);
  auto plain = SpectralFunction::from_space(g);
  for (int k = -1; k <= 2; ++k) {
    auto x = FieldVector({LocalFieldElement::from_rational(F, Rational(k) + Rational(1, 3))});
    EXPECT_NEAR(std::abs(evaluate_in_space(plain, x) - value_at(g, x)), 0, 1e-12);
  }
}

TEST(Riesz, IndicatorAtOneHalf) {
  auto one = indicator_ball(FieldSpec::qp(3), 1, 0);
  auto r = riesz_pairing({0.5}, one);
  double expect = (2.0 / 3.0) / (1 - 1 / std::sqrt(3.0));
  EXPECT_NEAR(r.rhs.real(), expect, 1e-12);
  EXPECT_NEAR(r.lhs.real(), expect, 1e-12);
}

TEST(Riesz, RandomTestFunctions) {
  std::mt19937_64 rng(44);
  for (unsigned p : {2u, 3u}) {
    for (double a : {0.3, 0.7}) {
      for (int trial = 0; trial < 5; ++trial) {
        auto phi = random_g(rng, FieldSpec::qp(p), 1 + trial % 2);
        std::vector<Complex> alpha(static_cast<std::size_t>(phi.shape().n), a);
        auto r = riesz_pairing(alpha, phi);
        EXPECT_LT(r.discrepancy, 1e-10);
        EXPECT_LT(r.tail_bound, 1e-10);
      }
    }
  }
}

TEST(Riesz, ZeroLimitIsTotalIntegral) {
  std::mt19937_64 rng(45);
  auto phi = random_g(rng, FieldSpec::qp(3), 1);
  auto r = riesz_pairing({1e-7}, phi);
  EXPECT_NEAR(std::abs(r.lhs - integral(phi)), 0, 1e-5);
  EXPECT_NEAR(std::abs(r.rhs - integral(phi)), 0, 1e-5);
  EXPECT_THROW(riesz_pairing({1.0}, phi), ValidationError);
}

TEST(AdjointKernelIdentity, IndicatorAndProductCase) {
  auto one = indicator_ball(FieldSpec::qp(3), 1, 0);
  auto r = prop3_identity_check({0.5}, {0.5}, one);
  EXPECT_LT(r.discrepancy, 1e-10);

  auto z = prop3_identity_check({0.5}, {0.0}, one);
  EXPECT_LT(z.discrepancy, 1e-14);

  std::mt19937_64 rng(50);
  auto g = random_g(rng, FieldSpec::qp(3), 2);
  auto two = prop3_identity_check({0.5, 1.5}, {1.0, 1.0}, g);
  EXPECT_LT(two.discrepancy, 1e-10);

  auto cx = prop3_identity_check({Complex(0.5, 0.3)}, {Complex(0.5, 1.0)}, one);
  EXPECT_LT(cx.discrepancy, 1e-10);
  EXPECT_GT(cx.discrepancy_unconjugated, 1e-3);
}
