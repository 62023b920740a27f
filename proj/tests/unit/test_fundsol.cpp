#include <gtest/gtest.h>

#include <random>

#include "ultrazeta/errors.hpp"
#include "ultrazeta/fourier.hpp"
#include "ultrazeta/fundsol.hpp"
#include "ultrazeta/laurent.hpp"
#include "ultrazeta/vladimirov.hpp"

using namespace ultrazeta;

namespace {

double dist(ComplexL a, ComplexL b) { return static_cast<double>(std::abs(a - b)); }

RationalFunctionT geometric3() {
  return RationalFunctionT(Poly<Rational>::constant(Rational(2, 3)), geometric_denominator(3, 1, 1), 3);
}

}  // namespace

TEST(Fundsol, ExactZetaForIndicators) {
  auto F = FieldSpec::qp(3);
  auto z1 = zeta_exact_in_t(indicator_ball(F, 1, 0), IntPolynomial::parse("x1"));
  auto z2 = zeta_exact_in_t(indicator_ball(F, 2, 0), IntPolynomial::parse("x1*x2"));
  auto g = to_complex(geometric3());
  auto g2 = to_complex(geometric3() * geometric3());
  for (ComplexL s : {ComplexL(0.5, 0), ComplexL(2, 1), ComplexL(-0.5, 0.3)}) {
    EXPECT_LT(dist(z1.evaluate_s(s), g.evaluate_s(s)), 1e-14);
    EXPECT_LT(dist(z2.evaluate_s(s), g2.evaluate_s(s)), 1e-14);
  }
  EXPECT_THROW(zeta_exact_in_t(indicator_ball(F, 2, 0), IntPolynomial::parse("x1+x2")), UnsupportedError);
}

TEST(Fundsol, SupportOffHyperplanesIsPolynomial) {
  auto F = FieldSpec::qp(3);
  GridShape s = GridShape::make(F, 1, 0, 1);
  RationalGrid r(s);
  r.values()[1] = 1;
  r.values()[2] = 2;
  EXPECT_TRUE(zeta_exact_in_t_freq(r, IntPolynomial::parse("x1")).is_polynomial());
  auto g = inverse_fourier_transform(to_complex(r));
  auto z = zeta_exact_in_t(g, IntPolynomial::parse("x1"));
  EXPECT_TRUE(z.is_polynomial());
  // No pole: T0 is the value at s = -1, which is the plain integral of ghat / |xi|.
  EXPECT_NEAR(std::abs(extract_T0(g, IntPolynomial::parse("x1")) - Complex((1.0 + 2.0) / 3.0, 0)), 0, 1e-12);
}

TEST(Fundsol, T0OfUnitBall) {
  auto F = FieldSpec::qp(3);
  RationalGrid one(GridShape::make(F, 1, 0, 0));
  one.values()[0] = 1;
  auto exact = extract_T0_exact(one, IntPolynomial::parse("x1"));
  EXPECT_EQ(exact, (LambdaPoly<Rational>{{0, Rational(1, 3)}}));
  EXPECT_NEAR(std::abs(extract_T0(indicator_ball(F, 1, 0), IntPolynomial::parse("x1")) - Complex(1.0 / 3.0)), 0, 1e-14);
}

TEST(Fundsol, T0MatchesNumericLimitAndIsLinear) {
  std::mt19937_64 rng(91);
  auto F = FieldSpec::qp(3);
  auto f = IntPolynomial::parse("x1");
  for (int trial = 0; trial < 10; ++trial) {
    auto g = random_grid(GridShape::make(F, 1, 1, 1), rng);
    auto z = zeta_exact_in_t(g, f);
    auto lau = laurent_at(z, ComplexL(-1, 0), -1, 0);
    ComplexL cm1 = lau.value(-1);
    const long double h = 1e-5L;
    ComplexL up = z.evaluate_s(ComplexL(-1 + h, 0)) - cm1 / h;
    ComplexL down = z.evaluate_s(ComplexL(-1 - h, 0)) + cm1 / h;
    ComplexL limit = (up + down) / 2.0L;
    Complex t0 = extract_T0(g, f);
    EXPECT_LT(dist(limit, ComplexL(t0)), 1e-8);

    auto g2 = random_grid(g.shape(), rng);
    GridFunction sum = g;
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += g2[i];
    EXPECT_NEAR(std::abs(extract_T0(sum, f) - t0 - extract_T0(g2, f)), 0, 1e-12);
  }
}

TEST(Fundsol, ShiftIdentity) {
  std::mt19937_64 rng(92);
  auto F = FieldSpec::qp(3);
  for (const char* poly : {"x1", "x1*x2"}) {
    auto f = IntPolynomial::parse(poly);
    int n = f.n();
    auto g = random_grid(GridShape::make(F, n, 1, 1), rng);
    auto Ag = apply_pseudodiff(PseudoDiffOp::parse(std::string(poly) + ":1", n), g);
    auto shifted = zeta_exact_in_t(Ag, f);
    auto base = zeta_exact_in_t(g, f);
    for (ComplexL s : {ComplexL(0.5, 0), ComplexL(-0.5, 1), ComplexL(-1.3, 0.2)})
      EXPECT_LT(dist(shifted.evaluate_s(s), base.evaluate_s(s + ComplexL(1))), 1e-12) << poly;
  }
}

TEST(Fundsol, FullCheck) {
  std::mt19937_64 rng(93);
  for (const char* poly : {"x1", "x1*x2"}) {
    auto rep = fundamental_solution_check(FieldSpec::qp(3), IntPolynomial::parse(poly), 10, rng);
    EXPECT_TRUE(rep.passed) << poly;
    EXPECT_EQ(rep.trials.size(), 10u);
    EXPECT_GT(rep.division_cells, 0u);
    EXPECT_EQ(rep.division_failures, 0u);
    EXPECT_LT(rep.max_error_delta, 1e-8);
    EXPECT_LT(rep.max_error_convolution, 1e-8);
  }
  auto rep = fundamental_solution_check(FieldSpec::qp(3), IntPolynomial::parse("x1"), 1, rng);
  EXPECT_EQ(rep.t0_unit_ball, "1/3");
  EXPECT_THROW(fundamental_solution_check(FieldSpec::qp(3), IntPolynomial::parse("x1^2+x2^2"), 1, rng), UnsupportedError);
}
