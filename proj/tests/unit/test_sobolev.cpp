#include <gtest/gtest.h>

#include <random>

#include "ultrazeta/fourier.hpp"
#include "ultrazeta/sobolev.hpp"
#include "ultrazeta/vladimirov.hpp"

using namespace ultrazeta;

namespace {

GridFunction random_small(std::mt19937_64& rng, FieldSpec F, int n) {
  std::uniform_int_distribution<int> lm(0, 2);
  return random_grid(GridShape::make(F, n, lm(rng), lm(rng)), rng);
}

}  // namespace

TEST(Sobolev, IndicatorHasUnitNorms) {
  auto g = indicator_ball(FieldSpec::qp(3), 2, 0);
  for (int l : {0, 1, 4, 10}) EXPECT_NEAR(sobolev_norm(g, l), 1.0, 1e-14);
}

TEST(Sobolev, ZeroIndexIsL2AndNormsIncrease) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    auto g = random_small(rng, FieldSpec::qp(trial % 2 ? 3 : 2), 1 + trial % 2);
    EXPECT_NEAR(sobolev_norm(g, 0), l2_norm(g), 1e-12);
    double prev = 0;
    for (int l = 0; l <= 8; ++l) {
      double v = sobolev_norm(g, l);
      EXPECT_GE(v, prev * (1 - 1e-14));
      prev = v;
    }
  }
}

TEST(Sobolev, SupNormBound) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 1 + trial % 2;
    auto F = FieldSpec::qp(trial % 3 ? 3 : 5);
    auto g = random_small(rng, F, n);
    int l = n + 1 + trial % 3;
    EXPECT_LE(sup_norm(g), sup_norm_constant(F, n, l) * sobolev_norm(g, l) * (1 + 1e-12));
  }
}

TEST(Pairing, DeltaAndParseval) {
  std::mt19937_64 rng(1);
  auto F = FieldSpec::qp(3);
  for (int trial = 0; trial < 10; ++trial) {
    auto g = random_small(rng, F, 2);
    auto delta = dirac_delta(F, 2, g.shape().m);
    EXPECT_NEAR(std::abs(pairing(delta, g) - value_at_origin(g)), 0, 1e-12);
    EXPECT_NEAR(pairing(g, g).real(), l2_norm(g) * l2_norm(g), 1e-12);
  }
}

TEST(Pairing, ContinuityBound) {
  std::mt19937_64 rng(12);
  auto F = FieldSpec::qp(3);
  for (int trial = 0; trial < 20; ++trial) {
    auto g = random_small(rng, F, 1);
    auto t = random_small(rng, F, 1);
    SpectralFunction T = apply_pseudodiff(PseudoDiffOp::parse("x1:0.7"), t);
    for (int m : {0, 2, 4}) {
      EXPECT_LE(std::abs(pairing(T, g)), sobolev_norm(T, -m) * sobolev_norm(g, m) * (1 + 1e-12) + 1e-14);
    }
  }
}

TEST(PartialRestriction, IndicatorAndRestrictionIdentity) {
  auto F = FieldSpec::qp(3);
  auto one = indicator_ball(F, 2, 0);
  auto zero = FieldVector({LocalFieldElement::zero(F)});
  auto P = partial_fourier_restrict(one, {1}, zero);
  EXPECT_LT(max_abs_difference(P, indicator_ball(F, 1, 0)), 1e-14);

  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 10; ++trial) {
    GridShape s = GridShape::make(F, 2, 1, 1);
    auto g = random_grid(s, rng);
    auto ghat = fourier_transform(g);
    // xi0 runs over the frequency-grid cosets of the second axis
    for (std::size_t r = 0; r < ghat.shape().per_axis(); ++r) {
      Rational xi = Rational(static_cast<long>(r % 3)) / 3 + Rational(static_cast<long>(r / 3));
      auto x0 = r == 0 ? LocalFieldElement::zero(F) : LocalFieldElement::from_rational(F, xi);
      auto P = partial_fourier_restrict(g, {1}, FieldVector({x0}));
      auto Phat = fourier_transform(P);
      for (std::size_t c = 0; c < Phat.size(); ++c) {
        std::vector<std::size_t> axes{c, r};
        EXPECT_NEAR(std::abs(Phat[c] - ghat[ghat.shape().flat_index(axes)]), 0, 1e-12);
      }
      for (int l : {0, 2, 4}) EXPECT_LE(sobolev_norm(P, l), sobolev_norm(g, l) * (1 + 1e-12));
    }
  }
}

TEST(Metric, Axioms) {
  std::mt19937_64 rng(3);
  auto F = FieldSpec::qp(2);
  GridShape s = GridShape::make(F, 1, 1, 1);
  for (int trial = 0; trial < 50; ++trial) {
    auto f = random_grid(s, rng), g = random_grid(s, rng), h = random_grid(s, rng);
    EXPECT_EQ(hinf_metric(f, f, 20), 0);
    double dfg = hinf_metric(f, g, 20);
    EXPECT_NEAR(dfg, hinf_metric(g, f, 20), 1e-15);
    EXPECT_LE(dfg, 1.0);
    EXPECT_LE(dfg, hinf_metric(f, h, 20) + hinf_metric(h, g, 20) + 1e-15);
  }
}

TEST(Convolution, DeltaApproximantAndIndicator) {
  auto F = FieldSpec::qp(3);
  auto one = indicator_ball(F, 1, 0);
  EXPECT_LT(max_abs_difference(convolve(one, one), one), 1e-14);

  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 5; ++trial) {
    auto g = random_grid(GridShape::make(F, 2, 1, 1), rng);
    auto d = delta_approximant(F, 2, 1);
    EXPECT_LT(max_abs_difference(convolve(d, g), g), 1e-12);
    auto f = random_grid(GridShape::make(F, 2, 1, 1), rng);
    auto lhs = fourier_transform(convolve(f, g));
    auto fh = fourier_transform(f), gh = fourier_transform(g);
    EXPECT_LT(max_abs_difference(lhs, pointwise_product(fh, gh)), 1e-12);
  }
}
