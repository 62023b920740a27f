#include <gtest/gtest.h>

#include <random>

#include "ultrazeta/errors.hpp"
#include "ultrazeta/local_field.hpp"

using namespace ultrazeta;

TEST(LocalField, ValuationAndNorm) {
  auto F3 = FieldSpec::qp(3);
  auto vn = valuation_and_norm(LocalFieldElement::from_integer(F3, 12));
  EXPECT_EQ(*vn.ord, 1);
  EXPECT_EQ(vn.norm, Rational(1, 3));

  auto zero = valuation_and_norm(LocalFieldElement::zero(F3));
  EXPECT_FALSE(zero.ord.has_value());
  EXPECT_EQ(zero.norm, 0);

  auto F5 = FieldSpec::laurent(5);
  auto x = LocalFieldElement::from_digits(F5, -2, {1, 1});
  auto v5 = valuation_and_norm(x);
  EXPECT_EQ(*v5.ord, -2);
  EXPECT_EQ(v5.norm, 25);
}

TEST(LocalField, RejectsCompositeResidueField) {
  EXPECT_THROW(FieldSpec::qp(4), ValidationError);
  EXPECT_THROW(FieldSpec::laurent(9), ValidationError);
}

TEST(LocalField, Arithmetic) {
  auto F = FieldSpec::qp(3);
  auto four = LocalFieldElement::from_integer(F, 1) + LocalFieldElement::from_integer(F, 3);
  EXPECT_EQ(*four.valuation(), 0);
  EXPECT_EQ(four.to_rational(), 4);

  auto a = LocalFieldElement::from_integer(F, 2);
  auto b = LocalFieldElement::from_integer(F, 9);
  EXPECT_EQ(*(a + b).valuation(), 0);

  auto third = LocalFieldElement::from_rational(F, Rational(1, 3));
  auto one = third * LocalFieldElement::from_integer(F, 3);
  EXPECT_EQ(*one.valuation(), 0);
  EXPECT_EQ(one.digit(0), 1u);
  for (int k = 1; k < one.precision(); ++k) EXPECT_EQ(one.digit(k), 0u);

  EXPECT_THROW(a / LocalFieldElement::zero(F), DivisionByZero);
  EXPECT_THROW(a - a, InexactError);
}

TEST(LocalField, UltrametricAndMultiplicativity) {
  std::mt19937_64 rng(11);
  for (unsigned p : {2u, 3u, 5u}) {
    for (auto field : {FieldSpec::qp(p), FieldSpec::laurent(p)}) {
      std::uniform_int_distribution<int> val(-3, 3), dig(0, static_cast<int>(p) - 1);
      for (int trial = 0; trial < 50; ++trial) {
        auto make = [&] {
          std::vector<unsigned> d(12);
          for (auto& x : d) x = static_cast<unsigned>(dig(rng));
          d[0] = 1 + static_cast<unsigned>(dig(rng)) % (p - 1);
          return LocalFieldElement::from_digits(field, val(rng), d);
        };
        auto a = make(), b = make();
        Rational na = valuation_and_norm(a).norm, nb = valuation_and_norm(b).norm;
        EXPECT_EQ(valuation_and_norm(a * b).norm, na * nb);
        try {
          Rational ns = valuation_and_norm(a + b).norm;
          EXPECT_LE(ns, std::max(na, nb));
          if (na != nb) {
            EXPECT_EQ(ns, std::max(na, nb));
          }
        } catch (const InexactError&) {
        }
      }
    }
  }
}

TEST(LocalField, CharacterIsAdditive) {
  std::mt19937_64 rng(5);
  for (auto field : {FieldSpec::qp(3), FieldSpec::laurent(3), FieldSpec::qp(2)}) {
    std::uniform_int_distribution<int> val(-4, 2), dig(0, static_cast<int>(field.p) - 1);
    for (int trial = 0; trial < 100; ++trial) {
      auto make = [&] {
        std::vector<unsigned> d(16);
        for (auto& x : d) x = static_cast<unsigned>(dig(rng));
        d[0] = 1;
        return LocalFieldElement::from_digits(field, val(rng), d);
      };
      auto a = make(), b = make();
      Rational sum = char_fraction(a) + char_fraction(b);
      if (sum >= 1) sum -= 1;
      try {
        EXPECT_EQ(char_fraction(a + b), sum);
      } catch (const InexactError&) {
      }
    }
  }
  auto F = FieldSpec::qp(3);
  EXPECT_EQ(char_fraction(LocalFieldElement::from_integer(F, 7)), 0);
  EXPECT_EQ(char_fraction(LocalFieldElement::from_rational(F, Rational(1, 3))), Rational(1, 3));
}

TEST(LocalField, Measures) {
  auto F = FieldSpec::qp(3);
  EXPECT_EQ(ball_measure(F, 0, 2), 1);
  EXPECT_EQ(ball_measure(F, -1, 1), Rational(1, 3));
  EXPECT_EQ(sphere_measure(F, 0, 2), Rational(8, 9));
  // the spheres S_{-j}, j >= J, tile the ball B_{-J}
  for (long J = -2; J <= 2; ++J) {
    Rational acc = 0;
    for (long j = J; j < J + 60; ++j) acc += sphere_measure(F, -j, 1);
    Rational rest = ball_measure(F, -(J + 60), 1);
    EXPECT_EQ(acc + rest, ball_measure(F, -J, 1));
  }
}

TEST(LocalField, FieldVectorNorm) {
  auto F = FieldSpec::qp(3);
  FieldVector v({LocalFieldElement::from_integer(F, 9), LocalFieldElement::from_rational(F, Rational(1, 3))});
  EXPECT_EQ(v.norm(), 3);
  EXPECT_EQ(*v.ord(), -1);
}
