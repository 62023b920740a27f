#pragma once

#include <optional>
#include <vector>

#include "ultrazeta/local_field.hpp"
#include "ultrazeta/polynomial.hpp"

namespace ultrazeta {

// Exact element of the dense subfield Q (for Q_p) or F_p[T, 1/T] (for
// F_p((T))). Used wherever valuations have to be decided without rounding.
class FieldScalar {
 public:
  FieldScalar() = default;
  static FieldScalar zero(FieldSpec field);
  static FieldScalar from_integer(FieldSpec field, const Integer& x);
  // sum_i digits[i] * pi^{low + i}
  static FieldScalar from_digits(FieldSpec field, long low, const std::vector<unsigned>& digits);
  static FieldScalar pi_power(FieldSpec field, long k);

  const FieldSpec& field() const { return field_; }
  bool is_zero() const;
  std::optional<long> ord() const;
  // Q_p only.
  const Rational& rational() const { return r_; }
  // r in [0,1) with chi(x) = exp(2 pi i r) for the standard character.
  Rational char_fraction() const;

  friend FieldScalar operator+(const FieldScalar& a, const FieldScalar& b);
  friend FieldScalar operator-(const FieldScalar& a, const FieldScalar& b);
  friend FieldScalar operator*(const FieldScalar& a, const FieldScalar& b);

 private:
  void trim();

  FieldSpec field_{};
  Rational r_;
  long low_ = 0;
  std::vector<unsigned> c_;
};

FieldScalar evaluate(const IntPolynomial& h, const std::vector<FieldScalar>& x);

// A box c + prod_i pi^{level_i} R_K.
struct Box {
  std::vector<FieldScalar> center;
  std::vector<long> level;
};

long box_level_sum(const Box& box);
// The q children obtained by fixing one more digit of coordinate var.
std::vector<Box> split_box(const Box& box, int var);

// Hasse derivatives of h, precomputed once per polynomial.
class TaylorData {
 public:
  explicit TaylorData(const IntPolynomial& h);

  const IntPolynomial& polynomial() const { return h_; }
  const std::vector<Exponent>& betas() const { return betas_; }
  const std::vector<IntPolynomial>& derivatives() const { return derivs_; }

 private:
  IntPolynomial h_;
  std::vector<Exponent> betas_;
  std::vector<IntPolynomial> derivs_;
};

enum class BoxStatus { Constant, Hensel, Split };

// Behaviour of |h| on a box, read off from the Taylor coefficients
// pi^{sum beta_i level_i} D^beta h(c):
//  Constant: ord h == order everywhere on the box;
//  Hensel: ord h == order + j on a subset of relative measure (1 - 1/q) q^{-j};
//  Split: undecided, refine coordinate split_var. lower_bound <= ord h.
// For Hensel boxes split_var is the coordinate carrying the unit derivative.
struct BoxClass {
  BoxStatus status = BoxStatus::Split;
  long order = 0;
  long lower_bound = 0;
  int split_var = 0;
};

BoxClass classify_box(const TaylorData& data, const Box& box);

}  // namespace ultrazeta
