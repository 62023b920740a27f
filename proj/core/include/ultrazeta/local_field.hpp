#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ultrazeta/rational.hpp"

namespace ultrazeta {

enum class FieldKind { Qp, LaurentFp };

// Q_p or F_p((T)); the residue field always has q = p elements.
struct FieldSpec {
  FieldKind kind = FieldKind::Qp;
  unsigned p = 3;

  static FieldSpec make(FieldKind kind, unsigned p);
  static FieldSpec qp(unsigned p) { return make(FieldKind::Qp, p); }
  static FieldSpec laurent(unsigned p) { return make(FieldKind::LaurentFp, p); }

  unsigned q() const { return p; }
  std::string kind_name() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

inline constexpr int kDefaultPrecision = 32;

// x = pi^v * (d_0 + d_1 pi + ... + d_{prec-1} pi^{prec-1}) known modulo
// pi^{v+prec}, with d_0 != 0. Zero is a separate exact value.
class LocalFieldElement {
 public:
  LocalFieldElement() = default;

  static LocalFieldElement zero(FieldSpec field);
  // Leading zero digits are absorbed into the valuation. An all-zero digit
  // string cannot be told apart from zero and raises InexactError.
  static LocalFieldElement from_digits(FieldSpec field, long valuation, std::vector<unsigned> digits);
  static LocalFieldElement from_integer(FieldSpec field, const Integer& x, int precision = kDefaultPrecision);
  // Over F_p((T)) only rationals whose denominator is prime to p are
  // accepted; they map to constants of F_p.
  static LocalFieldElement from_rational(FieldSpec field, const Rational& x, int precision = kDefaultPrecision);
  static LocalFieldElement uniformizer_power(FieldSpec field, long k, int precision = kDefaultPrecision);

  const FieldSpec& field() const { return field_; }
  bool is_zero() const { return zero_; }
  std::optional<long> valuation() const;
  int precision() const { return precision_; }
  const std::vector<unsigned>& digits() const { return digits_; }
  // Exponent below which all digits are known; nullopt for exact zero.
  std::optional<long> absolute_precision() const;
  // Digit at pi^exponent. Throws InsufficientPrecision beyond the known range.
  unsigned digit(long exponent) const;

  // Exact rational value of the truncated expansion (Q_p only).
  Rational to_rational() const;
  std::string to_string() const;

  LocalFieldElement operator-() const;
  friend LocalFieldElement operator+(const LocalFieldElement& a, const LocalFieldElement& b);
  friend LocalFieldElement operator-(const LocalFieldElement& a, const LocalFieldElement& b);
  friend LocalFieldElement operator*(const LocalFieldElement& a, const LocalFieldElement& b);
  friend LocalFieldElement operator/(const LocalFieldElement& a, const LocalFieldElement& b);
  LocalFieldElement inverse() const;

 private:
  FieldSpec field_{};
  bool zero_ = true;
  long valuation_ = 0;
  int precision_ = 0;
  std::vector<unsigned> digits_;
};

enum class ArithOp { Add, Sub, Mul, Div };
LocalFieldElement field_arith(const LocalFieldElement& a, const LocalFieldElement& b, ArithOp op);
ArithOp parse_arith_op(const std::string& name);

struct ValuationNorm {
  std::optional<long> ord;  // nullopt means +infinity
  Rational norm;
};

ValuationNorm valuation_and_norm(const LocalFieldElement& x);

// r in [0,1) with chi(x) = exp(2 pi i r) for the standard character.
Rational char_fraction(const LocalFieldElement& x);

class FieldVector {
 public:
  FieldVector() = default;
  explicit FieldVector(std::vector<LocalFieldElement> coords);

  std::size_t size() const { return coords_.size(); }
  const LocalFieldElement& operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<LocalFieldElement>& coords() const { return coords_; }

  Rational norm() const;
  std::optional<long> ord() const;

 private:
  std::vector<LocalFieldElement> coords_;
};

// Haar measure of the ball of radius q^l in K^n: q^{ln}.
Rational ball_measure(FieldSpec field, long l, int n);
Rational ball_measure(const FieldVector& center, long l);
// Haar measure of the sphere {|x| = q^l}: q^{ln}(1 - q^{-n}).
Rational sphere_measure(FieldSpec field, long l, int n);

}  // namespace ultrazeta
