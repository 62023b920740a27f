#include "ultrazeta/local_field.hpp"

#include <algorithm>
#include <sstream>

#include "ultrazeta/errors.hpp"

namespace ultrazeta {

namespace {

Integer digits_to_integer(const std::vector<unsigned>& digits, unsigned p, std::size_t count) {
  Integer r = 0;
  for (std::size_t i = std::min(count, digits.size()); i-- > 0;) r = r * p + digits[i];
  return r;
}

std::vector<unsigned> integer_to_digits(Integer x, unsigned p, std::size_t count) {
  std::vector<unsigned> out(count, 0);
  x %= ipow(p, count);
  if (x < 0) x += ipow(p, count);
  for (std::size_t i = 0; i < count && x != 0; ++i) {
    out[i] = static_cast<unsigned>(mpz_fdiv_q_ui(x.get_mpz_t(), x.get_mpz_t(), p));
  }
  return out;
}

unsigned inverse_mod(unsigned a, unsigned p) {
  unsigned long r = 1, base = a % p;
  for (unsigned e = p - 2; e > 0; e >>= 1) {
    if (e & 1U) r = r * base % p;
    base = base * base % p;
  }
  return static_cast<unsigned>(r);
}

void require_same_field(const LocalFieldElement& a, const LocalFieldElement& b) {
  if (!(a.field() == b.field())) throw ValidationError("field elements belong to different fields");
}

}  // namespace

FieldSpec FieldSpec::make(FieldKind kind, unsigned p) {
  if (!is_prime(p)) throw ValidationError("p = " + std::to_string(p) + " is not prime");
  return FieldSpec{kind, p};
}

std::string FieldSpec::kind_name() const { return kind == FieldKind::Qp ? "Qp" : "LaurentFp"; }

LocalFieldElement LocalFieldElement::zero(FieldSpec field) {
  LocalFieldElement x;
  x.field_ = field;
  return x;
}

LocalFieldElement LocalFieldElement::from_digits(FieldSpec field, long valuation, std::vector<unsigned> digits) {
  for (unsigned d : digits)
    if (d >= field.p) throw ValidationError("digit " + std::to_string(d) + " out of range for p = " + std::to_string(field.p));
  auto first = std::find_if(digits.begin(), digits.end(), [](unsigned d) { return d != 0; });
  if (first == digits.end()) throw InexactError("value is indistinguishable from zero at the available precision");
  long shift = first - digits.begin();
  LocalFieldElement x;
  x.field_ = field;
  x.zero_ = false;
  x.valuation_ = valuation + shift;
  x.digits_.assign(first, digits.end());
  x.precision_ = static_cast<int>(x.digits_.size());
  return x;
}

LocalFieldElement LocalFieldElement::from_integer(FieldSpec field, const Integer& x, int precision) {
  return from_rational(field, Rational(x), precision);
}

LocalFieldElement LocalFieldElement::from_rational(FieldSpec field, const Rational& x, int precision) {
  if (precision <= 0) throw ValidationError("precision must be positive");
  if (x == 0) return zero(field);
  const unsigned p = field.p;
  if (field.kind == FieldKind::LaurentFp) {
    unsigned long den = mpz_fdiv_ui(x.get_den_mpz_t(), p);
    if (den == 0) throw DivisionByZero("denominator vanishes in F_p");
    unsigned long num = mpz_fdiv_ui(x.get_num_mpz_t(), p);
    if (num == 0) return zero(field);
    std::vector<unsigned> digits(precision, 0);
    digits[0] = static_cast<unsigned>(num * inverse_mod(static_cast<unsigned>(den), p) % p);
    return from_digits(field, 0, std::move(digits));
  }
  long v = *ord_p(x, p);
  Rational unit = x * q_pow(p, -v);
  Integer modulus = ipow(p, precision);
  Integer den_inv;
  Integer den = unit.get_den();
  mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), modulus.get_mpz_t());
  Integer u = Integer(unit.get_num()) * den_inv;
  return from_digits(field, v, integer_to_digits(u, p, precision));
}

LocalFieldElement LocalFieldElement::uniformizer_power(FieldSpec field, long k, int precision) {
  std::vector<unsigned> digits(precision, 0);
  digits[0] = 1;
  return from_digits(field, k, std::move(digits));
}

std::optional<long> LocalFieldElement::valuation() const {
  if (zero_) return std::nullopt;
  return valuation_;
}

std::optional<long> LocalFieldElement::absolute_precision() const {
  if (zero_) return std::nullopt;
  return valuation_ + precision_;
}

unsigned LocalFieldElement::digit(long exponent) const {
  if (zero_) return 0;
  if (exponent < valuation_) return 0;
  if (exponent >= valuation_ + precision_)
    throw InsufficientPrecision("digit at exponent " + std::to_string(exponent) + " is beyond the known precision");
  return digits_[static_cast<std::size_t>(exponent - valuation_)];
}

Rational LocalFieldElement::to_rational() const {
  if (field_.kind != FieldKind::Qp) throw UnsupportedError("to_rational is defined for Q_p elements only");
  if (zero_) return Rational(0);
  return Rational(digits_to_integer(digits_, field_.p, digits_.size())) * q_pow(field_.p, valuation_);
}

std::string LocalFieldElement::to_string() const {
  if (zero_) return "0";
  std::ostringstream out;
  const char* pi = field_.kind == FieldKind::Qp ? "p" : "T";
  bool first = true;
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    if (digits_[i] == 0) continue;
    if (!first) out << " + ";
    out << digits_[i] << "*" << pi << "^" << valuation_ + static_cast<long>(i);
    first = false;
  }
  out << " + O(" << pi << "^" << valuation_ + precision_ << ")";
  return out.str();
}

LocalFieldElement LocalFieldElement::operator-() const {
  if (zero_) return *this;
  if (field_.kind == FieldKind::LaurentFp) {
    std::vector<unsigned> d(digits_);
    for (unsigned& x : d) x = (field_.p - x) % field_.p;
    return from_digits(field_, valuation_, std::move(d));
  }
  Integer u = digits_to_integer(digits_, field_.p, digits_.size());
  return from_digits(field_, valuation_, integer_to_digits(-u, field_.p, digits_.size()));
}

namespace {

LocalFieldElement add_impl(const LocalFieldElement& a, const LocalFieldElement& b, bool subtract) {
  require_same_field(a, b);
  if (b.is_zero()) return a;
  if (a.is_zero()) return subtract ? -b : b;
  const FieldSpec field = a.field();
  const unsigned p = field.p;
  long v = std::min(*a.valuation(), *b.valuation());
  long top = std::min(*a.absolute_precision(), *b.absolute_precision());
  std::size_t len = static_cast<std::size_t>(top - v);
  auto aligned = [&](const LocalFieldElement& x) {
    std::vector<unsigned> d(len, 0);
    long off = *x.valuation() - v;
    for (std::size_t i = 0; i < x.digits().size(); ++i) {
      long pos = off + static_cast<long>(i);
      if (pos < static_cast<long>(len)) d[static_cast<std::size_t>(pos)] = x.digits()[i];
    }
    return d;
  };
  std::vector<unsigned> da = aligned(a), db = aligned(b);
  std::vector<unsigned> out;
  if (field.kind == FieldKind::LaurentFp) {
    out.resize(len);
    for (std::size_t i = 0; i < len; ++i) out[i] = (da[i] + (subtract ? p - db[i] : db[i])) % p;
  } else {
    Integer sa = digits_to_integer(da, p, len), sb = digits_to_integer(db, p, len);
    out = integer_to_digits(subtract ? Integer(sa - sb) : Integer(sa + sb), p, len);
  }
  return LocalFieldElement::from_digits(field, v, std::move(out));
}

}  // namespace

LocalFieldElement operator+(const LocalFieldElement& a, const LocalFieldElement& b) { return add_impl(a, b, false); }

LocalFieldElement operator-(const LocalFieldElement& a, const LocalFieldElement& b) { return add_impl(a, b, true); }

LocalFieldElement operator*(const LocalFieldElement& a, const LocalFieldElement& b) {
  require_same_field(a, b);
  if (a.is_zero()) return a;
  if (b.is_zero()) return b;
  const FieldSpec field = a.field();
  const unsigned p = field.p;
  std::size_t prec = static_cast<std::size_t>(std::min(a.precision(), b.precision()));
  long v = *a.valuation() + *b.valuation();
  std::vector<unsigned> out;
  if (field.kind == FieldKind::LaurentFp) {
    out.assign(prec, 0);
    for (std::size_t i = 0; i < prec; ++i)
      for (std::size_t j = 0; i + j < prec; ++j)
        out[i + j] = static_cast<unsigned>((out[i + j] + 1UL * a.digits()[i] * b.digits()[j]) % p);
  } else {
    Integer u = digits_to_integer(a.digits(), p, prec) * digits_to_integer(b.digits(), p, prec);
    out = integer_to_digits(u, p, prec);
  }
  return LocalFieldElement::from_digits(field, v, std::move(out));
}

LocalFieldElement LocalFieldElement::inverse() const {
  if (zero_) throw DivisionByZero("division by zero field element");
  const unsigned p = field_.p;
  std::size_t prec = digits_.size();
  std::vector<unsigned> out;
  if (field_.kind == FieldKind::LaurentFp) {
    out.assign(prec, 0);
    unsigned inv0 = inverse_mod(digits_[0], p);
    for (std::size_t k = 0; k < prec; ++k) {
      unsigned long acc = k == 0 ? 1 : 0;
      for (std::size_t j = 1; j <= k; ++j) acc += 1UL * (p - digits_[j]) * out[k - j];
      out[k] = static_cast<unsigned>(acc % p * inv0 % p);
    }
  } else {
    Integer modulus = ipow(p, prec);
    Integer u = digits_to_integer(digits_, p, prec), inv;
    mpz_invert(inv.get_mpz_t(), u.get_mpz_t(), modulus.get_mpz_t());
    out = integer_to_digits(inv, p, prec);
  }
  return from_digits(field_, -valuation_, std::move(out));
}

LocalFieldElement operator/(const LocalFieldElement& a, const LocalFieldElement& b) {
  require_same_field(a, b);
  if (b.is_zero()) throw DivisionByZero("division by zero field element");
  return a * b.inverse();
}

LocalFieldElement field_arith(const LocalFieldElement& a, const LocalFieldElement& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div: return a / b;
  }
  throw ValidationError("unknown arithmetic operation");
}

ArithOp parse_arith_op(const std::string& name) {
  if (name == "add") return ArithOp::Add;
  if (name == "sub") return ArithOp::Sub;
  if (name == "mul") return ArithOp::Mul;
  if (name == "div") return ArithOp::Div;
  throw ValidationError("unknown operation '" + name + "' (expected add, sub, mul or div)");
}

ValuationNorm valuation_and_norm(const LocalFieldElement& x) {
  if (x.is_zero()) return {std::nullopt, Rational(0)};
  long v = *x.valuation();
  return {v, q_pow(x.field().q(), -v)};
}

Rational char_fraction(const LocalFieldElement& x) {
  if (x.is_zero() || *x.valuation() >= 0) return Rational(0);
  if (*x.absolute_precision() < 0)
    throw InsufficientPrecision("fractional part needs digits up to exponent -1");
  const unsigned p = x.field().p;
  if (x.field().kind == FieldKind::LaurentFp) {
    Rational r(x.digit(-1), p);
    r.canonicalize();
    return r;
  }
  Rational r = 0;
  for (long j = *x.valuation(); j < 0; ++j) r += Rational(x.digit(j)) * q_pow(p, j);
  return r;
}

FieldVector::FieldVector(std::vector<LocalFieldElement> coords) : coords_(std::move(coords)) {
  for (const auto& c : coords_)
    if (!(c.field() == coords_.front().field())) throw ValidationError("vector coordinates belong to different fields");
}

Rational FieldVector::norm() const {
  Rational best = 0;
  for (const auto& c : coords_) best = std::max(best, valuation_and_norm(c).norm);
  return best;
}

std::optional<long> FieldVector::ord() const {
  std::optional<long> best;
  for (const auto& c : coords_)
    if (auto v = c.valuation()) best = best ? std::min(*best, *v) : *v;
  return best;
}

Rational ball_measure(FieldSpec field, long l, int n) { return q_pow(field.q(), l * n); }

Rational ball_measure(const FieldVector& center, long l) {
  if (center.size() == 0) throw ValidationError("ball center must have at least one coordinate");
  return ball_measure(center[0].field(), l, static_cast<int>(center.size()));
}

Rational sphere_measure(FieldSpec field, long l, int n) {
  return q_pow(field.q(), l * n) * (Rational(1) - q_pow(field.q(), -n));
}

}  // namespace ultrazeta
