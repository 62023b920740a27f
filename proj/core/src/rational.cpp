#include "ultrazeta/rational.hpp"

#include <cmath>
#include <cstdlib>

#include "ultrazeta/errors.hpp"

namespace ultrazeta {

Integer ipow(unsigned long base, unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, e);
  return r;
}

Rational rpow(const Rational& base, long e) {
  if (e == 0) return Rational(1);
  if (base == 0) {
    if (e < 0) throw DivisionByZero("0 raised to a negative power");
    return Rational(0);
  }
  unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), k);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), k);
  Rational r = e > 0 ? Rational(num, den) : Rational(den, num);
  r.canonicalize();
  return r;
}

Rational q_pow(unsigned q, long e) {
  Integer m = ipow(q, static_cast<unsigned long>(e < 0 ? -e : e));
  return e >= 0 ? Rational(m) : Rational(Integer(1), m);
}

std::optional<long> ord_p(const Integer& x, unsigned p) {
  if (x == 0) return std::nullopt;
  Integer pp = p;
  long v = static_cast<long>(mpz_remove(Integer().get_mpz_t(), x.get_mpz_t(), pp.get_mpz_t()));
  return v;
}

std::optional<long> ord_p(const Rational& x, unsigned p) {
  if (x == 0) return std::nullopt;
  return *ord_p(Integer(x.get_num()), p) - *ord_p(Integer(x.get_den()), p);
}

bool is_prime(unsigned long p) {
  if (p < 2) return false;
  for (unsigned long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::string to_string(const Rational& x) { return x.get_str(); }

Rational parse_rational(const std::string& text) {
  Rational r;
  if (text.empty() || r.set_str(text, 10) != 0 || r.get_den() == 0)
    throw ValidationError("malformed rational '" + text + "'");
  r.canonicalize();
  return r;
}

namespace {

// |z| as m * 2^e with a 64-bit mantissa m.
long double scaled(const Integer& z, long& e) {
  Integer a = abs(z);
  long shift = static_cast<long>(mpz_sizeinbase(a.get_mpz_t(), 2)) - 64;
  if (shift > 0)
    a >>= static_cast<mp_bitcnt_t>(shift);
  else
    a <<= static_cast<mp_bitcnt_t>(-shift);
  e = shift;
  return static_cast<long double>(mpz_get_ui(a.get_mpz_t()));
}

}  // namespace

long double to_long_double(const Rational& x) {
  if (x == 0) return 0.0L;
  long en = 0, ed = 0;
  long double n = scaled(x.get_num(), en);
  long double d = scaled(x.get_den(), ed);
  long double r = std::ldexp(n / d, static_cast<int>(en - ed));
  return x < 0 ? -r : r;
}

long double ln_q(unsigned q) { return std::log(static_cast<long double>(q)); }

ComplexL q_pow_complex(unsigned q, ComplexL e) { return std::exp(e * ln_q(q)); }

}  // namespace ultrazeta
