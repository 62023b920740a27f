#pragma once

#include <gmpxx.h>

#include <complex>
#include <optional>
#include <string>

namespace ultrazeta {

using Integer = mpz_class;
using Rational = mpq_class;
using Complex = std::complex<double>;
using ComplexL = std::complex<long double>;

// base^e for any integer e; base must be nonzero when e < 0.
Rational rpow(const Rational& base, long e);
Integer ipow(unsigned long base, unsigned long e);

// q^e as an exact rational.
Rational q_pow(unsigned q, long e);

// p-adic valuation; nullopt for zero.
std::optional<long> ord_p(const Integer& x, unsigned p);
std::optional<long> ord_p(const Rational& x, unsigned p);

bool is_prime(unsigned long p);

std::string to_string(const Rational& x);
Rational parse_rational(const std::string& text);
long double to_long_double(const Rational& x);

// ln q, q^{-s} and friends in long double.
long double ln_q(unsigned q);
ComplexL q_pow_complex(unsigned q, ComplexL e);

}  // namespace ultrazeta
