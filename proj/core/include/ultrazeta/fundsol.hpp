#pragma once

#include <random>
#include <string>
#include <vector>

#include "ultrazeta/grid.hpp"
#include "ultrazeta/laurent.hpp"
#include "ultrazeta/polynomial.hpp"
#include "ultrazeta/spectral.hpp"

namespace ultrazeta {

// Z_g(s, f) = int |f(xi)|^s g^(xi) dxi for a monomial f as a rational
// function of t = q^{-s}. Non-monomial f raises UnsupportedError.
ComplexRationalFunction zeta_exact_in_t(const GridFunction& g, const IntPolynomial& f);
RationalFunctionT zeta_exact_in_t_freq(const RationalGrid& ghat, const IntPolynomial& f);
// T^ = base * |f|^k with every multiplier a non-negative integer power of f.
ComplexRationalFunction zeta_exact_in_t(const SpectralFunction& T, const IntPolynomial& f);

// Order-0 Laurent coefficient of Z_g(s, f) at s = -1.
Complex extract_T0(const GridFunction& g, const IntPolynomial& f);
Complex extract_T0(const SpectralFunction& T, const IntPolynomial& f);
// Exact coefficient in Q[lambda, 1/lambda], lambda = ln q.
LambdaPoly<Rational> extract_T0_exact(const RationalGrid& ghat, const IntPolynomial& f);

struct FundsolTrial {
  Complex g_at_origin;
  Complex t0_of_Ag;       // [T0, A(d, f) g]
  Complex pairing_gh;     // [g, h]
  Complex t0_of_conv;     // [A* (E * g), h]
  double error_delta = 0;
  double error_convolution = 0;
};

struct FundsolReport {
  std::string polynomial;
  unsigned q = 2;
  int n = 1;
  std::vector<FundsolTrial> trials;
  std::size_t division_cells = 0;     // off-zero cells checked
  std::size_t division_failures = 0;  // cells with E^ |f| != 1 exactly
  std::string t0_unit_ball;           // T0(1_{R^n}) from the exact path
  double max_error_delta = 0;
  double max_error_convolution = 0;
  bool passed = false;
};

// Checks on `trials` random g (and probes h): [T0, A g] = g(0), the exact
// division E^ |f| = 1 on every off-zero cell, and [A* (E * g), h] = [g, h].
FundsolReport fundamental_solution_check(FieldSpec field, const IntPolynomial& f, int trials, std::mt19937_64& rng,
                                         double tolerance = 1e-8);

}  // namespace ultrazeta
