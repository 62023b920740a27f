#pragma once

#include <map>
#include <string>
#include <vector>

#include "ultrazeta/rational_function.hpp"

namespace ultrazeta {

// Element of C[lambda, 1/lambda]; lambda stands for ln q.
template <class C>
using LambdaPoly = std::map<int, C>;

template <class C>
struct LaurentExpansion {
  ComplexL center;
  unsigned q = 2;
  int min_order = 0;
  // coefficients[k] is the coefficient of (s - center)^{min_order + k}.
  std::vector<LambdaPoly<C>> coefficients;

  int max_order() const { return min_order + static_cast<int>(coefficients.size()) - 1; }
  LambdaPoly<C> coefficient(int order) const;
  ComplexL value(int order) const;
  // Largest k with a nonzero coefficient at order -k; 0 at regular points.
  int pole_order() const;
  ComplexL partial_sum(ComplexL s) const;
};

using ExactLaurent = LaurentExpansion<Rational>;
using ComplexLaurent = LaurentExpansion<ComplexL>;

template <class C>
ComplexL evaluate_lambda(const LambdaPoly<C>& p, unsigned q);

// Expansion of f(q^{-s}) in powers of (s - s0), orders lo..hi. Raises
// UnsupportedError when the pole at s0 is deeper than -lo.
ExactLaurent laurent_at(const RationalFunctionT& f, long s0, int lo, int hi);
ComplexLaurent laurent_at(const ComplexRationalFunction& f, ComplexL s0, int lo, int hi,
                          long double zero_tolerance = 1e-12L);

std::string lambda_string(const LambdaPoly<Rational>& p);

}  // namespace ultrazeta
