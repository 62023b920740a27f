#pragma once

#include <vector>

#include "ultrazeta/grid.hpp"
#include "ultrazeta/rational_function.hpp"

namespace ultrazeta {

struct SeriesValue {
  ComplexL value = 0;
  double tail_bound = 0;  // certified bound on the truncated remainder
  long terms = 0;
};

// sum_{j >= k} q^{-j} (1 - 1/q) q^{-j gamma}: the integral of |x|^gamma over
// pi^k R_K summed sphere by sphere. Needs Re(gamma) > -1.
SeriesValue sphere_sum_1d(unsigned q, long k, ComplexL gamma, double tolerance = 1e-18);

// Integral of |xi|^gamma over the axis coset r of a grid, by sphere sums.
SeriesValue axis_integral_numeric(const GridShape& shape, std::size_t r, ComplexL gamma);

// E(s; N, v) = int prod_{i<=r} |xi_i|^{N_i s + v_i - 1} g^(xi) dxi, r = N.size().
// Direct summation; needs Re(s) > max_i(-v_i / N_i).
SeriesValue elementary_integral(const GridFunction& g, const std::vector<unsigned>& N, const std::vector<unsigned>& v,
                                ComplexL s);

// The same integral as a rational function of t = q^{-s}, built cell by cell
// from the frequency-side grid.
ComplexRationalFunction elementary_integral_exact(const GridFunction& g, const std::vector<unsigned>& N,
                                                  const std::vector<unsigned>& v);
ComplexRationalFunction elementary_integral_exact_freq(const GridFunction& ghat, const std::vector<unsigned>& N,
                                                       const std::vector<unsigned>& v);
RationalFunctionT elementary_integral_exact_freq(const RationalGrid& ghat, const std::vector<unsigned>& N,
                                                 const std::vector<unsigned>& v);

// As elementary_integral_exact_freq with N.size() == n, where an axis with
// N_i = 0 and v_i = 1 carries no weight.
ComplexRationalFunction monomial_power_integral(const GridFunction& ghat, const std::vector<unsigned>& N,
                                                const std::vector<unsigned>& v);
RationalFunctionT monomial_power_integral(const RationalGrid& ghat, const std::vector<unsigned>& N,
                                          const std::vector<unsigned>& v);

// int prod_{i in I} |xi_i|^{alpha_i} / prod_{i in J} |xi_i|^{beta_i} g^(xi).
// Requires Re alpha_i > 0 and 0 < Re beta_i < 1; raises DivergentError otherwise.
SeriesValue mixed_integral(const GridFunction& g, const std::vector<int>& I, const std::vector<int>& J,
                           const std::vector<ComplexL>& alpha, const std::vector<ComplexL>& beta);

struct FunctionalEquationReport {
  std::vector<ComplexL> samples;
  std::vector<ComplexL> frequency_side;  // E(s; N, v + beta N) from the exact rational form
  std::vector<ComplexL> space_side;      // prod Gamma(a_i) int prod |x_i|^{-a_i} g, a = N s + v + beta N
  double max_discrepancy = 0;
};

// Gamma-weighted identity linking E(s; N, v + beta N) to a space-side
// integral of g; needs N.size() == n and Re(a_i) < 1 at every sample.
FunctionalEquationReport functional_equation_check(const GridFunction& g, const std::vector<unsigned>& N,
                                                   const std::vector<unsigned>& v, unsigned beta,
                                                   const std::vector<ComplexL>& samples);

// Sample points with Re(a_i) in (-1.5, 1) avoiding the Gamma poles.
std::vector<ComplexL> functional_equation_samples(const std::vector<unsigned>& N, const std::vector<unsigned>& v,
                                                  unsigned beta, int count);

}  // namespace ultrazeta
