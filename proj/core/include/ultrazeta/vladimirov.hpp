#pragma once

#include <string>
#include <vector>

#include "ultrazeta/grid.hpp"
#include "ultrazeta/spectral.hpp"

namespace ultrazeta {

inline constexpr double kGammaPoleGuard = 1e-9;

// Gamma(alpha) = (1 - q^{alpha-1}) / (1 - q^{-alpha}). Raises PoleOfGamma
// within `guard` of mu_j = 2 pi i j / ln q or 1 + mu_j.
ComplexL gamma_factor(unsigned q, ComplexL alpha, double guard = kGammaPoleGuard);
// Exact value for integer alpha not in {0, 1}.
Rational gamma_factor_exact(unsigned q, long alpha);

// P(d, h, alpha): multiplies the Fourier transform by prod_i |h_i|^{alpha_i}.
struct PseudoDiffOp {
  std::vector<Multiplier> symbols;

  // "h1:alpha1;h2:alpha2", e.g. "x1^2+x2^2:1.5".
  static PseudoDiffOp parse(const std::string& text, int n = 0);
  // 2 sum_i deg(h_i) ceil(Re alpha_i)
  int sobolev_shift() const;
};

SpectralFunction apply_pseudodiff(const PseudoDiffOp& op, const GridFunction& g);
SpectralFunction apply_pseudodiff(const PseudoDiffOp& op, const SpectralFunction& T);
// The adjoint operator carries the conjugate exponents.
SpectralFunction apply_adjoint(const PseudoDiffOp& op, const SpectralFunction& T);

// D^alpha: multiplier prod_i |xi_i|^{alpha_i}.
PseudoDiffOp vladimirov_operator(const std::vector<Complex>& alpha);
SpectralFunction vladimirov(const std::vector<Complex>& alpha, const GridFunction& g);

// (F^{-1} T)(x) for T whose multipliers are monomials, by exact sphere sums.
Complex evaluate_in_space(const SpectralFunction& T, const FieldVector& x);
Complex evaluate_in_space_at_origin(const SpectralFunction& T);

struct RieszCheck {
  Complex lhs;  // int f_alpha(xi) phi^(xi) dxi
  Complex rhs;  // int prod |x_i|^{-alpha_i} phi(x) dx
  double discrepancy = 0;
  double tail_bound = 0;
};

RieszCheck riesz_pairing(const std::vector<Complex>& alpha, const GridFunction& phi);

struct Prop3Report {
  Complex lhs;               // [D^{beta*} F{prod |x|^{conj(alpha)-1}}, g]
  Complex rhs;               // [F{prod |x|^{conj(alpha)+conj(beta)-1}}, g]
  Complex lhs_unconjugated;  // adjoint multiplier taken as |xi|^{beta}
  double discrepancy = 0;
  double discrepancy_unconjugated = 0;
};

Prop3Report prop3_identity_check(const std::vector<Complex>& alpha, const std::vector<Complex>& beta,
                                 const GridFunction& g);

}  // namespace ultrazeta
