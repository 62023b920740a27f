#pragma once

#include <vector>

#include "ultrazeta/grid.hpp"
#include "ultrazeta/spectral.hpp"

namespace ultrazeta {

// [xi]^l = max(1, ||xi||)^l on a frequency-grid cell.
double bracket_power(const GridShape& frequency_shape, std::size_t cell, int l);

// ||g||_l^2 = int [xi]^l |g^(xi)|^2; negative l gives the dual norms.
double sobolev_norm(const GridFunction& g, int l);
double sobolev_norm(const SpectralFunction& T, int l);

// [T, g] = int conj(T^) g^.
Complex pairing(const SpectralFunction& T, const GridFunction& g);
Complex pairing(const SpectralFunction& T, const SpectralFunction& S);
Complex pairing(const GridFunction& f, const GridFunction& g);

// C(n,l) with ||g||_inf <= C(n,l) ||g||_l for l > n.
double sup_norm_constant(FieldSpec field, int n, int l);

// (P g)(x_I) = int chi(-x_J . xi0_J) g(x_I, x_J) dx_J, so that
// F(P g)(xi_I) = g^(xi_I, xi0_J). J holds 0-based axis indices.
GridFunction partial_fourier_restrict(const GridFunction& g, const std::vector<int>& J, const FieldVector& xi0);

// max_{0 <= l <= l_max} 2^{-l} ||f-g||_l / (1 + ||f-g||_l), stopping early
// once 2^{-l} cannot beat the running maximum.
double hinf_metric(const GridFunction& f, const GridFunction& g, int l_max);

GridFunction convolve(const GridFunction& f, const GridFunction& g);

// q^{mn} 1_{B_{-m}^n}
GridFunction delta_approximant(FieldSpec field, int n, int m);
// T^ = 1 on the ball of radius q^radius: pairs with g as g(0) once the ball
// contains supp g^.
SpectralFunction dirac_delta(FieldSpec field, int n, int radius);

}  // namespace ultrazeta
