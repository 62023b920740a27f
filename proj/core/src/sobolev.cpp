#include "ultrazeta/sobolev.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ultrazeta/fourier.hpp"

namespace ultrazeta {

double bracket_power(const GridShape& frequency_shape, std::size_t cell, int l) {
  long e = std::max(0L, frequency_shape.norm_exponent(cell));
  return std::pow(static_cast<double>(frequency_shape.field.q()), static_cast<double>(e) * l);
}

double sobolev_norm(const GridFunction& g, int l) {
  GridFunction ghat = fourier_transform(g);
  const GridShape& s = ghat.shape();
  double acc = 0;
  for (std::size_t c = 0; c < s.size(); ++c)
    if (ghat[c] != Complex(0)) acc += bracket_power(s, c, l) * std::norm(ghat[c]);
  return std::sqrt(acc * s.cell_volume_d());
}

double sobolev_norm(const SpectralFunction& T, int l) {
  if (T.is_plain()) {
    const GridShape& s = T.base().shape();
    double acc = 0;
    for (std::size_t c = 0; c < s.size(); ++c) acc += bracket_power(s, c, l) * std::norm(T.base()[c]);
    return std::sqrt(acc * s.cell_volume_d());
  }
  std::vector<Multiplier> squared;
  for (const auto& m : T.multipliers()) squared.push_back({m.symbol, 2.0 * m.exponent.real()});
  const GridShape& s = T.base().shape();
  std::vector<std::size_t> cells;
  for (std::size_t c = 0; c < s.size(); ++c)
    if (T.base()[c] != Complex(0)) cells.push_back(c);
  CellIntegrator integrator(s, squared);
  auto weights = integrator.integrate_cells(cells);
  double acc = 0;
  for (std::size_t k = 0; k < cells.size(); ++k)
    acc += bracket_power(s, cells[k], l) * std::norm(T.base()[cells[k]]) * weights[k].value.real();
  return std::sqrt(std::max(acc, 0.0));
}

namespace {

Complex weighted_pairing(const GridFunction& left, const GridFunction& right, const std::vector<Multiplier>& multipliers) {
  GridShape s = common_shape(left.shape(), right.shape());
  GridFunction a = left.embed(s), b = right.embed(s);
  std::vector<std::size_t> cells;
  for (std::size_t c = 0; c < s.size(); ++c)
    if (a[c] != Complex(0) && b[c] != Complex(0)) cells.push_back(c);
  CellIntegrator integrator(s, multipliers);
  auto weights = integrator.integrate_cells(cells);
  Complex acc = 0;
  for (std::size_t k = 0; k < cells.size(); ++k) acc += std::conj(a[cells[k]]) * b[cells[k]] * weights[k].value;
  return acc;
}

}  // namespace

Complex pairing(const SpectralFunction& T, const GridFunction& g) {
  return pairing(T, SpectralFunction::from_space(g));
}

Complex pairing(const SpectralFunction& T, const SpectralFunction& S) {
  std::vector<Multiplier> all;
  for (const auto& m : T.multipliers()) all.push_back({m.symbol, std::conj(m.exponent)});
  all.insert(all.end(), S.multipliers().begin(), S.multipliers().end());
  return weighted_pairing(T.base(), S.base(), all);
}

Complex pairing(const GridFunction& f, const GridFunction& g) {
  return weighted_pairing(fourier_transform(f), fourier_transform(g), {});
}

double sup_norm_constant(FieldSpec field, int n, int l) {
  if (l <= n) throw ValidationError("sup-norm constant requires l > n");
  const double q = field.q();
  double c2 = 1.0 + (1.0 - std::pow(q, -n)) * std::pow(q, n - l) / (1.0 - std::pow(q, n - l));
  return std::sqrt(c2);
}

GridFunction partial_fourier_restrict(const GridFunction& g, const std::vector<int>& J, const FieldVector& xi0) {
  const GridShape& s = g.shape();
  if (J.empty() || static_cast<int>(J.size()) >= s.n) throw ValidationError("J must be a nonempty proper subset of the axes");
  if (xi0.size() != J.size()) throw ValidationError("xi0 must have one coordinate per index in J");
  std::vector<bool> in_j(static_cast<std::size_t>(s.n), false);
  for (int j : J) {
    if (j < 0 || j >= s.n || in_j[static_cast<std::size_t>(j)]) throw ValidationError("invalid index set J");
    in_j[static_cast<std::size_t>(j)] = true;
  }
  std::vector<int> I;
  for (int i = 0; i < s.n; ++i)
    if (!in_j[static_cast<std::size_t>(i)]) I.push_back(i);

  // chi(-x xi0) on each axis coset; a coset on which the character is not
  // constant integrates to zero.
  std::vector<std::vector<Complex>> phase(J.size(), std::vector<Complex>(s.per_axis()));
  for (std::size_t k = 0; k < J.size(); ++k) {
    const LocalFieldElement& xi = xi0[k];
    if (!xi.is_zero() && *xi.valuation() < -s.m) continue;
    std::vector<unsigned> digits;
    long low = 0;
    if (!xi.is_zero()) {
      low = *xi.valuation();
      long need = s.L - low;
      if (*xi.absolute_precision() < s.L) throw InsufficientPrecision("xi0 needs digits up to exponent L - 1");
      for (long j = 0; j < need; ++j) digits.push_back(xi.digit(low + j));
    }
    FieldScalar xs = FieldScalar::from_digits(s.field, low, digits);
    for (std::size_t r = 0; r < s.per_axis(); ++r) {
      Rational frac = (s.axis_center(r) * xs).char_fraction();
      double angle = -2.0 * std::numbers::pi * static_cast<double>(to_long_double(frac));
      phase[k][r] = std::polar(1.0, angle);
    }
  }

  GridShape out_shape = GridShape::make(s.field, static_cast<int>(I.size()), s.L, s.m);
  GridFunction out(out_shape);
  const double vol_j = std::pow(static_cast<double>(s.field.q()), -static_cast<double>(J.size()) * s.m);
  for (std::size_t c = 0; c < s.size(); ++c) {
    if (g[c] == Complex(0)) continue;
    auto axes = s.axis_indices(c);
    Complex w = vol_j * g[c];
    std::vector<std::size_t> out_axes;
    for (int i : I) out_axes.push_back(axes[static_cast<std::size_t>(i)]);
    for (std::size_t k = 0; k < J.size(); ++k) w *= phase[k][axes[static_cast<std::size_t>(J[k])]];
    out[out_shape.flat_index(out_axes)] += w;
  }
  return out;
}

double hinf_metric(const GridFunction& f, const GridFunction& g, int l_max) {
  if (l_max < 0) throw ValidationError("l_max must be non-negative");
  GridFunction d = f - g;
  double best = 0;
  for (int l = 0; l <= l_max; ++l) {
    double scale = std::ldexp(1.0, -l);
    if (scale <= best) break;
    double nrm = sobolev_norm(d, l);
    best = std::max(best, scale * nrm / (1.0 + nrm));
  }
  return best;
}

GridFunction convolve(const GridFunction& f, const GridFunction& g) {
  GridShape s = common_shape(f.shape(), g.shape());
  GridFunction fh = fourier_transform(f.embed(s)), gh = fourier_transform(g.embed(s));
  return inverse_fourier_transform(pointwise_product(fh, gh));
}

GridFunction delta_approximant(FieldSpec field, int n, int m) {
  GridFunction d = indicator_ball(field, n, -m);
  return std::pow(static_cast<double>(field.q()), static_cast<double>(m) * n) * d;
}

SpectralFunction dirac_delta(FieldSpec field, int n, int radius) {
  return SpectralFunction::from_frequency(indicator_ball(field, n, radius));
}

}  // namespace ultrazeta
