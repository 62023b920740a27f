#include "ultrazeta/fundsol.hpp"

#include <cmath>

#include "ultrazeta/elementary.hpp"
#include "ultrazeta/fourier.hpp"
#include "ultrazeta/sobolev.hpp"

namespace ultrazeta {

namespace {

struct MonomialData {
  std::vector<unsigned> N;
  long coefficient_ord = 0;
};

MonomialData monomial_data(const IntPolynomial& f, FieldSpec field) {
  if (!f.is_monomial() || f.is_constant())
    throw UnsupportedError("fundamental solutions are implemented for monomials only, got " + f.to_string());
  const auto& [e, c] = *f.terms().begin();
  MonomialData out;
  out.N.assign(e.begin(), e.end());
  if (field.kind == FieldKind::Qp) {
    out.coefficient_ord = *ord_p(c, field.p);
  } else if (mpz_divisible_ui_p(c.get_mpz_t(), field.p)) {
    throw ValidationError("monomial coefficient vanishes over F_p((T))");
  }
  return out;
}

template <class C>
RationalFunction<C> times_t_power(RationalFunction<C> r, long k) {
  if (k == 0) return r;
  return r * RationalFunction<C>::polynomial(Poly<C>::monomial(C(1), static_cast<std::size_t>(k)), r.q());
}

int pole_bound(const MonomialData& m) {
  int k = 0;
  for (unsigned N : m.N) k += N > 0 ? 1 : 0;
  return -k;
}

GridFunction product_conj(const GridFunction& a, const GridFunction& b) {
  GridShape s = common_shape(a.shape(), b.shape());
  GridFunction x = a.embed(s), y = b.embed(s), out(s);
  for (std::size_t c = 0; c < s.size(); ++c) out[c] = std::conj(x[c]) * y[c];
  return out;
}

}  // namespace

ComplexRationalFunction zeta_exact_in_t(const GridFunction& g, const IntPolynomial& f) {
  return zeta_exact_in_t(SpectralFunction::from_space(g), f);
}

RationalFunctionT zeta_exact_in_t_freq(const RationalGrid& ghat, const IntPolynomial& f) {
  MonomialData m = monomial_data(f, ghat.shape().field);
  if (f.n() != ghat.shape().n) throw ValidationError("polynomial and grid dimensions differ");
  std::vector<unsigned> v(m.N.size(), 1);
  return times_t_power(monomial_power_integral(ghat, m.N, v), m.coefficient_ord);
}

ComplexRationalFunction zeta_exact_in_t(const SpectralFunction& T, const IntPolynomial& f) {
  MonomialData m = monomial_data(f, T.base().shape().field);
  if (f.n() != T.n()) throw ValidationError("polynomial and grid dimensions differ");
  long k = 0;
  for (const auto& mult : T.multipliers()) {
    double e = mult.exponent.real();
    if (!(mult.symbol == f) || mult.exponent.imag() != 0 || e != std::floor(e) || e < 0)
      throw UnsupportedError("spectral multipliers must be non-negative integer powers of |f|");
    k += static_cast<long>(e);
  }
  std::vector<unsigned> v(m.N.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = 1 + static_cast<unsigned>(k) * m.N[i];
  // |f|^{s+k} = |c|^{s+k} prod |xi_i|^{N_i s + k N_i}
  ComplexRationalFunction r = monomial_power_integral(T.base(), m.N, v);
  r = times_t_power(r, m.coefficient_ord);
  if (m.coefficient_ord != 0 && k != 0) {
    ComplexL c = std::pow(static_cast<long double>(T.base().shape().field.q()), -static_cast<long double>(m.coefficient_ord * k));
    r = r * ComplexRationalFunction::constant(c, r.q());
  }
  return r;
}

Complex extract_T0(const GridFunction& g, const IntPolynomial& f) { return extract_T0(SpectralFunction::from_space(g), f); }

Complex extract_T0(const SpectralFunction& T, const IntPolynomial& f) {
  MonomialData m = monomial_data(f, T.base().shape().field);
  ComplexRationalFunction Z = zeta_exact_in_t(T, f);
  if (Z.is_zero()) return 0.0;
  return Complex(laurent_at(Z, -1.0L, pole_bound(m), 0).value(0));
}

LambdaPoly<Rational> extract_T0_exact(const RationalGrid& ghat, const IntPolynomial& f) {
  MonomialData m = monomial_data(f, ghat.shape().field);
  RationalFunctionT Z = zeta_exact_in_t_freq(ghat, f);
  if (Z.is_zero()) return {};
  return laurent_at(Z, -1, pole_bound(m), 0).coefficient(0);
}

FundsolReport fundamental_solution_check(FieldSpec field, const IntPolynomial& f, int trials, std::mt19937_64& rng, double tolerance) {
  MonomialData m = monomial_data(f, field);
  const int n = f.n();
  FundsolReport report;
  report.polynomial = f.to_string();
  report.q = field.q();
  report.n = n;
  const Multiplier A{f, 1.0};

  GridShape shape = GridShape::make(field, n, 1, 1);
  for (int k = 0; k < trials; ++k) {
    GridFunction g = random_grid(shape, rng), h = random_grid(shape, rng);
    SpectralFunction G = SpectralFunction::from_space(g);
    FundsolTrial t;
    t.g_at_origin = value_at_origin(g);
    t.t0_of_Ag = extract_T0(G.with_multipliers({A}), f);
    t.error_delta = std::abs(t.t0_of_Ag - t.g_at_origin);

    SpectralFunction psi(product_conj(G.base(), fourier_transform(h)), {A});
    t.pairing_gh = pairing(g, h);
    t.t0_of_conv = extract_T0(psi, f);
    t.error_convolution = std::abs(t.t0_of_conv - t.pairing_gh);
    report.max_error_delta = std::max(report.max_error_delta, t.error_delta);
    report.max_error_convolution = std::max(report.max_error_convolution, t.error_convolution);
    report.trials.push_back(t);
  }

  // Division: on a cell C off f^{-1}(0), T0(1_C) / vol(C) is the value of E^
  // there, and it must equal 1 / |f| exactly.
  const GridShape fs = shape.dual();
  const Rational vol = fs.cell_volume();
  for (std::size_t c = 0; c < fs.size(); ++c) {
    auto axes = fs.axis_indices(c);
    long ord = m.coefficient_ord;
    bool off_zero = true;
    for (int i = 0; i < n; ++i) {
      if (m.N[static_cast<std::size_t>(i)] == 0) continue;
      auto o = fs.axis_ord(axes[static_cast<std::size_t>(i)]);
      if (!o) {
        off_zero = false;
        break;
      }
      ord += static_cast<long>(m.N[static_cast<std::size_t>(i)]) * *o;
    }
    if (!off_zero) continue;
    RationalGrid cell(fs);
    cell[c] = 1;
    LambdaPoly<Rational> t0 = extract_T0_exact(cell, f);
    ++report.division_cells;
    bool exact_one = t0.size() == 1 && t0.begin()->first == 0 && t0.begin()->second / vol * q_pow(field.q(), -ord) == 1;
    if (!exact_one) ++report.division_failures;
  }

  RationalGrid unit(GridShape::make(field, n, 0, 0));
  unit[0] = 1;
  report.t0_unit_ball = lambda_string(extract_T0_exact(unit, f));
  report.passed = report.division_failures == 0 && report.max_error_delta <= tolerance && report.max_error_convolution <= tolerance;
  return report;
}

}  // namespace ultrazeta
