#include "ultrazeta/vladimirov.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "ultrazeta/elementary.hpp"
#include "ultrazeta/fourier.hpp"
#include "ultrazeta/sobolev.hpp"

namespace ultrazeta {

namespace {

// Distance from alpha to the lattice shift + 2 pi i Z / ln q.
long double lattice_distance(unsigned q, ComplexL alpha, long double shift) {
  const long double period = 2.0L * std::numbers::pi_v<long double> / ln_q(q);
  const long double j = std::round(alpha.imag() / period);
  return std::abs(alpha - ComplexL(shift, j * period));
}

Complex parse_complex(const std::string& text) {
  std::istringstream in(text);
  double re = 0;
  if (!(in >> re)) throw ValidationError("malformed exponent '" + text + "'");
  double im = 0;
  char c = 0;
  if (in >> c) {
    if (c != '+' && c != '-') throw ValidationError("malformed exponent '" + text + "'");
    std::string rest;
    in >> rest;
    if (rest.empty() || rest.back() != 'i') throw ValidationError("malformed exponent '" + text + "'");
    rest.pop_back();
    try {
      im = rest.empty() ? 1.0 : std::stod(rest);
    } catch (const std::exception&) {
      throw ValidationError("malformed exponent '" + text + "'");
    }
    if (c == '-') im = -im;
  }
  return {re, im};
}

struct MonomialSymbol {
  Complex constant = 1.0;
  std::vector<Complex> exponents;
};

MonomialSymbol monomial_symbol(const std::vector<Multiplier>& multipliers, const GridShape& shape) {
  MonomialSymbol out;
  out.exponents.assign(static_cast<std::size_t>(shape.n), 0.0);
  for (const auto& m : multipliers) {
    if (!m.symbol.is_monomial()) throw UnsupportedError("space-side evaluation needs monomial symbols, got " + m.label());
    const auto& [e, c] = *m.symbol.terms().begin();
    if (shape.field.kind == FieldKind::Qp) {
      long o = *ord_p(c, shape.field.p);
      out.constant *= std::exp(-m.exponent * static_cast<double>(o) * std::log(static_cast<double>(shape.field.q())));
    }
    for (int i = 0; i < shape.n; ++i) out.exponents[static_cast<std::size_t>(i)] += static_cast<double>(e[static_cast<std::size_t>(i)]) * m.exponent;
  }
  return out;
}

Complex q_power(unsigned q, Complex e) { return std::exp(e * std::log(static_cast<double>(q))); }

// int_{pi^k R} chi(x xi) |xi|^gamma dxi with |x| = q^e (e = nullopt for x = 0),
// summed sphere by sphere.
Complex zero_cell_kernel(unsigned q, long k, std::optional<long> e, Complex gamma) {
  const double dq = q;
  auto tail = [&](long from) {
    return (1.0 - 1.0 / dq) * q_power(q, -static_cast<double>(from) * (1.0 + gamma)) / (1.0 - q_power(q, -1.0 - gamma));
  };
  if (!e) return tail(k);
  Complex value = tail(std::max(k, *e));
  if (*e - 1 >= k) value -= q_power(q, -static_cast<double>(*e - 1) * gamma) * std::pow(dq, -static_cast<double>(*e));
  return value;
}

}  // namespace

ComplexL gamma_factor(unsigned q, ComplexL alpha, double guard) {
  if (lattice_distance(q, alpha, 0.0L) < guard || lattice_distance(q, alpha, 1.0L) < guard)
    throw PoleOfGamma("Gamma has a pole at alpha = " + std::to_string(static_cast<double>(alpha.real())) + " + " +
                      std::to_string(static_cast<double>(alpha.imag())) + "i");
  return (1.0L - q_pow_complex(q, alpha - 1.0L)) / (1.0L - q_pow_complex(q, -alpha));
}

Rational gamma_factor_exact(unsigned q, long alpha) {
  if (alpha == 0 || alpha == 1) throw PoleOfGamma("Gamma has a pole at alpha = " + std::to_string(alpha));
  return (Rational(1) - q_pow(q, alpha - 1)) / (Rational(1) - q_pow(q, -alpha));
}

PseudoDiffOp PseudoDiffOp::parse(const std::string& text, int n) {
  PseudoDiffOp op;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ';')) {
    auto colon = item.rfind(':');
    if (colon == std::string::npos) throw ValidationError("symbol '" + item + "' must have the form h:alpha");
    IntPolynomial h = IntPolynomial::parse(item.substr(0, colon), n);
    if (h.is_constant()) throw ValidationError("symbol polynomial must be nonconstant");
    Complex alpha = parse_complex(item.substr(colon + 1));
    if (alpha.real() <= 0) throw ValidationError("symbol exponents need Re(alpha) > 0");
    op.symbols.push_back({h, alpha});
  }
  if (op.symbols.empty()) throw ValidationError("empty operator symbol");
  return op;
}

int PseudoDiffOp::sobolev_shift() const {
  int shift = 0;
  for (const auto& s : symbols) shift += 2 * s.symbol.degree() * static_cast<int>(std::ceil(s.exponent.real()));
  return shift;
}

SpectralFunction apply_pseudodiff(const PseudoDiffOp& op, const GridFunction& g) {
  return apply_pseudodiff(op, SpectralFunction::from_space(g));
}

SpectralFunction apply_pseudodiff(const PseudoDiffOp& op, const SpectralFunction& T) { return T.with_multipliers(op.symbols); }

SpectralFunction apply_adjoint(const PseudoDiffOp& op, const SpectralFunction& T) {
  std::vector<Multiplier> conj = op.symbols;
  for (auto& m : conj) m.exponent = std::conj(m.exponent);
  return T.with_multipliers(conj);
}

PseudoDiffOp vladimirov_operator(const std::vector<Complex>& alpha) {
  PseudoDiffOp op;
  const int n = static_cast<int>(alpha.size());
  for (int i = 0; i < n; ++i) {
    if (alpha[static_cast<std::size_t>(i)].real() < 0) throw ValidationError("Vladimirov exponents need Re(alpha) >= 0");
    if (alpha[static_cast<std::size_t>(i)] == Complex(0)) continue;
    op.symbols.push_back({IntPolynomial::variable(n, i), alpha[static_cast<std::size_t>(i)]});
  }
  return op;
}

SpectralFunction vladimirov(const std::vector<Complex>& alpha, const GridFunction& g) {
  if (static_cast<int>(alpha.size()) != g.shape().n) throw ValidationError("alpha needs one exponent per coordinate");
  return apply_pseudodiff(vladimirov_operator(alpha), g);
}

Complex evaluate_in_space(const SpectralFunction& T, const FieldVector& x) {
  const GridShape& s = T.base().shape();
  if (static_cast<int>(x.size()) != s.n) throw ValidationError("evaluation point has the wrong dimension");
  const unsigned q = s.field.q();
  MonomialSymbol sym = monomial_symbol(T.multipliers(), s);

  // kernel[i][r] = int over axis coset r of chi(x_i xi) |xi|^{gamma_i} dxi
  std::vector<std::vector<Complex>> kernel(static_cast<std::size_t>(s.n), std::vector<Complex>(s.per_axis(), 0.0));
  for (int i = 0; i < s.n; ++i) {
    const LocalFieldElement& xi = x[static_cast<std::size_t>(i)];
    if (!(xi.field() == s.field)) throw ValidationError("evaluation point lies in a different field");
    const Complex gamma = sym.exponents[static_cast<std::size_t>(i)];
    if (gamma.real() <= -1.0) throw DivergentError("symbol exponent along xi_" + std::to_string(i + 1) + " is not integrable");
    std::optional<long> e;
    if (!xi.is_zero()) e = -*xi.valuation();
    auto& row = kernel[static_cast<std::size_t>(i)];
    row[0] = zero_cell_kernel(q, s.m, e, gamma);
    if (e && *e > s.m) continue;
    std::vector<unsigned> digits;
    long low = 0;
    if (!xi.is_zero()) {
      low = *xi.valuation();
      if (*xi.absolute_precision() < s.L) throw InsufficientPrecision("evaluation point needs digits up to exponent L - 1");
      for (long j = 0; j < s.L - low; ++j) digits.push_back(xi.digit(low + j));
    }
    FieldScalar xs = FieldScalar::from_digits(s.field, low, digits);
    const double vol = std::pow(static_cast<double>(q), -static_cast<double>(s.m));
    for (std::size_t r = 1; r < s.per_axis(); ++r) {
      double angle = 2.0 * std::numbers::pi * static_cast<double>(to_long_double((s.axis_center(r) * xs).char_fraction()));
      row[r] = vol * std::polar(1.0, angle) * q_power(q, -gamma * static_cast<double>(*s.axis_ord(r)));
    }
  }
  Complex acc = 0;
  for (std::size_t c = 0; c < s.size(); ++c) {
    if (T.base()[c] == Complex(0)) continue;
    auto axes = s.axis_indices(c);
    Complex w = T.base()[c];
    for (std::size_t i = 0; i < axes.size(); ++i) w *= kernel[i][axes[i]];
    acc += w;
  }
  return sym.constant * acc;
}

Complex evaluate_in_space_at_origin(const SpectralFunction& T) {
  const GridShape& s = T.base().shape();
  return evaluate_in_space(T, FieldVector(std::vector<LocalFieldElement>(static_cast<std::size_t>(s.n), LocalFieldElement::zero(s.field))));
}

RieszCheck riesz_pairing(const std::vector<Complex>& alpha, const GridFunction& phi) {
  const GridShape& xs = phi.shape();
  if (static_cast<int>(alpha.size()) != xs.n) throw ValidationError("alpha needs one exponent per coordinate");
  const unsigned q = xs.field.q();
  GridFunction phihat = fourier_transform(phi);
  const GridShape& fs = phihat.shape();

  // Frequency side: f_alpha = prod |xi_i|^{alpha_i - 1} / Gamma(alpha_i); a
  // zero exponent stands for the delta factor along that axis.
  std::vector<std::vector<Complex>> lhs_w(alpha.size()), rhs_w(alpha.size());
  std::vector<std::vector<double>> rhs_tail(alpha.size());
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    const Complex a = alpha[i];
    if (a.real() == 1.0) throw ValidationError("Riesz kernels with Re(alpha) = 1 are excluded");
    lhs_w[i].assign(fs.per_axis(), 0.0);
    if (a == Complex(0)) {
      lhs_w[i][0] = 1.0;
    } else {
      const Complex inv_gamma = 1.0 / Complex(gamma_factor(q, ComplexL(a)));
      if (a.real() <= 0) throw DivergentError("Riesz pairing needs Re(alpha) > 0 on the frequency side");
      for (std::size_t r = 0; r < fs.per_axis(); ++r) lhs_w[i][r] = inv_gamma * power_integral_1d(q, fs.m, fs.axis_ord(r), a - 1.0);
    }
    if (a.real() >= 1.0) throw DivergentError("Riesz pairing needs Re(alpha) < 1 on the space side");
    rhs_w[i].assign(xs.per_axis(), 0.0);
    rhs_tail[i].assign(xs.per_axis(), 0.0);
    for (std::size_t r = 0; r < xs.per_axis(); ++r) {
      SeriesValue v = axis_integral_numeric(xs, r, ComplexL(-a));
      rhs_w[i][r] = Complex(v.value);
      rhs_tail[i][r] = v.tail_bound;
    }
  }

  RieszCheck out;
  for (std::size_t c = 0; c < fs.size(); ++c) {
    if (phihat[c] == Complex(0)) continue;
    auto axes = fs.axis_indices(c);
    Complex w = phihat[c];
    for (std::size_t i = 0; i < axes.size(); ++i) w *= lhs_w[i][axes[i]];
    out.lhs += w;
  }
  for (std::size_t c = 0; c < xs.size(); ++c) {
    if (phi[c] == Complex(0)) continue;
    auto axes = xs.axis_indices(c);
    Complex w = phi[c];
    double bound = std::abs(phi[c]);
    double tail = 0;
    for (std::size_t i = 0; i < axes.size(); ++i) {
      w *= rhs_w[i][axes[i]];
      tail = tail * std::abs(rhs_w[i][axes[i]]) + bound * rhs_tail[i][axes[i]];
      bound *= std::abs(rhs_w[i][axes[i]]) + rhs_tail[i][axes[i]];
    }
    out.rhs += w;
    out.tail_bound += tail;
  }
  out.discrepancy = std::abs(out.lhs - out.rhs);
  return out;
}

Prop3Report prop3_identity_check(const std::vector<Complex>& alpha, const std::vector<Complex>& beta, const GridFunction& g) {
  const int n = g.shape().n;
  if (static_cast<int>(alpha.size()) != n || static_cast<int>(beta.size()) != n)
    throw ValidationError("alpha and beta need one exponent per coordinate");
  for (int i = 0; i < n; ++i)
    if (alpha[static_cast<std::size_t>(i)].real() <= 0 || beta[static_cast<std::size_t>(i)].real() < 0)
      throw ValidationError("the identity needs Re(alpha) > 0 and Re(beta) >= 0");

  SpectralFunction G = SpectralFunction::from_space(g);
  const GridShape& fs = G.base().shape();
  GridFunction ones(fs, std::vector<Complex>(fs.size(), 1.0));
  std::vector<Multiplier> riesz;
  for (int i = 0; i < n; ++i) riesz.push_back({IntPolynomial::variable(n, i), std::conj(alpha[static_cast<std::size_t>(i)]) - 1.0});
  SpectralFunction T(ones, riesz);

  Prop3Report out;
  out.lhs = pairing(apply_adjoint(vladimirov_operator(beta), T), G);
  out.lhs_unconjugated = pairing(apply_pseudodiff(vladimirov_operator(beta), T), G);

  // Right side: int prod |xi_i|^{alpha_i + beta_i - 1} g^(xi) by sphere sums.
  std::vector<std::vector<Complex>> w(static_cast<std::size_t>(n), std::vector<Complex>(fs.per_axis()));
  for (int i = 0; i < n; ++i)
    for (std::size_t r = 0; r < fs.per_axis(); ++r)
      w[static_cast<std::size_t>(i)][r] = Complex(axis_integral_numeric(fs, r, ComplexL(alpha[static_cast<std::size_t>(i)] + beta[static_cast<std::size_t>(i)] - 1.0)).value);
  for (std::size_t c = 0; c < fs.size(); ++c) {
    if (G.base()[c] == Complex(0)) continue;
    auto axes = fs.axis_indices(c);
    Complex v = G.base()[c];
    for (std::size_t i = 0; i < axes.size(); ++i) v *= w[i][axes[i]];
    out.rhs += v;
  }
  out.discrepancy = std::abs(out.lhs - out.rhs);
  out.discrepancy_unconjugated = std::abs(out.lhs_unconjugated - out.rhs);
  return out;
}

}  // namespace ultrazeta
