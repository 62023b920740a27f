#include "ultrazeta/elementary.hpp"

#include <cmath>
#include <random>

#include "ultrazeta/fourier.hpp"
#include "ultrazeta/vladimirov.hpp"

namespace ultrazeta {

namespace {

constexpr long kMaxSeriesTerms = 1'000'000;

void check_exponent_vectors(int n, const std::vector<unsigned>& N, const std::vector<unsigned>& v) {
  if (N.empty() || static_cast<int>(N.size()) > n) throw ValidationError("N must have between 1 and n entries");
  if (v.size() != N.size()) throw ValidationError("N and v must have the same length");
  for (std::size_t i = 0; i < N.size(); ++i)
    if (N[i] < 1 || v[i] < 1) throw ValidationError("N_i and v_i must be positive");
}

// Sum over the grid of values times a product of per-axis weights, as a
// polynomial in t; contracts one axis at a time, last axis first.
template <class C, class V>
Poly<C> contract(const GridShape& s, const std::vector<V>& values, const std::vector<std::vector<Poly<C>>>& weights) {
  const std::size_t per = s.per_axis();
  std::vector<Poly<C>> layer(values.size());
  for (std::size_t c = 0; c < values.size(); ++c)
    if (values[c] != V(0)) layer[c] = Poly<C>::constant(C(values[c]));
  for (int axis = s.n - 1; axis >= 0; --axis) {
    std::vector<Poly<C>> next(layer.size() / per);
    for (std::size_t prefix = 0; prefix < next.size(); ++prefix)
      for (std::size_t r = 0; r < per; ++r) {
        const Poly<C>& p = layer[prefix * per + r];
        if (!p.is_zero()) next[prefix] = next[prefix] + p * weights[static_cast<std::size_t>(axis)][r];
      }
    layer = std::move(next);
  }
  return layer[0];
}

template <class C>
C q_power_coeff(unsigned q, long e) {
  if constexpr (is_exact_v<C>) {
    return q_pow(q, e);
  } else {
    return C(std::pow(static_cast<long double>(q), static_cast<long double>(e)));
  }
}

// Per-axis weights (times the common denominator) and that denominator.
template <class C, class V>
RationalFunction<C> exact_integral(const GridShape& s, const std::vector<V>& values, const std::vector<unsigned>& N,
                                   const std::vector<unsigned>& v) {
  const unsigned q = s.field.q();
  const std::size_t per = s.per_axis();
  std::vector<std::vector<Poly<C>>> weights(static_cast<std::size_t>(s.n), std::vector<Poly<C>>(per));
  Poly<C> den = Poly<C>::constant(C(1));
  long shift = 0;
  for (int i = 0; i < s.n; ++i) {
    auto& w = weights[static_cast<std::size_t>(i)];
    if (static_cast<std::size_t>(i) >= N.size() || (N[static_cast<std::size_t>(i)] == 0 && v[static_cast<std::size_t>(i)] == 1)) {
      for (auto& p : w) p = Poly<C>::constant(q_power_coeff<C>(q, -s.m));
      continue;
    }
    const long Ni = N[static_cast<std::size_t>(i)], vi = v[static_cast<std::size_t>(i)];
    bool touches_zero = false;
    for (std::size_t c = 0; c < values.size() && !touches_zero; ++c)
      if (values[c] != V(0) && s.cell_contains_origin_axis(c, i)) touches_zero = true;
    Poly<C> factor = Poly<C>::constant(C(1)) - Poly<C>::monomial(q_power_coeff<C>(q, -vi), static_cast<std::size_t>(Ni));
    shift += s.L * Ni;
    for (std::size_t r = 1; r < per; ++r) {
      long o = *s.axis_ord(r);
      // q^{-m} |xi|^{N s + v - 1} = q^{-m} q^{-o(v-1)} t^{o N}
      w[r] = Poly<C>::monomial(q_power_coeff<C>(q, -s.m - o * (vi - 1)), static_cast<std::size_t>((o + s.L) * Ni));
      if (touches_zero) w[r] = w[r] * factor;
    }
    if (touches_zero) {
      w[0] = Poly<C>::monomial(C(1) - q_power_coeff<C>(q, -1), static_cast<std::size_t>((s.m + s.L) * Ni));
      w[0] = q_power_coeff<C>(q, -s.m * vi) * w[0];
      den = den * factor;
    }
  }
  den = den * Poly<C>::monomial(C(1), static_cast<std::size_t>(shift));
  return RationalFunction<C>(contract<C>(s, values, weights), den, q);
}

}  // namespace

SeriesValue sphere_sum_1d(unsigned q, long k, ComplexL gamma, double tolerance) {
  if (gamma.real() <= -1.0L) throw DivergentError("integral of |x|^gamma diverges at 0 for Re(gamma) <= -1");
  const long double dq = q;
  const ComplexL ratio = q_pow_complex(q, -1.0L - gamma);
  const long double rho = std::abs(ratio);
  ComplexL term = (1.0L - 1.0L / dq) * q_pow_complex(q, -static_cast<long double>(k) * (1.0L + gamma));
  SeriesValue out;
  while (true) {
    long double tail = std::abs(term) / (1.0L - rho);
    if (tail <= tolerance * std::max(std::abs(out.value), 1e-300L) || out.terms >= kMaxSeriesTerms) {
      out.tail_bound = static_cast<double>(tail);
      break;
    }
    out.value += term;
    term *= ratio;
    ++out.terms;
  }
  return out;
}

SeriesValue axis_integral_numeric(const GridShape& shape, std::size_t r, ComplexL gamma) {
  const unsigned q = shape.field.q();
  if (r != 0) {
    SeriesValue out;
    out.value = q_pow_complex(q, -static_cast<long double>(shape.m)) * q_pow_complex(q, -gamma * static_cast<long double>(*shape.axis_ord(r)));
    out.terms = 1;
    return out;
  }
  return sphere_sum_1d(q, shape.m, gamma);
}

namespace {

// int prod_i |xi_i|^{gamma_i} h(xi) over a grid, by sphere sums.
SeriesValue weighted_sum(const GridFunction& h, const std::vector<ComplexL>& gamma) {
  const GridShape& s = h.shape();
  std::vector<std::vector<bool>> needed(static_cast<std::size_t>(s.n), std::vector<bool>(s.per_axis(), false));
  for (std::size_t c = 0; c < s.size(); ++c) {
    if (h[c] == Complex(0)) continue;
    auto axes = s.axis_indices(c);
    for (std::size_t i = 0; i < axes.size(); ++i) needed[i][axes[i]] = true;
  }
  std::vector<std::vector<SeriesValue>> w(static_cast<std::size_t>(s.n), std::vector<SeriesValue>(s.per_axis()));
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t r = 0; r < s.per_axis(); ++r)
      if (needed[i][r]) w[i][r] = axis_integral_numeric(s, r, gamma[i]);
  SeriesValue out;
  for (std::size_t c = 0; c < s.size(); ++c) {
    if (h[c] == Complex(0)) continue;
    auto axes = s.axis_indices(c);
    ComplexL value = ComplexL(h[c]);
    long double bound = std::abs(value), tail = 0;
    for (std::size_t i = 0; i < axes.size(); ++i) {
      const SeriesValue& a = w[i][axes[i]];
      value *= a.value;
      tail = tail * std::abs(a.value) + bound * a.tail_bound;
      bound *= std::abs(a.value) + a.tail_bound;
      out.terms = std::max(out.terms, a.terms);
    }
    out.value += value;
    out.tail_bound += static_cast<double>(tail);
  }
  return out;
}

}  // namespace

SeriesValue elementary_integral(const GridFunction& g, const std::vector<unsigned>& N, const std::vector<unsigned>& v, ComplexL s) {
  check_exponent_vectors(g.shape().n, N, v);
  std::vector<ComplexL> gamma(static_cast<std::size_t>(g.shape().n), 0.0L);
  for (std::size_t i = 0; i < N.size(); ++i) gamma[i] = static_cast<long double>(N[i]) * s + static_cast<long double>(v[i]) - 1.0L;
  return weighted_sum(fourier_transform(g), gamma);
}

ComplexRationalFunction elementary_integral_exact(const GridFunction& g, const std::vector<unsigned>& N, const std::vector<unsigned>& v) {
  return elementary_integral_exact_freq(fourier_transform(g), N, v);
}

ComplexRationalFunction elementary_integral_exact_freq(const GridFunction& ghat, const std::vector<unsigned>& N, const std::vector<unsigned>& v) {
  check_exponent_vectors(ghat.shape().n, N, v);
  std::vector<ComplexL> values(ghat.values().begin(), ghat.values().end());
  return exact_integral<ComplexL>(ghat.shape(), values, N, v);
}

RationalFunctionT elementary_integral_exact_freq(const RationalGrid& ghat, const std::vector<unsigned>& N, const std::vector<unsigned>& v) {
  check_exponent_vectors(ghat.shape().n, N, v);
  return exact_integral<Rational>(ghat.shape(), ghat.values(), N, v);
}

ComplexRationalFunction monomial_power_integral(const GridFunction& ghat, const std::vector<unsigned>& N, const std::vector<unsigned>& v) {
  std::vector<ComplexL> values(ghat.values().begin(), ghat.values().end());
  return exact_integral<ComplexL>(ghat.shape(), values, N, v);
}

RationalFunctionT monomial_power_integral(const RationalGrid& ghat, const std::vector<unsigned>& N, const std::vector<unsigned>& v) {
  return exact_integral<Rational>(ghat.shape(), ghat.values(), N, v);
}

SeriesValue mixed_integral(const GridFunction& g, const std::vector<int>& I, const std::vector<int>& J,
                           const std::vector<ComplexL>& alpha, const std::vector<ComplexL>& beta) {
  const int n = g.shape().n;
  if (alpha.size() != I.size() || beta.size() != J.size()) throw ValidationError("one exponent per index is required");
  std::vector<ComplexL> gamma(static_cast<std::size_t>(n), 0.0L);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  auto claim = [&](int i) {
    if (i < 0 || i >= n || used[static_cast<std::size_t>(i)]) throw ValidationError("I and J must be disjoint sets of axes");
    used[static_cast<std::size_t>(i)] = true;
  };
  for (std::size_t k = 0; k < I.size(); ++k) {
    claim(I[k]);
    if (alpha[k].real() <= 0) throw DivergentError("mixed integral needs Re(alpha_i) > 0");
    gamma[static_cast<std::size_t>(I[k])] = alpha[k];
  }
  for (std::size_t k = 0; k < J.size(); ++k) {
    claim(J[k]);
    if (beta[k].real() <= 0 || beta[k].real() >= 1) throw DivergentError("mixed integral needs 0 < Re(beta_i) < 1");
    gamma[static_cast<std::size_t>(J[k])] = -beta[k];
  }
  return weighted_sum(fourier_transform(g), gamma);
}

FunctionalEquationReport functional_equation_check(const GridFunction& g, const std::vector<unsigned>& N,
                                                   const std::vector<unsigned>& v, unsigned beta,
                                                   const std::vector<ComplexL>& samples) {
  const GridShape& s = g.shape();
  if (static_cast<int>(N.size()) != s.n) throw ValidationError("the functional equation check needs N of length n");
  std::vector<unsigned> shifted = v;
  for (std::size_t i = 0; i < N.size(); ++i) shifted[i] += beta * N[i];
  ComplexRationalFunction E = elementary_integral_exact(g, N, shifted);

  FunctionalEquationReport out;
  for (ComplexL z : samples) {
    std::vector<ComplexL> a(N.size());
    ComplexL weight = 1.0L;
    for (std::size_t i = 0; i < N.size(); ++i) {
      a[i] = static_cast<long double>(N[i]) * z + static_cast<long double>(shifted[i]);
      if (a[i].real() >= 1.0L) throw ValidationError("functional equation samples need Re(a_i) < 1");
      weight *= gamma_factor(s.field.q(), a[i]);
      a[i] = -a[i];
    }
    ComplexL lhs = E.evaluate_s(z);
    ComplexL rhs = weight * weighted_sum(g, a).value;
    out.samples.push_back(z);
    out.frequency_side.push_back(lhs);
    out.space_side.push_back(rhs);
    out.max_discrepancy = std::max(out.max_discrepancy, static_cast<double>(std::abs(lhs - rhs) / std::max(1.0L, std::abs(lhs))));
  }
  return out;
}

std::vector<ComplexL> functional_equation_samples(const std::vector<unsigned>& N, const std::vector<unsigned>& v, unsigned beta, int count) {
  long double lo = -1e9L, hi = 1e9L;
  for (std::size_t i = 0; i < N.size(); ++i) {
    const long double c = static_cast<long double>(v[i] + beta * N[i]);
    lo = std::max(lo, (-1.5L - c) / N[i]);
    hi = std::min(hi, (0.9L - c) / N[i]);
  }
  if (!(lo < hi)) throw ValidationError("no common strip for the functional equation samples");
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> re(static_cast<double>(lo), static_cast<double>(hi)), im(-2.0, 2.0);
  std::vector<ComplexL> out;
  while (static_cast<int>(out.size()) < count) {
    ComplexL z(re(rng), im(rng));
    bool ok = true;
    for (std::size_t i = 0; i < N.size() && ok; ++i) {
      long double ar = static_cast<long double>(N[i]) * z.real() + v[i] + beta * N[i];
      ok = std::abs(ar) > 0.1L;
    }
    if (ok) out.push_back(z);
  }
  return out;
}

}  // namespace ultrazeta
