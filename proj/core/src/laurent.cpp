#include "ultrazeta/laurent.hpp"

#include <cmath>
#include <sstream>

namespace ultrazeta {

ComplexRationalFunction to_complex(const RationalFunctionT& f) {
  auto conv = [](const Poly<Rational>& p) {
    std::vector<ComplexL> c;
    for (const auto& x : p.coeffs()) c.emplace_back(to_long_double(x));
    return Poly<ComplexL>(std::move(c));
  };
  return ComplexRationalFunction(conv(f.num()), conv(f.den()), f.q());
}

Poly<Rational> geometric_denominator(unsigned q, long v, unsigned N) {
  return Poly<Rational>::constant(Rational(1)) - Poly<Rational>::monomial(q_pow(q, -v), N);
}

template <class C>
LambdaPoly<C> LaurentExpansion<C>::coefficient(int order) const {
  if (order < min_order || order > max_order()) return {};
  return coefficients[static_cast<std::size_t>(order - min_order)];
}

template <class C>
ComplexL evaluate_lambda(const LambdaPoly<C>& p, unsigned q) {
  const long double lambda = ln_q(q);
  ComplexL acc = 0;
  for (const auto& [k, c] : p) {
    ComplexL v;
    if constexpr (is_exact_v<C>)
      v = ComplexL(to_long_double(c));
    else
      v = c;
    acc += v * std::pow(lambda, static_cast<long double>(k));
  }
  return acc;
}

template ComplexL evaluate_lambda(const LambdaPoly<Rational>&, unsigned);
template ComplexL evaluate_lambda(const LambdaPoly<ComplexL>&, unsigned);

template <class C>
ComplexL LaurentExpansion<C>::value(int order) const {
  return evaluate_lambda(coefficient(order), q);
}

template <class C>
int LaurentExpansion<C>::pole_order() const {
  for (int k = min_order; k < 0; ++k)
    if (!coefficient(k).empty()) return -k;
  return 0;
}

template <class C>
ComplexL LaurentExpansion<C>::partial_sum(ComplexL s) const {
  ComplexL w = s - center, acc = 0;
  for (int k = min_order; k <= max_order(); ++k) acc += value(k) * std::pow(w, static_cast<long double>(k));
  return acc;
}

template struct LaurentExpansion<Rational>;
template struct LaurentExpansion<ComplexL>;

namespace {

template <class C>
bool negligible(const C& c, long double scale, long double tol) {
  if constexpr (is_exact_v<C>) {
    (void)scale;
    (void)tol;
    return c == 0;
  } else {
    return std::abs(c) <= tol * scale;
  }
}

template <class C>
long double magnitude(const Poly<C>& p) {
  long double m = 0;
  for (const auto& c : p.coeffs()) {
    if constexpr (is_exact_v<C>)
      m = std::max(m, std::abs(to_long_double(c)));
    else
      m = std::max(m, std::abs(c));
  }
  return m;
}

// Order of vanishing at u = 0, treating coefficients below tol * scale as 0.
template <class C>
std::size_t zero_order(const Poly<C>& p, long double tol) {
  const long double scale = magnitude(p);
  std::size_t k = 0;
  while (k < p.coeffs().size() && negligible(p.coeffs()[k], scale, tol)) ++k;
  return k;
}

// Power-series coefficients in x of E(x)^e, E(x) = sum_i (-x)^i / (i+1)!.
std::vector<Rational> e_power(long e, std::size_t n) {
  std::vector<Rational> base(n), inv(n, Rational(0));
  Integer fact = 1;
  for (std::size_t i = 0; i < n; ++i) {
    fact *= static_cast<unsigned long>(i + 1);
    base[i] = Rational(i % 2 == 0 ? 1 : -1, 1) / Rational(fact);
  }
  std::vector<Rational> factor = base;
  if (e < 0) {
    // 1/E by the usual recurrence (E(0) = 1).
    for (std::size_t k = 0; k < n; ++k) {
      Rational acc = k == 0 ? Rational(1) : Rational(0);
      for (std::size_t j = 1; j <= k; ++j) acc -= base[j] * inv[k - j];
      inv[k] = acc;
    }
    factor = inv;
  }
  std::vector<Rational> out(n, Rational(0));
  out[0] = 1;
  for (long r = 0; r < (e < 0 ? -e : e); ++r) {
    std::vector<Rational> next(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; i + j < n; ++j) next[i + j] += out[i] * factor[j];
    out = std::move(next);
  }
  return out;
}

template <class C>
C from_rational(const Rational& r) {
  if constexpr (is_exact_v<C>)
    return r;
  else
    return C(to_long_double(r));
}

template <class C>
C power(const C& base, long e) {
  C r = C(1);
  C b = e < 0 ? C(1) / base : base;
  for (long i = 0; i < (e < 0 ? -e : e); ++i) r *= b;
  return r;
}

template <class C>
LaurentExpansion<C> expand(const RationalFunction<C>& f, const C& t0, ComplexL s0, int lo, int hi, long double tol) {
  if (hi < lo) throw ValidationError("empty order range");
  Poly<C> N = f.num().taylor_shift(t0), D = f.den().taylor_shift(t0);
  std::size_t kd = zero_order(D, tol), kn = zero_order(N, tol);
  LaurentExpansion<C> out;
  out.center = s0;
  out.q = f.q();
  out.min_order = lo;
  out.coefficients.assign(static_cast<std::size_t>(hi - lo + 1), {});
  if (N.is_zero() || kn >= N.coeffs().size()) return out;
  long e = static_cast<long>(kn) - static_cast<long>(kd);
  if (e < lo)
    throw UnsupportedError("pole of order " + std::to_string(-e) + " exceeds the requested range starting at order " +
                           std::to_string(lo));
  N = N.shift_down(kn);
  D = D.shift_down(kd);
  const std::size_t terms = static_cast<std::size_t>(hi - e + 1);
  std::vector<C> a = N.series_over(D, terms);
  const C minus_t0 = -t0;
  std::vector<std::vector<Rational>> eps(terms);
  for (std::size_t j = 0; j < terms; ++j) eps[j] = e_power(e + static_cast<long>(j), terms);
  for (long M = std::max<long>(e, lo); M <= hi; ++M) {
    C acc = C(0);
    for (long j = 0; e + j <= M; ++j) {
      long p = e + j;
      acc += a[static_cast<std::size_t>(j)] * power(minus_t0, p) *
             from_rational<C>(eps[static_cast<std::size_t>(j)][static_cast<std::size_t>(M - p)]);
    }
    if (!(acc == C(0))) out.coefficients[static_cast<std::size_t>(M - lo)][static_cast<int>(M)] = acc;
  }
  return out;
}

}  // namespace

ExactLaurent laurent_at(const RationalFunctionT& f, long s0, int lo, int hi) {
  return expand<Rational>(f, q_pow(f.q(), -s0), ComplexL(static_cast<long double>(s0)), lo, hi, 0.0L);
}

ComplexLaurent laurent_at(const ComplexRationalFunction& f, ComplexL s0, int lo, int hi, long double zero_tolerance) {
  if (!std::isfinite(s0.real()) || !std::isfinite(s0.imag())) throw UnsupportedError("expansion point must be finite");
  return expand<ComplexL>(f, q_pow_complex(f.q(), -s0), s0, lo, hi, zero_tolerance);
}

std::string lambda_string(const LambdaPoly<Rational>& p) {
  if (p.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, c] : p) {
    if (!first) out << " + ";
    out << c.get_str();
    if (k != 0) out << "*lambda^" << k;
    first = false;
  }
  return out.str();
}

}  // namespace ultrazeta
