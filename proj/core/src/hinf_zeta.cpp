#include "ultrazeta/hinf_zeta.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ultrazeta/igusa.hpp"

namespace ultrazeta {

namespace {

constexpr long double kRelativeTail = 1e-17L;
constexpr long kMaxTerms = 1'000'000;

long double factorial(int k) {
  long double f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

}  // namespace

std::string mode_name(HinfMode mode) { return mode == HinfMode::SphereSeries ? "sphere_series" : "factored_continuation"; }

HinfMode parse_hinf_mode(const std::string& name) {
  if (name == "sphere_series" || name == "sphere") return HinfMode::SphereSeries;
  if (name == "factored_continuation" || name == "factored") return HinfMode::Factored;
  throw ValidationError("unknown mode '" + name + "'");
}

HinfZeta::HinfZeta(FieldSpec field, IntPolynomial f, double alpha, int series_terms)
    : field_(field), f_(std::move(f)), alpha_(alpha), n_(f_.n()), d_(static_cast<int>(f_.degree())) {
  if (!(alpha > 0)) throw ValidationError("alpha must be positive");
  ZetaSeries series = igusa_series(field_, f_, series_terms);
  Z0_ = snc_form_Z0(field_, f_, series).Z0;
}

HinfZeta HinfZeta::fermat(FieldSpec field, int n, int d, double alpha) {
  if (n < 1 || d < 1) throw ValidationError("n and d must be positive");
  IntPolynomial f(n);
  for (int i = 0; i < n; ++i) {
    Exponent e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i)] = static_cast<unsigned>(d);
    f.add_term(e, 1);
  }
  return HinfZeta(field, f, alpha);
}

HinfValue HinfZeta::z1(ComplexL s, HinfMode mode) const {
  const unsigned q = field_.q();
  const long double dq = q, a = alpha_;
  const ComplexL e = static_cast<long double>(n_) + static_cast<long double>(d_) * s;  // n + d s
  const long double er = e.real();
  HinfValue out;
  out.mode = mode;

  // sum_{j >= 1} q^{j e} exp(-q^{j alpha}): the part with ||xi|| > 1.
  auto outer = [&](long start) {
    ComplexL acc = 0;
    for (long j = start;; ++j) {
      long double jl = static_cast<long double>(j);
      long double mag = std::exp(jl * er * std::log(dq) - std::pow(dq, jl * a));
      // consecutive ratios shrink once q^{j alpha} dominates; the tail is
      // then bounded by the current term over (1 - ratio).
      long double next = std::exp((jl + 1) * er * std::log(dq) - std::pow(dq, (jl + 1) * a));
      acc += q_pow_complex(q, jl * e) * std::exp(-std::pow(dq, jl * a));
      ++out.terms;
      if ((next == 0 || next < 0.5L * mag) && next <= kRelativeTail * std::max(std::abs(acc), 1e-300L)) {
        out.tail_bound += static_cast<double>(2 * next);
        break;
      }
      if (out.terms > kMaxTerms) throw BudgetExceeded("sphere series did not converge");
    }
    return acc;
  };

  if (mode == HinfMode::SphereSeries) {
    if (er <= 0) throw DivergentError("sphere series needs n + d Re(s) > 0");
    ComplexL acc = outer(1);
    // j >= 0: terms bounded by q^{-j e_r}; geometric tail.
    const long double ratio = std::pow(dq, -er);
    for (long j = 0;; ++j) {
      long double jl = static_cast<long double>(j);
      acc += q_pow_complex(q, -jl * e) * std::exp(-std::pow(dq, -jl * a));
      ++out.terms;
      long double tail = std::pow(dq, -(jl + 1) * er) / (1 - ratio);
      if (tail <= kRelativeTail * std::max(std::abs(acc), 1e-300L)) {
        out.tail_bound += static_cast<double>(tail);
        break;
      }
      if (out.terms > kMaxTerms) throw BudgetExceeded("sphere series did not converge");
    }
    out.value = acc;
    return out;
  }

  // exp(-r^alpha) = sum_{l <= L} (-r^alpha)^l / l! + R_L(r) on ||xi|| <= 1.
  int L = 0;
  while (1 / factorial(L + 1) >= 1e-14L || er + a * (L + 1) < 1) ++L;
  out.exp_order = L;
  ComplexL acc = outer(1);
  for (int l = 0; l <= L; ++l) {
    ComplexL den = 1.0L - q_pow_complex(q, -e - a * l);
    acc += ((l % 2 ? -1.0L : 1.0L) / factorial(l)) / den;
  }
  // sum_{j >= 0} q^{-j e} R_L(q^{-j}); |R_L(r)| <= r^{alpha(L+1)} / (L+1)!.
  const long double decay = er + a * (L + 1);
  const long double ratio = std::pow(dq, -decay);
  for (long j = 0;; ++j) {
    long double jl = static_cast<long double>(j);
    long double x = std::pow(dq, -jl * a);
    long double term = 0, power = std::pow(x, L + 1) / factorial(L + 1);
    for (int l = L + 1; std::abs(power) > 1e-40L * std::max(std::abs(term), 1e-300L) || l <= L + 2; ++l) {
      term += (l % 2 ? -power : power);
      power *= x / (l + 1);
    }
    acc += q_pow_complex(q, -jl * e) * term;
    ++out.terms;
    long double tail = std::pow(dq, -(jl + 1) * decay) / factorial(L + 1) / (1 - ratio);
    if (tail <= kRelativeTail * std::max(std::abs(acc), 1e-300L)) {
      out.tail_bound += static_cast<double>(tail);
      break;
    }
    if (out.terms > kMaxTerms) throw BudgetExceeded("remainder series did not converge");
  }
  out.value = acc;
  return out;
}

void HinfZeta::check_pole_proximity(ComplexL s, double guard) const {
  if (guard <= 0) return;
  const long double lq = ln_q(field_.q());
  auto near = [&](long double re, long double period) {
    long double k = std::round(s.imag() / period);
    return std::abs(s - ComplexL(re, k * period)) < guard;
  };
  const long double two_pi = 2 * std::numbers::pi_v<long double>;
  if (near(-1.0L, two_pi / lq))
    throw PoleProximity("s is within " + std::to_string(guard) + " of the pole at -1");
  const long double period = two_pi / (d_ * lq);
  for (int l = 0;; ++l) {
    long double re = -(n_ + alpha_ * l) / d_;
    if (re < s.real() - 1) break;
    if (near(re, period))
      throw PoleProximity("s is within " + std::to_string(guard) + " of the pole at " + std::to_string(static_cast<double>(re)));
  }
}

HinfValue HinfZeta::evaluate(ComplexL s, HinfMode mode, double guard) const {
  check_pole_proximity(s, guard);
  HinfValue out = z1(s, mode);
  const ComplexL z0 = Z0_.evaluate_s(s);
  out.value *= z0;
  out.tail_bound *= static_cast<double>(std::abs(z0));
  return out;
}

std::vector<double> HinfZeta::candidate_poles(int depth) const {
  std::vector<double> out{-1.0};
  for (int l = 0; l <= depth; ++l) out.push_back(-(n_ + alpha_ * l) / d_);
  std::sort(out.begin(), out.end(), std::greater<>());
  out.erase(std::unique(out.begin(), out.end(), [](double a, double b) { return std::abs(a - b) < 1e-12; }), out.end());
  return out;
}

std::vector<double> HinfZeta::locate_real_poles(double lo, double hi, double step) const {
  if (!(step > 0) || !(lo < hi)) throw ValidationError("invalid pole scan range");
  auto inv = [&](long double s) {
    long double z = std::abs(evaluate(ComplexL(s, 0), HinfMode::Factored, 0).value);
    return std::isfinite(z) && z != 0 ? 1 / z : 0.0L;
  };
  std::vector<long double> xs, ys;
  for (long k = 0; lo + k * step <= hi + 1e-12; ++k) {
    xs.push_back(lo + k * step);
    ys.push_back(inv(xs.back()));
  }
  std::vector<double> poles;
  const long double phi = (std::sqrt(5.0L) - 1) / 2;
  for (std::size_t k = 1; k + 1 < xs.size(); ++k) {
    if (!(ys[k] <= ys[k - 1] && ys[k] <= ys[k + 1])) continue;
    long double a = xs[k - 1], b = xs[k + 1];
    long double c = b - phi * (b - a), d = a + phi * (b - a);
    long double fc = inv(c), fd = inv(d);
    for (int it = 0; it < 200 && b - a > 1e-13L; ++it) {
      if (fc <= fd) {
        b = d;
        d = c;
        fd = fc;
        c = b - phi * (b - a);
        fc = inv(c);
      } else {
        a = c;
        c = d;
        fc = fd;
        d = a + phi * (b - a);
        fd = inv(d);
      }
    }
    long double x = (a + b) / 2;
    long double scale = std::max(ys[k - 1], ys[k + 1]);
    if (std::min({inv(x), ys[k]}) > 1e-7L * std::max(scale, 1e-300L)) continue;
    if (ys[k] == 0) x = xs[k];
    if (poles.empty() || std::abs(poles.back() - static_cast<double>(x)) > 1e-6) poles.push_back(static_cast<double>(x));
  }
  std::sort(poles.begin(), poles.end(), std::greater<>());
  return poles;
}

}  // namespace ultrazeta
