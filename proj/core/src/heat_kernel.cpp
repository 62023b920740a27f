#include "ultrazeta/heat_kernel.hpp"

#include <cmath>

#include "ultrazeta/errors.hpp"

namespace ultrazeta {

namespace {

constexpr long double kRelativeTail = 1e-16L;
constexpr long kMaxTerms = 100'000;

}  // namespace

HeatKernel::HeatKernel(FieldSpec field, int n, double t, double alpha) : field_(field), n_(n), t_(t), alpha_(alpha) {
  if (n < 1) throw ValidationError("dimension must be positive");
  if (!(t > 0) || !(alpha > 0)) throw ValidationError("t and alpha must be positive");
}

double HeatKernel::on_sphere(long j) const {
  return std::exp(-t_ * std::pow(static_cast<double>(field_.q()), static_cast<double>(j) * alpha_));
}

HeatNorm HeatKernel::outer(int l) const {
  const long double q = field_.q(), mass = 1 - std::pow(q, -static_cast<long double>(n_));
  HeatNorm out;
  long double acc = 0;
  auto log_term = [&](long j) {
    return static_cast<long double>(j) * (n_ + l) * std::log(q) - 2 * t_ * std::pow(q, static_cast<long double>(j) * alpha_);
  };
  for (long j = 1;; ++j) {
    long double term = mass * std::exp(log_term(j));
    acc += term;
    ++out.terms;
    long double next = mass * std::exp(log_term(j + 1));
    // once terms decay faster than 1/2 per step the remaining sum is at
    // most twice the next term.
    if ((next == 0 || next < 0.5L * term) && 2 * next <= kRelativeTail * std::max(acc, 1e-300L)) {
      out.tail_bound = static_cast<double>(2 * next);
      break;
    }
    if (out.terms > kMaxTerms) throw BudgetExceeded("heat kernel series did not converge");
  }
  out.squared = static_cast<double>(acc);
  return out;
}

HeatNorm HeatKernel::sobolev_norm(int l) const {
  HeatNorm out = outer(l);
  const long double q = field_.q(), mass = 1 - std::pow(q, -static_cast<long double>(n_));
  long double acc = 0;
  // j <= 0: terms at most q^{jn}(1 - q^{-n}); the tail beyond j is q^{jn}.
  for (long j = 0;; --j) {
    acc += mass * std::pow(q, static_cast<long double>(j) * n_) * std::exp(-2 * t_ * std::pow(q, static_cast<long double>(j) * alpha_));
    ++out.terms;
    long double tail = std::pow(q, static_cast<long double>(j - 1) * n_);
    if (tail <= kRelativeTail * (acc + out.squared)) {
      out.tail_bound += static_cast<double>(tail);
      break;
    }
    if (out.terms > kMaxTerms) throw BudgetExceeded("heat kernel series did not converge");
  }
  out.squared += static_cast<double>(acc);
  out.tail_bound /= out.squared;
  out.norm = std::sqrt(out.squared);
  return out;
}

HeatNorm HeatKernel::sobolev_norm_split(int l) const {
  HeatNorm out = outer(l);
  const long double q = field_.q(), mass = 1 - std::pow(q, -static_cast<long double>(n_));
  long double acc = 0, power = 1;  // power = (-2t)^k / k!
  for (int k = 0;; ++k) {
    long double term = power * mass / (1 - std::pow(q, -n_ - alpha_ * k));
    acc += term;
    ++out.terms;
    long double next = std::abs(power) * 2 * t_ / (k + 1);
    // alternating terms with 1/(1 - q^{-n-alpha k}) <= 1/mass: once the
    // factorial dominates, the remainder is below the next bound / mass.
    if (2 * t_ < k + 1 && next / mass <= kRelativeTail * std::abs(acc)) {
      out.tail_bound += static_cast<double>(next / mass);
      break;
    }
    power *= -2 * t_ / (k + 1);
    if (k > 10'000) throw BudgetExceeded("exponential series did not converge");
  }
  out.squared += static_cast<double>(acc);
  out.tail_bound /= out.squared;
  out.norm = std::sqrt(out.squared);
  return out;
}

}  // namespace ultrazeta
