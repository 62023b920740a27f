#pragma once

#include <algorithm>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "ultrazeta/errors.hpp"
#include "ultrazeta/rational.hpp"

namespace ultrazeta {

template <class C>
inline constexpr bool is_exact_v = std::is_same_v<C, Rational>;

// Dense univariate polynomial in t; c[i] is the coefficient of t^i.
template <class C>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<C> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Poly constant(const C& c) { return Poly(std::vector<C>{c}); }
  static Poly monomial(const C& c, std::size_t degree) {
    std::vector<C> v(degree + 1, C(0));
    v[degree] = c;
    return Poly(std::move(v));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<C>& coeffs() const { return c_; }
  C operator[](std::size_t i) const { return i < c_.size() ? c_[i] : C(0); }
  const C& leading() const { return c_.back(); }
  // Index of the lowest nonzero coefficient.
  std::size_t low_order() const {
    std::size_t i = 0;
    while (i < c_.size() && c_[i] == C(0)) ++i;
    return i;
  }

  template <class X>
  X evaluate(const X& x) const {
    X acc = X(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + convert<X>(c_[i]);
    return acc;
  }

  // Coefficients of p(t0 + u) as a polynomial in u.
  Poly taylor_shift(const C& t0) const {
    std::vector<C> a(c_);
    const std::size_t n = a.size();
    for (std::size_t k = 0; k + 1 < n; ++k)
      for (std::size_t i = n - 1; i > k; --i) a[i - 1] += t0 * a[i];
    return Poly(std::move(a));
  }

  // p(t) / t^k for k <= low_order().
  Poly shift_down(std::size_t k) const {
    if (k > c_.size()) return Poly();
    return Poly(std::vector<C>(c_.begin() + static_cast<long>(k), c_.end()));
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<C> r(std::max(a.c_.size(), b.c_.size()), C(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return Poly(std::move(r));
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<C> r(a.c_.size() + b.c_.size() - 1, C(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(r));
  }
  friend Poly operator*(const C& s, const Poly& a) {
    Poly r = a;
    for (auto& x : r.c_) x *= s;
    r.trim();
    return r;
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  // Euclidean division a = q b + r with deg r < deg b.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    std::vector<C> r(a.c_);
    if (a.degree() < b.degree()) return {Poly(), a};
    std::vector<C> q(static_cast<std::size_t>(a.degree() - b.degree() + 1), C(0));
    for (int i = a.degree() - b.degree(); i >= 0; --i) {
      C f = r[static_cast<std::size_t>(i + b.degree())] / b.leading();
      q[static_cast<std::size_t>(i)] = f;
      for (int j = 0; j <= b.degree(); ++j) r[static_cast<std::size_t>(i + j)] -= f * b.c_[static_cast<std::size_t>(j)];
      r[static_cast<std::size_t>(i + b.degree())] = C(0);
    }
    r.resize(static_cast<std::size_t>(std::max(b.degree(), 0)));
    return {Poly(std::move(q)), Poly(std::move(r))};
  }

  Poly monic() const {
    if (is_zero()) return *this;
    return (C(1) / leading()) * *this;
  }

  // First n power-series coefficients of this / den; den(0) must be nonzero.
  std::vector<C> series_over(const Poly& den, std::size_t n) const {
    if (den.is_zero() || den[0] == C(0)) throw DivisionByZero("power series of a function with a pole at t = 0");
    std::vector<C> out(n, C(0));
    const C inv0 = C(1) / den[0];
    for (std::size_t k = 0; k < n; ++k) {
      C acc = (*this)[k];
      for (std::size_t j = 1; j <= k && j < den.c_.size(); ++j) acc -= den.c_[j] * out[k - j];
      out[k] = acc * inv0;
    }
    return out;
  }

  template <class X>
  static X convert(const C& c) {
    if constexpr (std::is_same_v<C, Rational> && !std::is_same_v<X, Rational>) {
      return X(to_long_double(c));
    } else {
      return X(c);
    }
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == C(0)) c_.pop_back();
  }

  std::vector<C> c_;
};

template <class C>
Poly<C> poly_gcd(Poly<C> a, Poly<C> b) {
  static_assert(is_exact_v<C>, "gcd needs exact coefficients");
  while (!b.is_zero()) {
    auto r = Poly<C>::divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

// num(t)/den(t) with t = q^{-s}. The denominator is monic; exact
// coefficients are kept gcd-reduced, complex ones only have common powers
// of t cancelled.
template <class C>
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(Poly<C>::constant(C(1))) {}
  RationalFunction(Poly<C> num, Poly<C> den, unsigned q) : num_(std::move(num)), den_(std::move(den)), q_(q) {
    normalize();
  }
  static RationalFunction polynomial(Poly<C> p, unsigned q) { return RationalFunction(std::move(p), Poly<C>::constant(C(1)), q); }
  static RationalFunction constant(const C& c, unsigned q) { return polynomial(Poly<C>::constant(c), q); }

  const Poly<C>& num() const { return num_; }
  const Poly<C>& den() const { return den_; }
  unsigned q() const { return q_; }
  bool is_polynomial() const { return den_.degree() == 0; }
  bool is_zero() const { return num_.is_zero(); }

  template <class X>
  X evaluate_t(const X& t) const {
    return num_.evaluate(t) / den_.evaluate(t);
  }
  ComplexL evaluate_s(ComplexL s) const { return evaluate_t(q_pow_complex(q_, -s)); }

  std::vector<C> series(std::size_t n) const { return num_.series_over(den_, n); }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    check_q(a, b);
    if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_, a.q_);
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_, a.q_);
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return a + RationalFunction(-b.num_, b.den_, b.q_);
  }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    check_q(a, b);
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_, a.q_);
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    check_q(a, b);
    if (b.is_zero()) throw DivisionByZero("division by the zero rational function");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_, a.q_);
  }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.q_ == b.q_ && a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  static void check_q(const RationalFunction& a, const RationalFunction& b) {
    if (a.q_ != b.q_) throw ValidationError("rational functions encode different q");
  }

  void normalize() {
    if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
    if (num_.is_zero()) {
      den_ = Poly<C>::constant(C(1));
      return;
    }
    std::size_t k = std::min(num_.low_order(), den_.low_order());
    if (k > 0) {
      num_ = num_.shift_down(k);
      den_ = den_.shift_down(k);
    }
    if constexpr (is_exact_v<C>) {
      Poly<C> g = poly_gcd(num_, den_);
      if (g.degree() > 0) {
        num_ = Poly<C>::divmod(num_, g).first;
        den_ = Poly<C>::divmod(den_, g).first;
      }
    }
    C lead = den_.leading();
    num_ = (C(1) / lead) * num_;
    den_ = (C(1) / lead) * den_;
  }

  Poly<C> num_;
  Poly<C> den_;
  unsigned q_ = 2;
};

using RationalFunctionT = RationalFunction<Rational>;
using ComplexRationalFunction = RationalFunction<ComplexL>;

ComplexRationalFunction to_complex(const RationalFunctionT& f);

// (1 - q^{-v} t^N)
Poly<Rational> geometric_denominator(unsigned q, long v, unsigned N);

// Human-readable product form: content, powers of t, factors (1 - c t^k)
// found from rational roots and binomials, and any irreducible remainder.
std::string factored_string(const Poly<Rational>& p);
std::string factored_string(const RationalFunctionT& f);
std::string poly_string(const Poly<Rational>& p);

}  // namespace ultrazeta
