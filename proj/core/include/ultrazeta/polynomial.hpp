#pragma once

#include <map>
#include <string>
#include <vector>

#include "ultrazeta/rational.hpp"

namespace ultrazeta {

using Exponent = std::vector<unsigned>;

// Multivariate polynomial with integer coefficients in x1..xn.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(int n) : n_(n) {}

  // Grammar: terms separated by '+'/'-'; a term is an integer coefficient,
  // a product of factors var('^'int)?, or coeff '*'? followed by factors.
  // Variables are x1..xn. When n is 0 it is inferred from the largest index.
  static IntPolynomial parse(const std::string& text, int n = 0);
  static IntPolynomial monomial(const Exponent& e, const Integer& coeff = 1);
  static IntPolynomial variable(int n, int index);

  int n() const { return n_; }
  const std::map<Exponent, Integer>& terms() const { return terms_; }
  void add_term(const Exponent& e, const Integer& c);

  unsigned degree() const;
  bool is_constant() const;
  bool is_zero() const { return terms_.empty(); }
  bool is_homogeneous() const;
  bool is_monomial() const { return terms_.size() == 1; }
  // Exponent vector of a single-term polynomial.
  const Exponent& monomial_exponent() const;

  // D^beta with D^beta x^a = prod C(a_i, beta_i) x^{a - beta}.
  IntPolynomial hasse_derivative(const Exponent& beta) const;
  Integer evaluate(const std::vector<Integer>& x) const;
  // Value mod p at a point of F_p^n.
  unsigned evaluate_mod(const std::vector<unsigned>& x, unsigned p) const;

  std::string to_string() const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;
  friend bool operator<(const IntPolynomial& a, const IntPolynomial& b) {
    return a.n_ != b.n_ ? a.n_ < b.n_ : a.terms_ < b.terms_;
  }

 private:
  int n_ = 0;
  std::map<Exponent, Integer> terms_;
};

// All exponent vectors beta with 1 <= |beta| <= max_degree in n variables.
std::vector<Exponent> derivative_multi_indices(int n, unsigned max_degree);

}  // namespace ultrazeta
