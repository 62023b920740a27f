#include "ultrazeta/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "ultrazeta/errors.hpp"

namespace ultrazeta {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  IntPolynomial run(int n) {
    std::vector<std::pair<std::map<int, unsigned>, Integer>> terms;
    int max_var = 0;
    skip();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [factors, coeff] = term();
      for (auto& [v, e] : factors) max_var = std::max(max_var, v);
      terms.emplace_back(std::move(factors), sign * coeff);
      skip();
    }
    if (n == 0) n = std::max(max_var, 1);
    if (max_var > n) fail("variable x" + std::to_string(max_var) + " exceeds dimension " + std::to_string(n));
    IntPolynomial poly(n);
    for (auto& [factors, coeff] : terms) {
      Exponent e(n, 0);
      for (auto& [v, k] : factors) e[v - 1] += k;
      poly.add_term(e, coeff);
    }
    return poly;
  }

 private:
  std::pair<std::map<int, unsigned>, Integer> term() {
    Integer coeff = 1;
    std::map<int, unsigned> factors;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = integer();
      have_coeff = true;
      skip();
      if (peek() == '*') {
        ++pos_;
        skip();
        if (peek() != 'x') fail("expected variable after '*'");
      }
    }
    while (peek() == 'x') {
      auto [v, e] = factor();
      factors[v] += e;
      skip();
      if (peek() == '*') {
        ++pos_;
        skip();
        if (peek() != 'x') fail("expected variable after '*'");
      }
    }
    if (!have_coeff && factors.empty()) fail("expected coefficient or variable");
    return {factors, coeff};
  }

  std::pair<int, unsigned> factor() {
    ++pos_;  // 'x'
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected variable index after 'x'");
    Integer idx = integer();
    if (idx < 1 || idx > 64) fail("variable index out of range");
    unsigned e = 1;
    skip();
    if (peek() == '^') {
      ++pos_;
      skip();
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent after '^'");
      Integer k = integer();
      if (k > 1000) fail("exponent too large");
      e = static_cast<unsigned>(k.get_ui());
    }
    return {static_cast<int>(idx.get_si()), e};
  }

  Integer integer() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return Integer(text_.substr(start, pos_ - start));
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  [[noreturn]] void fail(const std::string& what) const {
    throw ValidationError("malformed polynomial '" + text_ + "' at position " + std::to_string(pos_) + ": " + what);
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

Integer binomial(unsigned a, unsigned b) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), a, b);
  return r;
}

}  // namespace

IntPolynomial IntPolynomial::parse(const std::string& text, int n) { return Parser(text).run(n); }

IntPolynomial IntPolynomial::monomial(const Exponent& e, const Integer& coeff) {
  IntPolynomial p(static_cast<int>(e.size()));
  p.add_term(e, coeff);
  return p;
}

IntPolynomial IntPolynomial::variable(int n, int index) {
  Exponent e(n, 0);
  e[index] = 1;
  return monomial(e);
}

void IntPolynomial::add_term(const Exponent& e, const Integer& c) {
  if (static_cast<int>(e.size()) != n_) throw ValidationError("exponent length does not match dimension");
  if (c == 0) return;
  Integer& slot = terms_[e];
  slot += c;
  if (slot == 0) terms_.erase(e);
}

unsigned IntPolynomial::degree() const {
  unsigned d = 0;
  for (auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0U));
  return d;
}

bool IntPolynomial::is_constant() const { return degree() == 0; }

bool IntPolynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  unsigned d = degree();
  for (auto& [e, c] : terms_)
    if (std::accumulate(e.begin(), e.end(), 0U) != d) return false;
  return true;
}

const Exponent& IntPolynomial::monomial_exponent() const {
  if (!is_monomial()) throw UnsupportedError("polynomial " + to_string() + " is not a monomial");
  return terms_.begin()->first;
}

IntPolynomial IntPolynomial::hasse_derivative(const Exponent& beta) const {
  IntPolynomial out(n_);
  for (auto& [e, c] : terms_) {
    Exponent r(e);
    Integer factor = c;
    bool vanish = false;
    for (int i = 0; i < n_; ++i) {
      if (e[i] < beta[i]) {
        vanish = true;
        break;
      }
      factor *= binomial(e[i], beta[i]);
      r[i] = e[i] - beta[i];
    }
    if (!vanish) out.add_term(r, factor);
  }
  return out;
}

Integer IntPolynomial::evaluate(const std::vector<Integer>& x) const {
  Integer total = 0;
  for (auto& [e, c] : terms_) {
    Integer t = c;
    for (int i = 0; i < n_; ++i) {
      Integer pw;
      mpz_pow_ui(pw.get_mpz_t(), x[i].get_mpz_t(), e[i]);
      t *= pw;
    }
    total += t;
  }
  return total;
}

unsigned IntPolynomial::evaluate_mod(const std::vector<unsigned>& x, unsigned p) const {
  unsigned long total = 0;
  for (auto& [e, c] : terms_) {
    unsigned long t = mpz_fdiv_ui(c.get_mpz_t(), p);
    for (int i = 0; i < n_; ++i)
      for (unsigned k = 0; k < e[i]; ++k) t = t * x[i] % p;
    total = (total + t) % p;
  }
  return static_cast<unsigned>(total);
}

std::string IntPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Integer a = abs(c);
    out << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    bool constant = std::accumulate(e.begin(), e.end(), 0U) == 0;
    bool wrote = false;
    if (a != 1 || constant) {
      out << a.get_str();
      wrote = true;
    }
    for (int i = 0; i < n_; ++i) {
      if (e[i] == 0) continue;
      out << (wrote ? "*" : "") << "x" << i + 1;
      if (e[i] > 1) out << "^" << e[i];
      wrote = true;
    }
    first = false;
  }
  return out.str();
}

std::vector<Exponent> derivative_multi_indices(int n, unsigned max_degree) {
  std::vector<Exponent> out;
  Exponent e(n, 0);
  // Enumerate all exponent vectors with entries <= max_degree, keep |e| in range.
  while (true) {
    unsigned s = std::accumulate(e.begin(), e.end(), 0U);
    if (s >= 1 && s <= max_degree) out.push_back(e);
    int i = 0;
    while (i < n && e[i] == max_degree) e[i++] = 0;
    if (i == n) break;
    ++e[i];
  }
  std::stable_sort(out.begin(), out.end(), [](const Exponent& a, const Exponent& b) {
    return std::accumulate(a.begin(), a.end(), 0U) < std::accumulate(b.begin(), b.end(), 0U);
  });
  return out;
}

}  // namespace ultrazeta
