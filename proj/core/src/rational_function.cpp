#include "ultrazeta/rational_function.hpp"

#include <map>
#include <sstream>

namespace ultrazeta {

namespace {

constexpr double kDivisorLimit = 1e9;

std::vector<Integer> divisors(Integer a) {
  a = abs(a);
  std::vector<Integer> small, large;
  for (Integer d = 1; d * d <= a; ++d) {
    if (a % d != 0) continue;
    small.push_back(d);
    if (d * d != a) large.push_back(a / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::string term_string(const Rational& c, std::size_t k, bool first) {
  std::ostringstream out;
  Rational a = abs(c);
  if (first)
    out << (c < 0 ? "-" : "");
  else
    out << (c < 0 ? " - " : " + ");
  if (k == 0 || a != 1) out << a.get_str();
  if (k > 0) {
    if (a != 1) out << "*";
    out << "t";
    if (k > 1) out << "^" << k;
  }
  return out.str();
}

// A rational root of g (with g(0) = 1), or nullopt.
std::optional<Rational> rational_root(const Poly<Rational>& g) {
  Integer lcm = 1;
  for (const auto& c : g.coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  Integer a0 = Integer(Rational(g[0] * lcm)), ad = Integer(Rational(g.leading() * lcm));
  if (Integer(abs(a0)).get_d() > kDivisorLimit || Integer(abs(ad)).get_d() > kDivisorLimit) return std::nullopt;
  for (const Integer& u : divisors(a0))
    for (const Integer& w : divisors(ad))
      for (int sign : {1, -1}) {
        Rational r(sign * u, w);
        r.canonicalize();
        if (g.evaluate(r) == 0) return r;
      }
  return std::nullopt;
}

}  // namespace

std::string poly_string(const Poly<Rational>& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    if (p[k] == 0) continue;
    out += term_string(p[k], k, first);
    first = false;
  }
  return out;
}

std::string factored_string(const Poly<Rational>& p) {
  if (p.is_zero()) return "0";
  std::size_t k = p.low_order();
  Poly<Rational> g = p.shift_down(k);
  Rational content = g[0];
  g = (Rational(1) / content) * g;
  std::map<std::pair<std::size_t, std::string>, int> factors;
  std::vector<std::pair<std::pair<std::size_t, std::string>, Rational>> order;
  auto add_factor = [&](const Rational& c, std::size_t power) {
    auto key = std::make_pair(power, c.get_str());
    if (factors[key]++ == 0) order.push_back({key, c});
  };
  while (g.degree() > 0) {
    auto r = rational_root(g);
    if (!r) break;
    Rational c = Rational(1) / *r;
    Poly<Rational> lin(std::vector<Rational>{Rational(1), -c});
    g = Poly<Rational>::divmod(g, lin).first;
    add_factor(c, 1);
  }
  if (g.degree() > 0 && g.low_order() == 0) {
    std::size_t nonzero = 0;
    for (const auto& c : g.coeffs()) nonzero += c != 0;
    if (nonzero == 2) {
      add_factor(-g.leading(), static_cast<std::size_t>(g.degree()));
      g = Poly<Rational>::constant(Rational(1));
    }
  }
  std::vector<std::string> parts;
  if (content != 1 || (k == 0 && order.empty() && g.degree() <= 0)) parts.push_back(content.get_str());
  if (k > 0) parts.push_back(k == 1 ? "t" : "t^" + std::to_string(k));
  for (const auto& [key, c] : order) {
    std::string f = "(1" + term_string(-c, key.first, false) + ")";
    int mult = factors[key];
    if (mult > 1) f += "^" + std::to_string(mult);
    parts.push_back(f);
  }
  if (g.degree() > 0) parts.push_back("(" + poly_string(g) + ")");
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " * " : "") + parts[i];
  return out;
}

std::string factored_string(const RationalFunctionT& f) {
  if (f.is_polynomial()) return factored_string(f.num());
  Rational scale = f.den()[f.den().low_order()];
  Poly<Rational> num = (Rational(1) / scale) * f.num(), den = (Rational(1) / scale) * f.den();
  return "[" + factored_string(num) + "] / [" + factored_string(den) + "]";
}

}  // namespace ultrazeta
