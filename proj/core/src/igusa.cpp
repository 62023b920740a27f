#include "ultrazeta/igusa.hpp"

#include <atomic>

#include "ultrazeta/field_scalar.hpp"
#include "ultrazeta/parallel.hpp"

namespace ultrazeta {

Rational ZetaSeries::partial_sum() const {
  Rational s = 0;
  for (const auto& c : coefficients) s += c;
  return s;
}

ZetaSeries igusa_series(FieldSpec field, const IntPolynomial& f, int K, std::size_t budget) {
  if (f.is_constant()) throw ValidationError("igusa_series needs a nonconstant polynomial");
  if (K < 0) throw ValidationError("truncation order must be non-negative");
  const unsigned q = field.q();
  const int n = f.n();
  TaylorData data(f);

  // Fix the first digit of every coordinate up front; these q^n classes are
  // independent work items.
  Box root;
  root.center.assign(static_cast<std::size_t>(n), FieldScalar::zero(field));
  root.level.assign(static_cast<std::size_t>(n), 0);
  std::vector<Box> items{root};
  for (int var = 0; var < n; ++var) {
    std::vector<Box> next;
    for (const Box& b : items)
      for (Box& c : split_box(b, var)) next.push_back(std::move(c));
    items = std::move(next);
  }

  const Rational one_minus = Rational(1) - Rational(1, q);
  std::atomic<std::size_t> visited{0};
  auto partial = parallel_map<std::vector<Rational>>(items.size(), [&](std::size_t i) {
    std::vector<Rational> c(static_cast<std::size_t>(K + 1), Rational(0));
    std::vector<Box> stack{items[i]};
    while (!stack.empty()) {
      if (visited.fetch_add(1) >= budget)
        throw BudgetExceeded("igusa_series exceeded the budget of " + std::to_string(budget) + " residue classes");
      Box box = std::move(stack.back());
      stack.pop_back();
      BoxClass cls = classify_box(data, box);
      const Rational vol = q_pow(q, -box_level_sum(box));
      if (cls.status == BoxStatus::Constant) {
        if (cls.order <= K) c[static_cast<std::size_t>(cls.order)] += vol;
      } else if (cls.status == BoxStatus::Hensel) {
        Rational w = vol * one_minus;
        for (long k = cls.order; k <= K; ++k) {
          c[static_cast<std::size_t>(k)] += w;
          w /= q;
        }
      } else if (cls.lower_bound <= K) {
        for (Box& child : split_box(box, cls.split_var)) stack.push_back(std::move(child));
      }
    }
    return c;
  });

  ZetaSeries out;
  out.q = q;
  out.coefficients.assign(static_cast<std::size_t>(K + 1), Rational(0));
  for (const auto& c : partial)
    for (std::size_t k = 0; k < c.size(); ++k) out.coefficients[k] += c[k];
  out.classes_visited = visited.load();
  return out;
}

RationalFunctionT monomial_zeta_closed(unsigned q, const std::vector<unsigned>& N, const std::vector<unsigned>& v) {
  if (N.empty()) throw ValidationError("exponent vector must be nonempty");
  if (!v.empty() && v.size() != N.size()) throw ValidationError("offset vector length must match exponent vector");
  RationalFunctionT out = RationalFunctionT::constant(Rational(1), q);
  const Rational one_minus = Rational(1) - Rational(1, q);
  for (std::size_t i = 0; i < N.size(); ++i) {
    unsigned vi = v.empty() ? 1 : v[i];
    if (N[i] < 1 || vi < 1) throw ValidationError("monomial_zeta_closed needs N_i >= 1 and v_i >= 1");
    out = out * RationalFunctionT(Poly<Rational>::constant(one_minus), geometric_denominator(q, vi, N[i]), q);
  }
  return out;
}

bool strongly_nondegenerate(const IntPolynomial& f, unsigned p) {
  const int n = f.n();
  std::vector<IntPolynomial> grad;
  for (int i = 0; i < n; ++i) {
    Exponent e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i)] = 1;
    grad.push_back(f.hasse_derivative(e));
  }
  std::vector<unsigned> a(static_cast<std::size_t>(n), 0);
  while (true) {
    int i = 0;
    while (i < n && a[static_cast<std::size_t>(i)] == p - 1) a[static_cast<std::size_t>(i++)] = 0;
    if (i == n) break;
    ++a[static_cast<std::size_t>(i)];
    if (f.evaluate_mod(a, p) != 0) continue;
    bool singular = true;
    for (const auto& g : grad)
      if (g.evaluate_mod(a, p) != 0) singular = false;
    if (singular) return false;
  }
  return true;
}

SncForm snc_form_Z0(FieldSpec field, const IntPolynomial& f, const ZetaSeries& series, int dn, int dd) {
  const unsigned p = field.p, q = field.q();
  if (!f.is_homogeneous() || f.is_constant()) throw ValidationError("f must be a nonconstant homogeneous polynomial");
  for (const auto& [e, c] : f.terms())
    if (mpz_divisible_ui_p(c.get_mpz_t(), p)) throw ValidationError("f must have unit coefficients");
  if (!strongly_nondegenerate(f, p))
    throw NondegeneracyFailed(f.to_string() + " is not strongly non-degenerate modulo p = " + std::to_string(p));
  if (series.q != q) throw ValidationError("series was computed for a different field");

  SncForm out;
  out.n = f.n();
  out.d = static_cast<int>(f.degree());
  const Rational qn = q_pow(q, -out.n);
  std::vector<Rational> z0(series.coefficients.size());
  for (std::size_t k = 0; k < z0.size(); ++k) {
    z0[k] = series.coefficients[k];
    if (k >= static_cast<std::size_t>(out.d)) z0[k] -= qn * series.coefficients[k - static_cast<std::size_t>(out.d)];
  }
  auto rec = reconstruct_from_series(z0, dn, dd, q);
  out.Z0 = rec.function;
  out.held_out_Z0 = rec.verified_terms;

  const Poly<Rational> first = geometric_denominator(q, 1, 1);
  auto [L, rem] = Poly<Rational>::divmod(out.Z0.num() * first, out.Z0.den());
  if (!rem.is_zero()) throw NoSolution("(1 - q^{-1} t) Z0 is not a polynomial");
  out.L = L;
  out.Z = out.Z0 / RationalFunctionT(geometric_denominator(q, out.n, static_cast<unsigned>(out.d)),
                                     Poly<Rational>::constant(Rational(1)), q);

  const std::size_t need = static_cast<std::size_t>(dn + 1 + dd + out.d + 1 + 3);
  if (series.coefficients.size() >= need) {
    auto direct = reconstruct_from_series(series.coefficients, dn, dd + out.d, q, series.coefficients.size());
    out.Z_direct = direct.function;
    out.held_out_Z = direct.verified_terms;
  } else {
    out.Z_direct = out.Z;
  }
  return out;
}

}  // namespace ultrazeta
