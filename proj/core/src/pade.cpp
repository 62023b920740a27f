#include "ultrazeta/pade.hpp"

namespace ultrazeta {

std::vector<std::vector<Rational>> nullspace(std::vector<std::vector<Rational>> rows, std::size_t cols) {
  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    Rational inv = Rational(1) / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rational f = rows[i][c];
      for (std::size_t k = 0; k < cols; ++k) rows[i][k] -= f * rows[r][k];
    }
    pivot_col.push_back(static_cast<int>(c));
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) v[static_cast<std::size_t>(pivot_col[i])] = -rows[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

ReconstructionReport reconstruct_from_series(const std::vector<Rational>& series, int dn, int dd, unsigned q,
                                             std::size_t verify) {
  if (dn < 0 || dd < 0) throw ValidationError("degree bounds must be non-negative");
  const std::size_t fit = static_cast<std::size_t>(dn + dd + 1);
  if (series.size() < fit + 1)
    throw ValidationError("need at least dn + dd + 2 series terms, got " + std::to_string(series.size()));
  auto c = [&](long i) { return i < 0 ? Rational(0) : series[static_cast<std::size_t>(i)]; };

  // Denominator b_0..b_dd: sum_i b_i c_{M-i} = 0 for M = dn+1..dn+dd.
  std::vector<std::vector<Rational>> rows;
  for (int M = dn + 1; M <= dn + dd; ++M) {
    std::vector<Rational> row(static_cast<std::size_t>(dd + 1));
    for (int i = 0; i <= dd; ++i) row[static_cast<std::size_t>(i)] = c(M - i);
    rows.push_back(std::move(row));
  }
  std::vector<Rational> b;
  if (dd == 0) {
    b = {Rational(1)};
  } else {
    for (auto& v : nullspace(rows, static_cast<std::size_t>(dd + 1)))
      if (v[0] != 0) {
        b = v;
        break;
      }
  }
  if (b.empty()) throw AmbiguousSolution("Pade system is degenerate: every solution has Q(0) = 0");
  Poly<Rational> Q(b);
  std::vector<Rational> a(static_cast<std::size_t>(dn + 1), Rational(0));
  for (int k = 0; k <= dn; ++k)
    for (int i = 0; i <= std::min(k, dd); ++i) a[static_cast<std::size_t>(k)] += b[static_cast<std::size_t>(i)] * c(k - i);
  Poly<Rational> P(a);

  const std::size_t held = std::min(verify == 0 ? std::size_t{1} : verify, series.size() - fit);
  auto check = P.series_over(Q, fit + held);
  for (std::size_t i = 0; i < fit; ++i)
    if (check[i] != series[i]) throw AmbiguousSolution("Pade fit does not reproduce the fitted terms");
  for (std::size_t i = fit; i < fit + held; ++i)
    if (check[i] != series[i])
      throw NoSolution("no rational function with degrees (" + std::to_string(dn) + ", " + std::to_string(dd) +
                       ") matches the series (term " + std::to_string(i) + " disagrees)");
  return {RationalFunctionT(P, Q, q), fit, held};
}

}  // namespace ultrazeta
