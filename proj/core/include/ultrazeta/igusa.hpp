#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ultrazeta/local_field.hpp"
#include "ultrazeta/pade.hpp"
#include "ultrazeta/polynomial.hpp"
#include "ultrazeta/rational_function.hpp"

namespace ultrazeta {

// c_k = measure of {x in R_K^n : ord f(x) = k}, k = 0..K.
struct ZetaSeries {
  unsigned q = 2;
  std::vector<Rational> coefficients;
  std::size_t classes_visited = 0;

  int truncation() const { return static_cast<int>(coefficients.size()) - 1; }
  Rational partial_sum() const;
};

inline constexpr std::size_t kDefaultIgusaBudget = 4'000'000;

// Exact truncated series of Z(s, f) = int_{R_K^n} |f|^s. Residue classes are
// refined only where neither a constant valuation nor a Hensel lift decides
// ord f on the whole class; `budget` caps the number of classes visited.
ZetaSeries igusa_series(FieldSpec field, const IntPolynomial& f, int K, std::size_t budget = kDefaultIgusaBudget);

// prod_i (1 - 1/q) / (1 - q^{-v_i} t^{N_i}); v defaults to all ones.
RationalFunctionT monomial_zeta_closed(unsigned q, const std::vector<unsigned>& N,
                                       const std::vector<unsigned>& v = {});

// Reduction of f has no singular point on F_q^n \ {0}.
bool strongly_nondegenerate(const IntPolynomial& f, unsigned p);

struct SncForm {
  int n = 0;
  int d = 0;
  RationalFunctionT Z0;          // int over R_K^n \ pi R_K^n of |f|^s
  Poly<Rational> L;              // (1 - q^{-1} t) Z0
  RationalFunctionT Z;           // Z0 / (1 - q^{-n} t^d)
  RationalFunctionT Z_direct;    // reconstructed from the series of Z itself
  std::size_t held_out_Z0 = 0;
  std::size_t held_out_Z = 0;
};

// Requires f homogeneous of degree d with unit coefficients and strongly
// non-degenerate; the series must have at least dn + dd + 2 terms for Z0
// and 2 + d + 3 held-out terms for the direct reconstruction of Z.
SncForm snc_form_Z0(FieldSpec field, const IntPolynomial& f, const ZetaSeries& series, int dn = 1, int dd = 1);

}  // namespace ultrazeta
