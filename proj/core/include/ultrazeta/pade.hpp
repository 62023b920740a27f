#pragma once

#include <vector>

#include "ultrazeta/rational_function.hpp"

namespace ultrazeta {

struct ReconstructionReport {
  RationalFunctionT function;
  std::size_t fitted_terms = 0;
  std::size_t verified_terms = 0;
};

// Rational function with deg num <= dn and deg den <= dd whose expansion
// matches series. Terms c_0..c_{dn+dd} determine the fit and up to
// `verify` further terms (at least one) are checked against it.
// NoSolution: the held-out terms disagree. AmbiguousSolution: the Pade
// system is degenerate (the fit does not reproduce its own terms, or every
// solution vanishes at t = 0).
ReconstructionReport reconstruct_from_series(const std::vector<Rational>& series, int dn, int dd, unsigned q,
                                             std::size_t verify = 5);

// Basis of the right nullspace of an exact matrix.
std::vector<std::vector<Rational>> nullspace(std::vector<std::vector<Rational>> rows, std::size_t cols);

}  // namespace ultrazeta
