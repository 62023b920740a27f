#pragma once

#include <string>
#include <vector>

#include "ultrazeta/grid.hpp"
#include "ultrazeta/polynomial.hpp"

namespace ultrazeta {

// |h(xi)|^exponent
struct Multiplier {
  IntPolynomial symbol;
  Complex exponent;

  std::string label() const;
};

struct CellIntegral {
  Complex value = 0;
  double error = 0;  // certified bound on |computed - exact|
};

// q^{-k} |c|^gamma for a coset c + pi^k R not containing 0, and the closed
// form (1 - 1/q) q^{-k(1+gamma)} / (1 - q^{-1-gamma}) for pi^k R.
Complex power_integral_1d(unsigned q, long k, std::optional<long> ord_c, Complex gamma);

// Integrals of prod_j |h_j|^{beta_j} over every cell of a grid. Monomial
// symbol sets factorize into one-dimensional closed forms; anything else is
// resolved by refining cells until each |h_j| is constant or of Hensel type.
class CellIntegrator {
 public:
  CellIntegrator(GridShape shape, std::vector<Multiplier> multipliers, double tolerance = 1e-15);

  const GridShape& shape() const { return shape_; }
  CellIntegral integrate(std::size_t cell) const;
  // All cells, computed in parallel.
  std::vector<CellIntegral> integrate_all() const;
  std::vector<CellIntegral> integrate_cells(const std::vector<std::size_t>& cells) const;

 private:
  CellIntegral monomial_cell(std::size_t cell) const;
  CellIntegral general_cell(std::size_t cell) const;

  GridShape shape_;
  std::vector<Multiplier> multipliers_;
  double tolerance_;
  bool monomial_ = true;
  Complex constant_factor_ = 1.0;
  std::vector<Complex> axis_exponents_;
};

// Multipliers with equal symbols merged (exponents add); zero exponents dropped.
std::vector<Multiplier> merge_multipliers(std::vector<Multiplier> multipliers);

}  // namespace ultrazeta
