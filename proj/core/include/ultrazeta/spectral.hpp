#pragma once

#include <vector>

#include "ultrazeta/cell_integral.hpp"
#include "ultrazeta/grid.hpp"

namespace ultrazeta {

// Frequency-side object base(xi) * prod_j |h_j(xi)|^{alpha_j}.
class SpectralFunction {
 public:
  SpectralFunction() = default;
  // Fails with DivergentError when some multiplier is not locally integrable
  // on the support of base.
  SpectralFunction(GridFunction base, std::vector<Multiplier> multipliers);

  static SpectralFunction from_space(const GridFunction& g);
  static SpectralFunction from_frequency(GridFunction ghat);

  const GridFunction& base() const { return base_; }
  const std::vector<Multiplier>& multipliers() const { return multipliers_; }
  bool is_plain() const { return multipliers_.empty(); }
  int n() const { return base_.shape().n; }

  SpectralFunction with_multipliers(const std::vector<Multiplier>& extra) const;
  // Multipliers with conjugated exponents: the symbol of the adjoint operator.
  SpectralFunction conjugate_exponents() const;
  // Same object on a finer/larger frequency grid.
  SpectralFunction embed(const GridShape& shape) const;

 private:
  GridFunction base_;
  std::vector<Multiplier> multipliers_;
};

}  // namespace ultrazeta
