#include "ultrazeta/spectral.hpp"

#include "ultrazeta/fourier.hpp"

namespace ultrazeta {

SpectralFunction::SpectralFunction(GridFunction base, std::vector<Multiplier> multipliers)
    : base_(std::move(base)), multipliers_(merge_multipliers(std::move(multipliers))) {
  const GridShape& s = base_.shape();
  for (const auto& m : multipliers_)
    if (m.symbol.n() != s.n) throw ValidationError("multiplier " + m.label() + " has the wrong number of variables");
  // Monomial symbols with negative exponents: every cell on a coordinate
  // hyperplane where base is nonzero needs Re(total exponent) > -1 there.
  for (int i = 0; i < s.n; ++i) {
    double total = 0;
    std::string names;
    bool monomial = true;
    for (const auto& m : multipliers_) {
      if (!m.symbol.is_monomial()) {
        monomial = false;
        break;
      }
      unsigned a = m.symbol.monomial_exponent()[static_cast<std::size_t>(i)];
      total += a * m.exponent.real();
      if (a > 0 && m.exponent.real() < 0) names += (names.empty() ? "" : ", ") + m.label();
    }
    if (!monomial || total > -1.0) continue;
    for (std::size_t c = 0; c < base_.size(); ++c) {
      if (base_[c] == Complex(0) || !s.cell_contains_origin_axis(c, i)) continue;
      throw DivergentError("multiplier " + names + " is not locally integrable near xi_" + std::to_string(i + 1) + " = 0");
    }
  }
}

SpectralFunction SpectralFunction::from_space(const GridFunction& g) { return SpectralFunction(fourier_transform(g), {}); }

SpectralFunction SpectralFunction::from_frequency(GridFunction ghat) { return SpectralFunction(std::move(ghat), {}); }

SpectralFunction SpectralFunction::with_multipliers(const std::vector<Multiplier>& extra) const {
  std::vector<Multiplier> all = multipliers_;
  all.insert(all.end(), extra.begin(), extra.end());
  return SpectralFunction(base_, std::move(all));
}

SpectralFunction SpectralFunction::conjugate_exponents() const {
  std::vector<Multiplier> conj = multipliers_;
  for (auto& m : conj) m.exponent = std::conj(m.exponent);
  return SpectralFunction(base_, std::move(conj));
}

SpectralFunction SpectralFunction::embed(const GridShape& shape) const {
  SpectralFunction out = *this;
  out.base_ = base_.embed(shape);
  return out;
}

}  // namespace ultrazeta
