#include "ultrazeta/cell_integral.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "ultrazeta/parallel.hpp"

namespace ultrazeta {

namespace {

Complex q_power(unsigned q, Complex e) { return std::exp(e * std::log(static_cast<double>(q))); }

constexpr long kExtraLevels = 60;

}  // namespace

std::string Multiplier::label() const {
  std::string s = "|" + symbol.to_string() + "|^(" + std::to_string(exponent.real());
  if (exponent.imag() != 0) s += (exponent.imag() < 0 ? "-" : "+") + std::to_string(std::abs(exponent.imag())) + "i";
  return s + ")";
}

Complex power_integral_1d(unsigned q, long k, std::optional<long> ord_c, Complex gamma) {
  const double dq = static_cast<double>(q);
  if (ord_c) return std::pow(dq, -static_cast<double>(k)) * q_power(q, -gamma * static_cast<double>(*ord_c));
  if (gamma == Complex(0)) return std::pow(dq, -static_cast<double>(k));
  if (gamma.real() <= -1.0) throw DivergentError("integral of |x|^gamma diverges at 0 for Re(gamma) <= -1");
  return (1.0 - 1.0 / dq) * q_power(q, -static_cast<double>(k) * (1.0 + gamma)) / (1.0 - q_power(q, -1.0 - gamma));
}

std::vector<Multiplier> merge_multipliers(std::vector<Multiplier> multipliers) {
  std::map<IntPolynomial, Complex> acc;
  std::vector<IntPolynomial> order;
  for (auto& m : multipliers) {
    if (m.symbol.is_constant()) throw ValidationError("multiplier symbol must be nonconstant");
    if (!acc.count(m.symbol)) order.push_back(m.symbol);
    acc[m.symbol] += m.exponent;
  }
  std::vector<Multiplier> out;
  for (auto& s : order)
    if (acc[s] != Complex(0)) out.push_back({s, acc[s]});
  return out;
}

CellIntegrator::CellIntegrator(GridShape shape, std::vector<Multiplier> multipliers, double tolerance)
    : shape_(shape), multipliers_(merge_multipliers(std::move(multipliers))), tolerance_(tolerance) {
  axis_exponents_.assign(static_cast<std::size_t>(shape_.n), 0.0);
  for (const auto& m : multipliers_) {
    if (m.symbol.n() != shape_.n) throw ValidationError("multiplier " + m.label() + " has the wrong number of variables");
    if (!m.symbol.is_monomial()) {
      monomial_ = false;
      continue;
    }
    const auto& [e, c] = *m.symbol.terms().begin();
    Integer coeff = c;
    if (shape_.field.kind == FieldKind::LaurentFp) {
      if (mpz_fdiv_ui(coeff.get_mpz_t(), shape_.field.p) == 0) throw ValidationError("multiplier " + m.label() + " vanishes over F_p((T))");
    } else {
      constant_factor_ *= q_power(shape_.field.q(), -m.exponent * static_cast<double>(*ord_p(coeff, shape_.field.p)));
    }
    for (int i = 0; i < shape_.n; ++i) axis_exponents_[static_cast<std::size_t>(i)] += static_cast<double>(e[static_cast<std::size_t>(i)]) * m.exponent;
  }
}

CellIntegral CellIntegrator::integrate(std::size_t cell) const {
  if (multipliers_.empty()) return {shape_.cell_volume_d(), 0.0};
  return monomial_ ? monomial_cell(cell) : general_cell(cell);
}

std::vector<CellIntegral> CellIntegrator::integrate_all() const {
  return parallel_map<CellIntegral>(shape_.size(), [&](std::size_t i) { return integrate(i); });
}

std::vector<CellIntegral> CellIntegrator::integrate_cells(const std::vector<std::size_t>& cells) const {
  return parallel_map<CellIntegral>(cells.size(), [&](std::size_t i) { return integrate(cells[i]); });
}

CellIntegral CellIntegrator::monomial_cell(std::size_t cell) const {
  Complex value = constant_factor_;
  auto axes = shape_.axis_indices(cell);
  for (std::size_t i = 0; i < axes.size(); ++i) {
    try {
      value *= power_integral_1d(shape_.field.q(), shape_.m, shape_.axis_ord(axes[i]), axis_exponents_[i]);
    } catch (const DivergentError&) {
      std::string names;
      for (const auto& m : multipliers_) {
        if (m.symbol.monomial_exponent()[i] == 0 || m.exponent.real() >= 0) continue;
        names += (names.empty() ? "" : ", ") + m.label();
      }
      throw DivergentError("multiplier " + names + " is not integrable near xi_" + std::to_string(i + 1) + " = 0");
    }
  }
  return {value, 0.0};
}

CellIntegral CellIntegrator::general_cell(std::size_t cell) const {
  const unsigned q = shape_.field.q();
  const double dq = static_cast<double>(q);
  std::vector<TaylorData> data;
  data.reserve(multipliers_.size());
  for (const auto& m : multipliers_) data.emplace_back(m.symbol);
  const long cap = static_cast<long>(shape_.n) * shape_.m + kExtraLevels;

  CellIntegral out;
  std::vector<Box> stack{shape_.cell_box(cell)};
  while (!stack.empty()) {
    Box box = std::move(stack.back());
    stack.pop_back();
    const double vol = std::pow(dq, -static_cast<double>(box_level_sum(box)));
    Complex factor = 1.0;
    double bound = 1.0;
    bool bounded = true;
    int hensel = -1;
    long hensel_order = 0;
    int split_var = -1;
    std::string unbounded;
    for (std::size_t j = 0; j < multipliers_.size(); ++j) {
      const Complex beta = multipliers_[j].exponent;
      BoxClass cls = classify_box(data[j], box);
      if (cls.status == BoxStatus::Constant) {
        Complex f = q_power(q, -beta * static_cast<double>(cls.order));
        factor *= f;
        bound *= std::abs(f);
        continue;
      }
      if (cls.status == BoxStatus::Hensel && hensel < 0) {
        hensel = static_cast<int>(j);
        hensel_order = cls.order;
      } else if (split_var < 0) {
        split_var = cls.split_var;
      }
      if (beta.real() >= 0) {
        bound *= std::pow(dq, -beta.real() * static_cast<double>(cls.lower_bound));
      } else {
        bounded = false;
        unbounded = multipliers_[j].label();
      }
    }
    if (split_var < 0) {
      Complex v = vol * factor;
      if (hensel >= 0) {
        const Complex beta = multipliers_[static_cast<std::size_t>(hensel)].exponent;
        if (beta.real() <= -1.0)
          throw DivergentError("multiplier " + multipliers_[static_cast<std::size_t>(hensel)].label() + " is not integrable near its zero set");
        v *= q_power(q, -beta * static_cast<double>(hensel_order)) * (1.0 - 1.0 / dq) / (1.0 - q_power(q, -1.0 - beta));
      }
      out.value += v;
      continue;
    }
    if (bounded && vol * bound < tolerance_) {
      out.error += vol * bound;
      continue;
    }
    if (box_level_sum(box) >= cap) {
      if (!bounded) throw DivergentError("multiplier " + unbounded + " could not be certified integrable near its zero set");
      out.error += vol * bound;
      continue;
    }
    for (auto& child : split_box(box, split_var)) stack.push_back(std::move(child));
  }
  return out;
}

}  // namespace ultrazeta
