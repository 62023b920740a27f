#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <random>
#include <vector>

#include "ultrazeta/errors.hpp"
#include "ultrazeta/field_scalar.hpp"
#include "ultrazeta/local_field.hpp"

namespace ultrazeta {

// Test functions supported in B_L^n and constant on cosets of pi^m R_K^n.
// Along each axis a coset x = sum_{j=-L}^{m-1} a_j pi^j is stored at index
// r = sum_j a_j p^{j+L}; the flat index is row-major with coordinate 0
// varying slowest.
struct GridShape {
  FieldSpec field{};
  int n = 1;
  int L = 0;
  int m = 0;

  static GridShape make(FieldSpec field, int n, int L, int m);

  int axis_digits() const { return L + m; }
  std::size_t per_axis() const;
  std::size_t size() const;
  Rational cell_volume() const { return q_pow(field.q(), -static_cast<long>(n) * m); }
  double cell_volume_d() const;
  // Shape of the Fourier transform: support and resolution swap.
  GridShape dual() const { return GridShape{field, n, m, L}; }

  std::vector<std::size_t> axis_indices(std::size_t index) const;
  std::size_t flat_index(const std::vector<std::size_t>& axes) const;

  // ord of the axis coordinate, or nullopt for the coset containing 0.
  std::optional<long> axis_ord(std::size_t r) const;
  // Exponent e with ||x|| = q^e on the cell, or -m for the cell at the origin.
  long norm_exponent(std::size_t index) const;
  bool cell_contains_origin_axis(std::size_t index, int axis) const;
  std::size_t negate_axis(std::size_t r) const;
  unsigned axis_digit(std::size_t r, int position) const;
  FieldScalar axis_center(std::size_t r) const;
  Box cell_box(std::size_t index) const;

  friend bool operator==(const GridShape&, const GridShape&) = default;
};

GridShape common_shape(const GridShape& a, const GridShape& b);

// For each index of the larger axis, the index of the smaller axis holding
// the same coset, or nullopt when the coset lies outside the smaller support.
std::vector<std::optional<std::size_t>> axis_embedding(const GridShape& from, const GridShape& to);

template <class V>
class BasicGrid {
 public:
  BasicGrid() = default;
  explicit BasicGrid(GridShape shape) : shape_(shape), values_(shape.size(), V(0)) {}
  BasicGrid(GridShape shape, std::vector<V> values) : shape_(shape), values_(std::move(values)) {
    if (values_.size() != shape_.size()) throw ValidationError("grid value count does not match its shape");
  }

  const GridShape& shape() const { return shape_; }
  const std::vector<V>& values() const { return values_; }
  std::vector<V>& values() { return values_; }
  std::size_t size() const { return values_.size(); }
  const V& operator[](std::size_t i) const { return values_[i]; }
  V& operator[](std::size_t i) { return values_[i]; }

  // Re-express on a finer and larger grid; target L, m must dominate.
  BasicGrid embed(const GridShape& target) const {
    if (target == shape_) return *this;
    if (!(target.field == shape_.field) || target.n != shape_.n || target.L < shape_.L || target.m < shape_.m)
      throw ValidationError("embedding target must dominate the source grid");
    auto map = axis_embedding(shape_, target);
    BasicGrid out(target);
    std::vector<std::size_t> axes(static_cast<std::size_t>(shape_.n));
    for (std::size_t i = 0; i < target.size(); ++i) {
      auto t = target.axis_indices(i);
      bool inside = true;
      for (std::size_t a = 0; a < t.size() && inside; ++a) {
        if (!map[t[a]]) inside = false;
        else axes[a] = *map[t[a]];
      }
      if (inside) out.values_[i] = values_[shape_.flat_index(axes)];
    }
    return out;
  }

  // g(-x).
  BasicGrid reflect() const {
    BasicGrid out(shape_);
    for (std::size_t i = 0; i < size(); ++i) {
      auto axes = shape_.axis_indices(i);
      for (auto& r : axes) r = shape_.negate_axis(r);
      out.values_[shape_.flat_index(axes)] = values_[i];
    }
    return out;
  }

 private:
  GridShape shape_{};
  std::vector<V> values_;
};

using GridFunction = BasicGrid<Complex>;
using RationalGrid = BasicGrid<Rational>;

GridFunction operator+(const GridFunction& a, const GridFunction& b);
GridFunction operator-(const GridFunction& a, const GridFunction& b);
GridFunction operator*(Complex c, const GridFunction& g);
// Pointwise product on the common refinement.
GridFunction pointwise_product(const GridFunction& a, const GridFunction& b);

GridFunction indicator_ball(FieldSpec field, int n, long l);
GridFunction indicator_cell(const GridShape& shape, std::size_t index);
// Values uniform in the unit square; a fraction `density` of cells nonzero.
GridFunction random_grid(const GridShape& shape, std::mt19937_64& rng, double density = 1.0);

Complex value_at(const GridFunction& g, const FieldVector& x);
Complex value_at_origin(const GridFunction& g);
double l2_norm(const GridFunction& g);
double sup_norm(const GridFunction& g);
Complex integral(const GridFunction& g);
double max_abs_difference(const GridFunction& a, const GridFunction& b);

GridFunction to_complex(const RationalGrid& g);
// Exact grid when every value times `scale` is within tol of an integer
// (imaginary parts must vanish); nullopt otherwise.
std::optional<RationalGrid> rationalize(const GridFunction& g, const Rational& scale, double tol = 1e-9);

}  // namespace ultrazeta
