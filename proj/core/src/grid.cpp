#include "ultrazeta/grid.hpp"

#include <algorithm>
#include <cmath>

namespace ultrazeta {

namespace {

constexpr std::size_t kMaxGridSize = std::size_t{1} << 26;

std::size_t upow(std::size_t b, int e) {
  std::size_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

GridShape GridShape::make(FieldSpec field, int n, int L, int m) {
  if (n < 1) throw ValidationError("dimension n must be at least 1");
  if (L < 0 || m < 0) throw ValidationError("support exponent L and resolution m must be non-negative");
  double cells = std::pow(static_cast<double>(field.q()), static_cast<double>(n) * (L + m));
  if (cells > static_cast<double>(kMaxGridSize))
    throw ValidationError("grid with " + std::to_string(cells) + " cells exceeds the size budget");
  return GridShape{field, n, L, m};
}

std::size_t GridShape::per_axis() const { return upow(field.q(), L + m); }

std::size_t GridShape::size() const { return upow(per_axis(), n); }

double GridShape::cell_volume_d() const { return std::pow(static_cast<double>(field.q()), -static_cast<double>(n) * m); }

std::vector<std::size_t> GridShape::axis_indices(std::size_t index) const {
  std::vector<std::size_t> out(static_cast<std::size_t>(n));
  const std::size_t base = per_axis();
  for (int a = n - 1; a >= 0; --a) {
    out[static_cast<std::size_t>(a)] = index % base;
    index /= base;
  }
  return out;
}

std::size_t GridShape::flat_index(const std::vector<std::size_t>& axes) const {
  std::size_t idx = 0;
  const std::size_t base = per_axis();
  for (std::size_t r : axes) idx = idx * base + r;
  return idx;
}

std::optional<long> GridShape::axis_ord(std::size_t r) const {
  if (r == 0) return std::nullopt;
  long j = 0;
  while (r % field.p == 0) {
    r /= field.p;
    ++j;
  }
  return j - L;
}

long GridShape::norm_exponent(std::size_t index) const {
  long best = -m;
  for (std::size_t r : axis_indices(index))
    if (auto o = axis_ord(r)) best = std::max(best, -*o);
  return best;
}

bool GridShape::cell_contains_origin_axis(std::size_t index, int axis) const {
  return axis_indices(index)[static_cast<std::size_t>(axis)] == 0;
}

std::size_t GridShape::negate_axis(std::size_t r) const {
  const std::size_t N = per_axis();
  if (field.kind == FieldKind::Qp) return (N - r) % N;
  std::size_t out = 0, scale = 1;
  for (int i = 0; i < axis_digits(); ++i) {
    std::size_t d = r % field.p;
    out += ((field.p - d) % field.p) * scale;
    r /= field.p;
    scale *= field.p;
  }
  return out;
}

unsigned GridShape::axis_digit(std::size_t r, int position) const {
  for (int i = 0; i < position; ++i) r /= field.p;
  return static_cast<unsigned>(r % field.p);
}

FieldScalar GridShape::axis_center(std::size_t r) const {
  std::vector<unsigned> digits(static_cast<std::size_t>(axis_digits()));
  for (auto& d : digits) {
    d = static_cast<unsigned>(r % field.p);
    r /= field.p;
  }
  return FieldScalar::from_digits(field, -L, digits);
}

Box GridShape::cell_box(std::size_t index) const {
  Box box;
  for (std::size_t r : axis_indices(index)) {
    box.center.push_back(axis_center(r));
    box.level.push_back(m);
  }
  return box;
}

GridShape common_shape(const GridShape& a, const GridShape& b) {
  if (!(a.field == b.field) || a.n != b.n) throw ValidationError("grid functions live on different spaces");
  return GridShape::make(a.field, a.n, std::max(a.L, b.L), std::max(a.m, b.m));
}

std::vector<std::optional<std::size_t>> axis_embedding(const GridShape& from, const GridShape& to) {
  const std::size_t shift = upow(from.field.p, to.L - from.L);
  const std::size_t N = from.per_axis();
  std::vector<std::optional<std::size_t>> out(to.per_axis());
  for (std::size_t r = 0; r < out.size(); ++r)
    if (r % shift == 0) out[r] = (r / shift) % N;
  return out;
}

namespace {

template <class Op>
GridFunction combine(const GridFunction& a, const GridFunction& b, Op op) {
  GridShape s = common_shape(a.shape(), b.shape());
  GridFunction ea = a.embed(s), eb = b.embed(s);
  GridFunction out(s);
  for (std::size_t i = 0; i < s.size(); ++i) out[i] = op(ea[i], eb[i]);
  return out;
}

}  // namespace

GridFunction operator+(const GridFunction& a, const GridFunction& b) {
  return combine(a, b, [](Complex x, Complex y) { return x + y; });
}

GridFunction operator-(const GridFunction& a, const GridFunction& b) {
  return combine(a, b, [](Complex x, Complex y) { return x - y; });
}

GridFunction operator*(Complex c, const GridFunction& g) {
  GridFunction out = g;
  for (auto& v : out.values()) v *= c;
  return out;
}

GridFunction pointwise_product(const GridFunction& a, const GridFunction& b) {
  return combine(a, b, [](Complex x, Complex y) { return x * y; });
}

GridFunction indicator_ball(FieldSpec field, int n, long l) {
  GridShape s = GridShape::make(field, n, static_cast<int>(std::max(l, 0L)), static_cast<int>(std::max(-l, 0L)));
  GridFunction g(s);
  if (l >= 0) {
    std::fill(g.values().begin(), g.values().end(), Complex(1.0));
  } else {
    g[0] = 1.0;
  }
  return g;
}

GridFunction indicator_cell(const GridShape& shape, std::size_t index) {
  GridFunction g(shape);
  g[index] = 1.0;
  return g;
}

GridFunction random_grid(const GridShape& shape, std::mt19937_64& rng, double density) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_real_distribution<double> keep(0.0, 1.0);
  GridFunction g(shape);
  for (auto& v : g.values()) {
    double re = u(rng), im = u(rng);
    if (keep(rng) < density) v = Complex(re, im);
  }
  return g;
}

Complex value_at(const GridFunction& g, const FieldVector& x) {
  const GridShape& s = g.shape();
  if (static_cast<int>(x.size()) != s.n) throw ValidationError("point dimension does not match grid");
  std::vector<std::size_t> axes;
  for (const auto& c : x.coords()) {
    if (!c.is_zero() && *c.valuation() < -s.L) return 0.0;
    std::size_t r = 0;
    for (int j = s.m - 1; j >= -s.L; --j) r = r * s.field.p + c.digit(j);
    axes.push_back(r);
  }
  return g[s.flat_index(axes)];
}

Complex value_at_origin(const GridFunction& g) { return g[0]; }

double l2_norm(const GridFunction& g) {
  double acc = 0;
  for (auto& v : g.values()) acc += std::norm(v);
  return std::sqrt(acc * g.shape().cell_volume_d());
}

double sup_norm(const GridFunction& g) {
  double best = 0;
  for (auto& v : g.values()) best = std::max(best, std::abs(v));
  return best;
}

Complex integral(const GridFunction& g) {
  Complex acc = 0;
  for (auto& v : g.values()) acc += v;
  return acc * g.shape().cell_volume_d();
}

double max_abs_difference(const GridFunction& a, const GridFunction& b) {
  GridFunction d = a - b;
  return sup_norm(d);
}

GridFunction to_complex(const RationalGrid& g) {
  GridFunction out(g.shape());
  for (std::size_t i = 0; i < g.size(); ++i) out[i] = static_cast<double>(to_long_double(g[i]));
  return out;
}

std::optional<RationalGrid> rationalize(const GridFunction& g, const Rational& scale, double tol) {
  RationalGrid out(g.shape());
  const double s = static_cast<double>(to_long_double(scale));
  for (std::size_t i = 0; i < g.size(); ++i) {
    double re = g[i].real() * s;
    if (std::abs(g[i].imag() * s) > tol) return std::nullopt;
    double k = std::round(re);
    if (std::abs(re - k) > tol) return std::nullopt;
    out[i] = Rational(Integer(k)) / scale;
  }
  return out;
}

}  // namespace ultrazeta
