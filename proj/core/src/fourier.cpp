#include "ultrazeta/fourier.hpp"

#include <cmath>
#include <numbers>

#include "ultrazeta/parallel.hpp"

namespace ultrazeta {

namespace {

// roots[j] = exp(-2 pi i j / N)
std::vector<Complex> root_table(std::size_t N) {
  std::vector<Complex> roots(N);
  const long double step = -2.0L * std::numbers::pi_v<long double> / static_cast<long double>(N);
  for (std::size_t j = 0; j < N; ++j) {
    long double a = step * static_cast<long double>(j);
    roots[j] = Complex(static_cast<double>(std::cos(a)), static_cast<double>(std::sin(a)));
  }
  return roots;
}

// Radix-p decimation in time on Z/p^M. Phases are exact integers mod N.
void cyclic_dft(Complex* a, std::size_t N, unsigned p, const std::vector<Complex>& roots, std::size_t stride,
                Complex* scratch) {
  if (N == 1) return;
  const std::size_t M = N / p;
  for (std::size_t s = 0; s < p; ++s)
    for (std::size_t j = 0; j < M; ++j) scratch[s * M + j] = a[j * p + s];
  for (std::size_t s = 0; s < p; ++s) cyclic_dft(scratch + s * M, M, p, roots, stride * p, a + s * M);
  for (std::size_t k = 0; k < N; ++k) {
    Complex acc = scratch[k % M];
    for (std::size_t s = 1; s < p; ++s) acc += roots[(s * k % N) * stride] * scratch[s * M + k % M];
    a[k] = acc;
  }
}

// F_p((T)): a tensor of size-p DFTs; the output digit order is reversed.
void digit_dft(Complex* a, std::size_t N, unsigned p, int digits, const std::vector<Complex>& roots,
               Complex* scratch) {
  std::size_t stride = 1;
  std::vector<Complex> buf(p);
  for (int i = 0; i < digits; ++i, stride *= p) {
    for (std::size_t base = 0; base < N; ++base) {
      if ((base / stride) % p != 0) continue;
      for (std::size_t b = 0; b < p; ++b) {
        Complex acc = 0;
        for (std::size_t r = 0; r < p; ++r) acc += roots[(r * b) % p] * a[base + r * stride];
        buf[b] = acc;
      }
      for (std::size_t b = 0; b < p; ++b) a[base + b * stride] = buf[b];
    }
  }
  for (std::size_t idx = 0; idx < N; ++idx) {
    std::size_t rev = 0, x = idx;
    for (int i = 0; i < digits; ++i) {
      rev = rev * p + x % p;
      x /= p;
    }
    scratch[rev] = a[idx];
  }
  std::copy(scratch, scratch + N, a);
}

}  // namespace

GridFunction fourier_transform(const GridFunction& g) {
  const GridShape& in = g.shape();
  const GridShape out_shape = in.dual();
  const std::size_t N = in.per_axis();
  const unsigned p = in.field.p;
  const auto roots = root_table(in.field.kind == FieldKind::Qp ? N : p);
  std::vector<Complex> data = g.values();
  const std::size_t total = data.size();
  const std::size_t lines = total / N;
  std::size_t stride = total;
  for (int axis = 0; axis < in.n; ++axis) {
    stride /= N;
    const std::size_t block = stride * N;
    parallel_for(lines, [&](std::size_t begin, std::size_t end) {
      std::vector<Complex> line(N), scratch(N);
      for (std::size_t l = begin; l < end; ++l) {
        std::size_t base = (l / stride) * block + l % stride;
        for (std::size_t r = 0; r < N; ++r) line[r] = data[base + r * stride];
        if (in.field.kind == FieldKind::Qp)
          cyclic_dft(line.data(), N, p, roots, 1, scratch.data());
        else
          digit_dft(line.data(), N, p, in.axis_digits(), roots, scratch.data());
        for (std::size_t r = 0; r < N; ++r) data[base + r * stride] = line[r];
      }
    });
  }
  const double vol = in.cell_volume_d();
  for (auto& v : data) v *= vol;
  return GridFunction(out_shape, std::move(data));
}

GridFunction inverse_fourier_transform(const GridFunction& h) { return fourier_transform(h).reflect(); }

}  // namespace ultrazeta
