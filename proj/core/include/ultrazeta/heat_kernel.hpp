#pragma once

#include "ultrazeta/local_field.hpp"

namespace ultrazeta {

struct HeatNorm {
  double squared = 0;     // ||g_t||_l^2
  double norm = 0;        // ||g_t||_l
  double tail_bound = 0;  // bound on the neglected part of `squared`, relative to it
  long terms = 0;
};

// Frequency-side heat kernel exp(-t ||xi||^alpha) on K^n.
class HeatKernel {
 public:
  HeatKernel(FieldSpec field, int n, double t, double alpha);

  double t() const { return t_; }
  double alpha() const { return alpha_; }
  int n() const { return n_; }

  // Value on the sphere ||xi|| = q^j.
  double on_sphere(long j) const;
  // sum_{j in Z} q^{jn} (1 - q^{-n}) [q^j]^l exp(-2 t q^{j alpha}).
  HeatNorm sobolev_norm(int l) const;
  // Same norm with the ball ||xi|| <= 1 integrated through the exponential
  // series sum_k (-2t)^k / k! (1 - q^{-n}) / (1 - q^{-n - alpha k}).
  HeatNorm sobolev_norm_split(int l) const;

 private:
  // sum_{j >= 1} of the sphere terms.
  HeatNorm outer(int l) const;

  FieldSpec field_;
  int n_;
  double t_;
  double alpha_;
};

}  // namespace ultrazeta
