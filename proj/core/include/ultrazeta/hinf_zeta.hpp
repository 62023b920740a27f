#pragma once

#include <string>
#include <vector>

#include "ultrazeta/local_field.hpp"
#include "ultrazeta/polynomial.hpp"
#include "ultrazeta/rational_function.hpp"

namespace ultrazeta {

inline constexpr double kPoleProximity = 1e-6;

enum class HinfMode { SphereSeries, Factored };

std::string mode_name(HinfMode mode);
HinfMode parse_hinf_mode(const std::string& name);

struct HinfValue {
  ComplexL value = 0;
  HinfMode mode = HinfMode::SphereSeries;
  long terms = 0;          // sphere terms summed (both directions)
  int exp_order = -1;      // exponential-series order L in factored mode
  double tail_bound = 0;   // certified bound on the neglected terms
};

// Z(s) = int |f(xi)|^s exp(-||xi||^alpha) dxi for a homogeneous strongly
// non-degenerate f of degree d in n variables. Splitting into the spheres
// pi^j S_0^n gives Z(s) = Z0(s) Z1(s) with Z0(s) = int_{S_0^n} |f|^s, a
// rational function in t, and Z1(s) = sum_j q^{-j(n+ds)} exp(-q^{-j alpha}).
class HinfZeta {
 public:
  HinfZeta(FieldSpec field, IntPolynomial f, double alpha, int series_terms = 10);
  // f = x1^d + ... + xn^d
  static HinfZeta fermat(FieldSpec field, int n, int d, double alpha);

  int n() const { return n_; }
  int d() const { return d_; }
  double alpha() const { return alpha_; }
  unsigned q() const { return field_.q(); }
  const IntPolynomial& polynomial() const { return f_; }
  const RationalFunctionT& Z0() const { return Z0_; }

  // Z1 alone. Sphere-series mode needs n + d Re(s) > 0.
  HinfValue z1(ComplexL s, HinfMode mode) const;
  // Raises PoleProximity within `guard` of a pole; guard 0 disables the check.
  HinfValue evaluate(ComplexL s, HinfMode mode, double guard = kPoleProximity) const;

  // Real parts of the possible poles: -1 and -(n + alpha l)/d for l <= depth.
  std::vector<double> candidate_poles(int depth) const;
  // Real poles in [lo, hi] found from local minima of |1/Z| on a grid of the
  // given step, refined by golden-section search.
  std::vector<double> locate_real_poles(double lo, double hi, double step) const;

 private:
  void check_pole_proximity(ComplexL s, double guard) const;

  FieldSpec field_;
  IntPolynomial f_;
  double alpha_;
  int n_ = 0;
  int d_ = 0;
  RationalFunctionT Z0_;
};

}  // namespace ultrazeta
