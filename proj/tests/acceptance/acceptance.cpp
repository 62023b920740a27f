#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "oracles.hpp"
#include "ultrazeta/errors.hpp"
#include "ultrazeta/fourier.hpp"
#include "ultrazeta/fundsol.hpp"
#include "ultrazeta/heat_kernel.hpp"
#include "ultrazeta/hinf_zeta.hpp"
#include "ultrazeta/igusa.hpp"
#include "ultrazeta/poles.hpp"
#include "ultrazeta/sobolev.hpp"
#include "ultrazeta/vladimirov.hpp"

using namespace ultrazeta;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(3);
  os << x;
  return os.str();
}

Outcome fourier_suite() {
  auto start = Clock::now();
  std::mt19937_64 rng(101);
  const unsigned primes[] = {2, 3, 5};
  double worst_inv = 0, worst_parseval = 0;
  for (int trial = 0; trial < 50; ++trial) {
    auto F = trial % 2 ? FieldSpec::laurent(primes[trial % 3]) : FieldSpec::qp(primes[trial % 3]);
    int n = 1 + (trial / 3) % 2, L = (trial / 6) % 3, m = (trial / 18) % 3;
    auto g = random_grid(GridShape::make(F, n, L, m), rng);
    auto gh = fourier_transform(g);
    worst_inv = std::max(worst_inv, max_abs_difference(fourier_transform(gh), g.reflect()));
    worst_parseval = std::max(worst_parseval, std::abs(l2_norm(gh) - l2_norm(g)) / l2_norm(g));
  }
  double t = seconds_since(start);
  return {worst_inv <= 1e-12 && worst_parseval <= 1e-12 && t < 10,
          "involution " + fmt(worst_inv) + ", Parseval " + fmt(worst_parseval) + ", " + fmt(t) + " s"};
}

Outcome igusa_monomials() {
  auto start = Clock::now();
  std::mt19937_64 rng(102);
  std::uniform_int_distribution<int> nd(1, 2), Nd(1, 4), pd(0, 2);
  const unsigned primes[] = {2, 3, 5};
  int mismatches = 0;
  for (int trial = 0; trial < 20; ++trial) {
    int n = nd(rng);
    unsigned p = primes[pd(rng)];
    std::vector<unsigned> N;
    std::string text;
    for (int i = 0; i < n; ++i) {
      N.push_back(static_cast<unsigned>(Nd(rng)));
      text += (i ? "*x" : "x") + std::to_string(i + 1) + "^" + std::to_string(N.back());
    }
    auto series = igusa_series(FieldSpec::qp(p), IntPolynomial::parse(text), 11).coefficients;
    if (series != monomial_zeta_closed(p, N).series(12)) ++mismatches;
    if (series != oracle::monomial_series(p, N, std::vector<unsigned>(N.size(), 1), 12)) ++mismatches;
  }
  double t = seconds_since(start);
  return {mismatches == 0 && t < 60, std::to_string(mismatches) + " mismatches, " + fmt(t) + " s"};
}

Outcome snc_reconstruction() {
  auto start = Clock::now();
  bool ok = true;
  std::string detail;
  for (unsigned p : {3u, 5u}) {
    auto F = FieldSpec::qp(p);
    auto f = IntPolynomial::parse("x1^2+x2^2");
    auto series = igusa_series(F, f, 12);
    auto snc = snc_form_Z0(F, f, series);
    auto bound = geometric_denominator(p, 1, 1) * geometric_denominator(p, 2, 2);
    bool divides = Poly<Rational>::divmod(bound, snc.Z.den()).second.is_zero();
    auto L = RationalFunctionT::polynomial(geometric_denominator(p, 1, 1), p) * snc.Z0;
    int K = p == 3 ? 6 : 4;
    auto brute = oracle::brute_force_igusa({{{2, 0}, 1}, {{0, 2}, 1}}, 2, p, K);
    auto expanded = snc.Z.series(static_cast<std::size_t>(K));
    bool held = snc.held_out_Z >= 3;
    bool good = divides && L.is_polynomial() && held && expanded == brute && snc.Z == snc.Z_direct;
    ok = ok && good;
    detail += "p=" + std::to_string(p) + " Z=" + factored_string(snc.Z) + " held_out=" + std::to_string(snc.held_out_Z) + "; ";
  }
  double t = seconds_since(start);
  return {ok && t < 300, detail + fmt(t) + " s"};
}

Outcome hinf_cross_mode() {
  auto start = Clock::now();
  auto Z = HinfZeta::fermat(FieldSpec::qp(3), 2, 2, 1.0);
  double worst = 0;
  for (int i = 0; i < 25; ++i) {
    ComplexL s(0.12L * (i + 1), 1.5L * ((i % 5) - 2));
    auto a = Z.evaluate(s, HinfMode::SphereSeries);
    auto b = Z.evaluate(s, HinfMode::Factored);
    worst = std::max(worst, static_cast<double>(std::abs(a.value - b.value)));
  }
  auto predicted = predict_poles({{1, 1}, {2, 2}},
                                 {GeneralizedProgression{{1.0, 0.5}, true}, GeneralizedProgression::arithmetic(1.0)}, 12);
  auto located = Z.locate_real_poles(-4.7311, -0.5, 0.0137);
  double worst_pole = 0;
  for (double x : located) {
    double best = 1e9;
    for (const auto& c : predicted) best = std::min(best, std::abs(x - c.value));
    worst_pole = std::max(worst_pole, best);
  }
  double t = seconds_since(start);
  std::string list;
  for (double x : located) list += (list.empty() ? "" : " ") + fmt(x);
  return {worst <= 1e-10 && !located.empty() && worst_pole <= 1e-4 && t < 60,
          "modes " + fmt(worst) + ", poles [" + list + "] off by " + fmt(worst_pole) + ", " + fmt(t) + " s"};
}

Outcome riesz_suite() {
  std::mt19937_64 rng(105);
  double worst = 0;
  for (double a : {0.3, 0.5, 0.7}) {
    for (int trial = 0; trial < 10; ++trial) {
      int n = 1 + trial % 2;
      auto phi = random_grid(GridShape::make(FieldSpec::qp(trial % 3 ? 3 : 2), n, 1, 1), rng);
      auto r = riesz_pairing(std::vector<Complex>(static_cast<std::size_t>(n), a), phi);
      worst = std::max(worst, r.discrepancy + r.tail_bound);
    }
  }
  return {worst <= 1e-10, "max discrepancy " + fmt(worst)};
}

Outcome operator_continuity() {
  std::mt19937_64 rng(106);
  int violations = 0, checks = 0;
  for (const char* h : {"x1", "x1^2+x2^2"}) {
    for (const char* a : {"0.5", "1.3"}) {
      auto op = PseudoDiffOp::parse(std::string(h) + ":" + a, 2);
      for (int trial = 0; trial < 20; ++trial) {
        auto g = random_grid(GridShape::make(FieldSpec::qp(trial % 2 ? 3 : 2), 2, 1, 1), rng);
        auto Pg = apply_pseudodiff(op, g);
        for (int l : {0, 2, 4}) {
          ++checks;
          if (sobolev_norm(Pg, l) > sobolev_norm(g, l + op.sobolev_shift()) * (1 + 1e-12)) ++violations;
        }
      }
    }
  }
  return {violations == 0, std::to_string(violations) + " violations in " + std::to_string(checks) + " checks"};
}

Outcome fundamental_solutions() {
  std::mt19937_64 rng(107);
  bool ok = true;
  std::string detail;
  for (const char* poly : {"x1", "x1*x2"}) {
    auto rep = fundamental_solution_check(FieldSpec::qp(3), IntPolynomial::parse(poly), 10, rng);
    ok = ok && rep.passed && rep.division_failures == 0 && rep.max_error_delta <= 1e-8;
    detail += std::string(poly) + ": delta " + fmt(rep.max_error_delta) + ", division failures " +
              std::to_string(rep.division_failures) + "/" + std::to_string(rep.division_cells) + "; ";
  }
  RationalGrid one(GridShape::make(FieldSpec::qp(3), 1, 0, 0));
  one.values()[0] = 1;
  auto t0 = extract_T0_exact(one, IntPolynomial::parse("x1"));
  bool exact = t0 == LambdaPoly<Rational>{{0, Rational(1, 3)}};
  return {ok && exact, detail + "T0(1_Z3) = " + lambda_string(t0)};
}

Outcome gamma_factor_suite() {
  std::mt19937_64 rng(108);
  std::uniform_real_distribution<double> re(-3, 3), im(-5, 5);
  const unsigned primes[] = {2, 3, 5};
  double worst = 0;
  int evaluated = 0;
  while (evaluated < 100) {
    unsigned q = primes[evaluated % 3];
    ComplexL a(re(rng), im(rng));
    try {
      ComplexL prod = gamma_factor(q, a) * gamma_factor(q, ComplexL(1) - a);
      worst = std::max(worst, static_cast<double>(std::abs(prod - ComplexL(1))));
      ++evaluated;
    } catch (const PoleOfGamma&) {
    }
  }
  int missed = 0, spurious = 0;
  for (unsigned q : primes) {
    const long double period = 2 * std::numbers::pi_v<long double> / std::log(static_cast<long double>(q));
    for (int j = -3; j <= 3; ++j) {
      for (long double base : {0.0L, 1.0L}) {
        ComplexL mu(base, j * period);
        for (ComplexL dir : {ComplexL(1, 0), ComplexL(0, 1), ComplexL(-0.6L, 0.8L)}) {
          try {
            gamma_factor(q, mu + 0.9e-9L * dir);
            ++missed;
          } catch (const PoleOfGamma&) {
          }
          try {
            gamma_factor(q, mu + 1.1e-9L * dir);
          } catch (const PoleOfGamma&) {
            ++spurious;
          }
        }
      }
    }
  }
  return {worst <= 1e-12 && missed == 0 && spurious == 0,
          "reflection " + fmt(worst) + ", missed poles " + std::to_string(missed) + ", spurious " + std::to_string(spurious)};
}

Outcome heat_kernel_suite() {
  bool ok = true;
  double worst_tail = 0;
  for (int n : {1, 2}) {
    for (double t : {0.1, 1.0}) {
      for (double alpha : {1.0, 2.0}) {
        HeatKernel K(FieldSpec::qp(3), n, t, alpha);
        double prev = 0;
        for (int l = 0; l <= 20; ++l) {
          auto a = K.sobolev_norm(l);
          auto b = K.sobolev_norm_split(l);
          worst_tail = std::max({worst_tail, a.tail_bound, b.tail_bound});
          ok = ok && std::isfinite(a.norm) && a.norm >= prev && std::abs(a.squared - b.squared) <= 1e-12 * a.squared;
          prev = a.norm;
        }
      }
    }
  }
  return {ok && worst_tail < 1e-12, "max relative tail " + fmt(worst_tail)};
}

std::pair<int, std::string> run_cli(const std::string& args) {
  std::string cmd = std::string(ULTRAZETA_CLI_PATH) + " " + args + " 2>/dev/null";
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, out};
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

Outcome determinism() {
  const std::vector<std::string> runs = {
      "--seed 11 fourier --random --p 3 --n 2 --L 1 --m 1",
      "--seed 12 sobolev --random --p 2 --n 2 --L 1 --m 1 --l 0,2,4",
      "zeta igusa --p 3 --n 2 --poly x1^2+x2^2 --terms 10 --snc",
      "zeta hinf --p 3 --n 2 --d 2 --alpha 1 --s 0.7 --mode both",
      "zeta poles --data '(1,1);(2,2)' --prog '1,0.5,...;2,1,...' --depth 6",
      "--seed 13 op riesz-check --random --p 3 --n 1 --alpha 0.5",
      "--seed 14 fundsol --poly x1*x2 --p 3 --trials 3",
  };
  int differing = 0, failed = 0;
  for (const auto& args : runs) {
    auto a = run_cli(args), b = run_cli(args);
    if (a.first != 0 || b.first != 0) ++failed;
    if (a.second != b.second || a.second.empty()) ++differing;
  }
  return {differing == 0 && failed == 0, std::to_string(runs.size()) + " commands, " + std::to_string(differing) +
                                             " differing, " + std::to_string(failed) + " failed"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"Fourier involution and Parseval", fourier_suite},
      {"Igusa monomial equivalence", igusa_monomials},
      {"SNC reconstruction for x1^2+x2^2", snc_reconstruction},
      {"H-infinity zeta cross-mode agreement and poles", hinf_cross_mode},
      {"Riesz kernel identity", riesz_suite},
      {"Operator continuity", operator_continuity},
      {"Fundamental solution", fundamental_solutions},
      {"Gamma factor reflection and poles", gamma_factor_suite},
      {"Heat kernel H-infinity membership", heat_kernel_suite},
      {"CLI determinism", determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first << ": " << o.detail << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
