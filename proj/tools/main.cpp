#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>

#include "commands.hpp"

using namespace ultrazeta;
using namespace ultrazeta::cli;

namespace {

void add_field_options(CLI::App* app, FieldOptions& f) {
  app->add_option("--kind", f.kind, "Field kind: Qp or LaurentFp")->capture_default_str();
  app->add_option("--p", f.p, "Residue characteristic (prime)")->capture_default_str();
}

void add_grid_options(CLI::App* app, GridSource& g) {
  app->add_option("--input", g.input, "Grid function JSON file");
  app->add_flag("--random", g.random, "Draw a random grid from --seed");
  app->add_option("--n", g.n, "Dimension of the random grid")->capture_default_str();
  app->add_option("--L", g.L, "Support exponent of the random grid")->capture_default_str();
  app->add_option("--m", g.m, "Resolution of the random grid")->capture_default_str();
  app->add_option("--density", g.density, "Fraction of nonzero random cells")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Local zeta functions, Vladimirov operators and fundamental solutions over non-Archimedean fields"};
  app.require_subcommand(1);
  app.fallthrough();

  RunContext ctx;
  std::string output;
  bool timing = false;
  app.add_option("--seed", ctx.seed, "Random seed")->capture_default_str();
  app.add_option("--output", output, "Write the JSON report here instead of stdout");
  app.add_flag("--timing", timing, "Add wall time to the report");

  std::string command;
  std::function<json()> run;
  auto bind = [&](CLI::App* sub, std::string name, auto* args, json (*fn)(const std::remove_pointer_t<decltype(args)>&, const RunContext&)) {
    sub->callback([&, name, args, fn] {
      command = name;
      run = [&ctx, args, fn] { return fn(*args, ctx); };
    });
  };

  FieldArgs field_args;
  auto* field = app.add_subcommand("field", "Field arithmetic, valuations and the additive character");
  add_field_options(field, field_args.field);
  field->add_option("--op", field_args.op, "add, sub, mul, div, norm or char")->capture_default_str();
  field->add_option("--a", field_args.a, "First operand: rational or element JSON")->required();
  field->add_option("--b", field_args.b, "Second operand");
  field->add_option("--precision", field_args.precision, "Digits for rational operands")->capture_default_str();
  bind(field, "field", &field_args, &run_field);

  FourierArgs fourier_args;
  auto* fourier = app.add_subcommand("fourier", "Exact Fourier transform of a grid function");
  add_field_options(fourier, fourier_args.field);
  add_grid_options(fourier, fourier_args.grid);
  fourier->add_flag("--inverse", fourier_args.inverse, "Inverse transform");
  fourier->add_flag("--dense,!--sparse", fourier_args.dense, "List every cell");
  fourier->add_option("--out", fourier_args.out, "Write the transformed grid to this file");
  bind(fourier, "fourier", &fourier_args, &run_fourier);

  SobolevArgs sobolev_args;
  auto* sobolev = app.add_subcommand("sobolev", "Sobolev norms, pairing and the H-infinity metric");
  add_field_options(sobolev, sobolev_args.field);
  add_grid_options(sobolev, sobolev_args.grid);
  sobolev->add_option("--l", sobolev_args.levels, "Sobolev indices")->delimiter(',');
  sobolev->add_option("--other", sobolev_args.other, "Second grid for the metric and pairing");
  sobolev->add_option("--lmax", sobolev_args.l_max, "Largest index in the metric")->capture_default_str();
  bind(sobolev, "sobolev", &sobolev_args, &run_sobolev);

  auto* zeta = app.add_subcommand("zeta", "Local zeta functions");
  zeta->require_subcommand(1);
  IgusaArgs igusa_args;
  auto* igusa = zeta->add_subcommand("igusa", "Exact truncated Igusa series");
  add_field_options(igusa, igusa_args.field);
  igusa->add_option("--n", igusa_args.n, "Number of variables")->capture_default_str();
  igusa->add_option("--poly", igusa_args.poly, "Polynomial, e.g. x1^2+x2^2")->required();
  igusa->add_option("--terms", igusa_args.terms, "Number of series terms")->capture_default_str()->check(CLI::Range(1, 64));
  igusa->add_option("--reconstruct", igusa_args.reconstruct, "Degree bounds dn dd")->expected(2);
  igusa->add_flag("--snc", igusa_args.snc, "Also build the Z0 form for a strongly non-degenerate form");
  igusa->add_option("--budget", igusa_args.budget, "Maximum residue classes visited")->capture_default_str();
  bind(igusa, "zeta igusa", &igusa_args, &run_igusa);

  HinfArgs hinf_args;
  auto* hinf = zeta->add_subcommand("hinf", "Zeta function of the heat kernel for a homogeneous form");
  add_field_options(hinf, hinf_args.field);
  hinf->add_option("--n", hinf_args.n, "Number of variables")->capture_default_str();
  hinf->add_option("--d", hinf_args.d, "Degree of x1^d + ... + xn^d")->capture_default_str();
  hinf->add_option("--poly", hinf_args.poly, "Homogeneous form used instead of the diagonal one");
  hinf->add_option("--alpha", hinf_args.alpha, "Heat kernel exponent")->capture_default_str();
  hinf->add_option("--s", hinf_args.s_re, "Real part of s")->capture_default_str();
  hinf->add_option("--s-im", hinf_args.s_im, "Imaginary part of s")->capture_default_str();
  hinf->add_option("--mode", hinf_args.mode, "sphere_series, factored_continuation or both")->capture_default_str();
  hinf->add_option("--locate", hinf_args.locate, "Scan lo hi step for real poles")->expected(3);
  hinf->add_option("--depth", hinf_args.depth, "Candidate pole depth")->capture_default_str();
  bind(hinf, "zeta hinf", &hinf_args, &run_hinf);

  PolesArgs poles_args;
  auto add_poles = [&](CLI::App* sub, const std::string& name) {
    sub->add_option("--data", poles_args.data, "Numerical data, e.g. (1,1);(2,2)")->required();
    sub->add_option("--prog", poles_args.prog, "Progressions, e.g. 1,1,1,...; ';' separates data")->required();
    sub->add_option("--depth", poles_args.depth, "Progression depth")->capture_default_str();
    bind(sub, name, &poles_args, &run_poles);
  };
  add_poles(zeta->add_subcommand("poles", "Candidate poles from numerical data"), "zeta poles");
  add_poles(app.add_subcommand("poles", "Candidate poles from numerical data"), "poles");

  auto* op = app.add_subcommand("op", "Pseudodifferential operators");
  op->require_subcommand(1);
  OpApplyArgs apply_args;
  auto* apply = op->add_subcommand("apply", "Apply a symbol prod |h_i|^alpha_i");
  add_field_options(apply, apply_args.field);
  add_grid_options(apply, apply_args.grid);
  apply->add_option("--symbol", apply_args.symbol, "Symbol h:alpha[;h:alpha]")->required();
  apply->add_option("--l", apply_args.levels, "Sobolev indices for the continuity bound")->delimiter(',');
  apply->add_option("--out", apply_args.out, "Write the spectral function here");
  apply->add_flag("--origin", apply_args.origin, "Evaluate the image at x = 0 (monomial symbols)");
  bind(apply, "op apply", &apply_args, &run_op_apply);

  RieszArgs riesz_args;
  auto* riesz = op->add_subcommand("riesz-check", "Riesz kernel identity");
  add_field_options(riesz, riesz_args.field);
  add_grid_options(riesz, riesz_args.grid);
  riesz->add_option("--alpha", riesz_args.alpha, "Exponents, comma separated")->required();
  bind(riesz, "op riesz-check", &riesz_args, &run_riesz);

  Prop3Args prop3_args;
  auto* prop3 = op->add_subcommand("prop3", "Adjoint identity for Vladimirov operators and Riesz kernels");
  add_field_options(prop3, prop3_args.field);
  add_grid_options(prop3, prop3_args.grid);
  prop3->add_option("--alpha", prop3_args.alpha, "Kernel exponents")->required();
  prop3->add_option("--beta", prop3_args.beta, "Operator exponents")->required();
  bind(prop3, "op prop3", &prop3_args, &run_prop3);

  FundsolArgs fundsol_args;
  auto* fundsol = app.add_subcommand("fundsol", "Fundamental solution checks for a monomial");
  add_field_options(fundsol, fundsol_args.field);
  fundsol->add_option("--poly", fundsol_args.poly, "Monomial, e.g. x1*x2")->capture_default_str();
  fundsol->add_option("--trials", fundsol_args.trials, "Random test functions")->capture_default_str();
  fundsol->add_option("--report", fundsol_args.report, "Also write the report to this file");
  bind(fundsol, "fundsol", &fundsol_args, &run_fundsol);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    auto start = std::chrono::steady_clock::now();
    json result = run();
    json report{{"command", command}, {"config", {{"seed", ctx.seed}}}};
    for (auto it = result.begin(); it != result.end(); ++it) report[it.key()] = it.value();
    if (timing) {
      std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
      report["wall_time_s"] = elapsed.count();
    }
    if (output.empty()) {
      std::cout << report.dump(2) << "\n";
    } else {
      write_json_file(output, report);
    }
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
