#include "commands.hpp"

#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "ultrazeta/elementary.hpp"
#include "ultrazeta/fourier.hpp"
#include "ultrazeta/fundsol.hpp"
#include "ultrazeta/hinf_zeta.hpp"
#include "ultrazeta/pade.hpp"
#include "ultrazeta/poles.hpp"
#include "ultrazeta/sobolev.hpp"
#include "ultrazeta/vladimirov.hpp"

namespace ultrazeta::cli {

namespace {

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ValidationError("'" + path + "' is not valid JSON: " + e.what());
  }
}

LocalFieldElement parse_element(const std::string& text, FieldSpec field, int precision) {
  if (!text.empty() && text.front() == '{') {
    try {
      return element_from_json(json::parse(text));
    } catch (const json::parse_error& e) {
      throw ValidationError(std::string("malformed element JSON: ") + e.what());
    }
  }
  return LocalFieldElement::from_rational(field, parse_rational(text), precision);
}

std::vector<Complex> parse_complex_list(const std::string& text, int n) {
  std::vector<Complex> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      double x = std::stod(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.emplace_back(x, 0.0);
    } catch (const std::exception&) {
      throw ValidationError("malformed exponent '" + item + "'");
    }
  }
  if (out.size() == 1 && n > 1) out.assign(static_cast<std::size_t>(n), out[0]);
  if (static_cast<int>(out.size()) != n) throw ValidationError("expected " + std::to_string(n) + " exponents, got '" + text + "'");
  return out;
}

json complex_list(const std::vector<Complex>& v) {
  json out = json::array();
  for (auto z : v) out.push_back(to_json(z));
  return out;
}

json spectral_json(const SpectralFunction& T) {
  json mult = json::array();
  for (const auto& m : T.multipliers()) mult.push_back(json{{"symbol", m.symbol.to_string()}, {"exponent", to_json(m.exponent)}});
  return json{{"side", "frequency"}, {"base", to_json(T.base())}, {"multipliers", std::move(mult)}};
}

json candidate_json(const PoleCandidate& c) {
  json sources = json::array();
  for (const auto& s : c.sources)
    sources.push_back(json{{"datum", s.datum}, {"N", s.data.N}, {"v", s.data.v}, {"term", s.term}, {"m", s.m}});
  return json{{"value", c.value}, {"sources", std::move(sources)}};
}

}  // namespace

FieldSpec FieldOptions::spec() const {
  if (kind == "Qp") return FieldSpec::qp(p);
  if (kind == "LaurentFp") return FieldSpec::laurent(p);
  throw ValidationError("unknown field kind '" + kind + "' (expected Qp or LaurentFp)");
}

GridFunction GridSource::load(const FieldOptions& field, std::uint64_t seed, int stream) const {
  if (!input.empty()) return grid_from_json(read_json_file(input));
  if (!random) throw ValidationError("give --input or --random");
  std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(stream));
  return random_grid(GridShape::make(field.spec(), n, L, m), rng, density);
}

json GridSource::describe(const FieldOptions& field) const {
  if (!input.empty()) return json{{"input", input}};
  return json{{"random", json{{"field", to_json(field.spec())}, {"n", n}, {"L", L}, {"m", m}, {"density", density}}}};
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write '" + path + "'");
  out << j.dump(2) << "\n";
}

json run_field(const FieldArgs& args, const RunContext&) {
  FieldSpec field = args.field.spec();
  LocalFieldElement a = parse_element(args.a, field, args.precision);
  json inputs{{"field", to_json(field)}, {"op", args.op}, {"a", to_json(a)}, {"precision", args.precision}};
  json result;
  if (args.op == "norm") {
    auto vn = valuation_and_norm(a);
    result = {{"valuation", vn.ord ? json(*vn.ord) : json("infinity")}, {"norm", to_string(vn.norm)}};
  } else if (args.op == "char") {
    Rational r = char_fraction(a);
    result = {{"char_fraction", to_string(r)}};
  } else {
    LocalFieldElement b = parse_element(args.b, field, args.precision);
    inputs["b"] = to_json(b);
    LocalFieldElement c = field_arith(a, b, parse_arith_op(args.op));
    auto vn = valuation_and_norm(c);
    result = {{"element", to_json(c)},
              {"valuation", vn.ord ? json(*vn.ord) : json("infinity")},
              {"norm", to_string(vn.norm)},
              {"precision", c.precision()}};
  }
  return json{{"inputs", inputs}, {"result", result}, {"provenance", {{"mode", "exact digit arithmetic"}}}};
}

json run_fourier(const FourierArgs& args, const RunContext& ctx) {
  GridFunction g = args.grid.load(args.field, ctx.seed, 0);
  GridFunction h = args.inverse ? inverse_fourier_transform(g) : fourier_transform(g);
  json grid = to_json(h, args.dense);
  if (!args.out.empty()) write_json_file(args.out, grid);
  json result{{"shape", {{"n", h.shape().n}, {"L", h.shape().L}, {"m", h.shape().m}}},
              {"l2_norm_input", l2_norm(g)},
              {"l2_norm_output", l2_norm(h)}};
  if (args.out.empty()) result["grid"] = grid;
  return json{{"inputs", {{"grid", args.grid.describe(args.field)}, {"inverse", args.inverse}, {"dense", args.dense}}},
              {"result", result},
              {"provenance", {{"mode", "exact character sums"}, {"summation", "fixed order, double precision"}}}};
}

json run_sobolev(const SobolevArgs& args, const RunContext& ctx) {
  GridFunction g = args.grid.load(args.field, ctx.seed, 0);
  json norms = json::array();
  for (int l : args.levels) norms.push_back(json{{"l", l}, {"norm", sobolev_norm(g, l)}});
  json result{{"norms", norms}, {"l2_norm", l2_norm(g)}};
  json inputs{{"grid", args.grid.describe(args.field)}, {"levels", args.levels}};
  if (!args.other.empty()) {
    GridFunction f = grid_from_json(read_json_file(args.other));
    result["metric"] = hinf_metric(g, f, args.l_max);
    result["pairing"] = to_json(pairing(g, f));
    inputs["other"] = args.other;
    inputs["l_max"] = args.l_max;
  }
  return json{{"inputs", inputs}, {"result", result}, {"provenance", {{"mode", "finite sums over the transformed grid"}}}};
}

json run_igusa(const IgusaArgs& args, const RunContext&) {
  FieldSpec field = args.field.spec();
  IntPolynomial f = IntPolynomial::parse(args.poly, args.n);
  if (f.is_constant()) throw ValidationError("polynomial must be nonconstant");
  ZetaSeries series = igusa_series(field, f, args.terms - 1, args.budget);
  json inputs{{"field", to_json(field)}, {"n", f.n()}, {"poly", f.to_string()}, {"terms", args.terms}, {"budget", args.budget}};
  json result{{"series", to_json(series.coefficients)}, {"partial_sum", to_string(series.partial_sum())}};
  json provenance{{"mode", "exact residue-class counting"}, {"truncation", series.truncation()}, {"classes_visited", series.classes_visited}};
  if (!args.reconstruct.empty()) {
    if (args.reconstruct.size() != 2) throw ValidationError("--reconstruct takes two degree bounds");
    auto rec = reconstruct_from_series(series.coefficients, args.reconstruct[0], args.reconstruct[1], field.q());
    result["rational_function"] = to_json(rec.function);
    provenance["reconstruction"] = {{"fitted_terms", rec.fitted_terms}, {"verified_terms", rec.verified_terms}};
    inputs["reconstruct"] = args.reconstruct;
  }
  if (args.snc) {
    SncForm form = snc_form_Z0(field, f, series);
    result["snc"] = {{"d", form.d},
                     {"Z0", to_json(form.Z0)},
                     {"L", to_json(form.L.coeffs())},
                     {"Z", to_json(form.Z)},
                     {"Z_direct", to_json(form.Z_direct)},
                     {"held_out_Z0", form.held_out_Z0},
                     {"held_out_Z", form.held_out_Z}};
  }
  return json{{"inputs", inputs}, {"result", result}, {"provenance", provenance}};
}

json run_hinf(const HinfArgs& args, const RunContext&) {
  FieldSpec field = args.field.spec();
  HinfZeta Z = args.poly.empty() ? HinfZeta::fermat(field, args.n, args.d, args.alpha)
                                 : HinfZeta(field, IntPolynomial::parse(args.poly, args.n), args.alpha);
  const ComplexL s(args.s_re, args.s_im);
  json inputs{{"field", to_json(field)}, {"n", Z.n()}, {"d", Z.d()}, {"poly", Z.polynomial().to_string()},
              {"alpha", args.alpha}, {"s", to_json(s)}, {"mode", args.mode}};
  json values = json::array();
  std::vector<HinfMode> modes;
  if (args.mode == "both") modes = {HinfMode::SphereSeries, HinfMode::Factored};
  else modes = {parse_hinf_mode(args.mode)};
  std::vector<ComplexL> computed;
  for (HinfMode mode : modes) {
    HinfValue v = Z.evaluate(s, mode);
    computed.push_back(v.value);
    json entry{{"mode", mode_name(mode)}, {"value", to_json(v.value)}, {"terms", v.terms}, {"tail_bound", v.tail_bound}};
    if (v.exp_order >= 0) entry["exp_order"] = v.exp_order;
    values.push_back(entry);
  }
  json result{{"Z0", to_json(Z.Z0())}, {"values", values}, {"candidate_poles", Z.candidate_poles(args.depth)}};
  if (computed.size() == 2) result["mode_difference"] = static_cast<double>(std::abs(computed[0] - computed[1]));
  if (!args.locate.empty()) {
    if (args.locate.size() != 3) throw ValidationError("--locate takes lo hi step");
    result["located_poles"] = Z.locate_real_poles(args.locate[0], args.locate[1], args.locate[2]);
    inputs["locate"] = args.locate;
  }
  return json{{"inputs", inputs}, {"result", result}, {"provenance", {{"pole_guard", kPoleProximity}}}};
}

json run_poles(const PolesArgs& args, const RunContext&) {
  auto data = parse_resolution_data(args.data);
  auto progs = parse_progressions(args.prog);
  if (progs.size() == 1 && data.size() > 1) progs.assign(data.size(), progs[0]);
  auto poles = predict_poles(data, progs, args.depth);
  json list = json::array();
  for (const auto& c : poles) list.push_back(candidate_json(c));
  return json{{"inputs", {{"data", args.data}, {"prog", args.prog}, {"depth", args.depth}}},
              {"result", {{"pole_list", list}}},
              {"provenance", {{"mode", "-(v + m_l) / N over progression terms"}, {"merge_tolerance", 1e-12}}}};
}

json run_op_apply(const OpApplyArgs& args, const RunContext& ctx) {
  GridFunction g = args.grid.load(args.field, ctx.seed, 0);
  PseudoDiffOp op = PseudoDiffOp::parse(args.symbol, g.shape().n);
  SpectralFunction T = apply_pseudodiff(op, g);
  json spectral = spectral_json(T);
  if (!args.out.empty()) write_json_file(args.out, spectral);
  json bounds = json::array();
  for (int l : args.levels) {
    double lhs = sobolev_norm(T, l), rhs = sobolev_norm(g, l + op.sobolev_shift());
    bounds.push_back(json{{"l", l}, {"norm_Pg", lhs}, {"norm_g_shifted", rhs}, {"holds", lhs <= rhs * (1 + 1e-12)}});
  }
  json result{{"sobolev_shift", op.sobolev_shift()}, {"continuity", bounds}};
  if (args.origin) result["value_at_origin"] = to_json(evaluate_in_space_at_origin(T));
  if (args.out.empty()) result["spectral"] = spectral;
  return json{{"inputs", {{"grid", args.grid.describe(args.field)}, {"symbol", args.symbol}, {"levels", args.levels}}},
              {"result", result},
              {"provenance", {{"mode", "cell integrals with closed forms on Hensel and constant boxes"}}}};
}

json run_riesz(const RieszArgs& args, const RunContext& ctx) {
  GridFunction g = args.grid.load(args.field, ctx.seed, 0);
  auto alpha = parse_complex_list(args.alpha, g.shape().n);
  RieszCheck r = riesz_pairing(alpha, g);
  return json{{"inputs", {{"grid", args.grid.describe(args.field)}, {"alpha", complex_list(alpha)}}},
              {"result", {{"lhs", to_json(r.lhs)}, {"rhs", to_json(r.rhs)}, {"discrepancy", r.discrepancy}}},
              {"provenance", {{"lhs", "closed-form cell integrals"}, {"rhs", "sphere sums"}, {"tail_bound", r.tail_bound}}}};
}

json run_prop3(const Prop3Args& args, const RunContext& ctx) {
  GridFunction g = args.grid.load(args.field, ctx.seed, 0);
  auto alpha = parse_complex_list(args.alpha, g.shape().n);
  auto beta = parse_complex_list(args.beta, g.shape().n);
  Prop3Report r = prop3_identity_check(alpha, beta, g);
  return json{{"inputs", {{"grid", args.grid.describe(args.field)}, {"alpha", complex_list(alpha)}, {"beta", complex_list(beta)}}},
              {"result",
               {{"lhs", to_json(r.lhs)},
                {"rhs", to_json(r.rhs)},
                {"lhs_unconjugated", to_json(r.lhs_unconjugated)},
                {"discrepancy", r.discrepancy},
                {"discrepancy_unconjugated", r.discrepancy_unconjugated}}},
              {"provenance", {{"lhs", "cell integrals"}, {"rhs", "sphere sums"}}}};
}

json run_fundsol(const FundsolArgs& args, const RunContext& ctx) {
  FieldSpec field = args.field.spec();
  IntPolynomial f = IntPolynomial::parse(args.poly);
  std::mt19937_64 rng(ctx.seed);
  FundsolReport r = fundamental_solution_check(field, f, args.trials, rng);
  json trials = json::array();
  for (const auto& t : r.trials)
    trials.push_back(json{{"g_at_origin", to_json(t.g_at_origin)},
                          {"T0_of_Ag", to_json(t.t0_of_Ag)},
                          {"error_delta", t.error_delta},
                          {"pairing_gh", to_json(t.pairing_gh)},
                          {"T0_of_convolution", to_json(t.t0_of_conv)},
                          {"error_convolution", t.error_convolution}});
  json report{{"inputs", {{"field", to_json(field)}, {"poly", r.polynomial}, {"trials", args.trials}}},
              {"result",
               {{"passed", r.passed},
                {"max_error_delta", r.max_error_delta},
                {"max_error_convolution", r.max_error_convolution},
                {"division_cells", r.division_cells},
                {"division_failures", r.division_failures},
                {"T0_unit_ball", r.t0_unit_ball},
                {"trials", trials}}},
              {"provenance", {{"mode", "Laurent expansion at s = -1 of the exact rational form"}, {"tolerance", 1e-8}}}};
  if (!args.report.empty()) write_json_file(args.report, report);
  return report;
}

}  // namespace ultrazeta::cli
