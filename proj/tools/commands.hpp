#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ultrazeta/igusa.hpp"
#include "ultrazeta/json_io.hpp"

namespace ultrazeta::cli {

struct FieldOptions {
  std::string kind = "Qp";
  unsigned p = 3;

  FieldSpec spec() const;
};

// A grid read from --input or drawn at random from the run seed.
struct GridSource {
  std::string input;
  bool random = false;
  int n = 1;
  int L = 1;
  int m = 1;
  double density = 1.0;

  GridFunction load(const FieldOptions& field, std::uint64_t seed, int stream) const;
  json describe(const FieldOptions& field) const;
};

struct FieldArgs {
  FieldOptions field;
  std::string op = "add";
  std::string a;
  std::string b;
  int precision = kDefaultPrecision;
};

struct FourierArgs {
  FieldOptions field;
  GridSource grid;
  bool inverse = false;
  bool dense = false;
  std::string out;
};

struct SobolevArgs {
  FieldOptions field;
  GridSource grid;
  std::vector<int> levels{0};
  std::string other;
  int l_max = 16;
};

struct IgusaArgs {
  FieldOptions field;
  int n = 1;
  std::string poly;
  int terms = 8;
  std::vector<int> reconstruct;
  bool snc = false;
  std::size_t budget = kDefaultIgusaBudget;
};

struct HinfArgs {
  FieldOptions field;
  int n = 2;
  int d = 2;
  std::string poly;
  double alpha = 1.0;
  double s_re = 0.7;
  double s_im = 0.0;
  std::string mode = "both";
  std::vector<double> locate;
  int depth = 8;
};

struct PolesArgs {
  std::string data;
  std::string prog;
  int depth = 10;
};

struct OpApplyArgs {
  FieldOptions field;
  GridSource grid;
  std::string symbol;
  std::vector<int> levels{0, 2, 4};
  std::string out;
  bool origin = false;
};

struct RieszArgs {
  FieldOptions field;
  GridSource grid;
  std::string alpha;
};

struct Prop3Args {
  FieldOptions field;
  GridSource grid;
  std::string alpha;
  std::string beta;
};

struct FundsolArgs {
  FieldOptions field;
  std::string poly = "x1";
  int trials = 10;
  std::string report;
};

struct RunContext {
  std::uint64_t seed = 0;
};

json run_field(const FieldArgs& args, const RunContext& ctx);
json run_fourier(const FourierArgs& args, const RunContext& ctx);
json run_sobolev(const SobolevArgs& args, const RunContext& ctx);
json run_igusa(const IgusaArgs& args, const RunContext& ctx);
json run_hinf(const HinfArgs& args, const RunContext& ctx);
json run_poles(const PolesArgs& args, const RunContext& ctx);
json run_op_apply(const OpApplyArgs& args, const RunContext& ctx);
json run_riesz(const RieszArgs& args, const RunContext& ctx);
json run_prop3(const Prop3Args& args, const RunContext& ctx);
json run_fundsol(const FundsolArgs& args, const RunContext& ctx);

void write_json_file(const std::string& path, const json& j);

}  // namespace ultrazeta::cli
