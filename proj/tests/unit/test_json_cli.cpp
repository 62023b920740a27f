#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <random>
#include <sys/wait.h>

#include "ultrazeta/json_io.hpp"

using namespace ultrazeta;

namespace {

struct RunResult {
  int status = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(ULTRAZETA_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  RunResult r;
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

}  // namespace

TEST(Json, ElementRoundTrip) {
  auto F = FieldSpec::qp(5);
  auto x = LocalFieldElement::from_rational(F, Rational(7, 25));
  auto j = to_json(x);
  EXPECT_EQ(j["val"], -2);
  auto back = element_from_json(j);
  EXPECT_EQ(back.to_rational(), x.to_rational());
  EXPECT_TRUE(to_json(LocalFieldElement::zero(F))["val"].is_null());
  EXPECT_THROW(element_from_json(json::parse(R"({"val": 1})")), ValidationError);
}

TEST(Json, GridRoundTrip) {
  std::mt19937_64 rng(3);
  for (auto F : {FieldSpec::qp(3), FieldSpec::laurent(2)}) {
    auto g = random_grid(GridShape::make(F, 2, 1, 1), rng, 0.5);
    for (bool dense : {false, true}) {
      auto back = grid_from_json(json::parse(to_json(g, dense).dump()));
      EXPECT_EQ(back.shape().L, 1);
      EXPECT_LT(max_abs_difference(back, g), 1e-15);
    }
  }
}

TEST(Json, RationalFunction) {
  RationalFunctionT f(Poly<Rational>::constant(Rational(2, 3)), geometric_denominator(3, 1, 1), 3);
  auto j = to_json(f);
  EXPECT_EQ(j["q"], 3);
  EXPECT_EQ(j["numerator"], json::array({"-2"}));
  EXPECT_EQ(j["denominator"], json::array({"-3", "1"}));
  EXPECT_TRUE(j.contains("factored"));
}

TEST(Cli, IgusaSeries) {
  auto r = run_cli("zeta igusa --p 3 --poly x1^2 --terms 4");
  ASSERT_EQ(r.status, 0);
  auto j = json::parse(r.out);
  EXPECT_EQ(j["command"], "zeta igusa");
  EXPECT_EQ(j["result"]["series"], json::array({"2/3", "0", "2/9", "0"}));
}

TEST(Cli, ErrorsAndHelp) {
  EXPECT_EQ(run_cli("--help").status, 0);
  EXPECT_EQ(run_cli("zeta igusa --p 3 --poly 'x1^^2'").status, 2);
  EXPECT_EQ(run_cli("zeta igusa --p 4 --poly x1").status, 2);
  EXPECT_EQ(run_cli("no-such-command").status, 2);
}

TEST(Cli, Deterministic) {
  const std::string args = "--seed 7 fundsol --poly x1 --p 3 --trials 3";
  auto a = run_cli(args), b = run_cli(args);
  ASSERT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
  auto c = run_cli("--seed 8 fundsol --poly x1 --p 3 --trials 3");
  EXPECT_NE(a.out, c.out);
}
