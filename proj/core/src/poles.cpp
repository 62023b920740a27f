#include "ultrazeta/poles.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ultrazeta/errors.hpp"

namespace ultrazeta {

namespace {

constexpr double kMergeTolerance = 1e-12;

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

double parse_number(const std::string& text) {
  std::size_t used = 0;
  double x = 0;
  try {
    x = std::stod(text, &used);
  } catch (const std::exception&) {
    throw ValidationError("malformed number '" + text + "'");
  }
  if (used != text.size()) throw ValidationError("malformed number '" + text + "'");
  return x;
}

unsigned parse_positive(const std::string& text) {
  double x = parse_number(trim(text));
  if (x < 1 || x != std::floor(x) || x > 1e6) throw ValidationError("numerical data must be positive integers, got '" + text + "'");
  return static_cast<unsigned>(x);
}

}  // namespace

void GeneralizedProgression::validate() const {
  if (gammas.empty()) throw ValidationError("a progression needs at least one gamma");
  if (gammas[0] < 1) throw ValidationError("a progression needs gamma_1 >= 1");
  for (double g : gammas)
    if (!(g > 0) || !std::isfinite(g)) throw ValidationError("progression gammas must be positive");
}

std::vector<double> GeneralizedProgression::terms(int depth) const {
  validate();
  std::vector<double> out{0.0};
  double sum = 0;
  for (int l = 1; l <= depth; ++l) {
    std::size_t j = static_cast<std::size_t>(l - 1);
    if (j >= gammas.size() && !repeat_last) break;
    sum += gammas[std::min(j, gammas.size() - 1)];
    out.push_back(sum - 1.0);
  }
  return out;
}

GeneralizedProgression GeneralizedProgression::arithmetic(double step) {
  if (!(step > 0)) throw ValidationError("progression step must be positive");
  return {{1.0 + step, step}, true};
}

GeneralizedProgression GeneralizedProgression::parse(const std::string& text) {
  GeneralizedProgression p;
  p.repeat_last = false;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (item == "...") {
      p.repeat_last = true;
      continue;
    }
    if (p.repeat_last) throw ValidationError("'...' must end the progression");
    p.gammas.push_back(parse_number(item));
  }
  p.validate();
  return p;
}

std::vector<ResolutionDatum> parse_resolution_data(const std::string& text) {
  std::vector<ResolutionDatum> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ';')) {
    item = trim(item);
    if (item.size() < 5 || item.front() != '(' || item.back() != ')') throw ValidationError("datum '" + item + "' must look like (N,v)");
    auto comma = item.find(',');
    if (comma == std::string::npos) throw ValidationError("datum '" + item + "' must look like (N,v)");
    out.push_back({parse_positive(item.substr(1, comma - 1)), parse_positive(item.substr(comma + 1, item.size() - comma - 2))});
  }
  if (out.empty()) throw ValidationError("no numerical data given");
  return out;
}

std::vector<GeneralizedProgression> parse_progressions(const std::string& text) {
  std::vector<GeneralizedProgression> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ';')) out.push_back(GeneralizedProgression::parse(item));
  if (out.empty()) throw ValidationError("no progression given");
  return out;
}

std::vector<PoleCandidate> predict_poles(const std::vector<ResolutionDatum>& data,
                                         const std::vector<GeneralizedProgression>& progressions, int depth) {
  if (data.size() != progressions.size()) throw ValidationError("one progression per datum is required");
  if (depth < 0) throw ValidationError("depth must be non-negative");
  std::vector<PoleCandidate> raw;
  for (std::size_t e = 0; e < data.size(); ++e) {
    if (data[e].N < 1 || data[e].v < 1) throw ValidationError("numerical data must be positive");
    auto m = progressions[e].terms(depth);
    for (std::size_t l = 0; l < m.size(); ++l) {
      double value = -(data[e].v + m[l]) / data[e].N;
      raw.push_back({value, {{e, data[e], static_cast<int>(l), m[l]}}});
    }
  }
  std::stable_sort(raw.begin(), raw.end(), [](const PoleCandidate& a, const PoleCandidate& b) { return a.value > b.value; });
  std::vector<PoleCandidate> out;
  for (auto& c : raw) {
    if (!out.empty() && std::abs(out.back().value - c.value) < kMergeTolerance) {
      out.back().sources.insert(out.back().sources.end(), c.sources.begin(), c.sources.end());
    } else {
      out.push_back(std::move(c));
    }
  }
  return out;
}

}  // namespace ultrazeta
