#pragma once

#include <string>
#include <vector>

namespace ultrazeta {

// Terms m_0 = 0 and m_l = gamma_1 + ... + gamma_l - 1 for l >= 1, generated
// by positive reals gamma_j with gamma_1 >= 1. With repeat_last the final
// gamma repeats forever.
struct GeneralizedProgression {
  std::vector<double> gammas;
  bool repeat_last = true;

  // m_0 .. m_depth (fewer when the gammas run out without repeat_last).
  std::vector<double> terms(int depth) const;
  void validate() const;

  // m_l = step * l: gammas (1 + step, step, step, ...).
  static GeneralizedProgression arithmetic(double step);
  // "1,1,1,..." where a trailing "..." repeats the last entry.
  static GeneralizedProgression parse(const std::string& text);
};

struct ResolutionDatum {
  unsigned N = 1;
  unsigned v = 1;
};

// "(1,1);(2,2)"
std::vector<ResolutionDatum> parse_resolution_data(const std::string& text);
// Progressions separated by ';'.
std::vector<GeneralizedProgression> parse_progressions(const std::string& text);

struct PoleSource {
  std::size_t datum = 0;
  ResolutionDatum data;
  int term = 0;
  double m = 0;
};

struct PoleCandidate {
  double value = 0;  // -(v + m) / N
  std::vector<PoleSource> sources;
};

// All -(v_E + m)/N_E for progression terms up to depth, sorted from the
// largest real part down, merging values closer than 1e-12.
std::vector<PoleCandidate> predict_poles(const std::vector<ResolutionDatum>& data,
                                         const std::vector<GeneralizedProgression>& progressions, int depth);

}  // namespace ultrazeta
