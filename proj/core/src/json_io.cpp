#include "ultrazeta/json_io.hpp"

namespace ultrazeta {

json to_json(const FieldSpec& field) { return json{{"kind", field.kind_name()}, {"p", field.p}}; }

FieldSpec field_from_json(const json& j) {
  try {
    std::string kind = j.at("kind").get<std::string>();
    unsigned p = j.at("p").get<unsigned>();
    if (kind == "Qp") return FieldSpec::qp(p);
    if (kind == "LaurentFp") return FieldSpec::laurent(p);
    throw ValidationError("unknown field kind '" + kind + "'");
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed field spec: ") + e.what());
  }
}

json to_json(const LocalFieldElement& x) {
  json j{{"field", to_json(x.field())}};
  if (x.is_zero()) {
    j["val"] = nullptr;
    j["digits"] = json::array();
  } else {
    j["val"] = *x.valuation();
    j["digits"] = x.digits();
  }
  return j;
}

LocalFieldElement element_from_json(const json& j) {
  try {
    FieldSpec field = field_from_json(j.at("field"));
    if (j.at("val").is_null()) return LocalFieldElement::zero(field);
    long val = j.at("val").get<long>();
    auto digits = j.at("digits").get<std::vector<long>>();
    std::vector<unsigned> d;
    for (long x : digits) {
      if (x < 0 || x >= static_cast<long>(field.p)) throw ValidationError("digit " + std::to_string(x) + " is out of range");
      d.push_back(static_cast<unsigned>(x));
    }
    if (d.empty()) throw ValidationError("a nonzero element needs at least one digit");
    return LocalFieldElement::from_digits(field, val, d);
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed field element: ") + e.what());
  }
}

FieldVector vector_from_json(const json& j) {
  if (!j.is_array()) throw ValidationError("a field vector must be a JSON array");
  std::vector<LocalFieldElement> coords;
  for (const auto& x : j) coords.push_back(element_from_json(x));
  return FieldVector(std::move(coords));
}

json to_json(Complex z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

json to_json(ComplexL z) { return to_json(Complex(static_cast<double>(z.real()), static_cast<double>(z.imag()))); }

Complex complex_from_json(const json& j) {
  try {
    if (j.is_number()) return {j.get<double>(), 0.0};
    return {j.at("re").get<double>(), j.value("im", 0.0)};
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed complex number: ") + e.what());
  }
}

json to_json(const GridFunction& g, bool dense) {
  const GridShape& s = g.shape();
  json values = json::array();
  for (std::size_t c = 0; c < s.size(); ++c) {
    if (!dense && g[c] == Complex(0)) continue;
    json coset = json::array();
    for (std::size_t r : s.axis_indices(c)) {
      json digits = json::array();
      for (int k = 0; k < s.axis_digits(); ++k) digits.push_back(s.axis_digit(r, k));
      coset.push_back(std::move(digits));
    }
    values.push_back(json{{"coset", std::move(coset)}, {"re", g[c].real()}, {"im", g[c].imag()}});
  }
  return json{{"field", to_json(s.field)}, {"n", s.n}, {"L", s.L}, {"m", s.m}, {"values", std::move(values)}};
}

GridFunction grid_from_json(const json& j) {
  try {
    GridShape s = GridShape::make(field_from_json(j.at("field")), j.at("n").get<int>(), j.at("L").get<int>(), j.at("m").get<int>());
    GridFunction g(s);
    for (const auto& entry : j.at("values")) {
      const json& coset = entry.at("coset");
      if (!coset.is_array() || static_cast<int>(coset.size()) != s.n) throw ValidationError("coset must list one digit string per axis");
      std::vector<std::size_t> axes;
      for (const auto& digits : coset) {
        if (static_cast<int>(digits.size()) != s.axis_digits())
          throw ValidationError("coset digit strings must have L + m entries");
        std::size_t r = 0, scale = 1;
        for (const auto& d : digits) {
          long x = d.get<long>();
          if (x < 0 || x >= static_cast<long>(s.field.p)) throw ValidationError("coset digit out of range");
          r += static_cast<std::size_t>(x) * scale;
          scale *= s.field.p;
        }
        axes.push_back(r);
      }
      g[s.flat_index(axes)] = Complex(entry.value("re", 0.0), entry.value("im", 0.0));
    }
    return g;
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed grid function: ") + e.what());
  }
}

json to_json(const std::vector<Rational>& series) {
  json out = json::array();
  for (const auto& c : series) out.push_back(to_string(c));
  return out;
}

json to_json(const RationalFunctionT& f) {
  return json{{"q", f.q()},
              {"numerator", to_json(f.num().coeffs())},
              {"denominator", to_json(f.den().coeffs())},
              {"factored", factored_string(f)}};
}

json to_json(const ComplexRationalFunction& f) {
  json num = json::array(), den = json::array();
  for (const auto& c : f.num().coeffs()) num.push_back(to_json(c));
  for (const auto& c : f.den().coeffs()) den.push_back(to_json(c));
  return json{{"q", f.q()}, {"numerator", std::move(num)}, {"denominator", std::move(den)}};
}

json to_json(const LambdaPoly<Rational>& p) {
  json terms = json::array();
  for (const auto& [k, c] : p) terms.push_back(json{{"lambda_power", k}, {"coefficient", to_string(c)}});
  return json{{"terms", std::move(terms)}, {"text", lambda_string(p)}};
}

}  // namespace ultrazeta
