#pragma once

#include <json.hpp>
#include <vector>

#include "ultrazeta/grid.hpp"
#include "ultrazeta/laurent.hpp"
#include "ultrazeta/local_field.hpp"
#include "ultrazeta/rational_function.hpp"

namespace ultrazeta {

using json = nlohmann::ordered_json;

json to_json(const FieldSpec& field);
FieldSpec field_from_json(const json& j);

// {"field":{...},"val":1,"digits":[...]}; zero has "val": null.
json to_json(const LocalFieldElement& x);
LocalFieldElement element_from_json(const json& j);
FieldVector vector_from_json(const json& j);

json to_json(Complex z);
json to_json(ComplexL z);
Complex complex_from_json(const json& j);

// Cosets are lists of per-axis digits ordered from exponent -L upward.
// Sparse output lists nonzero cells only.
json to_json(const GridFunction& g, bool dense = false);
GridFunction grid_from_json(const json& j);

json to_json(const std::vector<Rational>& series);
json to_json(const RationalFunctionT& f);
json to_json(const ComplexRationalFunction& f);
json to_json(const LambdaPoly<Rational>& p);

}  // namespace ultrazeta
