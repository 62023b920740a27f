#pragma once

#include "ultrazeta/grid.hpp"

namespace ultrazeta {

// (Fg)(xi) = int g(x) chi(-x.xi) dx as an exact character sum over cosets.
// The result lives on shape.dual(): support exponent m, resolution L.
GridFunction fourier_transform(const GridFunction& g);

// F^{-1} h (x) = (F h)(-x).
GridFunction inverse_fourier_transform(const GridFunction& h);

}  // namespace ultrazeta
