#pragma once

#include "hhc/algebra.hpp"
#include "hhc/complex.hpp"

#include <string>

namespace hhc {

class Map;

// "e0⊗e1 − e1⊗e0", "2·x·e1", "0" for zero. Algebra factors print as left/right
// multipliers of the neighbouring generator; interior ones attach to the next factor.
std::string render(const Complex& P, const Tensor& x);
std::string render(const Algebra& A, const AlgebraElement& a);
// One "label ↦ value" line per certified generator with a nonzero value.
std::string render(const Map& f);

}  // namespace hhc
