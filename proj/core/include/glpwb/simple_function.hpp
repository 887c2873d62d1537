#pragma once

#include <map>
#include <string>
#include <string_view>

#include "glpwb/ordinal.hpp"

namespace glpwb {

// Finite partial map from modality indices to lower bounds on hyperlogarithms.
using SimpleFunction = std::map<Ordinal, Ordinal>;

SimpleFunction join(const SimpleFunction& r, const SimpleFunction& s);
bool bounded_by(const SimpleFunction& s, const Ordinal& alpha, bool strict);
// Least ordinal bounding r (non-strictly).
Ordinal ceil(const SimpleFunction& r);
// Least ordinal strictly bounding r; r must be non-empty.
Ordinal ceil_strict(const SimpleFunction& r);

// Text form: {0:e[w](1), w:w^2, w+1:2}
SimpleFunction parse_simple_function(std::string_view text);
std::string render(const SimpleFunction& r);

}  // namespace glpwb
