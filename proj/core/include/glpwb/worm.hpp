#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "glpwb/ordinal.hpp"

namespace glpwb {

// <l0><l1>...<lI>T, stored outermost modality first.
using Worm = std::vector<Ordinal>;

Worm diamond_concat(const Worm& v, const Worm& w);
Worm uparrow(const Ordinal& alpha, const Worm& w);
Ordinal order_type(const Worm& w);
OrdCompare worm_compare(const Worm& v, const Worm& w);

Worm parse_worm(std::string_view text);
std::string render(const Worm& w);

}  // namespace glpwb
