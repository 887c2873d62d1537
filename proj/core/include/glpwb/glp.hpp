#pragma once

#include <optional>

#include "glpwb/formula.hpp"
#include "glpwb/icard.hpp"
#include "glpwb/worm.hpp"

namespace glpwb {

// Value of a closed formula in the Icard space [0, theta). With shifted set,
// <l> is read as the derived set at subscript 1+l.
SimpleSet eval_closed(const FormulaPtr& phi, const Ordinal& theta, bool shifted);
bool is_valid_closed(const FormulaPtr& phi, const Ordinal& theta, bool shifted);
std::optional<Ordinal> satisfy_witness(const FormulaPtr& phi, const Ordinal& theta, bool shifted);

FormulaPtr worm_to_formula(const Worm& w);

}  // namespace glpwb
