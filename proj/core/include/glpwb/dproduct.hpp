#pragma once

#include "glpwb/ordinal.hpp"

namespace glpwb {

// Ordinal bookkeeping for the d-product of [0, xi] and [0, theta].
struct DProductContext {
  DProductContext(Ordinal xi, Ordinal theta);
  Ordinal xi;
  Ordinal theta;
  // -1 + (1+xi)(1+theta)
  Ordinal bound;
};

enum class Component { G0, G1 };

// -1 + x for x > 0.
Ordinal minus_one_plus(const Ordinal& x);

Component component(const DProductContext& ctx, const Ordinal& point);
Ordinal pi0(const DProductContext& ctx, const Ordinal& point);
Ordinal pi1(const DProductContext& ctx, const Ordinal& point);

}  // namespace glpwb
