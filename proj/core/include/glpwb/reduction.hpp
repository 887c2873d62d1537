#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "glpwb/icard.hpp"
#include "glpwb/ordinal.hpp"

namespace glpwb {

bool is_infinite_indecomposable(const Ordinal& x);

// Parameters of the reductive map from [0, e^lambda(theta)] onto [0, e(theta)].
struct ReductionContext {
  ReductionContext(Ordinal theta, Ordinal lambda);
  Ordinal theta;
  Ordinal lambda;
  // e^lambda(theta)
  Ordinal top;
};

std::uint64_t n_index(const ReductionContext& ctx, const Ordinal& point);
Ordinal sigma(const ReductionContext& ctx, std::uint64_t n);

struct ReductionStep {
  Ordinal theta;
  std::uint64_t n;
  Ordinal sigma;
  Ordinal argument;
};

struct ReductionResult {
  Ordinal value;
  std::vector<ReductionStep> trace;
};

ReductionResult reductive_map_traced(const ReductionContext& ctx, const Ordinal& xi);
Ordinal reductive_map(const ReductionContext& ctx, const Ordinal& xi);
// Handles every lambda: identity, successor, composite and indecomposable.
Ordinal reductive_map_general(const Ordinal& theta, const Ordinal& lambda, const Ordinal& xi);

// Points with n_index equal to n, as a simple set over [0, e^lambda(theta)).
SimpleSet delta_block(const ReductionContext& ctx, std::uint64_t n);
// The half-open interval [sigma(n), sigma(n+1)).
std::pair<Ordinal, Ordinal> sigma_block(const ReductionContext& ctx, std::uint64_t n);

}  // namespace glpwb
