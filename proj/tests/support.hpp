#pragma once

#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "glpwb/formula.hpp"
#include "glpwb/ordinal.hpp"
#include "glpwb/worm.hpp"

namespace glpwb::testing {

inline Ordinal ord(const std::string& s) { return parse_ordinal(s); }
inline Ordinal nat(std::uint64_t n) { return Ordinal::nat(n); }
inline Ordinal w() { return Ordinal::omega(); }

// epsilon_x built directly as the atom e^w(1+x), bypassing hyper_exp.
inline Ordinal eps(const Ordinal& x) { return make_atom(nat(1), add(nat(1), x)); }

// e^n(1) as an explicit tower of w-powers.
inline Ordinal tower(std::uint64_t n) {
  Ordinal t = nat(1);
  for (std::uint64_t i = 0; i < n; ++i) t = omega_pow(t);
  return t;
}

// All canonical notations with node_count <= max_size and coefficients
// <= max_coef, deduplicated and sorted.
std::vector<Ordinal> enumerate_notations(std::size_t max_size, std::uint64_t max_coef = 2);

// Random canonical ordinal of bounded nesting, built through public operations.
Ordinal random_ordinal(std::mt19937_64& rng, int depth);
// Random ordinal below w^2.
Ordinal random_small_index(std::mt19937_64& rng);

// Random closed formula of depth <= depth with modal indices below w^2.
FormulaPtr random_closed_formula(std::mt19937_64& rng, int depth);

Worm random_finite_worm(std::mt19937_64& rng, std::size_t max_len, std::uint64_t max_entry);

}  // namespace glpwb::testing

namespace glpwb {
// Lets test frameworks print ordinals in failure messages.
inline std::ostream& operator<<(std::ostream& os, const Ordinal& o) { return os << render(o); }
}  // namespace glpwb
