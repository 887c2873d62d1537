#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "glpwb/formula.hpp"

namespace glpwb {

// Finite polymodal frame. An edge (a, b) in relations[n] means a <_n b, so
// <n>phi holds at b when phi holds at some a <_n b. At most 64 worlds.
struct JFrame {
  std::vector<std::string> worlds;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> relations;
};

struct JModel {
  JFrame frame;
  std::map<std::string, std::vector<std::size_t>> valuation;
};

std::vector<std::string> validate_j_frame(const JFrame& f);
bool is_treelike(const JFrame& f);

bool model_check(const JModel& m, std::size_t world, const FormulaPtr& phi);
// Bitmask of the worlds where phi holds.
std::uint64_t truth_set(const JModel& m, const FormulaPtr& phi);

// M+(phi) over relations 0..top; top defaults to the largest index in phi.
FormulaPtr m_plus(const FormulaPtr& phi, std::optional<std::uint64_t> top_index = std::nullopt);

struct SatResult {
  JModel model;
  std::size_t world;
};
// Searches connected tree-like J-frames by increasing size; nullopt means no
// model within the bound, not unsatisfiability.
std::optional<SatResult> bounded_sat(const FormulaPtr& phi, std::size_t max_worlds);

// Every connected tree-like J-frame with relations 0..top and exactly
// `worlds` worlds, one per isomorphism type.
std::vector<JFrame> treelike_frames(std::size_t worlds, std::size_t top);

// True iff f satisfies the GLP frame correspondence conditions: each relation
// transitive and well-founded, <_z contained in <_x for x < z, and
// v <_z w, u <_x w, x < z imply u <_x v.
bool glp_frame_triviality(const JFrame& f);

struct TrivialitySweep {
  std::uint64_t frames = 0;
  std::uint64_t satisfying = 0;
  // Satisfying frames with some nonempty relation above index 0.
  std::uint64_t nontrivial = 0;
};
TrivialitySweep glp_triviality_sweep(std::size_t max_worlds, std::size_t relations);

}  // namespace glpwb
