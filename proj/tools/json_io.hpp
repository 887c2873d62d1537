#pragma once

#include <json.hpp>

#include "glpwb/icard.hpp"
#include "glpwb/jlogic.hpp"
#include "glpwb/reduction.hpp"
#include "glpwb/simple_function.hpp"

namespace glpwb::io {

using nlohmann::json;

json to_json(const Ordinal& o);
json to_json(const SimpleFunction& r);
json to_json(const Interval& i);
json to_json(const SimpleSet& s);
json to_json(const ReductionResult& r);
json to_json(const JModel& m);

// Frame and model files: {"worlds": [...], "relations": [[["u","w"], ...], ...],
// "valuation": {"p": ["u"]}}. The valuation key is optional.
JModel model_from_json(const json& j);
std::size_t world_index(const JFrame& f, const std::string& name);

}  // namespace glpwb::io
