#include "json_io.hpp"

namespace glpwb::io {

json to_json(const Ordinal& o) { return render(o); }

json to_json(const SimpleFunction& r) {
  json out = json::object();
  for (const auto& [k, v] : r) out[render(k)] = render(v);
  return out;
}

json to_json(const Interval& i) {
  return json{{"lower", i.lower ? json(render(*i.lower)) : json(nullptr)},
              {"upper", i.upper ? json(render(*i.upper)) : json(nullptr)},
              {"subscript", render(i.subscript)}};
}

json to_json(const SimpleSet& s) {
  json disjuncts = json::array();
  for (const Conjunction& c : s.disjuncts) {
    json conj = json::array();
    for (const Interval& i : c) conj.push_back(to_json(i));
    disjuncts.push_back(std::move(conj));
  }
  return json{{"theta", render(s.theta)}, {"disjuncts", std::move(disjuncts)}, {"text", render(s)}};
}

json to_json(const ReductionResult& r) {
  json trace = json::array();
  for (const ReductionStep& st : r.trace) {
    trace.push_back(json{{"theta", render(st.theta)},
                         {"n", st.n},
                         {"sigma", render(st.sigma)},
                         {"argument", render(st.argument)}});
  }
  return json{{"value", render(r.value)}, {"trace", std::move(trace)}};
}

json to_json(const JModel& m) {
  json relations = json::array();
  for (const auto& rel : m.frame.relations) {
    json edges = json::array();
    for (const auto& [a, b] : rel) edges.push_back(json::array({m.frame.worlds[a], m.frame.worlds[b]}));
    relations.push_back(std::move(edges));
  }
  json valuation = json::object();
  for (const auto& [name, ws] : m.valuation) {
    json names = json::array();
    for (std::size_t w : ws) names.push_back(m.frame.worlds[w]);
    valuation[name] = std::move(names);
  }
  return json{{"worlds", m.frame.worlds}, {"relations", std::move(relations)},
              {"valuation", std::move(valuation)}};
}

std::size_t world_index(const JFrame& f, const std::string& name) {
  for (std::size_t i = 0; i < f.worlds.size(); ++i) {
    if (f.worlds[i] == name) return i;
  }
  throw DomainError("unknown world '" + name + "'");
}

JModel model_from_json(const json& j) {
  JModel m;
  try {
    m.frame.worlds = j.at("worlds").get<std::vector<std::string>>();
    for (const json& rel : j.at("relations")) {
      std::vector<std::pair<std::size_t, std::size_t>> edges;
      for (const json& e : rel) {
        if (!e.is_array() || e.size() != 2) throw ParseError("edges must be [from, to] pairs", 0);
        edges.emplace_back(world_index(m.frame, e[0].get<std::string>()),
                           world_index(m.frame, e[1].get<std::string>()));
      }
      m.frame.relations.push_back(std::move(edges));
    }
    if (j.contains("valuation")) {
      for (const auto& [name, ws] : j.at("valuation").items()) {
        std::vector<std::size_t> idx;
        for (const json& w : ws) idx.push_back(world_index(m.frame, w.get<std::string>()));
        m.valuation[name] = std::move(idx);
      }
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed frame JSON: ") + e.what(), 0);
  }
  return m;
}

}  // namespace glpwb::io
