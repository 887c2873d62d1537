#include "glpwb/simple_function.hpp"

#include <cctype>

namespace glpwb {

SimpleFunction join(const SimpleFunction& r, const SimpleFunction& s) {
  SimpleFunction out = r;
  for (const auto& [k, v] : s) {
    auto [it, inserted] = out.emplace(k, v);
    if (!inserted && it->second < v) it->second = v;
  }
  return out;
}

bool bounded_by(const SimpleFunction& s, const Ordinal& alpha, bool strict) {
  if (s.empty()) return true;
  const Ordinal& top = s.rbegin()->first;
  for (const auto& [xi, bound] : s) {
    const Ordinal lg = hyper_log(xi, alpha);
    const bool last = xi == top;
    if (last && !strict) {
      if (lg < bound) return false;
    } else if (!(bound < lg)) {
      return false;
    }
  }
  return true;
}

Ordinal ceil(const SimpleFunction& r) {
  if (r.empty()) return Ordinal();
  Ordinal gamma;
  auto it = r.begin();
  if (it->first.is_zero()) {
    gamma = successor(it->second);
    ++it;
    if (it == r.end()) return r.begin()->second;
  }
  const Ordinal eta = it->first;
  SimpleFunction shifted;
  for (; it != r.end(); ++it) shifted.emplace(left_subtract(eta, it->first), it->second);
  return add(gamma, hyper_exp(eta, ceil(shifted)));
}

Ordinal ceil_strict(const SimpleFunction& r) {
  if (r.empty()) throw DomainError("ceil_strict of an empty simple function");
  SimpleFunction bumped = r;
  auto last = std::prev(bumped.end());
  last->second = successor(last->second);
  return ceil(bumped);
}

SimpleFunction parse_simple_function(std::string_view text) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto expect = [&](char c) {
    skip();
    if (pos >= text.size() || text[pos] != c)
      throw ParseError(std::string("expected '") + c + "'", pos);
    ++pos;
  };
  SimpleFunction out;
  expect('{');
  skip();
  if (pos < text.size() && text[pos] == '}') {
    ++pos;
  } else {
    for (;;) {
      const std::size_t start = pos;
      Ordinal key = OrdinalParser(text, pos).expression();
      expect(':');
      Ordinal value = OrdinalParser(text, pos).expression();
      if (!out.emplace(std::move(key), std::move(value)).second)
        throw ParseError("duplicate index", start);
      skip();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      expect('}');
      break;
    }
  }
  skip();
  if (pos != text.size()) throw ParseError("unexpected trailing input", pos);
  return out;
}

std::string render(const SimpleFunction& r) {
  std::string out = "{";
  for (const auto& [k, v] : r) {
    if (out.size() > 1) out += ", ";
    out += render(k) + ":" + render(v);
  }
  return out + "}";
}

}  // namespace glpwb
