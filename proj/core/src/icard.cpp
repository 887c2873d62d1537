#include "glpwb/icard.hpp"

#include <algorithm>
#include <cctype>

namespace glpwb {

namespace {

bool lower_le(const std::optional<Ordinal>& a, const std::optional<Ordinal>& b) {
  if (!a) return true;
  if (!b) return false;
  return *a <= *b;
}

bool upper_le(const std::optional<Ordinal>& a, const std::optional<Ordinal>& b) {
  if (!b) return true;
  if (!a) return false;
  return *a <= *b;
}

// Sorts and merges equal subscripts; nullopt when bounds contradict outright.
std::optional<Conjunction> normalize(Conjunction c) {
  std::stable_sort(c.begin(), c.end(),
                   [](const Interval& a, const Interval& b) { return a.subscript < b.subscript; });
  Conjunction out;
  for (Interval& i : c) {
    if (!out.empty() && out.back().subscript == i.subscript) {
      Interval& m = out.back();
      if (lower_le(m.lower, i.lower)) m.lower = std::move(i.lower);
      if (upper_le(i.upper, m.upper)) m.upper = std::move(i.upper);
    } else {
      out.push_back(std::move(i));
    }
  }
  Conjunction kept;
  for (Interval& i : out) {
    if (!i.lower && !i.upper) continue;
    if (i.lower && i.upper && *i.upper <= *i.lower) return std::nullopt;
    kept.push_back(std::move(i));
  }
  return kept;
}

// a is contained in b as read off the bounds.
bool subsumed(const Conjunction& a, const Conjunction& b) {
  for (const Interval& j : b) {
    auto it = std::find_if(a.begin(), a.end(),
                           [&](const Interval& i) { return i.subscript == j.subscript; });
    if (it == a.end()) return false;
    if (!lower_le(j.lower, it->lower) || !upper_le(it->upper, j.upper)) return false;
  }
  return true;
}

std::vector<Conjunction> prune(std::vector<Conjunction> in, const Ordinal& theta) {
  std::vector<Conjunction> live;
  for (Conjunction& c : in) {
    const std::optional<Ordinal> m = conjunction_min(c);
    if (m && *m < theta) live.push_back(std::move(c));
  }
  std::vector<Conjunction> out;
  for (std::size_t i = 0; i < live.size(); ++i) {
    bool drop = false;
    for (std::size_t j = 0; j < live.size() && !drop; ++j) {
      if (i == j || !subsumed(live[i], live[j])) continue;
      // Among mutually subsuming (equal) conjunctions keep the first.
      drop = !subsumed(live[j], live[i]) || j < i;
    }
    if (!drop) out.push_back(live[i]);
  }
  return out;
}

void check_theta(const SimpleSet& a, const SimpleSet& b) {
  if (a.theta != b.theta)
    throw DomainError("ambient bound mismatch: " + render(a.theta) + " vs " + render(b.theta));
}

}  // namespace

bool operator==(const Interval& a, const Interval& b) {
  return a.lower == b.lower && a.upper == b.upper && a.subscript == b.subscript;
}

bool contains(const Interval& i, const Ordinal& point) {
  const Ordinal lg = hyper_log(i.subscript, point);
  if (i.lower && lg <= *i.lower) return false;
  if (i.upper && *i.upper < lg) return false;
  return true;
}

SimpleSet empty_set(const Ordinal& theta) { return SimpleSet{{}, theta}; }

SimpleSet full_set(const Ordinal& theta) {
  return SimpleSet{{Conjunction{}}, theta};
}

SimpleSet interval_set(const Ordinal& theta, Interval i) {
  return conjunction_set(theta, Conjunction{std::move(i)});
}

SimpleSet conjunction_set(const Ordinal& theta, Conjunction c) {
  std::optional<Conjunction> n = normalize(std::move(c));
  if (!n) return empty_set(theta);
  return SimpleSet{prune({std::move(*n)}, theta), theta};
}

bool member(const Ordinal& point, const SimpleSet& s) {
  if (!(point < s.theta))
    throw DomainError(render(point) + " is outside the ambient space [0," + render(s.theta) + ")");
  for (const Conjunction& c : s.disjuncts) {
    if (std::all_of(c.begin(), c.end(), [&](const Interval& i) { return contains(i, point); }))
      return true;
  }
  return false;
}

SimpleSet intersect(const SimpleSet& a, const SimpleSet& b) {
  check_theta(a, b);
  std::vector<Conjunction> out;
  for (const Conjunction& x : a.disjuncts) {
    for (const Conjunction& y : b.disjuncts) {
      Conjunction z = x;
      z.insert(z.end(), y.begin(), y.end());
      if (std::optional<Conjunction> n = normalize(std::move(z))) out.push_back(std::move(*n));
    }
  }
  return SimpleSet{prune(std::move(out), a.theta), a.theta};
}

SimpleSet unite(const SimpleSet& a, const SimpleSet& b) {
  check_theta(a, b);
  std::vector<Conjunction> out = a.disjuncts;
  out.insert(out.end(), b.disjuncts.begin(), b.disjuncts.end());
  return SimpleSet{prune(std::move(out), a.theta), a.theta};
}

SimpleSet complement(const SimpleSet& s) {
  SimpleSet result = full_set(s.theta);
  for (const Conjunction& c : s.disjuncts) {
    std::vector<Conjunction> pieces;
    for (const Interval& i : c) {
      if (i.lower) pieces.push_back({Interval{std::nullopt, i.lower, i.subscript}});
      if (i.upper) pieces.push_back({Interval{i.upper, std::nullopt, i.subscript}});
    }
    result = intersect(result, SimpleSet{prune(std::move(pieces), s.theta), s.theta});
    if (result.disjuncts.empty()) break;
  }
  return result;
}

std::optional<Ordinal> conjunction_min(const Conjunction& c) {
  SimpleFunction lows;
  for (const Interval& i : c) {
    if (i.lower) lows[i.subscript] = *i.lower;
  }
  const Ordinal m = lows.empty() ? Ordinal() : ceil_strict(lows);
  for (const Interval& i : c) {
    if (i.upper && *i.upper < hyper_log(i.subscript, m)) return std::nullopt;
  }
  return m;
}

std::optional<Ordinal> witness(const SimpleSet& s) {
  std::optional<Ordinal> best;
  for (const Conjunction& c : s.disjuncts) {
    const std::optional<Ordinal> m = conjunction_min(c);
    if (m && *m < s.theta && (!best || *m < *best)) best = m;
  }
  return best;
}

bool is_empty(const SimpleSet& s) { return !witness(s); }

SimpleSet derived_set(const SimpleSet& s, const Ordinal& lambda) {
  std::vector<Conjunction> out;
  for (const Conjunction& c : s.disjuncts) {
    const std::optional<Ordinal> m = conjunction_min(c);
    if (!m || !(*m < s.theta)) continue;
    Conjunction d;
    for (const Interval& i : c) {
      if (i.subscript < lambda) d.push_back(i);
    }
    d.push_back(Interval{hyper_log(lambda, *m), std::nullopt, lambda});
    out.push_back(std::move(d));
  }
  return SimpleSet{prune(std::move(out), s.theta), s.theta};
}

Ordinal rank(const Ordinal& theta, const Ordinal& xi) { return hyper_log(xi, theta); }

SimpleSet neighborhood(const SimpleFunction& r, const Ordinal& alpha, const Ordinal& theta) {
  if (!bounded_by(r, alpha, true))
    throw DomainError(render(r) + " does not strictly bound " + render(alpha));
  Conjunction c;
  for (const auto& [xi, bound] : r) c.push_back(Interval{bound, hyper_log(xi, alpha), xi});
  return conjunction_set(theta, std::move(c));
}

Conjunction isolating_neighborhood(const Ordinal& xi, const Ordinal& lambda) {
  Conjunction c;
  Ordinal lam = lambda;
  for (std::size_t guard = 0;; ++guard) {
    if (guard > max_depth()) throw DomainError("isolating_neighborhood: depth limit exceeded");
    if (lam.is_zero()) {
      c.push_back(Interval{std::nullopt, xi, Ordinal()});
      break;
    }
    if (lam.is_successor()) {
      const Ordinal alpha = predecessor(lam);
      const Ordinal v = hyper_log(alpha, xi);
      if (!v.is_zero()) c.push_back(Interval{split_last(v).prefix, v, alpha});
      lam = alpha;
    } else {
      lam = stabilization(lam, xi).lambda;
    }
  }
  return *normalize(std::move(c));
}

// ---------------------------------------------------------------------------
// Text form

namespace {

std::string render_subscript(const Ordinal& o) {
  const std::string s = render(o);
  return s.find('+') == std::string::npos ? s : "(" + s + ")";
}

}  // namespace

std::string render(const Interval& i) {
  std::string out = "(" + (i.lower ? render(*i.lower) : std::string("-1")) + ",";
  out += i.upper ? render(*i.upper) + "]" : std::string("inf)");
  return out + "_" + render_subscript(i.subscript);
}

std::string render(const Conjunction& c) {
  if (c.empty()) return "full";
  std::string out;
  for (const Interval& i : c) out += (out.empty() ? "" : " & ") + render(i);
  return out;
}

std::string render(const SimpleSet& s) {
  if (s.disjuncts.empty()) return "empty";
  std::string out;
  for (const Conjunction& c : s.disjuncts) out += (out.empty() ? "" : " | ") + render(c);
  return out;
}

SimpleSet parse_simple_set(std::string_view text, const Ordinal& theta) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto peek_word = [&](std::string_view w) {
    skip();
    return text.substr(pos, w.size()) == w;
  };
  auto expect = [&](char ch) {
    skip();
    if (pos >= text.size() || text[pos] != ch)
      throw ParseError(std::string("expected '") + ch + "'", pos);
    ++pos;
  };
  auto ordinal = [&] { return OrdinalParser(text, pos).expression(); };

  std::vector<Conjunction> disjuncts;
  for (;;) {
    Conjunction conj;
    if (peek_word("empty")) {
      pos += 5;
    } else if (peek_word("full")) {
      pos += 4;
      disjuncts.emplace_back();
    } else {
      for (;;) {
        expect('(');
        Interval iv;
        if (peek_word("-1")) {
          pos += 2;
        } else {
          iv.lower = ordinal();
        }
        expect(',');
        skip();
        const std::size_t upper_pos = pos;
        if (peek_word("inf")) {
          pos += 3;
          expect(')');
        } else {
          Ordinal up = ordinal();
          skip();
          if (pos < text.size() && text[pos] == ')') {
            if (!up.is_successor())
              throw ParseError("strict upper bound must be a successor", upper_pos);
            up = predecessor(up);
            ++pos;
          } else {
            expect(']');
          }
          iv.upper = std::move(up);
        }
        expect('_');
        iv.subscript = ordinal();
        conj.push_back(std::move(iv));
        skip();
        if (pos < text.size() && text[pos] == '&') {
          ++pos;
          continue;
        }
        break;
      }
      if (std::optional<Conjunction> n = normalize(std::move(conj)))
        disjuncts.push_back(std::move(*n));
    }
    skip();
    if (pos < text.size() && text[pos] == '|') {
      ++pos;
      continue;
    }
    break;
  }
  skip();
  if (pos != text.size()) throw ParseError("unexpected trailing input", pos);
  return SimpleSet{prune(std::move(disjuncts), theta), theta};
}

}  // namespace glpwb
