#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "glpwb/ordinal.hpp"
#include "glpwb/simple_function.hpp"

namespace glpwb {

// (lower, upper]_subscript = { t : lower < l^subscript(t) <= upper }.
// A missing lower bound is the sentinel -1; a missing upper bound means the
// interval is unbounded above within the ambient space.
struct Interval {
  std::optional<Ordinal> lower;
  std::optional<Ordinal> upper;
  Ordinal subscript;
};

bool operator==(const Interval& a, const Interval& b);
bool contains(const Interval& i, const Ordinal& point);

// Intervals sorted by strictly increasing subscript; empty means everything.
using Conjunction = std::vector<Interval>;

// Union of conjunctions inside the ambient space [0, theta).
struct SimpleSet {
  std::vector<Conjunction> disjuncts;
  Ordinal theta;
};

SimpleSet empty_set(const Ordinal& theta);
SimpleSet full_set(const Ordinal& theta);
SimpleSet interval_set(const Ordinal& theta, Interval i);
SimpleSet conjunction_set(const Ordinal& theta, Conjunction c);

bool member(const Ordinal& point, const SimpleSet& s);
SimpleSet complement(const SimpleSet& s);
SimpleSet intersect(const SimpleSet& a, const SimpleSet& b);
SimpleSet unite(const SimpleSet& a, const SimpleSet& b);

// Least point of a conjunction (ignoring the ambient bound), if any.
std::optional<Ordinal> conjunction_min(const Conjunction& c);
std::optional<Ordinal> witness(const SimpleSet& s);
bool is_empty(const SimpleSet& s);

SimpleSet derived_set(const SimpleSet& s, const Ordinal& lambda);
Ordinal rank(const Ordinal& theta, const Ordinal& xi);
SimpleSet neighborhood(const SimpleFunction& r, const Ordinal& alpha, const Ordinal& theta);
// A basic neighborhood of xi in which every other point has strictly smaller
// l^lambda.
Conjunction isolating_neighborhood(const Ordinal& xi, const Ordinal& lambda);

// Text form: (a,b]_x & (c,inf)_y | ... ; "empty" and "full" for the extremes.
SimpleSet parse_simple_set(std::string_view text, const Ordinal& theta);
std::string render(const Interval& i);
std::string render(const Conjunction& c);
std::string render(const SimpleSet& s);

}  // namespace glpwb
