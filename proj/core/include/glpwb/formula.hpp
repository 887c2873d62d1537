#pragma once

#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "glpwb/ordinal.hpp"

namespace glpwb {

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
  enum class Op { Top, Bot, Var, Not, And, Or, Imp, Box, Dia };
  Op op;
  std::string name;
  Ordinal index;
  FormulaPtr left;
  FormulaPtr right;
};

FormulaPtr top();
FormulaPtr bot();
FormulaPtr var(std::string name);
FormulaPtr neg(FormulaPtr a);
FormulaPtr conj(FormulaPtr a, FormulaPtr b);
FormulaPtr disj(FormulaPtr a, FormulaPtr b);
FormulaPtr imp(FormulaPtr a, FormulaPtr b);
FormulaPtr box(Ordinal index, FormulaPtr a);
FormulaPtr dia(Ordinal index, FormulaPtr a);
// Conjunction of the list; top() when empty.
FormulaPtr conj_all(const std::vector<FormulaPtr>& fs);

bool equal(const FormulaPtr& a, const FormulaPtr& b);
bool is_closed(const FormulaPtr& f);
std::set<Ordinal> modal_indices(const FormulaPtr& f);
std::set<std::string> variables(const FormulaPtr& f);
std::size_t modal_depth(const FormulaPtr& f);

struct Condensed {
  FormulaPtr formula;
  // index_map[n] is the ordinal that modality n stands for.
  std::vector<Ordinal> index_map;
};
Condensed condense(const FormulaPtr& f);

FormulaPtr parse_formula(std::string_view text);
std::string render(const FormulaPtr& f);

}  // namespace glpwb
