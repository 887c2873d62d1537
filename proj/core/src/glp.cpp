#include "glpwb/glp.hpp"

#include <map>

namespace glpwb {

namespace {

class ClosedEvaluator {
 public:
  ClosedEvaluator(Ordinal theta, bool shifted) : theta_(std::move(theta)), shifted_(shifted) {}

  SimpleSet eval(const FormulaPtr& f) {
    auto it = memo_.find(f.get());
    if (it != memo_.end()) return it->second;
    SimpleSet r = compute(f);
    memo_.emplace(f.get(), r);
    return r;
  }

 private:
  Ordinal subscript(const Ordinal& l) const {
    return shifted_ ? add(Ordinal::nat(1), l) : l;
  }

  SimpleSet compute(const FormulaPtr& f) {
    using Op = Formula::Op;
    switch (f->op) {
      case Op::Top:
        return full_set(theta_);
      case Op::Bot:
        return empty_set(theta_);
      case Op::Var:
        throw DomainError("formula is not closed: variable " + f->name);
      case Op::Not:
        return complement(eval(f->left));
      case Op::And:
        return intersect(eval(f->left), eval(f->right));
      case Op::Or:
        return unite(eval(f->left), eval(f->right));
      case Op::Imp:
        return unite(complement(eval(f->left)), eval(f->right));
      case Op::Dia:
        return derived_set(eval(f->left), subscript(f->index));
      case Op::Box:
        return complement(derived_set(complement(eval(f->left)), subscript(f->index)));
    }
    throw DomainError("unknown formula node");
  }

  Ordinal theta_;
  bool shifted_;
  std::map<const Formula*, SimpleSet> memo_;
};

}  // namespace

SimpleSet eval_closed(const FormulaPtr& phi, const Ordinal& theta, bool shifted) {
  return ClosedEvaluator(theta, shifted).eval(phi);
}

bool is_valid_closed(const FormulaPtr& phi, const Ordinal& theta, bool shifted) {
  return is_empty(complement(eval_closed(phi, theta, shifted)));
}

std::optional<Ordinal> satisfy_witness(const FormulaPtr& phi, const Ordinal& theta, bool shifted) {
  return witness(eval_closed(phi, theta, shifted));
}

FormulaPtr worm_to_formula(const Worm& w) {
  FormulaPtr f = top();
  for (auto it = w.rbegin(); it != w.rend(); ++it) f = dia(*it, f);
  return f;
}

}  // namespace glpwb
