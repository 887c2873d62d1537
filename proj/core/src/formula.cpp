#include "glpwb/formula.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace glpwb {

using Op = Formula::Op;

namespace {

FormulaPtr make(Op op, std::string name, Ordinal index, FormulaPtr l, FormulaPtr r) {
  return std::make_shared<const Formula>(
      Formula{op, std::move(name), std::move(index), std::move(l), std::move(r)});
}

}  // namespace

FormulaPtr top() {
  static const FormulaPtr t = make(Op::Top, "", Ordinal(), nullptr, nullptr);
  return t;
}
FormulaPtr bot() {
  static const FormulaPtr f = make(Op::Bot, "", Ordinal(), nullptr, nullptr);
  return f;
}
FormulaPtr var(std::string name) { return make(Op::Var, std::move(name), Ordinal(), nullptr, nullptr); }
FormulaPtr neg(FormulaPtr a) { return make(Op::Not, "", Ordinal(), std::move(a), nullptr); }
FormulaPtr conj(FormulaPtr a, FormulaPtr b) {
  return make(Op::And, "", Ordinal(), std::move(a), std::move(b));
}
FormulaPtr disj(FormulaPtr a, FormulaPtr b) {
  return make(Op::Or, "", Ordinal(), std::move(a), std::move(b));
}
FormulaPtr imp(FormulaPtr a, FormulaPtr b) {
  return make(Op::Imp, "", Ordinal(), std::move(a), std::move(b));
}
FormulaPtr box(Ordinal index, FormulaPtr a) {
  return make(Op::Box, "", std::move(index), std::move(a), nullptr);
}
FormulaPtr dia(Ordinal index, FormulaPtr a) {
  return make(Op::Dia, "", std::move(index), std::move(a), nullptr);
}

FormulaPtr conj_all(const std::vector<FormulaPtr>& fs) {
  if (fs.empty()) return top();
  FormulaPtr r = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) r = conj(r, fs[i]);
  return r;
}

bool equal(const FormulaPtr& a, const FormulaPtr& b) {
  if (a == b) return true;
  if (!a || !b || a->op != b->op) return false;
  switch (a->op) {
    case Op::Top:
    case Op::Bot:
      return true;
    case Op::Var:
      return a->name == b->name;
    case Op::Box:
    case Op::Dia:
      return a->index == b->index && equal(a->left, b->left);
    default:
      return equal(a->left, b->left) && equal(a->right, b->right);
  }
}

namespace {

template <class F>
void visit(const FormulaPtr& f, F&& fn) {
  if (!f) return;
  fn(*f);
  visit(f->left, fn);
  visit(f->right, fn);
}

FormulaPtr reindex(const FormulaPtr& f, const std::map<Ordinal, Ordinal>& m) {
  switch (f->op) {
    case Op::Top:
    case Op::Bot:
    case Op::Var:
      return f;
    case Op::Not:
      return neg(reindex(f->left, m));
    case Op::Box:
      return box(m.at(f->index), reindex(f->left, m));
    case Op::Dia:
      return dia(m.at(f->index), reindex(f->left, m));
    default:
      return make(f->op, "", Ordinal(), reindex(f->left, m), reindex(f->right, m));
  }
}

}  // namespace

bool is_closed(const FormulaPtr& f) {
  bool closed = true;
  visit(f, [&](const Formula& g) { closed = closed && g.op != Op::Var; });
  return closed;
}

std::set<Ordinal> modal_indices(const FormulaPtr& f) {
  std::set<Ordinal> out;
  visit(f, [&](const Formula& g) {
    if (g.op == Op::Box || g.op == Op::Dia) out.insert(g.index);
  });
  return out;
}

std::set<std::string> variables(const FormulaPtr& f) {
  std::set<std::string> out;
  visit(f, [&](const Formula& g) {
    if (g.op == Op::Var) out.insert(g.name);
  });
  return out;
}

std::size_t modal_depth(const FormulaPtr& f) {
  if (!f) return 0;
  const std::size_t d = std::max(modal_depth(f->left), modal_depth(f->right));
  return (f->op == Op::Box || f->op == Op::Dia) ? d + 1 : d;
}

Condensed condense(const FormulaPtr& f) {
  const std::set<Ordinal> idx = modal_indices(f);
  std::map<Ordinal, Ordinal> m;
  Condensed out;
  for (const Ordinal& o : idx) {
    m.emplace(o, Ordinal::nat(out.index_map.size()));
    out.index_map.push_back(o);
  }
  out.formula = reindex(f, m);
  return out;
}

// ---------------------------------------------------------------------------
// Text form

namespace {

class FormulaParser {
 public:
  explicit FormulaParser(std::string_view text) : text_(text) {}

  FormulaPtr parse() {
    FormulaPtr f = implication(0);
    skip();
    if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
    return f;
  }

 private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(std::string_view tok) {
    skip();
    if (text_.substr(pos_, tok.size()) != tok) return false;
    pos_ += tok.size();
    return true;
  }
  void expect(std::string_view tok) {
    if (!accept(tok)) throw ParseError("expected '" + std::string(tok) + "'", pos_);
  }
  void check_depth(std::size_t depth) {
    if (depth > max_depth()) throw ParseError("nesting too deep", pos_);
  }

  FormulaPtr implication(std::size_t depth) {
    check_depth(depth);
    FormulaPtr l = disjunction(depth);
    if (accept("->")) return imp(std::move(l), implication(depth + 1));
    return l;
  }
  FormulaPtr disjunction(std::size_t depth) {
    FormulaPtr l = conjunction(depth);
    while (accept("|")) l = disj(std::move(l), conjunction(depth));
    return l;
  }
  FormulaPtr conjunction(std::size_t depth) {
    FormulaPtr l = unary(depth);
    while (accept("&")) l = conj(std::move(l), unary(depth));
    return l;
  }
  FormulaPtr unary(std::size_t depth) {
    check_depth(depth);
    skip();
    if (accept("~")) return neg(unary(depth + 1));
    if (accept("[")) {
      Ordinal i = OrdinalParser(text_, pos_).expression();
      expect("]");
      return box(std::move(i), unary(depth + 1));
    }
    if (accept("<")) {
      Ordinal i = OrdinalParser(text_, pos_).expression();
      expect(">");
      return dia(std::move(i), unary(depth + 1));
    }
    if (accept("(")) {
      FormulaPtr f = implication(depth + 1);
      expect(")");
      return f;
    }
    return atom();
  }
  FormulaPtr atom() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    if (start == pos_) {
      if (pos_ >= text_.size()) throw ParseError("unexpected end of formula", pos_);
      throw ParseError(std::string("unexpected character '") + text_[pos_] + "'", pos_);
    }
    const std::string_view word = text_.substr(start, pos_ - start);
    if (std::isdigit(static_cast<unsigned char>(word[0])))
      throw ParseError("identifier cannot start with a digit", start);
    if (word == "T") return top();
    if (word == "F") return bot();
    return var(std::string(word));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

int precedence(Op op) {
  switch (op) {
    case Op::Imp:
      return 1;
    case Op::Or:
      return 2;
    case Op::And:
      return 3;
    default:
      return 4;
  }
}

std::string render_at(const FormulaPtr& f, int ctx) {
  std::string s;
  switch (f->op) {
    case Op::Top:
      return "T";
    case Op::Bot:
      return "F";
    case Op::Var:
      return f->name;
    case Op::Not:
      return "~" + render_at(f->left, 4);
    case Op::Box:
      return "[" + render(f->index) + "]" + render_at(f->left, 4);
    case Op::Dia:
      return "<" + render(f->index) + ">" + render_at(f->left, 4);
    case Op::And:
      s = render_at(f->left, 3) + " & " + render_at(f->right, 4);
      break;
    case Op::Or:
      s = render_at(f->left, 2) + " | " + render_at(f->right, 3);
      break;
    case Op::Imp:
      s = render_at(f->left, 2) + " -> " + render_at(f->right, 1);
      break;
  }
  return precedence(f->op) < ctx ? "(" + s + ")" : s;
}

}  // namespace

FormulaPtr parse_formula(std::string_view text) { return FormulaParser(text).parse(); }

std::string render(const FormulaPtr& f) { return render_at(f, 0); }

}  // namespace glpwb
