#include "glpwb/ordinal.hpp"

#include <cctype>
#include <cstdlib>
#include <limits>

namespace glpwb {

std::size_t max_depth() {
  static const std::size_t value = [] {
    const char* env = std::getenv("GLPWB_MAX_DEPTH");
    if (env != nullptr) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(env, &end, 10);
      if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return std::size_t{10000};
  }();
  return value;
}

struct OrdinalNode {
  Ordinal::Kind kind;
  std::vector<Term> terms;
  Ordinal level;
  Ordinal arg;
  std::size_t size;
};

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  if (a > std::numeric_limits<std::uint64_t>::max() - b)
    throw DomainError("coefficient overflow");
  return a + b;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
    throw DomainError("coefficient overflow");
  return a * b;
}

const Ordinal& one() {
  static const Ordinal v = Ordinal::nat(1);
  return v;
}

}  // namespace

Ordinal::Ordinal() = default;

Ordinal Ordinal::nat(std::uint64_t n) {
  if (n == 0) return Ordinal();
  return make_sum({Term{Ordinal(), n}});
}

Ordinal Ordinal::omega() {
  static const Ordinal w = make_sum({Term{Ordinal::nat(1), 1}});
  return w;
}

Ordinal::Kind Ordinal::kind() const { return node_ ? node_->kind : Kind::Zero; }

bool Ordinal::is_finite() const {
  if (!node_) return true;
  return node_->kind == Kind::Sum && node_->terms.size() == 1 &&
         node_->terms[0].exponent.is_zero();
}

bool Ordinal::is_successor() const {
  return node_ && node_->kind == Kind::Sum && node_->terms.back().exponent.is_zero();
}

bool Ordinal::is_limit() const { return node_ && !is_successor(); }

std::uint64_t Ordinal::as_nat() const {
  if (!is_finite()) throw DomainError("expected a natural number, got " + str());
  return node_ ? node_->terms[0].coefficient : 0;
}

std::vector<Term> Ordinal::cnf() const {
  if (!node_) return {};
  if (node_->kind == Kind::HypE) return {Term{*this, 1}};
  return node_->terms;
}

const Ordinal& Ordinal::level() const {
  if (kind() != Kind::HypE) throw DomainError("not an atom");
  return node_->level;
}

Ordinal Ordinal::lambda() const { return omega_pow(level()); }

const Ordinal& Ordinal::arg() const {
  if (kind() != Kind::HypE) throw DomainError("not an atom");
  return node_->arg;
}

std::size_t Ordinal::node_count() const { return node_ ? node_->size : 1; }

std::string Ordinal::str() const { return render(*this); }

Ordinal make_sum(std::vector<Term> terms) {
  if (terms.empty()) return Ordinal();
  if (terms.size() == 1 && terms[0].coefficient == 1 && terms[0].exponent.is_atom())
    return terms[0].exponent;
  std::size_t size = 0;
  for (const Term& t : terms) size += 1 + t.exponent.node_count();
  auto node = std::make_shared<OrdinalNode>();
  node->kind = Ordinal::Kind::Sum;
  node->terms = std::move(terms);
  node->size = size;
  return Ordinal(std::move(node));
}

Ordinal make_atom(const Ordinal& level, const Ordinal& arg) {
  if (level.is_zero()) throw DomainError("atom level must be positive");
  if (arg.is_zero()) return Ordinal();
  if (arg.is_atom() && compare(arg.level(), level) == OrdCompare::GT) return arg;
  auto node = std::make_shared<OrdinalNode>();
  node->kind = Ordinal::Kind::HypE;
  node->level = level;
  node->arg = arg;
  node->size = 1 + level.node_count() + arg.node_count();
  return Ordinal(std::move(node));
}

OrdCompare compare(const Ordinal& a, const Ordinal& b) {
  if (a.same_node(b)) return OrdCompare::EQ;
  using K = Ordinal::Kind;
  const K ka = a.kind();
  const K kb = b.kind();
  if (ka == K::Zero) return kb == K::Zero ? OrdCompare::EQ : OrdCompare::LT;
  if (kb == K::Zero) return OrdCompare::GT;

  if (ka == K::HypE && kb == K::HypE) {
    switch (compare(a.level(), b.level())) {
      case OrdCompare::EQ:
        return compare(a.arg(), b.arg());
      case OrdCompare::LT:
        return compare(a.arg(), b);
      case OrdCompare::GT:
        return compare(a, b.arg());
    }
  }
  if (ka == K::HypE) {
    // b = w^x*c + ...; a >= w^x iff a > x, and b != a by canonicity.
    const Term lead = b.cnf().front();
    return compare(a, lead.exponent) == OrdCompare::GT ? OrdCompare::GT : OrdCompare::LT;
  }
  if (kb == K::HypE) {
    const OrdCompare r = compare(b, a);
    return r == OrdCompare::GT ? OrdCompare::LT : OrdCompare::GT;
  }

  const std::vector<Term> ta = a.cnf();
  const std::vector<Term> tb = b.cnf();
  const std::size_t n = std::min(ta.size(), tb.size());
  for (std::size_t i = 0; i < n; ++i) {
    const OrdCompare c = compare(ta[i].exponent, tb[i].exponent);
    if (c != OrdCompare::EQ) return c;
    if (ta[i].coefficient != tb[i].coefficient)
      return ta[i].coefficient < tb[i].coefficient ? OrdCompare::LT : OrdCompare::GT;
  }
  if (ta.size() == tb.size()) return OrdCompare::EQ;
  return ta.size() < tb.size() ? OrdCompare::LT : OrdCompare::GT;
}

Ordinal add(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return b;
  std::vector<Term> tb = b.cnf();
  std::vector<Term> out;
  for (const Term& t : a.cnf()) {
    const OrdCompare c = compare(t.exponent, tb.front().exponent);
    if (c == OrdCompare::GT) {
      out.push_back(t);
    } else {
      if (c == OrdCompare::EQ)
        tb.front().coefficient = checked_add(t.coefficient, tb.front().coefficient);
      break;
    }
  }
  out.insert(out.end(), tb.begin(), tb.end());
  return make_sum(std::move(out));
}

Ordinal successor(const Ordinal& a) { return add(a, one()); }

Ordinal predecessor(const Ordinal& a) {
  if (!a.is_successor()) throw DomainError("predecessor of non-successor " + a.str());
  std::vector<Term> t = a.cnf();
  if (--t.back().coefficient == 0) t.pop_back();
  return make_sum(std::move(t));
}

Ordinal left_subtract(const Ordinal& zeta, const Ordinal& xi) {
  const std::vector<Term> ta = zeta.cnf();
  const std::vector<Term> tb = xi.cnf();
  std::size_t i = 0;
  while (i < ta.size() && i < tb.size()) {
    const OrdCompare c = compare(ta[i].exponent, tb[i].exponent);
    if (c == OrdCompare::GT) break;
    if (c == OrdCompare::LT) return make_sum({tb.begin() + i, tb.end()});
    if (ta[i].coefficient != tb[i].coefficient) {
      if (ta[i].coefficient > tb[i].coefficient) break;
      std::vector<Term> rest(tb.begin() + i, tb.end());
      rest.front().coefficient -= ta[i].coefficient;
      return make_sum(std::move(rest));
    }
    ++i;
  }
  if (i == ta.size()) return make_sum({tb.begin() + i, tb.end()});
  throw DomainError("left_subtract: " + zeta.str() + " exceeds " + xi.str());
}

Ordinal omega_pow(const Ordinal& x) {
  if (x.is_atom()) return x;
  return make_sum({Term{x, 1}});
}

Ordinal ell(const Ordinal& xi) {
  if (xi.is_zero()) throw DomainError("ell of 0 is undefined");
  if (xi.is_atom()) return xi;
  return xi.cnf().back().exponent;
}

Principal split_last(const Ordinal& xi) {
  if (xi.is_zero()) throw DomainError("split_last of 0");
  std::vector<Term> t = xi.cnf();
  Ordinal e = t.back().exponent;
  if (--t.back().coefficient == 0) t.pop_back();
  return Principal{make_sum(std::move(t)), std::move(e)};
}

Ordinal mul(const Ordinal& a, const Ordinal& b) {
  if (a.is_zero() || b.is_zero()) return Ordinal();
  const std::vector<Term> ta = a.cnf();
  const Term& lead = ta.front();
  Ordinal result;
  for (const Term& t : b.cnf()) {
    if (!t.exponent.is_zero()) {
      result = add(result, make_sum({Term{add(lead.exponent, t.exponent), t.coefficient}}));
    } else {
      std::vector<Term> scaled = ta;
      scaled.front().coefficient = checked_mul(lead.coefficient, t.coefficient);
      result = add(result, make_sum(std::move(scaled)));
    }
  }
  return result;
}

std::pair<Ordinal, Ordinal> left_divide(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) throw DomainError("division by 0");
  const std::vector<Term> tb = b.cnf();
  const Ordinal& y = tb.front().exponent;
  std::vector<Term> high;
  std::vector<Term> low;
  for (const Term& t : a.cnf()) {
    if (compare(t.exponent, y) == OrdCompare::GT)
      high.push_back(Term{left_subtract(y, t.exponent), t.coefficient});
    else
      low.push_back(t);
  }
  const Ordinal rest = make_sum(low);
  std::uint64_t n = 0;
  if (!low.empty() && compare(low.front().exponent, y) == OrdCompare::EQ) {
    n = low.front().coefficient / tb.front().coefficient;
    if (n > 0 && compare(mul(b, Ordinal::nat(n)), rest) == OrdCompare::GT) --n;
  }
  const Ordinal bn = mul(b, Ordinal::nat(n));
  return {add(make_sum(std::move(high)), Ordinal::nat(n)), left_subtract(bn, rest)};
}

namespace {

Ordinal exp_step(const Ordinal& level, const Ordinal& x) {
  if (level.is_zero()) return x.is_zero() ? x : omega_pow(x);
  return make_atom(level, x);
}

// l^{w^level} for a single indecomposable power.
Ordinal log_step(const Ordinal& level, Ordinal xi) {
  if (level.is_zero()) return xi.is_zero() ? xi : ell(xi);
  for (std::size_t guard = 0;; ++guard) {
    if (guard > max_depth()) throw DomainError("hyper_log: depth limit exceeded");
    if (xi.is_zero()) return xi;
    if (!xi.is_atom()) {
      const Ordinal e = xi.cnf().back().exponent;
      if (!e.is_atom()) {
        xi = e;
        continue;
      }
      xi = e;
    }
    switch (compare(xi.level(), level)) {
      case OrdCompare::EQ:
        return xi.arg();
      case OrdCompare::GT:
        return xi;
      case OrdCompare::LT:
        xi = xi.arg();
        break;
    }
  }
}

}  // namespace

Ordinal hyper_exp(const Ordinal& lambda, const Ordinal& x) {
  const std::vector<Term> terms = lambda.cnf();
  Ordinal r = x;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    for (std::uint64_t i = 0; i < it->coefficient; ++i) {
      if (i > max_depth()) throw DomainError("hyper_exp: iteration limit exceeded");
      Ordinal next = exp_step(it->exponent, r);
      if (next == r) break;
      r = std::move(next);
    }
  }
  return r;
}

Ordinal hyper_log(const Ordinal& lambda, const Ordinal& xi) {
  Ordinal r = xi;
  for (const Term& t : lambda.cnf()) {
    for (std::uint64_t i = 0; i < t.coefficient; ++i) {
      Ordinal next = log_step(t.exponent, r);
      if (next == r) break;
      r = std::move(next);
    }
  }
  return r;
}

Ordinal fund_seq(const Ordinal& xi, std::uint64_t n) {
  if (xi.is_zero()) throw DomainError("fund_seq of 0");
  if (xi.is_atom()) {
    const Ordinal& y = xi.arg();
    if (y.is_limit()) return make_atom(xi.level(), fund_seq(y, n));
    const Ordinal base = successor(make_atom(xi.level(), predecessor(y)));
    return hyper_exp(fund_seq(xi.lambda(), n), base);
  }
  const Principal p = split_last(xi);
  if (p.exponent.is_zero()) return p.prefix;
  if (p.exponent.is_atom()) return add(p.prefix, fund_seq(p.exponent, n));
  if (p.exponent.is_successor())
    return add(p.prefix, mul(omega_pow(predecessor(p.exponent)), Ordinal::nat(n)));
  return add(p.prefix, omega_pow(fund_seq(p.exponent, n)));
}

Stabilization stabilization(const Ordinal& Lambda, const Ordinal& xi) {
  if (!Lambda.is_limit()) throw DomainError("stabilization needs a limit, got " + Lambda.str());
  const Principal p = split_last(Lambda);
  const Ordinal value = hyper_exp(omega_pow(p.exponent), hyper_log(Lambda, xi));
  for (std::uint64_t n = 0; n <= max_depth(); ++n) {
    Ordinal lam = fund_seq(Lambda, n);
    if (hyper_log(lam, xi) == value) return Stabilization{std::move(lam), value};
  }
  throw DomainError("stabilization: no witness within depth limit");
}

// ---------------------------------------------------------------------------
// Text form

namespace {

constexpr std::uint64_t kMaxRepeatedCoefficient = 3;

bool is_single_token(const Ordinal& o) {
  if (o.is_finite() || o.is_atom()) return true;
  return o == Ordinal::omega();
}

std::string render_power(const Ordinal& x) {
  if (x.is_atom()) return render(x);
  if (x.is_zero()) return "1";
  if (x == one()) return "w";
  if (is_single_token(x)) return "w^" + render(x);
  return "w^(" + render(x) + ")";
}

}  // namespace

std::string render(const Ordinal& o) {
  if (o.is_zero()) return "0";
  if (o.is_atom()) return "e[" + render_power(o.level()) + "](" + render(o.arg()) + ")";
  std::string out;
  for (const Term& t : o.cnf()) {
    if (!out.empty()) out += "+";
    if (t.exponent.is_zero()) {
      out += std::to_string(t.coefficient);
      continue;
    }
    const std::string p = render_power(t.exponent);
    if (t.coefficient <= kMaxRepeatedCoefficient) {
      for (std::uint64_t i = 0; i < t.coefficient; ++i) out += (i ? "+" : "") + p;
    } else {
      out += p + "*" + std::to_string(t.coefficient);
    }
  }
  return out;
}

void OrdinalParser::skip_ws() {
  while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
}

bool OrdinalParser::accept(char c) {
  skip_ws();
  if (pos_ < text_.size() && text_[pos_] == c) {
    ++pos_;
    return true;
  }
  return false;
}

void OrdinalParser::expect(char c) {
  if (!accept(c)) throw ParseError(std::string("expected '") + c + "'", pos_);
}

Ordinal OrdinalParser::expression() { return sum(0); }

Ordinal OrdinalParser::sum(std::size_t depth) {
  if (depth > max_depth()) throw ParseError("nesting too deep", pos_);
  Ordinal r = product(depth);
  while (accept('+')) r = add(r, product(depth));
  return r;
}

Ordinal OrdinalParser::product(std::size_t depth) {
  Ordinal r = power(depth);
  while (accept('*')) r = mul(r, power(depth));
  return r;
}

Ordinal OrdinalParser::power(std::size_t depth) {
  const std::size_t start = pos_;
  Ordinal base = primary(depth);
  if (!accept('^')) return base;
  Ordinal exponent = power(depth + 1);
  if (base == Ordinal::omega()) return omega_pow(exponent);
  if (base == one()) return base;
  throw ParseError("only w may be raised to a power", start);
}

std::uint64_t OrdinalParser::natural() {
  const std::size_t start = pos_;
  std::uint64_t v = 0;
  while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
    const std::uint64_t d = static_cast<std::uint64_t>(text_[pos_] - '0');
    if (v > (std::numeric_limits<std::uint64_t>::max() - d) / 10)
      throw ParseError("natural number too large", start);
    v = v * 10 + d;
    ++pos_;
  }
  return v;
}

Ordinal OrdinalParser::primary(std::size_t depth) {
  skip_ws();
  if (pos_ >= text_.size()) throw ParseError("unexpected end of ordinal", pos_);
  const char c = text_[pos_];
  if (std::isdigit(static_cast<unsigned char>(c))) return Ordinal::nat(natural());
  if (c == 'w') {
    ++pos_;
    return Ordinal::omega();
  }
  if (c == '(') {
    ++pos_;
    Ordinal r = sum(depth + 1);
    expect(')');
    return r;
  }
  if (c == 'e' || c == 'l') {
    ++pos_;
    expect('[');
    Ordinal lam = sum(depth + 1);
    expect(']');
    expect('(');
    Ordinal x = sum(depth + 1);
    expect(')');
    return c == 'e' ? hyper_exp(lam, x) : hyper_log(lam, x);
  }
  throw ParseError(std::string("unexpected character '") + c + "'", pos_);
}

Ordinal parse_ordinal(std::string_view text) {
  std::size_t pos = 0;
  OrdinalParser p(text, pos);
  Ordinal r = p.expression();
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos != text.size()) throw ParseError("unexpected trailing input", pos);
  return r;
}

}  // namespace glpwb
