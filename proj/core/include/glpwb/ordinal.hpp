#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "glpwb/error.hpp"

namespace glpwb {

enum class OrdCompare { LT, EQ, GT };

struct Term;
struct OrdinalNode;

// Canonical notation for ordinals below the closure point of x -> e^{w^x}(1).
//
// A value is Zero, a Cantor normal form sum of terms w^x*c, or an atom
// e^{w^g}(x) with g >= 1 which is always an epsilon number and never a fixed
// point of its own function. Canonicity makes structural equality coincide
// with ordinal equality.
class Ordinal {
 public:
  enum class Kind { Zero, Sum, HypE };

  Ordinal();
  static Ordinal nat(std::uint64_t n);
  static Ordinal omega();

  Kind kind() const;
  bool is_zero() const { return kind() == Kind::Zero; }
  bool is_atom() const { return kind() == Kind::HypE; }
  bool is_finite() const;
  bool is_successor() const;
  bool is_limit() const;
  // Value as a natural; throws DomainError when infinite.
  std::uint64_t as_nat() const;

  // Cantor normal form; an atom E yields the single term (E, 1).
  std::vector<Term> cnf() const;
  // Atom accessors: e^{lambda}(arg) with lambda = w^level.
  const Ordinal& level() const;
  Ordinal lambda() const;
  const Ordinal& arg() const;

  std::size_t node_count() const;
  std::string str() const;

  bool same_node(const Ordinal& o) const { return node_ == o.node_; }

 private:
  explicit Ordinal(std::shared_ptr<const OrdinalNode> n) : node_(std::move(n)) {}
  std::shared_ptr<const OrdinalNode> node_;

  friend Ordinal make_sum(std::vector<Term> terms);
  friend Ordinal make_atom(const Ordinal& level, const Ordinal& arg);
};

struct Term {
  Ordinal exponent;
  std::uint64_t coefficient = 1;
};

OrdCompare compare(const Ordinal& a, const Ordinal& b);

inline bool operator==(const Ordinal& a, const Ordinal& b) {
  return compare(a, b) == OrdCompare::EQ;
}
inline std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) {
  switch (compare(a, b)) {
    case OrdCompare::LT:
      return std::strong_ordering::less;
    case OrdCompare::EQ:
      return std::strong_ordering::equal;
    default:
      return std::strong_ordering::greater;
  }
}

// Builds a canonical value from CNF terms given in strictly decreasing order.
Ordinal make_sum(std::vector<Term> terms);
// e^{w^level}(arg), normalized.
Ordinal make_atom(const Ordinal& level, const Ordinal& arg);

Ordinal add(const Ordinal& a, const Ordinal& b);
Ordinal successor(const Ordinal& a);
Ordinal predecessor(const Ordinal& a);
// The unique eta with zeta + eta = xi.
Ordinal left_subtract(const Ordinal& zeta, const Ordinal& xi);
Ordinal mul(const Ordinal& a, const Ordinal& b);
// a = b*q + r with r < b; b must be nonzero.
std::pair<Ordinal, Ordinal> left_divide(const Ordinal& a, const Ordinal& b);
Ordinal omega_pow(const Ordinal& x);
Ordinal ell(const Ordinal& xi);

// Principal decomposition xi = prefix + w^exponent, xi > 0.
struct Principal {
  Ordinal prefix;
  Ordinal exponent;
};
Principal split_last(const Ordinal& xi);

Ordinal hyper_exp(const Ordinal& lambda, const Ordinal& x);
Ordinal hyper_log(const Ordinal& lambda, const Ordinal& xi);

Ordinal fund_seq(const Ordinal& xi, std::uint64_t n);

struct Stabilization {
  Ordinal lambda;
  Ordinal value;
};
Stabilization stabilization(const Ordinal& Lambda, const Ordinal& xi);

Ordinal parse_ordinal(std::string_view text);
std::string render(const Ordinal& o);

// Recursive-descent ordinal parser usable from other grammars. It consumes an
// expression starting at pos and leaves pos after it.
class OrdinalParser {
 public:
  OrdinalParser(std::string_view text, std::size_t& pos) : text_(text), pos_(pos) {}
  Ordinal expression();

 private:
  Ordinal sum(std::size_t depth);
  Ordinal product(std::size_t depth);
  Ordinal power(std::size_t depth);
  Ordinal primary(std::size_t depth);
  std::uint64_t natural();
  void skip_ws();
  bool accept(char c);
  void expect(char c);

  std::string_view text_;
  std::size_t& pos_;
};

}  // namespace glpwb
