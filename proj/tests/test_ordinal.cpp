#include <map>
#include <optional>
#include <random>

#include "doctest.h"
#include "glpwb/error.hpp"
#include "support.hpp"

using namespace glpwb;
using namespace glpwb::testing;

namespace {

// Ordinals below w^w as coefficient vectors indexed by exponent; lexicographic
// comparison from the top exponent is the reference order.
using Poly = std::map<std::uint64_t, std::uint64_t, std::greater<>>;

std::optional<Poly> as_poly(const Ordinal& o) {
  Poly p;
  if (o.is_zero()) return p;
  if (o.is_atom()) return std::nullopt;
  for (const Term& t : o.cnf()) {
    if (!t.exponent.is_finite()) return std::nullopt;
    p[t.exponent.as_nat()] = t.coefficient;
  }
  return p;
}

OrdCompare poly_compare(const Poly& a, const Poly& b) {
  auto i = a.begin();
  auto j = b.begin();
  for (; i != a.end() && j != b.end(); ++i, ++j) {
    if (i->first != j->first) return i->first > j->first ? OrdCompare::GT : OrdCompare::LT;
    if (i->second != j->second) return i->second > j->second ? OrdCompare::GT : OrdCompare::LT;
  }
  if (i == a.end() && j == b.end()) return OrdCompare::EQ;
  return i == a.end() ? OrdCompare::LT : OrdCompare::GT;
}

OrdCompare flip(OrdCompare c) {
  if (c == OrdCompare::LT) return OrdCompare::GT;
  if (c == OrdCompare::GT) return OrdCompare::LT;
  return c;
}

}  // namespace

TEST_CASE("parse and render") {
  CHECK(ord("0").is_zero());
  CHECK(ord("w^w") == omega_pow(w()));
  CHECK(ord("e[w](1)").is_atom());
  CHECK(render(ord("e[w](1)")) == "e[w](1)");
  CHECK(ord(" w + 3 ") == add(w(), nat(3)));
  CHECK(ord("w*3") == add(add(w(), w()), w()));
  CHECK(ord("l[w](e[w](1))") == nat(1));
  CHECK(ord("1+w") == w());
  CHECK_THROWS_AS(ord("w+"), ParseError);
  CHECK_THROWS_AS(ord("3^w"), ParseError);
  CHECK_THROWS_AS(ord("e[w](1"), ParseError);
}

TEST_CASE("render round-trips on enumerated notations") {
  for (const Ordinal& o : enumerate_notations(6)) {
    const std::string s = render(o);
    CHECK_MESSAGE(render(ord(s)) == s, s);
    CHECK(ord(s) == o);
  }
}

TEST_CASE("compare examples") {
  CHECK(compare(nat(0), nat(1)) == OrdCompare::LT);
  CHECK(compare(ord("e[w](1)"), ord("w^w")) == OrdCompare::GT);
  // e^w 1 exceeds every finite tower e^n 1.
  for (std::uint64_t n = 0; n <= 6; ++n) CHECK(tower(n) < ord("e[w](1)"));
  CHECK(ord("w^(e[w](1)+1)") > ord("e[w](1)"));
  CHECK(ord("w^(e[w](1))*2") < ord("e[w](2)"));
  CHECK(ord("e[w](w)") < ord("e[w^2](1)"));
  CHECK(ord("e[w^2](1)") < ord("e[w^2](2)"));
}

TEST_CASE("compare is a total order on enumerated notations") {
  const std::vector<Ordinal> all = enumerate_notations(6);
  REQUIRE(all.size() > 100);
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = 0; j < all.size(); ++j) {
      const OrdCompare c = compare(all[i], all[j]);
      CHECK(c == flip(compare(all[j], all[i])));
      CHECK((c == OrdCompare::EQ) == (i == j));
      // The sorted enumeration is deduplicated, so sorted position decides.
      CHECK((c == OrdCompare::LT) == (i < j));
      CHECK((render(all[i]) == render(all[j])) == (i == j));
    }
  }
}

TEST_CASE("compare agrees with polynomial order below w^w") {
  std::vector<std::pair<Ordinal, Poly>> polys;
  for (const Ordinal& o : enumerate_notations(6, 3))
    if (auto p = as_poly(o)) polys.emplace_back(o, *p);
  REQUIRE(polys.size() > 20);
  for (const auto& [a, pa] : polys)
    for (const auto& [b, pb] : polys) CHECK(compare(a, b) == poly_compare(pa, pb));
}

TEST_CASE("add") {
  CHECK(add(nat(1), w()) == w());
  CHECK(render(add(w(), nat(1))) == "w+1");
  const Ordinal e3 = eps(mul(w(), nat(3)));
  const Ordinal e2 = eps(mul(w(), nat(2)));
  const Ordinal g = add(e3, e2);
  REQUIRE(g.cnf().size() == 2);
  CHECK(g.cnf()[0].exponent == e3);
  CHECK(g.cnf()[1].exponent == e2);
  CHECK(add(e2, e3) == e3);
}

TEST_CASE("add is associative and left_subtract inverts it") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    const Ordinal a = random_ordinal(rng, 3), b = random_ordinal(rng, 3), c = random_ordinal(rng, 3);
    CHECK(add(add(a, b), c) == add(a, add(b, c)));
    CHECK(left_subtract(a, add(a, b)) == b);
    CHECK(add(a, b) >= a);
  }
}

TEST_CASE("left_subtract") {
  CHECK(left_subtract(w(), mul(w(), nat(2))) == w());
  CHECK(left_subtract(ord("w^3+w"), ord("w^3+w")).is_zero());
  CHECK(left_subtract(w(), add(w(), ord("w^2"))) == ord("w^2"));
  CHECK_THROWS_AS(left_subtract(nat(3), nat(2)), DomainError);
}

TEST_CASE("mul") {
  CHECK(render(mul(w(), nat(2))) == "w+w");
  CHECK(mul(nat(2), w()) == w());
  CHECK(mul(add(nat(1), ord("w^2")), w()) == ord("w^3"));
  CHECK(mul(ord("w+1"), ord("w+1")) == ord("w^2+w+1"));
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const Ordinal a = random_ordinal(rng, 2), b = random_ordinal(rng, 2), c = random_ordinal(rng, 2);
    CHECK(mul(a, add(b, c)) == add(mul(a, b), mul(a, c)));
    CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
    if (!b.is_zero()) {
      auto [q, r] = left_divide(a, b);
      CHECK(r < b);
      CHECK(add(mul(b, q), r) == a);
    }
  }
}

TEST_CASE("omega_pow") {
  CHECK(omega_pow(nat(0)) == nat(1));
  CHECK(omega_pow(w()) == ord("w^w"));
  CHECK(omega_pow(eps(nat(0))) == eps(nat(0)));
  CHECK(omega_pow(eps(nat(5))) == eps(nat(5)));
}

TEST_CASE("ell") {
  CHECK(ell(nat(1)).is_zero());
  const Ordinal g = add(eps(mul(w(), nat(3))), eps(mul(w(), nat(2))));
  CHECK(ell(g) == eps(mul(w(), nat(2))));
  CHECK(ell(ord("w*2+1")).is_zero());
  CHECK(ell(ord("w^(w+1)*2")) == ord("w+1"));
  CHECK_THROWS_AS(ell(nat(0)), DomainError);
}

TEST_CASE("hyper_exp") {
  CHECK(hyper_exp(ord("w+3"), nat(0)).is_zero());
  CHECK(hyper_exp(nat(2), nat(1)) == ord("w^w"));
  CHECK(hyper_exp(w(), nat(2)) == eps(nat(1)));
  CHECK(hyper_exp(w(), nat(1)) == eps(nat(0)));
  CHECK(hyper_exp(nat(0), ord("w+5")) == ord("w+5"));
  CHECK(hyper_exp(nat(1), nat(3)) == ord("w^3"));
  // e(x) = -1 + w^x, so e(0) is 0 and finite arguments give w-powers.
  CHECK(hyper_exp(nat(1), ord("w")) == ord("w^w"));
  for (std::uint64_t n = 0; n <= 4; ++n) CHECK(hyper_exp(nat(n), nat(1)) == tower(n));
}

TEST_CASE("hyper_exp composes additively and is normal") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const Ordinal a = random_small_index(rng), b = random_small_index(rng);
    const Ordinal x = random_ordinal(rng, 2), y = random_ordinal(rng, 2);
    CHECK(hyper_exp(add(a, b), x) == hyper_exp(a, hyper_exp(b, x)));
    CHECK(compare(hyper_exp(a, x), hyper_exp(a, y)) == compare(x, y));
  }
}

TEST_CASE("e^{w^(g+1)} enumerates fixed points of e^{w^g}") {
  std::mt19937_64 rng(5);
  const Ordinal levels[] = {nat(0), nat(1), w()};
  for (const Ordinal& g : levels) {
    for (int i = 0; i < 30; ++i) {
      Ordinal x = random_ordinal(rng, 2);
      if (x.is_zero()) continue;
      const Ordinal y = hyper_exp(omega_pow(successor(g)), x);
      CHECK(hyper_exp(omega_pow(g), y) == y);
      for (const Ordinal& d : levels)
        if (d < g) CHECK(hyper_exp(omega_pow(d), y) == y);
    }
  }
}

TEST_CASE("hyper_log examples") {
  const Ordinal g = add(eps(mul(w(), nat(3))), eps(mul(w(), nat(2))));
  CHECK(hyper_log(nat(0), g) == g);
  CHECK(hyper_log(nat(1), g) == eps(mul(w(), nat(2))));
  CHECK(hyper_log(nat(2), g) == eps(mul(w(), nat(2))));
  CHECK(hyper_log(w(), g) == mul(w(), nat(2)));
  CHECK(hyper_log(ord("w+1"), g) == nat(1));
  CHECK(hyper_log(ord("w+2"), g).is_zero());
  CHECK(hyper_log(ord("w+3"), g).is_zero());
  CHECK(hyper_log(w(), nat(0)).is_zero());
}

TEST_CASE("hyper_log inverts hyper_exp and composes") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 300; ++i) {
    const Ordinal a = random_small_index(rng), b = random_small_index(rng);
    const Ordinal x = random_ordinal(rng, 3);
    CHECK(hyper_log(a, hyper_exp(a, x)) == x);
    CHECK(hyper_log(add(a, b), x) == hyper_log(b, hyper_log(a, x)));
  }
}

TEST_CASE("hyper_log is non-increasing in the finite index") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 100; ++i) {
    const Ordinal x = random_ordinal(rng, 3);
    Ordinal prev = x;
    for (std::uint64_t n = 1; n <= 6; ++n) {
      const Ordinal cur = hyper_log(nat(n), x);
      CHECK(cur <= prev);
      prev = cur;
    }
  }
}

TEST_CASE("fundamental sequences") {
  for (std::uint64_t n = 0; n < 5; ++n) CHECK(fund_seq(w(), n) == nat(n));
  CHECK(fund_seq(ord("w+3"), 4) == ord("w+2"));
  CHECK(fund_seq(eps(nat(0)), 3) == tower(3));
  CHECK(fund_seq(eps(nat(0)), 3) == ord("w^(w^w)"));
  CHECK_THROWS_AS(fund_seq(nat(0), 1), DomainError);
  std::mt19937_64 rng(17);
  int limits = 0;
  for (int i = 0; i < 300 && limits < 80; ++i) {
    const Ordinal x = random_ordinal(rng, 3);
    if (!x.is_limit()) continue;
    ++limits;
    for (std::uint64_t n = 0; n < 5; ++n) {
      CHECK(fund_seq(x, n) < fund_seq(x, n + 1));
      CHECK(fund_seq(x, n + 1) < x);
    }
  }
  CHECK(limits > 20);
}

TEST_CASE("stabilization") {
  const Ordinal g = add(eps(mul(w(), nat(3))), eps(mul(w(), nat(2))));
  const Stabilization s = stabilization(w(), g);
  CHECK(s.value == eps(mul(w(), nat(2))));
  CHECK(s.lambda < w());
  for (std::uint64_t n = s.lambda.as_nat(); n < s.lambda.as_nat() + 5; ++n)
    CHECK(hyper_log(nat(n), g) == s.value);
  const Stabilization z = stabilization(w(), nat(0));
  CHECK(z.value.is_zero());
  const Stabilization e = stabilization(ord("w^2"), eps(nat(0)));
  CHECK(e.value.is_zero());
  CHECK(hyper_log(e.lambda, eps(nat(0))).is_zero());
  CHECK_THROWS_AS(stabilization(ord("w+1"), g), DomainError);
}
