#include <random>

#include "doctest.h"
#include "glpwb/error.hpp"
#include "glpwb/worm.hpp"
#include "support.hpp"

using namespace glpwb;
using namespace glpwb::testing;

namespace {

Worm worm(const std::string& s) { return parse_worm(s); }

Worm power(const Ordinal& lam, std::size_t n) { return Worm(n, lam); }

}  // namespace

TEST_CASE("diamond_concat") {
  CHECK(diamond_concat({}, {}) == worm("<0>T"));
  CHECK(diamond_concat(worm("<1>T"), worm("<1>T")) == worm("<1><0><1>T"));
  CHECK(diamond_concat(worm("<w>T"), {}) == worm("<w><0>T"));
}

TEST_CASE("uparrow") {
  CHECK(uparrow(nat(0), worm("<3><w>T")) == worm("<3><w>T"));
  CHECK(uparrow(w(), worm("<1><0><1>T")) == worm("<w+1><w><w+1>T"));
  CHECK(uparrow(ord("w^2"), {}).empty());
}

TEST_CASE("order types") {
  CHECK(order_type({}).is_zero());
  CHECK(order_type(worm("<0>T")) == nat(1));
  CHECK(order_type(worm("<1>T")) == w());
  CHECK(order_type(worm("<1><0><1>T")) == mul(w(), nat(2)));
  CHECK(order_type(worm("<w+1><w><w+1>T")) == eps(mul(w(), nat(2))));
  CHECK(render(order_type(worm("<w+1><w><w+1>T"))) == "e[w](w+w)");
}

TEST_CASE("order type of a repeated modality") {
  const Ordinal lams[] = {nat(0), nat(1), w(), ord("w+1"), ord("w^2")};
  for (const Ordinal& lam : lams) {
    for (std::size_t n = 0; n <= 5; ++n) {
      CHECK(order_type(power(lam, n)) == hyper_exp(lam, nat(n)));
      CHECK(worm_compare(power(lam, n), power(lam, n + 1)) == OrdCompare::LT);
    }
  }
}

TEST_CASE("single modalities are cofinal below e^L 1") {
  const Ordinal bigs[] = {w(), ord("w^2")};
  std::mt19937_64 rng(51);
  for (const Ordinal& big : bigs) {
    const Ordinal sup = hyper_exp(big, nat(1));
    Ordinal prev;
    for (std::uint64_t n = 0; n < 6; ++n) {
      const Ordinal lam = big == w() ? nat(n) : add(mul(w(), nat(n)), nat(n));
      const Ordinal o = order_type(Worm{lam});
      CHECK(o == hyper_exp(lam, nat(1)));
      CHECK(o < sup);
      if (n > 0) CHECK(prev < o);
      prev = o;
    }
  }
}

TEST_CASE("order type laws") {
  std::mt19937_64 rng(53);
  for (int i = 0; i < 150; ++i) {
    Worm v = random_finite_worm(rng, 4, 3), u = random_finite_worm(rng, 4, 3);
    if (rng() % 2)
      for (Ordinal& x : v) x = add(w(), x);
    const Ordinal a = random_small_index(rng);
    CHECK(order_type(uparrow(a, v)) == hyper_exp(a, order_type(v)));
    CHECK(order_type(diamond_concat(v, u)) ==
          add(add(order_type(u), nat(1)), order_type(v)));
  }
}

TEST_CASE("worm_compare") {
  CHECK(worm_compare({}, worm("<0>T")) == OrdCompare::LT);
  CHECK(worm_compare(worm("<1>T"), worm("<0><0>T")) == OrdCompare::GT);
  CHECK(worm_compare(worm("<1><0>T"), worm("<1><0>T")) == OrdCompare::EQ);
}

TEST_CASE("worm text form") {
  CHECK(worm("T").empty());
  CHECK(render(worm("<w+1><w><w+1>T")) == "<w+1><w><w+1>T");
  CHECK_THROWS_AS(worm("<1>"), ParseError);
  CHECK_THROWS_AS(worm("<1T"), ParseError);
}
