#include "support.hpp"

#include <algorithm>
#include <functional>

namespace glpwb::testing {

std::vector<Ordinal> enumerate_notations(std::size_t max_size, std::uint64_t max_coef) {
  std::vector<std::vector<Ordinal>> by_size(max_size + 1);
  if (max_size >= 1) by_size[1].push_back(Ordinal());
  for (std::size_t s = 2; s <= max_size; ++s) {
    std::vector<Ordinal>& out = by_size[s];
    // Sums: strictly decreasing exponents, each term costs 1 + size(exponent).
    std::vector<Term> terms;
    std::function<void(std::size_t, const Ordinal*)> extend = [&](std::size_t remaining,
                                                                 const Ordinal* bound) {
      if (remaining == 0) {
        if (terms.size() == 1 && terms[0].coefficient == 1 && terms[0].exponent.is_atom()) return;
        out.push_back(make_sum(terms));
        return;
      }
      for (std::size_t es = 1; es + 1 <= remaining; ++es) {
        for (const Ordinal& e : by_size[es]) {
          if (bound && !(e < *bound)) continue;
          for (std::uint64_t c = 1; c <= max_coef; ++c) {
            terms.push_back(Term{e, c});
            extend(remaining - es - 1, &e);
            terms.pop_back();
          }
        }
      }
    };
    extend(s, nullptr);
    // Atoms e^{w^level}(arg).
    for (std::size_t ls = 1; ls + 2 <= s; ++ls) {
      const std::size_t as = s - 1 - ls;
      for (const Ordinal& level : by_size[ls]) {
        if (level.is_zero()) continue;
        for (const Ordinal& a : by_size[as]) {
          if (a.is_zero()) continue;
          if (a.is_atom() && level < a.level()) continue;
          out.push_back(make_atom(level, a));
        }
      }
    }
  }
  std::vector<Ordinal> all;
  for (const auto& v : by_size) all.insert(all.end(), v.begin(), v.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

namespace {

std::uint64_t pick(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

}  // namespace

Ordinal random_ordinal(std::mt19937_64& rng, int depth) {
  if (depth <= 0) return pick(rng, 0, 3) == 0 ? w() : nat(pick(rng, 0, 4));
  switch (pick(rng, 0, 6)) {
    case 0:
      return nat(pick(rng, 0, 6));
    case 1:
      return w();
    case 2:
      return omega_pow(random_ordinal(rng, depth - 1));
    case 3:
      return add(random_ordinal(rng, depth - 1), random_ordinal(rng, depth - 1));
    case 4:
      return mul(random_ordinal(rng, depth - 1), nat(pick(rng, 1, 3)));
    case 5: {
      static const Ordinal levels[] = {nat(1), nat(2), w()};
      Ordinal x = random_ordinal(rng, depth - 1);
      if (x.is_zero()) x = nat(1);
      return hyper_exp(omega_pow(levels[pick(rng, 0, 2)]), x);
    }
    default:
      return add(omega_pow(random_ordinal(rng, depth - 1)), nat(pick(rng, 0, 3)));
  }
}

Ordinal random_small_index(std::mt19937_64& rng) {
  return add(mul(w(), nat(pick(rng, 0, 3))), nat(pick(rng, 0, 3)));
}

FormulaPtr random_closed_formula(std::mt19937_64& rng, int depth) {
  if (depth <= 0) return pick(rng, 0, 3) == 0 ? bot() : top();
  switch (pick(rng, 0, 7)) {
    case 0:
      return top();
    case 1:
      return bot();
    case 2:
      return neg(random_closed_formula(rng, depth - 1));
    case 3:
      return conj(random_closed_formula(rng, depth - 1), random_closed_formula(rng, depth - 1));
    case 4:
      return disj(random_closed_formula(rng, depth - 1), random_closed_formula(rng, depth - 1));
    case 5:
      return imp(random_closed_formula(rng, depth - 1), random_closed_formula(rng, depth - 1));
    case 6:
      return box(random_small_index(rng), random_closed_formula(rng, depth - 1));
    default:
      return dia(random_small_index(rng), random_closed_formula(rng, depth - 1));
  }
}

Worm random_finite_worm(std::mt19937_64& rng, std::size_t max_len, std::uint64_t max_entry) {
  Worm out(pick(rng, 0, max_len));
  for (Ordinal& x : out) x = nat(pick(rng, 0, max_entry));
  return out;
}

}  // namespace glpwb::testing
