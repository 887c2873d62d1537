#include "glpwb/dproduct.hpp"

namespace glpwb {

namespace {

const Ordinal kOne = Ordinal::nat(1);

struct Decomposition {
  Component component;
  Ordinal alpha;
  Ordinal xi0;
};

// Writes 1+point = (1+xi)*alpha + (1+xi0) with 0 <= xi0 <= xi, or
// 1+point = (1+xi)*alpha with alpha a limit.
Decomposition decompose(const DProductContext& ctx, const Ordinal& point) {
  if (ctx.bound < point)
    throw DomainError(render(point) + " exceeds the d-product bound " + render(ctx.bound));
  const Ordinal a = add(kOne, ctx.xi);
  auto [q, r] = left_divide(add(kOne, point), a);
  if (!r.is_zero()) return {Component::G0, q, minus_one_plus(r)};
  if (q.is_limit()) return {Component::G1, q, Ordinal()};
  return {Component::G0, predecessor(q), ctx.xi};
}

}  // namespace

Ordinal minus_one_plus(const Ordinal& x) {
  if (x.is_zero()) throw DomainError("-1+0 is undefined");
  return x.is_finite() ? predecessor(x) : x;
}

DProductContext::DProductContext(Ordinal xi_, Ordinal theta_)
    : xi(std::move(xi_)), theta(std::move(theta_)) {
  bound = minus_one_plus(mul(add(kOne, xi), add(kOne, theta)));
}

Component component(const DProductContext& ctx, const Ordinal& point) {
  return decompose(ctx, point).component;
}

Ordinal pi0(const DProductContext& ctx, const Ordinal& point) {
  const Decomposition d = decompose(ctx, point);
  if (d.component == Component::G1)
    throw DomainError("pi0 is undefined on the limit component at " + render(point));
  return d.xi0;
}

Ordinal pi1(const DProductContext& ctx, const Ordinal& point) {
  const Decomposition d = decompose(ctx, point);
  if (d.component == Component::G1) return d.alpha;
  return minus_one_plus(successor(d.alpha));
}

}  // namespace glpwb
