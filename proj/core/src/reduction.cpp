#include "glpwb/reduction.hpp"

namespace glpwb {

namespace {

Ordinal e1(const Ordinal& x) { return hyper_exp(Ordinal::nat(1), x); }

}  // namespace

bool is_infinite_indecomposable(const Ordinal& x) {
  if (x.is_zero()) return false;
  const std::vector<Term> t = x.cnf();
  return t.size() == 1 && t[0].coefficient == 1 && !t[0].exponent.is_zero();
}

ReductionContext::ReductionContext(Ordinal theta_, Ordinal lambda_)
    : theta(std::move(theta_)), lambda(std::move(lambda_)) {
  if (!is_infinite_indecomposable(lambda))
    throw DomainError("lambda must be infinite and additively indecomposable, got " +
                      render(lambda));
  top = hyper_exp(lambda, theta);
}

std::uint64_t n_index(const ReductionContext& ctx, const Ordinal& point) {
  if (!(point < ctx.top))
    throw DomainError(render(point) + " is not below e^lambda(theta) = " + render(ctx.top));
  for (std::uint64_t n = 0; n <= max_depth(); ++n) {
    const Ordinal bound = hyper_exp(ctx.lambda, fund_seq(ctx.theta, n));
    if (hyper_log(fund_seq(ctx.lambda, n), point) <= bound) return n;
  }
  throw DomainError("n_index: depth limit exceeded");
}

Ordinal sigma(const ReductionContext& ctx, std::uint64_t n) {
  Ordinal s;
  for (std::uint64_t i = 0; i < n; ++i) s = add(s, successor(e1(fund_seq(ctx.theta, i))));
  return s;
}

ReductionResult reductive_map_traced(const ReductionContext& ctx, const Ordinal& xi) {
  if (ctx.top < xi)
    throw DomainError(render(xi) + " exceeds e^lambda(theta) = " + render(ctx.top));
  ReductionResult res;
  Ordinal acc;
  ReductionContext cur = ctx;
  Ordinal x = xi;
  for (std::size_t guard = 0;; ++guard) {
    if (guard > max_depth()) throw DomainError("reductive_map: depth limit exceeded");
    if (x == cur.top) {
      res.value = add(acc, e1(cur.theta));
      return res;
    }
    const std::uint64_t n = n_index(cur, x);
    const Ordinal s = sigma(cur, n);
    Ordinal arg = hyper_log(fund_seq(cur.lambda, n), x);
    res.trace.push_back(ReductionStep{cur.theta, n, s, arg});
    acc = add(acc, s);
    cur = ReductionContext(fund_seq(cur.theta, n), cur.lambda);
    x = std::move(arg);
  }
}

Ordinal reductive_map(const ReductionContext& ctx, const Ordinal& xi) {
  return reductive_map_traced(ctx, xi).value;
}

Ordinal reductive_map_general(const Ordinal& theta, const Ordinal& lambda, const Ordinal& xi) {
  const Ordinal one_plus = add(Ordinal::nat(1), lambda);
  if (hyper_exp(one_plus, theta) < xi)
    throw DomainError(render(xi) + " exceeds e^(1+lambda)(theta)");
  if (lambda.is_zero()) return xi;
  if (one_plus.is_successor()) return hyper_log(predecessor(one_plus), xi);
  if (is_infinite_indecomposable(lambda)) return reductive_map(ReductionContext(theta, lambda), xi);
  const Principal p = split_last(lambda);
  return reductive_map(ReductionContext(theta, omega_pow(p.exponent)), hyper_log(p.prefix, xi));
}

SimpleSet delta_block(const ReductionContext& ctx, std::uint64_t n) {
  Conjunction c;
  for (std::uint64_t i = 0; i < n; ++i) {
    c.push_back(Interval{hyper_exp(ctx.lambda, fund_seq(ctx.theta, i)), std::nullopt,
                         fund_seq(ctx.lambda, i)});
  }
  c.push_back(Interval{std::nullopt, hyper_exp(ctx.lambda, fund_seq(ctx.theta, n)),
                       fund_seq(ctx.lambda, n)});
  return conjunction_set(ctx.top, std::move(c));
}

std::pair<Ordinal, Ordinal> sigma_block(const ReductionContext& ctx, std::uint64_t n) {
  return {sigma(ctx, n), sigma(ctx, n + 1)};
}

}  // namespace glpwb
