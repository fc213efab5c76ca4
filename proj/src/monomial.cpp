#include "monideal/monomial.hpp"

#include <algorithm>

#include "monideal/errors.hpp"

namespace monideal {

Monomial::Monomial(RingContext ctx)
    : ctx_(std::move(ctx)), exps_(ctx_.var_count(), 0) {}

Monomial::Monomial(RingContext ctx, std::vector<Exp> exponents)
    : ctx_(std::move(ctx)), exps_(std::move(exponents)) {
  if (exps_.size() != ctx_.var_count())
    throw InvalidArgument("exponent vector length does not match the ring");
  for (Exp e : exps_)
    if (e < 0) throw InvalidArgument("negative exponent");
}

Exp Monomial::exponent(std::size_t var) const {
  if (var >= exps_.size()) throw InvalidArgument("variable index out of range");
  return exps_[var];
}

std::int64_t Monomial::total_degree() const noexcept {
  std::int64_t d = 0;
  for (Exp e : exps_) d += e;
  return d;
}

bool Monomial::is_identity() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](Exp e) { return e == 0; });
}

bool operator==(const Monomial& a, const Monomial& b) {
  return a.ctx_ == b.ctx_ && a.exps_ == b.exps_;
}

Monomial variable_monomial(const RingContext& ctx, std::size_t var, Exp power) {
  if (var >= ctx.var_count())
    throw InvalidArgument("variable index out of range");
  if (power < 0) throw InvalidArgument("negative exponent");
  std::vector<Exp> e(ctx.var_count(), 0);
  e[var] = power;
  return Monomial(ctx, std::move(e));
}

bool divides(const Monomial& a, const Monomial& b) {
  require_same_context(a.context(), b.context());
  return kernels::active().divides(a.exponents().data(), b.exponents().data(),
                                   a.var_count());
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  require_same_context(a.context(), b.context());
  std::vector<Exp> out(a.var_count());
  kernels::active().cw_max(out.data(), a.exponents().data(),
                           b.exponents().data(), out.size());
  return Monomial(a.context(), std::move(out));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  require_same_context(a.context(), b.context());
  std::vector<Exp> out(a.var_count());
  kernels::active().cw_min(out.data(), a.exponents().data(),
                           b.exponents().data(), out.size());
  return Monomial(a.context(), std::move(out));
}

Monomial multiply(const Monomial& a, const Monomial& b) {
  require_same_context(a.context(), b.context());
  std::vector<Exp> out(a.var_count());
  if (!kernels::active().add_checked(out.data(), a.exponents().data(),
                                     b.exponents().data(), out.size()))
    throw ExponentOverflow("monomial product exceeds the exponent range");
  return Monomial(a.context(), std::move(out));
}

Monomial monomial_power(const Monomial& a, std::int64_t k) {
  if (k < 0) throw InvalidArgument("negative monomial power");
  std::vector<Exp> out(a.var_count(), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const std::int64_t e = std::int64_t{a.exponents()[i]} * k;
    if (e > INT32_MAX)
      throw ExponentOverflow("monomial power exceeds the exponent range");
    out[i] = static_cast<Exp>(e);
  }
  return Monomial(a.context(), std::move(out));
}

Monomial colon_quotient(const Monomial& a, const Monomial& f) {
  require_same_context(a.context(), f.context());
  std::vector<Exp> out(a.var_count());
  kernels::active().sub_clamped(out.data(), a.exponents().data(),
                                f.exponents().data(), out.size());
  return Monomial(a.context(), std::move(out));
}

std::vector<std::size_t> support(const Monomial& m) {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < m.var_count(); ++i)
    if (m.exponents()[i] > 0) s.push_back(i);
  return s;
}

int canonical_compare(const Monomial& a, const Monomial& b) {
  require_same_context(a.context(), b.context());
  const std::int64_t da = a.total_degree();
  const std::int64_t db = b.total_degree();
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = 0; i < a.var_count(); ++i) {
    const Exp ea = a.exponents()[i];
    const Exp eb = b.exponents()[i];
    if (ea != eb) return ea > eb ? -1 : 1;
  }
  return 0;
}

}  // namespace monideal
