#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "monideal/kernels.hpp"
#include "monideal/ring.hpp"

namespace monideal {

using kernels::Exp;

/// An immutable monomial: a nonnegative exponent vector over a RingContext.
/// The coefficient is always 1; the identity monomial has all exponents zero.
class Monomial {
public:
  /// The identity monomial of the ring.
  explicit Monomial(RingContext ctx);

  /// Throws InvalidArgument if the vector length differs from the variable
  /// count or any exponent is negative.
  Monomial(RingContext ctx, std::vector<Exp> exponents);

  const RingContext& context() const noexcept { return ctx_; }
  std::size_t var_count() const noexcept { return exps_.size(); }
  std::span<const Exp> exponents() const noexcept { return exps_; }
  Exp exponent(std::size_t var) const;
  std::int64_t total_degree() const noexcept;
  bool is_identity() const noexcept;

  /// Structural equality; monomials over different rings are never equal.
  friend bool operator==(const Monomial& a, const Monomial& b);
  friend bool operator!=(const Monomial& a, const Monomial& b) {
    return !(a == b);
  }

private:
  RingContext ctx_;
  std::vector<Exp> exps_;
};

/// x_var^power as a monomial of the ring.
Monomial variable_monomial(const RingContext& ctx, std::size_t var,
                           Exp power = 1);

/// true iff a | b, i.e. every exponent of a is <= the matching one of b.
bool divides(const Monomial& a, const Monomial& b);

Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);

/// Product a*b; throws ExponentOverflow if any exponent leaves int32 range.
Monomial multiply(const Monomial& a, const Monomial& b);

/// a^k for k >= 0 (k == 0 gives the identity); overflow-checked.
Monomial monomial_power(const Monomial& a, std::int64_t k);

/// Componentwise max(a_i - f_i, 0): the generator of the colon (a) : f.
Monomial colon_quotient(const Monomial& a, const Monomial& f);

/// Indices of the variables appearing with positive exponent, ascending.
std::vector<std::size_t> support(const Monomial& m);

/// Canonical order used everywhere generators are listed: total degree
/// ascending, ties broken by the exponent vector lexicographically
/// descending (so within one degree, powers of earlier variables print
/// first: x^2, x*y, y^2).  Returns <0, 0, >0.
int canonical_compare(const Monomial& a, const Monomial& b);

}  // namespace monideal
