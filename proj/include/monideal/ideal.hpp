#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "monideal/monomial.hpp"
#include "monideal/ring.hpp"

namespace monideal {

/// Global resource caps.  Operations that could blow up combinatorially check
/// these and throw CapExceeded instead of running away.  Mutable so the CLI
/// can raise them deliberately.
struct Limits {
  /// Largest candidate generator set an operation may materialize.
  std::size_t generator_cap = 200000;
  /// Largest variable-support size for which prime subsets are enumerated.
  std::size_t subset_cap = 22;
  /// Largest candidate box volume for the exhaustive corner search.
  std::size_t corner_search_cap = std::size_t{1} << 22;
  /// Largest number of splitting steps in an irreducible decomposition.
  std::size_t decomposition_cap = 200000;
  /// Entries retained in the decomposition memo table.
  std::size_t memo_capacity = 4096;
};

Limits& limits();

namespace detail {
struct IdealBuilder;
}

/// A monomial ideal, held as its unique minimal generating set.
///
/// Minimality is enforced at every constructor exit: no stored generator
/// divides another, and the list is in canonical order (see
/// canonical_compare).  The zero ideal has no generators; the unit ideal has
/// the single generator 1.  Representation is one flat row-major int32 buffer
/// (one row per generator) so the componentwise kernels can stream over it.
class MonomialIdeal {
public:
  static MonomialIdeal zero(RingContext ctx);
  static MonomialIdeal unit(RingContext ctx);

  const RingContext& context() const noexcept { return ctx_; }
  std::size_t var_count() const noexcept { return ctx_.var_count(); }
  std::size_t gen_count() const noexcept { return count_; }

  /// Row view of one generator's exponents.
  std::span<const Exp> gen_exponents(std::size_t i) const;
  Monomial generator(std::size_t i) const;
  std::vector<Monomial> generators() const;

  bool is_zero() const noexcept { return count_ == 0; }
  bool is_unit() const noexcept;
  bool is_proper() const noexcept { return !is_unit(); }

  /// Membership f in I (some generator divides f).
  bool contains(const Monomial& f) const;
  /// Index of the first generator dividing f, or npos.
  std::size_t first_dividing_generator(const Monomial& f) const;

  /// Raw flat buffer (gen_count rows of var_count exponents).
  std::span<const Exp> flat() const noexcept { return flat_; }

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b);
  friend bool operator!=(const MonomialIdeal& a, const MonomialIdeal& b) {
    return !(a == b);
  }

private:
  friend struct detail::IdealBuilder;
  explicit MonomialIdeal(RingContext ctx)
      : ctx_(std::move(ctx)) {}

  RingContext ctx_;
  std::size_t count_ = 0;
  std::vector<Exp> flat_;
};

/// Builds the ideal generated by the given monomials (minimalizing them).
/// An empty list gives the zero ideal.
MonomialIdeal from_generators(const RingContext& ctx,
                              std::span<const Monomial> gens);
MonomialIdeal from_generators(const RingContext& ctx,
                              std::initializer_list<Monomial> gens);
MonomialIdeal principal_ideal(const Monomial& g);

/// I + J (union of generators, minimalized).
MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);

/// I * J (pairwise products, minimalized).  Throws CapExceeded when the
/// candidate count passes limits().generator_cap.
MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);

/// I^t for t >= 1, computed as an iterated product with minimalization after
/// every step.
MonomialIdeal power(const MonomialIdeal& a, std::size_t t);

/// I : f = ideal of quotients g/gcd-free part, one per generator.
MonomialIdeal colon_monomial(const MonomialIdeal& a, const Monomial& f);

/// I : J = intersection over generators g of J of (I : g).  J must be
/// nonzero.
MonomialIdeal colon_ideal(const MonomialIdeal& a, const MonomialIdeal& b);

/// I cap J via pairwise lcms.
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
/// Intersection of a nonempty list, folded left.
MonomialIdeal intersect(std::span<const MonomialIdeal> ideals);

/// Radical: every exponent clamped to 1, minimalized.
MonomialIdeal radical(const MonomialIdeal& a);

bool is_squarefree(const MonomialIdeal& a);

/// The subideal generated by the generators not involving x_var (the image
/// of I under x_var -> 0).
MonomialIdeal delete_variable(const MonomialIdeal& a, std::size_t var);

/// Union of the supports of the generators, ascending variable indices.
std::vector<std::size_t> support(const MonomialIdeal& a);

/// Componentwise max over all generators (exponent vector of lcm(G(I)));
/// requires a nonzero ideal.
std::vector<Exp> lcm_exponents(const MonomialIdeal& a);

/// Stabilized colon (I : f^infinity): iterate I : f until it stops growing.
MonomialIdeal saturate(const MonomialIdeal& a, const Monomial& f);

/// true iff every generator of b lies in a (i.e. a contains b as an ideal).
bool contains_ideal(const MonomialIdeal& a, const MonomialIdeal& b);

/// A monomial prime ideal: a nonempty set of variables of the ring.
class MonomialPrime {
public:
  /// Indices are deduplicated and sorted; must be nonempty and in range.
  MonomialPrime(RingContext ctx, std::vector<std::size_t> vars);

  /// The maximal ideal (all variables).
  static MonomialPrime maximal(RingContext ctx);

  const RingContext& context() const noexcept { return ctx_; }
  const std::vector<std::size_t>& vars() const noexcept { return vars_; }
  std::size_t size() const noexcept { return vars_.size(); }
  bool is_maximal() const noexcept;
  bool contains_var(std::size_t var) const noexcept;

  MonomialIdeal to_ideal() const;

  friend bool operator==(const MonomialPrime& a, const MonomialPrime& b);
  friend bool operator!=(const MonomialPrime& a, const MonomialPrime& b) {
    return !(a == b);
  }

private:
  RingContext ctx_;
  std::vector<std::size_t> vars_;
};

/// Order primes by size, then by variable indices; total on one ring.
int canonical_compare(const MonomialPrime& a, const MonomialPrime& b);

/// p with one variable removed; p must contain it and have size >= 2.
MonomialPrime prime_minus(const MonomialPrime& p, std::size_t var);

/// The ring on the name-subset vars (ascending, nonempty) of ctx.
RingContext subring_context(const RingContext& ctx,
                            std::span<const std::size_t> vars);

/// Localization at the monomial prime on `vars`: substitute 1 for every
/// variable outside `vars` and re-minimalize inside the smaller ring.
MonomialIdeal localize_at(const MonomialIdeal& a,
                          std::span<const std::size_t> vars);

}  // namespace monideal
