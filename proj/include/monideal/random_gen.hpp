#pragma once

#include <cstdint>
#include <random>

#include "monideal/ideal.hpp"

namespace monideal {

/// Deterministic instance generator for property checks: same seed, same
/// stream of rings/monomials/ideals on every platform (mt19937_64 and
/// hand-rolled range reduction, no distribution objects).
class InstanceRng {
public:
  explicit InstanceRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t raw() { return engine_(); }

  /// Uniform integer in [lo, hi] (inclusive).
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

  /// true with probability num/den.
  bool chance(std::uint64_t num, std::uint64_t den);

private:
  std::mt19937_64 engine_;
};

/// Ring on `vars` variables named x1..xN.
RingContext random_ring(InstanceRng& rng, std::size_t min_vars,
                        std::size_t max_vars);

/// Monomial with exponents in [0, max_exp]; if forbid_identity, at least one
/// exponent is positive.
Monomial random_monomial(InstanceRng& rng, const RingContext& ctx, Exp max_exp,
                         bool forbid_identity);

/// Proper nonzero ideal on up to max_gens random nonidentity monomials.
MonomialIdeal random_proper_ideal(InstanceRng& rng, const RingContext& ctx,
                                  std::size_t max_gens, Exp max_exp);

/// Proper nonzero squarefree ideal.
MonomialIdeal random_squarefree_ideal(InstanceRng& rng, const RingContext& ctx,
                                      std::size_t max_gens);

}  // namespace monideal
