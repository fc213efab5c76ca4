#include "monideal/random_gen.hpp"

#include "monideal/errors.hpp"

namespace monideal {

std::int64_t InstanceRng::uniform(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw InvalidArgument("empty range for uniform draw");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  // Multiply-shift range reduction; bias is negligible for the tiny spans
  // used here and, more importantly, it is identical everywhere.
  const unsigned __int128 wide =
      static_cast<unsigned __int128>(engine_()) * span;
  return lo + static_cast<std::int64_t>(wide >> 64);
}

bool InstanceRng::chance(std::uint64_t num, std::uint64_t den) {
  return static_cast<std::uint64_t>(uniform(1, static_cast<std::int64_t>(den))) <= num;
}

RingContext random_ring(InstanceRng& rng, std::size_t min_vars,
                        std::size_t max_vars) {
  const std::size_t n = static_cast<std::size_t>(
      rng.uniform(static_cast<std::int64_t>(min_vars),
                  static_cast<std::int64_t>(max_vars)));
  return numbered_ring("x", 1, n);
}

Monomial random_monomial(InstanceRng& rng, const RingContext& ctx, Exp max_exp,
                         bool forbid_identity) {
  std::vector<Exp> exps(ctx.var_count());
  for (;;) {
    bool positive = false;
    for (Exp& e : exps) {
      e = static_cast<Exp>(rng.uniform(0, max_exp));
      positive = positive || e > 0;
    }
    if (positive || !forbid_identity)
      return Monomial(ctx, std::move(exps));
  }
}

MonomialIdeal random_proper_ideal(InstanceRng& rng, const RingContext& ctx,
                                  std::size_t max_gens, Exp max_exp) {
  const std::size_t count = static_cast<std::size_t>(
      rng.uniform(1, static_cast<std::int64_t>(max_gens)));
  std::vector<Monomial> gens;
  gens.reserve(count);
  for (std::size_t i = 0; i < count; ++i)
    gens.push_back(random_monomial(rng, ctx, max_exp, true));
  return from_generators(ctx, gens);
}

MonomialIdeal random_squarefree_ideal(InstanceRng& rng, const RingContext& ctx,
                                      std::size_t max_gens) {
  return random_proper_ideal(rng, ctx, max_gens, 1);
}

}  // namespace monideal
