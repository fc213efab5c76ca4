#include "monideal/selftest.hpp"

#include <algorithm>
#include <cstdint>

#include "monideal/assoc.hpp"
#include "monideal/criteria.hpp"
#include "monideal/errors.hpp"
#include "monideal/kernels.hpp"
#include "monideal/random_gen.hpp"
#include "monideal/text.hpp"

namespace monideal::selftest {
namespace {

// Attempt budget per suite: generation keeps going until `target` applicable
// instances were seen or this many instances were generated.
constexpr std::size_t kAttemptFactor = 120;

struct Recorder {
  SuiteResult result;

  explicit Recorder(const char* name) { result.name = name; }

  bool wants_more(std::size_t target) const {
    return result.applicable < target &&
           result.attempted < target * kAttemptFactor;
  }

  void fail(const std::string& detail) {
    ++result.failures;
    if (result.failure_details.size() < 8)
      result.failure_details.push_back(detail);
  }

  void check(bool ok, const std::string& detail) {
    if (!ok) fail(detail);
  }
};

bool subset_of(const AssSet& a, const AssSet& b) {
  return std::all_of(a.primes().begin(), a.primes().end(),
                     [&](const MonomialPrime& p) { return b.contains(p); });
}

std::vector<std::size_t> union_of_prime_supports(const AssSet& s) {
  std::vector<std::size_t> out;
  for (const MonomialPrime& p : s.primes())
    out.insert(out.end(), p.vars().begin(), p.vars().end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Monomial with exponents restricted to the variable window [lo, hi).
Monomial block_monomial(InstanceRng& rng, const RingContext& ctx,
                        std::size_t lo, std::size_t hi, Exp max_exp) {
  std::vector<Exp> exps(ctx.var_count(), 0);
  for (;;) {
    bool positive = false;
    for (std::size_t v = lo; v < hi; ++v) {
      exps[v] = static_cast<Exp>(rng.uniform(0, max_exp));
      positive = positive || exps[v] > 0;
    }
    if (positive) return Monomial(ctx, exps);
  }
}

MonomialIdeal block_ideal(InstanceRng& rng, const RingContext& ctx,
                          std::size_t lo, std::size_t hi, std::size_t max_gens,
                          Exp max_exp) {
  const std::size_t count =
      static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(max_gens)));
  std::vector<Monomial> gens;
  for (std::size_t i = 0; i < count; ++i)
    gens.push_back(block_monomial(rng, ctx, lo, hi, max_exp));
  return from_generators(ctx, gens);
}

// ---------------------------------------------------------------------------

SuiteResult run_support_union(std::uint64_t seed, std::size_t target) {
  Recorder r("support-union");
  InstanceRng rng(seed ^ 0x5u);
  while (r.wants_more(target)) {
    ++r.result.attempted;
    const RingContext ctx = random_ring(rng, 1, 4);
    const MonomialIdeal ideal = random_proper_ideal(rng, ctx, 5, 4);
    const AssSet ass = ass_primes(ideal);
    r.check(union_of_prime_supports(ass) == support(ideal),
            "associated-prime supports do not cover the ideal support for " +
                format(ideal));
    ++r.result.applicable;
  }
  return r.result;
}

SuiteResult run_colon_inclusions(std::uint64_t seed, std::size_t target) {
  Recorder r("colon-ass-inclusions");
  InstanceRng rng(seed ^ 0x23u);
  while (r.wants_more(target)) {
    ++r.result.attempted;
    const RingContext ctx = random_ring(rng, 2, 4);
    const MonomialIdeal ideal = random_proper_ideal(rng, ctx, 4, 3);
    const Monomial f = random_monomial(rng, ctx, 3, true);
    if (ideal.contains(f)) continue;
    const AssSet of_colon = ass_primes(colon_monomial(ideal, f));
    const AssSet of_ideal = ass_primes(ideal);
    const AssSet of_augmented = ass_primes(sum(ideal, principal_ideal(f)));
    r.check(subset_of(of_colon, of_ideal),
            "Ass of the colon escapes Ass of the ideal for " + format(ideal) +
                " : " + format(f));
    const bool chain = std::all_of(
        of_ideal.primes().begin(), of_ideal.primes().end(),
        [&](const MonomialPrime& p) {
          return of_colon.contains(p) || of_augmented.contains(p);
        });
    r.check(chain, "Ass of the ideal escapes the colon/augmented union for " +
                       format(ideal) + " : " + format(f));
    ++r.result.applicable;
  }
  return r.result;
}

SuiteResult run_disjoint_sum(std::uint64_t seed, std::size_t target) {
  Recorder r("disjoint-sum-ass");
  InstanceRng rng(seed ^ 0x71u);
  while (r.wants_more(target)) {
    ++r.result.attempted;
    const std::size_t na = static_cast<std::size_t>(rng.uniform(1, 2));
    const std::size_t nb = static_cast<std::size_t>(rng.uniform(1, 2));
    const RingContext ctx = numbered_ring("x", 1, na + nb);
    const MonomialIdeal left = block_ideal(rng, ctx, 0, na, 3, 3);
    const MonomialIdeal right = block_ideal(rng, ctx, na, na + nb, 3, 3);
    const AssSet of_left = ass_primes(left);
    const AssSet of_right = ass_primes(right);
    AssSet expected(ctx);
    for (const MonomialPrime& p : of_left.primes())
      for (const MonomialPrime& q : of_right.primes()) {
        std::vector<std::size_t> vars = p.vars();
        vars.insert(vars.end(), q.vars().begin(), q.vars().end());
        expected.insert(MonomialPrime(ctx, std::move(vars)));
      }
    const AssSet actual = ass_primes(sum(left, right));
    r.check(expected == actual,
            "disjoint sum Ass mismatch for " + format(left) + " + " +
                format(right) + ": got " + format(actual) + ", expected " +
                format(expected));
    ++r.result.applicable;
  }
  return r.result;
}

SuiteResult run_squarefree(std::uint64_t seed, std::size_t target) {
  Recorder r("squarefree-maximal");
  InstanceRng rng(seed ^ 0x9du);
  while (r.wants_more(target)) {
    ++r.result.attempted;
    const RingContext ctx = random_ring(rng, 1, 5);
    const MonomialIdeal ideal =
        rng.chance(1, 8) ? MonomialPrime::maximal(ctx).to_ideal()
                         : random_squarefree_ideal(rng, ctx, 4);
    const CriterionReport rep = check_squarefree_maximal(ideal);
    r.check(rep.applicable(), "squarefree checker inconclusive for " +
                                  format(ideal));
    r.check(rep.oracle_agreement == true,
            "squarefree checker disagrees with the socle test for " +
                format(ideal));
    ++r.result.applicable;
  }
  return r.result;
}

SuiteResult run_chain_soundness(std::uint64_t seed, std::size_t target) {
  Recorder r("chain-witness-soundness");
  InstanceRng rng(seed ^ 0xc1u);
  while (r.wants_more(target)) {
    ++r.result.attempted;
    const RingContext ctx = random_ring(rng, 3, 5);
    const std::size_t n = ctx.var_count();
    // Three distinct variables: two carry the chain columns, a third keeps
    // the generators incomparable.
    const std::size_t vi = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(n - 1)));
    std::size_t vj = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(n - 2)));
    if (vj >= vi) ++vj;
    std::size_t vk = 0;
    while (vk == vi || vk == vj) ++vk;

    const std::size_t k = static_cast<std::size_t>(rng.uniform(2, 5));
    std::vector<Exp> a(k), b(k), c(k);
    a[k - 1] = static_cast<Exp>(rng.uniform(0, 2));
    for (std::size_t i = k - 1; i-- > 0;)
      a[i] = a[i + 1] + static_cast<Exp>(rng.uniform(1, 3));  // strictly down
    b[k - 1] = static_cast<Exp>(rng.uniform(0, 2));
    for (std::size_t i = k - 1; i-- > 0;)
      b[i] = b[i + 1] + static_cast<Exp>(rng.uniform(0, 2));  // weakly down
    c[0] = static_cast<Exp>(rng.uniform(0, 1));
    for (std::size_t i = 1; i < k; ++i)
      c[i] = c[i - 1] + static_cast<Exp>(rng.uniform(1, 2));  // strictly up

    std::vector<Monomial> gens;
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<Exp> exps(n, 0);
      exps[vi] = a[i];
      exps[vj] = b[i];
      exps[vk] = c[i];
      gens.emplace_back(ctx, std::move(exps));
    }
    const MonomialIdeal ideal = from_generators(ctx, gens);
    if (ideal.gen_count() != k || ideal.is_unit()) continue;

    const auto witness = check_chain_criterion(ideal);
    if (!witness) {
      r.fail("no chain witness on a constructed chain ideal " + format(ideal));
      continue;
    }
    bool monotone = true;
    for (std::size_t i = 1; i < witness->generator_order.size(); ++i) {
      const auto prev = ideal.gen_exponents(witness->generator_order[i - 1]);
      const auto cur = ideal.gen_exponents(witness->generator_order[i]);
      monotone = monotone && prev[witness->var_i] >= cur[witness->var_i] &&
                 prev[witness->var_j] >= cur[witness->var_j];
    }
    r.check(monotone, "returned chain witness is not monotone for " +
                          format(ideal));
    r.check(!has_maximal_associated(ideal),
            "chain witness coexists with a positive socle test for " +
                format(ideal));
    ++r.result.applicable;
  }
  return r.result;
}

/// Random split L = u*I + J with the factor's variables disjoint from the
/// parts.  plain_factor forces u to be a single variable; artinian_bias adds
/// pure powers of every part variable to J with high probability (that makes
/// the dichotomy's precondition fire often).
SplitDecomposition random_split(InstanceRng& rng, bool plain_factor,
                                bool artinian_bias) {
  const RingContext ctx = random_ring(rng, 2, 4);
  const std::size_t n = ctx.var_count();
  const bool two_var_factor =
      !plain_factor && n >= 3 && rng.chance(1, 4);
  const std::size_t parts_end = n - (two_var_factor ? 2 : 1);

  Monomial factor(ctx);
  if (two_var_factor) {
    std::vector<Exp> fe(n, 0);
    fe[n - 2] = static_cast<Exp>(rng.uniform(1, 2));
    fe[n - 1] = static_cast<Exp>(rng.uniform(1, 2));
    factor = Monomial(ctx, std::move(fe));
  } else {
    factor = variable_monomial(ctx, n - 1,
                               plain_factor ? 1
                                            : static_cast<Exp>(rng.uniform(1, 2)));
  }

  const MonomialIdeal cofactor = block_ideal(rng, ctx, 0, parts_end, 3, 3);
  std::vector<Monomial> remainder_gens;
  if (artinian_bias && rng.chance(3, 4)) {
    for (std::size_t v = 0; v < parts_end; ++v)
      remainder_gens.push_back(
          variable_monomial(ctx, v, static_cast<Exp>(rng.uniform(1, 3))));
  }
  if (rng.chance(1, 2))
    remainder_gens.push_back(block_monomial(rng, ctx, 0, parts_end, 3));
  const MonomialIdeal remainder = from_generators(ctx, remainder_gens);

  const MonomialIdeal combined =
      sum(product(principal_ideal(factor), cofactor), remainder);
  return SplitDecomposition(combined, factor, cofactor, remainder);
}

SuiteResult run_split_identities(std::uint64_t seed, std::size_t target) {
  Recorder r("split-identities");
  InstanceRng rng(seed ^ 0xe5u);
  while (r.wants_more(target)) {
    ++r.result.attempted;
    const SplitDecomposition split = random_split(rng, false, false);
    const std::size_t t = static_cast<std::size_t>(rng.uniform(1, 3));
    const CriterionReport rep = verify_split_identities(split, t);
    r.check(rep.applicable() && rep.oracle_agreement == true,
            "split identity failed for " + format(split.combined()) +
                " with factor " + format(split.factor()) + " at power " +
                std::to_string(t));
    // The inferred split of the same data must validate as well.
    const SplitDecomposition inferred =
        infer_split(split.combined(), split.factor());
    r.check(sum(product(principal_ideal(inferred.factor()), inferred.cofactor()),
                inferred.remainder()) == split.combined(),
            "inferred split does not rebuild the combined ideal");
    ++r.result.applicable;
  }
  return r.result;
}

SuiteResult run_dichotomy(std::uint64_t seed, std::size_t target) {
  Recorder r("split-dichotomy");
  InstanceRng rng(seed ^ 0x137u);
  while (r.wants_more(target)) {
    ++r.result.attempted;
    const SplitDecomposition split = random_split(rng, true, true);
    const std::size_t t = rng.chance(2, 3) ? 1 : 2;
    const CriterionReport rep = check_dichotomy(split, t);
    if (!rep.applicable()) continue;
    r.check(rep.oracle_agreement == true,
            "dichotomy disjunction failed for " + format(split.combined()) +
                " with factor " + format(split.factor()) + " at power " +
                std::to_string(t));
    ++r.result.applicable;
  }
  return r.result;
}

SuiteResult run_corner_divisibility(std::uint64_t seed, std::size_t target) {
  Recorder r("corner-divisibility");
  InstanceRng rng(seed ^ 0x18du);
  while (r.wants_more(target)) {
    ++r.result.attempted;
    const RingContext ctx = random_ring(rng, 2, 3);
    MonomialIdeal ideal = random_proper_ideal(rng, ctx, 4, 3);
    if (rng.chance(1, 2)) {
      // Make every generator divisible by the first variable so the deleted
      // ideal there is zero and the exclusion hypothesis holds trivially.
      std::vector<Monomial> shifted;
      for (std::size_t i = 0; i < ideal.gen_count(); ++i)
        shifted.push_back(
            multiply(ideal.generator(i), variable_monomial(ctx, 0)));
      ideal = from_generators(ctx, shifted);
    }
    const std::size_t t = static_cast<std::size_t>(rng.uniform(1, 2));
    const MonomialIdeal power_ideal = power(ideal, t);
    const std::vector<CornerWitness> corners = corner_elements(power_ideal);
    if (corners.empty()) continue;
    const std::size_t take = std::min<std::size_t>(corners.size(), 2);
    for (std::size_t ci = 0; ci < take; ++ci) {
      for (std::size_t v = 0; v < ctx.var_count(); ++v) {
        const CriterionReport rep = check_corner_divisibility(
            ideal, t, corners[ci].monomial(), v);
        if (!rep.applicable()) continue;
        r.check(rep.oracle_agreement == true,
                "forced corner divisibility failed: " + format(ideal) +
                    " power " + std::to_string(t) + ", corner " +
                    format(corners[ci].monomial()) + ", variable " +
                    ctx.var_name(v));
        ++r.result.applicable;
      }
    }
  }
  return r.result;
}

SuiteResult run_corner_definition(std::uint64_t seed, std::size_t target) {
  Recorder r("corner-definition");
  InstanceRng rng(seed ^ 0x1f3u);
  while (r.wants_more(target)) {
    ++r.result.attempted;
    const RingContext ctx = random_ring(rng, 2, 3);
    std::vector<Monomial> gens;
    const std::size_t count = static_cast<std::size_t>(rng.uniform(1, 4));
    for (std::size_t i = 0; i < count; ++i)
      gens.push_back(random_monomial(rng, ctx, 3, true));
    if (rng.chance(1, 2)) {
      // Pure powers of every variable force a finite-length quotient, which
      // guarantees corners exist.
      for (std::size_t v = 0; v < ctx.var_count(); ++v)
        gens.push_back(
            variable_monomial(ctx, v, static_cast<Exp>(rng.uniform(1, 3))));
    }
    const MonomialIdeal ideal = from_generators(ctx, gens);
    if (ideal.is_unit()) continue;

    const std::vector<CornerWitness> from_socle = corner_elements(ideal);
    const std::vector<CornerWitness> from_search =
        corner_elements_exhaustive(ideal);
    bool same = from_socle.size() == from_search.size();
    for (std::size_t i = 0; same && i < from_socle.size(); ++i)
      same = from_socle[i].monomial() == from_search[i].monomial();
    r.check(same, "socle-route and search-route corner sets differ for " +
                      format(ideal));

    const MonomialIdeal maximal = MonomialPrime::maximal(ctx).to_ideal();
    for (const CornerWitness& w : from_socle) {
      const Monomial& f = w.monomial();
      r.check(!ideal.contains(f),
              "corner lies inside the ideal: " + format(f));
      for (std::size_t v = 0; v < ctx.var_count(); ++v)
        r.check(ideal.contains(multiply(f, variable_monomial(ctx, v))),
                "corner times a variable stays outside: " + format(f));
      r.check(colon_monomial(ideal, f) == maximal,
              "colon by a corner is not the maximal ideal: " + format(f));
    }
    if (!from_socle.empty()) ++r.result.applicable;
  }
  return r.result;
}

SuiteResult run_decomposition_agreement(std::uint64_t seed,
                                        std::size_t target) {
  Recorder r("decomposition-agreement");
  InstanceRng rng(seed ^ 0x2a7u);
  while (r.wants_more(target)) {
    ++r.result.attempted;
    const RingContext ctx = random_ring(rng, 1, 4);
    const MonomialIdeal ideal = random_proper_ideal(rng, ctx, 5, 4);
    const AssSet direct = ass_primes(ideal);
    const AssSet via_decomposition = ass_from_decomposition(ideal);
    r.check(direct == via_decomposition,
            "Ass routes disagree for " + format(ideal) + ": localization " +
                format(direct) + ", decomposition " +
                format(via_decomposition));

    const auto comps = irreducible_decomposition(ideal);
    std::vector<MonomialIdeal> as_ideals;
    for (const auto& c : comps) as_ideals.push_back(c.to_ideal(ctx));
    r.check(intersect(std::span<const MonomialIdeal>(as_ideals)) == ideal,
            "decomposition does not intersect back for " + format(ideal));
    if (comps.size() > 1 && comps.size() <= 10) {
      for (std::size_t skip = 0; skip < as_ideals.size(); ++skip) {
        std::vector<MonomialIdeal> rest;
        for (std::size_t i = 0; i < as_ideals.size(); ++i)
          if (i != skip) rest.push_back(as_ideals[i]);
        r.check(intersect(std::span<const MonomialIdeal>(rest)) != ideal,
                "redundant component in decomposition of " + format(ideal));
      }
    }
    ++r.result.applicable;
  }
  return r.result;
}

SuiteResult run_kernel_equivalence(std::uint64_t seed, std::size_t target) {
  Recorder r("kernel-equivalence");
  InstanceRng rng(seed ^ 0x31bu);
  const auto& backends = kernels::available_backends();
  const auto& scalar = kernels::scalar_backend();

  auto pattern_value = [&](InstanceRng& g) -> Exp {
    if (g.chance(1, 6)) return 0;
    if (g.chance(1, 12)) return INT32_MAX;
    if (g.chance(1, 12)) return INT32_MAX - 1;
    return static_cast<Exp>(g.uniform(0, 6));
  };

  while (r.wants_more(target)) {
    ++r.result.attempted;
    const std::size_t n = static_cast<std::size_t>(rng.uniform(0, 40));
    std::vector<Exp> a(n), b(n);
    for (std::size_t i = 0; i < n; ++i) {
      a[i] = pattern_value(rng);
      b[i] = pattern_value(rng);
    }
    if (n > 0 && rng.chance(1, 4)) {
      // Force an addition overflow somewhere.
      const std::size_t at = static_cast<std::size_t>(
          rng.uniform(0, static_cast<std::int64_t>(n - 1)));
      a[at] = INT32_MAX;
      b[at] = static_cast<Exp>(rng.uniform(1, 5));
    }
    const std::size_t row_count = static_cast<std::size_t>(rng.uniform(0, 6));
    std::vector<Exp> rows(row_count * n);
    for (Exp& e : rows) e = pattern_value(rng);
    if (row_count > 0 && n > 0 && rng.chance(1, 2)) {
      // Plant a guaranteed divisor row.
      const std::size_t at = static_cast<std::size_t>(
          rng.uniform(0, static_cast<std::int64_t>(row_count - 1)));
      for (std::size_t i = 0; i < n; ++i)
        rows[at * n + i] = b[i] > 0 ? b[i] - 1 : 0;
    }

    std::vector<Exp> want(n), got(n);
    for (const kernels::Backend* backend : backends) {
      const std::string tag = std::string("backend ") + backend->name;
      r.check(backend->divides(a.data(), b.data(), n) ==
                  scalar.divides(a.data(), b.data(), n),
              tag + ": divides(a,b) mismatch");
      r.check(backend->divides(b.data(), a.data(), n) ==
                  scalar.divides(b.data(), a.data(), n),
              tag + ": divides(b,a) mismatch");
      r.check(backend->equal(a.data(), b.data(), n) ==
                  scalar.equal(a.data(), b.data(), n),
              tag + ": equal mismatch");
      r.check(backend->equal(a.data(), a.data(), n), tag + ": self-equal");

      scalar.cw_max(want.data(), a.data(), b.data(), n);
      backend->cw_max(got.data(), a.data(), b.data(), n);
      r.check(want == got, tag + ": cw_max mismatch");
      scalar.cw_min(want.data(), a.data(), b.data(), n);
      backend->cw_min(got.data(), a.data(), b.data(), n);
      r.check(want == got, tag + ": cw_min mismatch");

      const bool want_ok = scalar.add_checked(want.data(), a.data(), b.data(), n);
      const bool got_ok = backend->add_checked(got.data(), a.data(), b.data(), n);
      r.check(want_ok == got_ok, tag + ": add_checked flag mismatch");
      if (want_ok && got_ok)
        r.check(want == got, tag + ": add_checked sum mismatch");

      scalar.sub_clamped(want.data(), a.data(), b.data(), n);
      backend->sub_clamped(got.data(), a.data(), b.data(), n);
      r.check(want == got, tag + ": sub_clamped mismatch");

      r.check(backend->first_divisor(rows.data(), row_count, n, b.data(), n) ==
                  scalar.first_divisor(rows.data(), row_count, n, b.data(), n),
              tag + ": first_divisor mismatch");

      // In-place use must match the out-of-place result.
      std::vector<Exp> alias = a;
      backend->cw_max(alias.data(), alias.data(), b.data(), n);
      scalar.cw_max(want.data(), a.data(), b.data(), n);
      r.check(alias == want, tag + ": aliased cw_max mismatch");
    }
    ++r.result.applicable;
  }
  return r.result;
}

const std::vector<Suite>& suites() {
  static const std::vector<Suite> all = {
      {"support-union", run_support_union},
      {"colon-ass-inclusions", run_colon_inclusions},
      {"disjoint-sum-ass", run_disjoint_sum},
      {"squarefree-maximal", run_squarefree},
      {"chain-witness-soundness", run_chain_soundness},
      {"split-identities", run_split_identities},
      {"split-dichotomy", run_dichotomy},
      {"corner-divisibility", run_corner_divisibility},
      {"corner-definition", run_corner_definition},
      {"decomposition-agreement", run_decomposition_agreement},
      {"kernel-equivalence", run_kernel_equivalence},
  };
  return all;
}

}  // namespace

const std::vector<Suite>& all_suites() { return suites(); }

SuiteResult run_suite(std::string_view name, std::uint64_t seed,
                      std::size_t target) {
  for (const Suite& s : all_suites())
    if (name == s.name) return s.run(seed, target);
  throw InvalidArgument("unknown self-test suite '" + std::string(name) + "'");
}

}  // namespace monideal::selftest
