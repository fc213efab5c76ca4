#include "monideal/criteria.hpp"

#include <algorithm>
#include <numeric>

#include "monideal/errors.hpp"
#include "monideal/text.hpp"

namespace monideal {

std::string_view to_string(Conclusion c) {
  switch (c) {
    case Conclusion::kEquivalenceEstablished:
      return "equivalence-established";
    case Conclusion::kPrimeNotAssociated:
      return "prime-not-associated";
    case Conclusion::kNotApplicable:
      return "not-applicable";
  }
  return "unknown";
}

bool CriterionReport::all_hypotheses_verified() const {
  return std::all_of(hypotheses.begin(), hypotheses.end(),
                     [](const HypothesisRecord& h) { return h.verified; });
}

namespace {

void require_proper_nonzero(const MonomialIdeal& ideal, const char* op) {
  if (ideal.is_zero())
    throw InvalidArgument(std::string(op) + " needs a nonzero ideal");
  if (ideal.is_unit())
    throw InvalidArgument(std::string(op) + " needs a proper ideal");
}

/// is_associated with the unit ideal mapped to "no associated primes".
bool prime_in_ass(const MonomialIdeal& a, const MonomialPrime& p) {
  if (a.is_unit()) return false;
  return is_associated(a, p);
}

std::string yesno(bool b) { return b ? "true" : "false"; }

void validate_colon_request(const ColonCriterionRequest& req,
                            bool wants_auxiliary) {
  require_same_context(req.ideal.context(), req.prime.context());
  require_proper_nonzero(req.ideal, "colon criterion");
  if (req.power < 1)
    throw InvalidArgument("colon criterion needs power >= 1");
  if (req.steps.empty())
    throw InvalidArgument("colon criterion needs at least one step");
  if (req.prime.size() < 2)
    throw InvalidArgument(
        "colon criterion needs a prime with at least two variables");
  std::vector<std::size_t> seen;
  for (const ColonStep& s : req.steps) {
    if (s.exponent < 1)
      throw InvalidArgument("step exponents must be >= 1");
    if (!req.prime.contains_var(s.var))
      throw InvalidArgument("step variable lies outside the prime");
    if (std::find(seen.begin(), seen.end(), s.var) != seen.end())
      throw InvalidArgument("step variables must be distinct");
    seen.push_back(s.var);
    if (wants_auxiliary && !s.auxiliary)
      throw InvalidArgument(
          "this criterion form needs an auxiliary ideal per step");
    if (!wants_auxiliary && s.auxiliary)
      throw InvalidArgument("the cumulative form takes no auxiliary ideals");
    if (s.auxiliary)
      require_same_context(req.ideal.context(), s.auxiliary->context());
  }
  if (req.membership_exponent && *req.membership_exponent < req.power)
    throw InvalidArgument(
        "membership exponent must be at least the power itself");
}

/// Shared tail of both colon criteria: compute the colon by the full step
/// product, compare both memberships, and apply the membership shortcut.
void conclude_colon(CriterionReport& report, const ColonCriterionRequest& req,
                    const MonomialIdeal& power_ideal,
                    const Monomial& step_product) {
  report.witnesses.push_back({"step-product", format(step_product)});
  if (!report.all_hypotheses_verified()) {
    report.conclusion = Conclusion::kNotApplicable;
    return;
  }
  const MonomialIdeal colon = colon_monomial(power_ideal, step_product);
  const bool assoc_power = prime_in_ass(power_ideal, req.prime);
  const bool assoc_colon = prime_in_ass(colon, req.prime);
  const std::size_t ell = req.membership_exponent.value_or(req.power);
  const MonomialIdeal& member_ideal =
      ell == req.power ? power_ideal : power(req.ideal, ell);
  const bool member = member_ideal.contains(step_product);

  report.witnesses.push_back({"colon-ideal", format(colon)});
  report.witnesses.push_back(
      {"prime-associated-to-power", yesno(assoc_power)});
  report.witnesses.push_back(
      {"prime-associated-to-colon", yesno(assoc_colon)});
  report.witnesses.push_back(
      {"step-product-in-power-" + std::to_string(ell), yesno(member)});

  report.conclusion = member ? Conclusion::kPrimeNotAssociated
                             : Conclusion::kEquivalenceEstablished;
  bool agree = assoc_power == assoc_colon;
  if (member && assoc_power) agree = false;
  report.oracle_agreement = agree;
}

}  // namespace

CriterionReport check_colon_criterion_a(const ColonCriterionRequest& req) {
  validate_colon_request(req, /*wants_auxiliary=*/true);
  const RingContext& ctx = req.ideal.context();
  const MonomialIdeal power_ideal = power(req.ideal, req.power);

  CriterionReport report;
  Monomial step_product(ctx);
  for (std::size_t i = 0; i < req.steps.size(); ++i) {
    const ColonStep& step = req.steps[i];
    const std::string tag = "step" + std::to_string(i + 1);
    const MonomialIdeal& aux = *step.auxiliary;
    const Monomial step_mono =
        variable_monomial(ctx, step.var, step.exponent);
    step_product = multiply(step_product, step_mono);

    const bool usable = !aux.is_zero() && aux.is_proper();
    report.hypotheses.push_back(
        {tag + ".auxiliary-usable", usable,
         usable ? "auxiliary ideal is proper and nonzero"
                : (aux.is_zero() ? "auxiliary ideal is zero"
                                 : "auxiliary ideal is the unit ideal")});

    const MonomialIdeal lhs = sum(power_ideal, principal_ideal(step_mono));
    const MonomialIdeal rhs = sum(aux, principal_ideal(step_mono));
    const bool eq = lhs == rhs;
    report.hypotheses.push_back(
        {tag + ".augmented-equality", eq,
         "power plus " + format(step_mono) + " gives " + format(lhs) +
             ", auxiliary plus it gives " + format(rhs)});

    const std::vector<std::size_t> aux_support = support(aux);
    const bool outside =
        !std::binary_search(aux_support.begin(), aux_support.end(), step.var);
    report.hypotheses.push_back(
        {tag + ".variable-outside-auxiliary", outside,
         ctx.var_name(step.var) +
             (outside ? " does not appear in the auxiliary ideal"
                      : " appears in the auxiliary ideal")});

    HypothesisRecord reduced{tag + ".reduced-prime-excluded", false, ""};
    if (usable) {
      const MonomialPrime q = prime_minus(req.prime, step.var);
      reduced.verified = !prime_in_ass(aux, q);
      reduced.detail = format(q) +
                       (reduced.verified
                            ? " is not associated to the auxiliary quotient"
                            : " is associated to the auxiliary quotient");
    } else {
      reduced.detail = "not evaluated: auxiliary ideal unusable";
    }
    report.hypotheses.push_back(std::move(reduced));
  }

  conclude_colon(report, req, power_ideal, step_product);
  return report;
}

CriterionReport check_colon_criterion_b(const ColonCriterionRequest& req) {
  validate_colon_request(req, /*wants_auxiliary=*/false);
  const RingContext& ctx = req.ideal.context();
  const MonomialIdeal power_ideal = power(req.ideal, req.power);

  CriterionReport report;
  Monomial step_product(ctx);
  for (std::size_t i = 0; i < req.steps.size(); ++i) {
    const ColonStep& step = req.steps[i];
    const std::string tag = "step" + std::to_string(i + 1);
    const Monomial step_mono =
        variable_monomial(ctx, step.var, step.exponent);

    // Augment the colon by everything already cleared, then adjoin this
    // step's variable power; the reduced prime must avoid that quotient.
    const MonomialIdeal base =
        i == 0 ? power_ideal : colon_monomial(power_ideal, step_product);
    const MonomialIdeal augmented = sum(base, principal_ideal(step_mono));
    const MonomialPrime q = prime_minus(req.prime, step.var);
    const bool excluded = !prime_in_ass(augmented, q);
    report.hypotheses.push_back(
        {tag + ".reduced-prime-excluded", excluded,
         format(q) + (excluded ? " is not associated to " : " is associated to ") +
             format(augmented)});

    step_product = multiply(step_product, step_mono);
  }

  conclude_colon(report, req, power_ideal, step_product);
  return report;
}

std::optional<ChainWitness> check_chain_criterion(const MonomialIdeal& ideal) {
  require_proper_nonzero(ideal, "chain criterion");
  const std::size_t n = ideal.var_count();
  if (n < 2)
    throw InvalidArgument("chain criterion needs at least two variables");
  const std::size_t k = ideal.gen_count();

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      std::vector<std::size_t> order(k);
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(),
                [&](std::size_t a, std::size_t b) {
                  const Exp ai = ideal.gen_exponents(a)[i];
                  const Exp bi = ideal.gen_exponents(b)[i];
                  if (ai != bi) return ai > bi;
                  const Exp aj = ideal.gen_exponents(a)[j];
                  const Exp bj = ideal.gen_exponents(b)[j];
                  if (aj != bj) return aj > bj;
                  return a < b;
                });
      // Sorting makes column i weakly decreasing; if the generator exponent
      // pairs form a chain, column j comes out weakly decreasing as well.
      bool ok = true;
      for (std::size_t r = 1; r < k && ok; ++r)
        ok = ideal.gen_exponents(order[r - 1])[j] >=
             ideal.gen_exponents(order[r])[j];
      if (!ok) continue;

      // Soundness cross-check on every hit: a witness forces a negative
      // socle test.
      if (has_maximal_associated(ideal))
        throw InvariantViolation(
            "chain witness coexists with a positive socle test");
      return ChainWitness{i, j, std::move(order)};
    }
  }
  return std::nullopt;
}

CriterionReport check_corner_divisibility(const MonomialIdeal& ideal,
                                          std::size_t t, const Monomial& z,
                                          std::size_t var) {
  require_same_context(ideal.context(), z.context());
  require_proper_nonzero(ideal, "corner divisibility");
  const RingContext& ctx = ideal.context();
  if (var >= ctx.var_count())
    throw InvalidArgument("variable index out of range");
  if (ctx.var_count() < 2)
    throw InvalidArgument("corner divisibility needs at least two variables");
  if (t < 1) throw InvalidArgument("corner divisibility needs power >= 1");

  const MonomialIdeal power_ideal = power(ideal, t);
  CriterionReport report;

  HypothesisRecord corner{"corner-witness", false, ""};
  if (power_ideal.contains(z)) {
    corner.detail = "witness lies inside the power";
  } else {
    corner.verified = true;
    corner.detail = "witness is outside the power and every variable multiple "
                    "is inside";
    for (std::size_t v = 0; v < ctx.var_count(); ++v) {
      if (!power_ideal.contains(multiply(z, variable_monomial(ctx, v)))) {
        corner.verified = false;
        corner.detail =
            "witness times " + ctx.var_name(v) + " stays outside the power";
        break;
      }
    }
  }
  report.hypotheses.push_back(std::move(corner));

  const MonomialIdeal deleted = delete_variable(ideal, var);
  HypothesisRecord reduced{"deleted-power-excludes-reduced", false, ""};
  if (deleted.is_zero()) {
    reduced.verified = true;
    reduced.detail = "every generator involves " + ctx.var_name(var) +
                     ", so the deleted ideal is zero";
  } else {
    const MonomialPrime q =
        prime_minus(MonomialPrime::maximal(ctx), var);
    reduced.verified = !prime_in_ass(power(deleted, t), q);
    reduced.detail =
        format(q) + (reduced.verified ? " is not associated" : " is associated") +
        " to the deleted ideal's power";
  }
  report.hypotheses.push_back(std::move(reduced));

  report.witnesses.push_back({"corner", format(z)});
  report.witnesses.push_back({"deleted-ideal", format(deleted)});
  report.witnesses.push_back({"variable", ctx.var_name(var)});

  if (!report.all_hypotheses_verified()) {
    report.conclusion = Conclusion::kNotApplicable;
    return report;
  }
  const bool divisible = z.exponent(var) >= 1;
  report.witnesses.push_back({"variable-divides-corner", yesno(divisible)});
  report.conclusion = Conclusion::kEquivalenceEstablished;
  report.oracle_agreement = divisible;
  return report;
}

SplitDecomposition::SplitDecomposition(MonomialIdeal combined, Monomial factor,
                                       MonomialIdeal cofactor,
                                       MonomialIdeal remainder)
    : combined_(std::move(combined)),
      factor_(std::move(factor)),
      cofactor_(std::move(cofactor)),
      remainder_(std::move(remainder)) {
  require_same_context(combined_.context(), factor_.context());
  require_same_context(combined_.context(), cofactor_.context());
  require_same_context(combined_.context(), remainder_.context());
  if (factor_.is_identity())
    throw InvalidArgument("split factor must not be the identity monomial");

  const std::vector<std::size_t> fsup = support(factor_);
  auto overlaps = [&](const MonomialIdeal& part) {
    const std::vector<std::size_t> psup = support(part);
    std::vector<std::size_t> common;
    std::set_intersection(fsup.begin(), fsup.end(), psup.begin(), psup.end(),
                          std::back_inserter(common));
    return !common.empty();
  };
  if (overlaps(cofactor_) || overlaps(remainder_))
    throw InvalidArgument(
        "split factor shares variables with the ideal parts");

  const MonomialIdeal rebuilt =
      sum(product(principal_ideal(factor_), cofactor_), remainder_);
  if (!(rebuilt == combined_))
    throw InvalidArgument("split parts do not rebuild the combined ideal");
}

SplitDecomposition infer_split(const MonomialIdeal& combined,
                               const Monomial& factor) {
  require_same_context(combined.context(), factor.context());
  if (factor.is_identity())
    throw InvalidArgument("split factor must not be the identity monomial");
  std::vector<Monomial> quotients;
  std::vector<Monomial> rest;
  for (std::size_t i = 0; i < combined.gen_count(); ++i) {
    Monomial g = combined.generator(i);
    if (divides(factor, g))
      quotients.push_back(colon_quotient(g, factor));
    else
      rest.push_back(std::move(g));
  }
  return SplitDecomposition(combined, factor,
                            from_generators(combined.context(), quotients),
                            from_generators(combined.context(), rest));
}

namespace {

void require_split_power_args(const SplitDecomposition& split, std::size_t t) {
  if (t < 1) throw InvalidArgument("split identities need power >= 1");
  require_proper_nonzero(split.combined(), "split power analysis");
}

}  // namespace

CriterionReport verify_split_identities(const SplitDecomposition& split,
                                        std::size_t t) {
  require_split_power_args(split, t);
  const MonomialIdeal power_whole = power(split.combined(), t);
  const Monomial factor_power = monomial_power(split.factor(), t);
  const MonomialIdeal colon = colon_monomial(power_whole, factor_power);
  const MonomialIdeal parts_power =
      power(sum(split.cofactor(), split.remainder()), t);
  const MonomialIdeal augmented =
      sum(power_whole, principal_ideal(factor_power));

  CriterionReport report;
  const bool identity_colon = colon == parts_power;
  report.hypotheses.push_back(
      {"colon-power-identity", identity_colon,
       "colon of the power by the factor power "
       "equals the power of cofactor plus remainder"});
  const bool identity_meet = power_whole == intersect(colon, augmented);
  report.hypotheses.push_back(
      {"intersection-identity", identity_meet,
       "the power is the intersection of its colon by the factor power "
       "with the factor-augmented power"});
  const bool whole_assoc = has_maximal_associated(power_whole);
  const bool aug_assoc = has_maximal_associated(augmented);
  report.hypotheses.push_back(
      {"maximal-transfer", !whole_assoc || aug_assoc,
       "a maximal ideal associated to the power must stay associated after "
       "adjoining the factor power"});

  report.witnesses.push_back({"colon-ideal", format(colon)});
  report.witnesses.push_back({"parts-power", format(parts_power)});
  report.witnesses.push_back(
      {"maximal-associated-to-power", yesno(whole_assoc)});
  report.witnesses.push_back(
      {"maximal-associated-to-augmented", yesno(aug_assoc)});

  const bool all = report.all_hypotheses_verified();
  report.conclusion =
      all ? Conclusion::kEquivalenceEstablished : Conclusion::kNotApplicable;
  if (all) report.oracle_agreement = true;
  return report;
}

CriterionReport check_dichotomy(const SplitDecomposition& split,
                                std::size_t t) {
  require_split_power_args(split, t);
  const RingContext& ctx = split.combined().context();
  const MonomialIdeal power_whole = power(split.combined(), t);
  const Monomial factor_power = monomial_power(split.factor(), t);
  const MonomialIdeal augmented =
      sum(power_whole, principal_ideal(factor_power));

  CriterionReport report;
  const bool premise = has_maximal_associated(augmented);
  report.hypotheses.push_back(
      {"maximal-associated-to-augmented", premise,
       premise ? "the maximal ideal is associated to the factor-augmented power"
               : "the maximal ideal is not associated to the factor-augmented "
                 "power"});

  const std::vector<std::size_t> fsup = support(split.factor());
  const bool plain_variable =
      fsup.size() == 1 && split.factor().exponent(fsup[0]) == 1 &&
      ctx.var_count() >= 2;
  report.hypotheses.push_back(
      {"factor-is-plain-variable", plain_variable,
       plain_variable ? "the factor is a single variable"
                      : "the factor is not a single plain variable"});

  if (!report.all_hypotheses_verified()) {
    report.conclusion = Conclusion::kNotApplicable;
    return report;
  }

  const bool side_whole = has_maximal_associated(power_whole);
  const MonomialPrime reduced =
      prime_minus(MonomialPrime::maximal(ctx), fsup[0]);
  const MonomialIdeal parts_power =
      power(sum(split.cofactor(), split.remainder()), t);
  const bool side_parts = prime_in_ass(parts_power, reduced);

  report.witnesses.push_back(
      {"maximal-associated-to-power", yesno(side_whole)});
  report.witnesses.push_back(
      {"reduced-associated-to-parts-power", yesno(side_parts)});
  report.conclusion = Conclusion::kEquivalenceEstablished;
  report.oracle_agreement = side_whole || side_parts;
  return report;
}

CriterionReport check_squarefree_maximal(const MonomialIdeal& ideal) {
  require_proper_nonzero(ideal, "squarefree criterion");
  if (!is_squarefree(ideal))
    throw InvalidArgument("the squarefree criterion needs a squarefree ideal");
  const RingContext& ctx = ideal.context();

  CriterionReport report;
  report.hypotheses.push_back(
      {"squarefree", true, "every generator exponent is at most one"});

  const bool is_max = ideal == MonomialPrime::maximal(ctx).to_ideal();
  const bool assoc = has_maximal_associated(ideal);
  report.witnesses.push_back({"ideal-is-the-maximal-ideal", yesno(is_max)});
  report.witnesses.push_back({"socle-test", yesno(assoc)});
  report.conclusion = is_max ? Conclusion::kEquivalenceEstablished
                             : Conclusion::kPrimeNotAssociated;
  report.oracle_agreement = assoc == is_max;
  return report;
}

}  // namespace monideal
