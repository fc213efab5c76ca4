#include <doctest.h>

#include <string>

#include "monideal/assoc.hpp"
#include "monideal/criteria.hpp"
#include "monideal/errors.hpp"
#include "monideal/text.hpp"

using namespace monideal;

namespace {

MonomialIdeal I(const RingContext& ctx, const char* text) {
  return parse_ideal(text, ctx);
}

Monomial M(const RingContext& ctx, const char* text) {
  return parse_monomial(text, ctx);
}

std::string witness_value(const CriterionReport& rep, const std::string& name) {
  for (const WitnessRecord& w : rep.witnesses)
    if (w.name == name) return w.value;
  return "<missing>";
}

bool hypothesis_verified(const CriterionReport& rep, const std::string& name) {
  for (const HypothesisRecord& h : rep.hypotheses)
    if (h.name == name) return h.verified;
  return false;
}

}  // namespace

TEST_CASE("chain witness on a four-variable ideal") {
  const RingContext ctx({"x", "y", "z", "t"});
  const MonomialIdeal ideal =
      I(ctx, "(x^5*y*z^4, x^4*z^3*t^2, x^3*y^2*z^2, x^2*z*t^3)");
  const auto witness = check_chain_criterion(ideal);
  REQUIRE(witness.has_value());
  CHECK(witness->var_i == 0);
  CHECK(witness->var_j == 2);
  // The permuted columns really are weakly decreasing.
  for (std::size_t r = 1; r < witness->generator_order.size(); ++r) {
    const auto prev = ideal.gen_exponents(witness->generator_order[r - 1]);
    const auto cur = ideal.gen_exponents(witness->generator_order[r]);
    CHECK(prev[witness->var_i] >= cur[witness->var_i]);
    CHECK(prev[witness->var_j] >= cur[witness->var_j]);
  }
  CHECK_FALSE(has_maximal_associated(ideal));
}

TEST_CASE("chain criterion finds nothing when the maximal ideal is associated") {
  const RingContext ctx({"x", "y"});
  CHECK_FALSE(check_chain_criterion(I(ctx, "(x^2, x*y, y^2)")).has_value());
  CHECK_FALSE(check_chain_criterion(I(ctx, "(x^3, y^2)")).has_value());
  // A principal ideal always has one (single generator, trivially a chain).
  CHECK(check_chain_criterion(I(ctx, "(x*y)")).has_value());
}

TEST_CASE("cumulative colon criterion clears the family below its threshold") {
  const RingContext ctx({"x", "y", "z"});
  const MonomialIdeal ideal = I(ctx, "(x^3, x*y*z, y^2*z)");  // threshold 3
  for (std::size_t s = 1; s <= 2; ++s) {
    CAPTURE(s);
    ColonCriterionRequest req(ideal, s, MonomialPrime::maximal(ctx));
    req.steps.push_back({2, 1, std::nullopt});                       // z
    req.steps.push_back({1, 1, std::nullopt});                       // y
    req.steps.push_back({0, static_cast<Exp>(3 * s - 2), std::nullopt});
    req.membership_exponent = s;
    const CriterionReport rep = check_colon_criterion_b(req);
    CHECK(rep.all_hypotheses_verified());
    CHECK(rep.conclusion == Conclusion::kPrimeNotAssociated);
    REQUIRE(rep.oracle_agreement.has_value());
    CHECK(*rep.oracle_agreement);
    CHECK(witness_value(rep, "prime-associated-to-power") == "false");
    CHECK(witness_value(rep, "step-product-in-power-" + std::to_string(s)) ==
          "true");
  }
}

TEST_CASE("cumulative colon criterion in equivalence form") {
  const RingContext ctx({"x", "y"});
  ColonCriterionRequest req(I(ctx, "(x^2, x*y, y^3)"), 1, MonomialPrime::maximal(ctx));
  req.steps.push_back({1, 1, std::nullopt});  // y
  const CriterionReport rep = check_colon_criterion_b(req);
  // (I, y) = (x^2, y) has only (x, y) associated, so (x) is excluded.
  CHECK(rep.all_hypotheses_verified());
  CHECK(rep.conclusion == Conclusion::kEquivalenceEstablished);
  CHECK(rep.oracle_agreement == true);
  // Here both sides of the equivalence are positive.
  CHECK(witness_value(rep, "prime-associated-to-power") == "true");
  CHECK(witness_value(rep, "prime-associated-to-colon") == "true");
  CHECK(witness_value(rep, "colon-ideal") == "(x, y^2)");
}

TEST_CASE("auxiliary colon criterion: single-step equivalence") {
  const RingContext ctx({"x", "y", "z"});
  ColonCriterionRequest req(I(ctx, "(x^3, x*y*z, y^2*z)"), 1, MonomialPrime::maximal(ctx));
  req.steps.push_back({2, 1, I(ctx, "(x^3)")});  // (I, z) = ((x^3), z)
  const CriterionReport rep = check_colon_criterion_a(req);
  CHECK(hypothesis_verified(rep, "step1.auxiliary-usable"));
  CHECK(hypothesis_verified(rep, "step1.augmented-equality"));
  CHECK(hypothesis_verified(rep, "step1.variable-outside-auxiliary"));
  CHECK(hypothesis_verified(rep, "step1.reduced-prime-excluded"));
  CHECK(rep.conclusion == Conclusion::kEquivalenceEstablished);
  CHECK(rep.oracle_agreement == true);
  CHECK(witness_value(rep, "colon-ideal") == "(x*y, y^2, x^3)");
  CHECK(witness_value(rep, "prime-associated-to-power") == "false");
  CHECK(witness_value(rep, "prime-associated-to-colon") == "false");
}

TEST_CASE("auxiliary colon criterion: zero auxiliary makes it inapplicable") {
  const RingContext ctx({"x", "y"});
  ColonCriterionRequest req(I(ctx, "(y)"), 1, MonomialPrime::maximal(ctx));
  req.steps.push_back({0, 1, MonomialIdeal::zero(ctx)});
  const CriterionReport rep = check_colon_criterion_a(req);
  CHECK_FALSE(hypothesis_verified(rep, "step1.auxiliary-usable"));
  CHECK(rep.conclusion == Conclusion::kNotApplicable);
  CHECK_FALSE(rep.applicable());
  CHECK_FALSE(rep.oracle_agreement.has_value());
}

TEST_CASE("auxiliary colon criterion: wrong auxiliary fails the equality") {
  const RingContext ctx({"x", "y", "z"});
  ColonCriterionRequest req(I(ctx, "(x^3, x*y*z, y^2*z)"), 1, MonomialPrime::maximal(ctx));
  req.steps.push_back({2, 1, I(ctx, "(x^2)")});
  const CriterionReport rep = check_colon_criterion_a(req);
  CHECK_FALSE(hypothesis_verified(rep, "step1.augmented-equality"));
  CHECK(rep.conclusion == Conclusion::kNotApplicable);
}

TEST_CASE("colon request validation") {
  const RingContext ctx({"x", "y"});
  ColonCriterionRequest req(I(ctx, "(x^2, y)"), 1, MonomialPrime::maximal(ctx));

  SUBCASE("no steps") {
    CHECK_THROWS_AS(check_colon_criterion_b(req), InvalidArgument);
  }
  SUBCASE("auxiliary missing for the auxiliary form") {
    req.steps.push_back({0, 1, std::nullopt});
    CHECK_THROWS_AS(check_colon_criterion_a(req), InvalidArgument);
  }
  SUBCASE("auxiliary forbidden for the cumulative form") {
    req.steps.push_back({0, 1, I(ctx, "(y)")});
    CHECK_THROWS_AS(check_colon_criterion_b(req), InvalidArgument);
  }
  SUBCASE("duplicate step variables") {
    req.steps.push_back({0, 1, std::nullopt});
    req.steps.push_back({0, 2, std::nullopt});
    CHECK_THROWS_AS(check_colon_criterion_b(req), InvalidArgument);
  }
  SUBCASE("membership exponent below the power") {
    req.power = 3;
    req.steps.push_back({0, 1, std::nullopt});
    req.membership_exponent = 2;
    CHECK_THROWS_AS(check_colon_criterion_b(req), InvalidArgument);
  }
  SUBCASE("single-variable prime") {
    req.prime = MonomialPrime(ctx, {0});
    req.steps.push_back({0, 1, std::nullopt});
    CHECK_THROWS_AS(check_colon_criterion_b(req), InvalidArgument);
  }
}

TEST_CASE("corner divisibility") {
  const RingContext ctx({"x", "y"});
  // Every generator involves x, so the x-deleted ideal is zero and the
  // criterion forces x to divide every corner.
  const MonomialIdeal ideal = I(ctx, "(x^3, x*y)");
  const auto corners = corner_elements(ideal);
  REQUIRE_FALSE(corners.empty());
  const CriterionReport rep =
      check_corner_divisibility(ideal, 1, corners[0].monomial(), 0);
  CHECK(hypothesis_verified(rep, "corner-witness"));
  CHECK(hypothesis_verified(rep, "deleted-power-excludes-reduced"));
  CHECK(rep.conclusion == Conclusion::kEquivalenceEstablished);
  CHECK(rep.oracle_agreement == true);
  CHECK(witness_value(rep, "variable-divides-corner") == "true");
  CHECK(witness_value(rep, "deleted-ideal") == "(0)");

  // A non-corner input is rejected by the first hypothesis.
  const CriterionReport bad =
      check_corner_divisibility(ideal, 1, M(ctx, "x^3"), 0);
  CHECK_FALSE(hypothesis_verified(bad, "corner-witness"));
  CHECK(bad.conclusion == Conclusion::kNotApplicable);
}

TEST_CASE("corner divisibility with a nonzero deleted ideal") {
  const RingContext ctx({"x", "y", "z"});
  // Corner of (x^2, y^2, z^2, x*y*z) at t = 1; deleting z leaves
  // (x^2, y^2), whose reduced prime test drives applicability.
  const MonomialIdeal ideal = I(ctx, "(x^2, y^2, z^2, x*y*z)");
  const auto corners = corner_elements(ideal);
  REQUIRE_FALSE(corners.empty());
  for (const auto& w : corners) {
    const CriterionReport rep =
        check_corner_divisibility(ideal, 1, w.monomial(), 2);
    if (rep.applicable()) {
      // Whenever the criterion applies its conclusion must check out.
      CHECK(rep.oracle_agreement == true);
    }
  }
}

TEST_CASE("split decomposition and its identities") {
  const RingContext ctx({"x", "y", "z"});
  const MonomialIdeal combined =
      I(ctx, "(x^11*z, x^5*y^4, x^6*y^2, y^11*z)");
  const SplitDecomposition split = infer_split(combined, M(ctx, "z"));
  CHECK(split.factor() == M(ctx, "z"));
  CHECK(split.cofactor() == I(ctx, "(x^11, y^11)"));
  CHECK(split.remainder() == I(ctx, "(x^5*y^4, x^6*y^2)"));

  const CriterionReport rep = verify_split_identities(split, 3);
  CHECK(hypothesis_verified(rep, "colon-power-identity"));
  CHECK(hypothesis_verified(rep, "intersection-identity"));
  CHECK(hypothesis_verified(rep, "maximal-transfer"));
  CHECK(rep.conclusion == Conclusion::kEquivalenceEstablished);
  CHECK(rep.oracle_agreement == true);
  CHECK(witness_value(rep, "maximal-associated-to-power") == "false");

  const MonomialIdeal cubed = power(combined, 3);
  CHECK(cubed.gen_count() == 13);
  CHECK_FALSE(has_maximal_associated(cubed));
  CHECK(has_maximal_associated(sum(cubed, I(ctx, "(z^3)"))));
}

TEST_CASE("split construction rejects bad parts") {
  const RingContext ctx({"x", "y", "z"});
  const MonomialIdeal combined = I(ctx, "(x*z, y*z)");
  // Factor sharing support with the cofactor.
  CHECK_THROWS_AS(SplitDecomposition(combined, M(ctx, "z"),
                                     I(ctx, "(x, y*z)"),
                                     MonomialIdeal::zero(ctx)),
                  InvalidArgument);
  // Parts that do not rebuild the combined ideal.
  CHECK_THROWS_AS(SplitDecomposition(combined, M(ctx, "z"), I(ctx, "(x)"),
                                     MonomialIdeal::zero(ctx)),
                  InvalidArgument);
  // Identity factor.
  CHECK_THROWS_AS(infer_split(combined, Monomial(ctx)), InvalidArgument);
  // A valid inference for reference.
  CHECK_NOTHROW(infer_split(combined, M(ctx, "z")));
}

TEST_CASE("dichotomy on the wheel cover ideal's hub split") {
  const RingContext ctx = numbered_ring("x", 1, 6);
  // Cover ideal of the six-vertex wheel (rim 1..5, hub 6).
  const MonomialIdeal cover =
      I(ctx,
        "(x2*x4*x5*x6, x2*x3*x5*x6, x1*x3*x5*x6, x1*x3*x4*x6, x1*x2*x4*x6, "
        "x1*x2*x3*x4*x5)");
  const SplitDecomposition split =
      infer_split(cover, parse_monomial("x6", ctx));
  CHECK(split.remainder() == I(ctx, "(x1*x2*x3*x4*x5)"));
  CHECK(split.cofactor().gen_count() == 5);

  const CriterionReport rep = check_dichotomy(split, 3);
  CHECK(hypothesis_verified(rep, "maximal-associated-to-augmented"));
  CHECK(hypothesis_verified(rep, "factor-is-plain-variable"));
  CHECK(rep.conclusion == Conclusion::kEquivalenceEstablished);
  REQUIRE(rep.oracle_agreement.has_value());
  CHECK(*rep.oracle_agreement);
  // Both sides of the dichotomy hold on this input.
  CHECK(witness_value(rep, "maximal-associated-to-power") == "true");
  CHECK(witness_value(rep, "reduced-associated-to-parts-power") == "true");
}

TEST_CASE("dichotomy is inapplicable for a composite factor") {
  const RingContext ctx({"x", "y", "z"});
  const MonomialIdeal combined = I(ctx, "(x*z^2, y*z^2)");
  const SplitDecomposition split = infer_split(combined, M(ctx, "z^2"));
  const CriterionReport rep = check_dichotomy(split, 1);
  CHECK_FALSE(hypothesis_verified(rep, "factor-is-plain-variable"));
  CHECK(rep.conclusion == Conclusion::kNotApplicable);
}

TEST_CASE("squarefree criterion") {
  const RingContext ctx({"x", "y", "z"});
  const CriterionReport yes = check_squarefree_maximal(I(ctx, "(x, y, z)"));
  CHECK(yes.conclusion == Conclusion::kEquivalenceEstablished);
  CHECK(yes.oracle_agreement == true);
  CHECK(witness_value(yes, "ideal-is-the-maximal-ideal") == "true");
  CHECK(witness_value(yes, "socle-test") == "true");

  const CriterionReport no = check_squarefree_maximal(I(ctx, "(x*y, y*z)"));
  CHECK(no.conclusion == Conclusion::kPrimeNotAssociated);
  CHECK(no.oracle_agreement == true);
  CHECK(witness_value(no, "socle-test") == "false");

  CHECK_THROWS_AS(check_squarefree_maximal(I(ctx, "(x^2, y)")),
                  InvalidArgument);
}
