#pragma once

#include <optional>
#include <string>
#include <vector>

#include "monideal/assoc.hpp"
#include "monideal/ideal.hpp"

namespace monideal {

// Checkers that decide whether a monomial prime (usually the maximal ideal)
// is associated to R/I^t without enumerating all associated primes.  Each
// checker verifies its hypotheses computationally, records them one by one,
// and only draws a conclusion when every hypothesis holds.  The conclusion is
// then cross-checked against the direct localization route; disagreement is
// reported, never silently ignored.

struct HypothesisRecord {
  std::string name;
  bool verified = false;
  std::string detail;  // what was checked / why it failed
};

struct WitnessRecord {
  std::string name;
  std::string value;
};

enum class Conclusion {
  /// Every hypothesis holds and the criterion's equivalence applies.
  kEquivalenceEstablished,
  /// Every hypothesis holds and the criterion excludes the prime.
  kPrimeNotAssociated,
  /// Some hypothesis failed; the criterion says nothing.
  kNotApplicable,
};

std::string_view to_string(Conclusion c);

struct CriterionReport {
  std::vector<HypothesisRecord> hypotheses;
  Conclusion conclusion = Conclusion::kNotApplicable;
  std::vector<WitnessRecord> witnesses;
  /// Set only when a conclusion was drawn: whether the direct computation
  /// agrees with it.  False here means an implementation bug.
  std::optional<bool> oracle_agreement;

  bool applicable() const {
    return conclusion != Conclusion::kNotApplicable;
  }
  bool all_hypotheses_verified() const;
};

/// One reduction step y^alpha used by the colon criteria: a prime variable
/// y, an exponent alpha >= 1, and (for the first criterion form) an
/// auxiliary ideal that must not involve y.
struct ColonStep {
  std::size_t var = 0;
  Exp exponent = 1;
  std::optional<MonomialIdeal> auxiliary;
};

struct ColonCriterionRequest {
  ColonCriterionRequest(MonomialIdeal ideal_, std::size_t power_,
                        MonomialPrime prime_)
      : ideal(std::move(ideal_)), power(power_), prime(std::move(prime_)) {}

  MonomialIdeal ideal;
  std::size_t power = 1;  // t
  MonomialPrime prime;
  std::vector<ColonStep> steps;
  /// Exponent for the final membership shortcut; defaults to t.  When the
  /// product of the step monomials lies in I^ell the prime is reported
  /// not associated.
  std::optional<std::size_t> membership_exponent;
};

/// Colon criterion, auxiliary-ideal form.  For each step i the hypotheses
/// are: the auxiliary ideal J_i is nonzero and proper; (I^t, y_i^a_i) =
/// (J_i, y_i^a_i); y_i is outside supp(J_i); and the prime with y_i removed
/// is not associated to R/J_i.  When all hold, p is associated to R/I^t
/// iff it is associated to R/(I^t : y_1^a_1 ... y_s^a_s).
CriterionReport check_colon_criterion_a(const ColonCriterionRequest& req);

/// Colon criterion, cumulative form: no auxiliary ideals.  Step i's
/// hypothesis is that the prime with y_i removed is not associated to
/// R/((I^t : y_1^a_1 ... y_{i-1}^a_{i-1}), y_i^a_i).  Same conclusion shape.
CriterionReport check_colon_criterion_b(const ColonCriterionRequest& req);

/// A certificate that the maximal ideal is NOT associated to R/I: one
/// permutation of the generators under which two exponent columns are both
/// weakly decreasing.
struct ChainWitness {
  std::size_t var_i = 0;
  std::size_t var_j = 0;
  std::vector<std::size_t> generator_order;
};

/// Searches all ordered variable pairs for a chain witness.  When one is
/// found the socle test must agree that the maximal ideal is not
/// associated; that cross-check runs on every hit.
std::optional<ChainWitness> check_chain_criterion(const MonomialIdeal& ideal);

/// Corner-based exclusion step: given a corner witness z of I^t whose
/// variable x_var divides z, and with the reduced maximal ideal not
/// associated to the x_var-deleted ideal's t-th power, concludes x_var | z.
CriterionReport check_corner_divisibility(const MonomialIdeal& ideal,
                                          std::size_t t, const Monomial& z,
                                          std::size_t var);

/// L = factor * cofactor + remainder with supp(factor) disjoint from the
/// rest.  Construction validates the support condition and the identity.
class SplitDecomposition {
public:
  SplitDecomposition(MonomialIdeal combined, Monomial factor,
                     MonomialIdeal cofactor, MonomialIdeal remainder);

  const MonomialIdeal& combined() const noexcept { return combined_; }
  const Monomial& factor() const noexcept { return factor_; }
  const MonomialIdeal& cofactor() const noexcept { return cofactor_; }
  const MonomialIdeal& remainder() const noexcept { return remainder_; }

private:
  MonomialIdeal combined_;
  Monomial factor_;
  MonomialIdeal cofactor_;
  MonomialIdeal remainder_;
};

/// Splits L along the monomial u: generators divisible by u contribute
/// their quotients to the cofactor, the rest form the remainder.
SplitDecomposition infer_split(const MonomialIdeal& combined,
                               const Monomial& factor);

/// Checks the two power identities of a split: (L^t : u^t) = (I + J)^t and
/// L^t = (L^t : u^t) cap (L^t, u^t), plus the transfer of the maximal
/// ideal from L^t to (L^t, u^t).
CriterionReport verify_split_identities(const SplitDecomposition& split,
                                        std::size_t t);

/// Under the precondition that the maximal ideal is associated to
/// R/(L^t, u^t), reports which side of the dichotomy holds: associated to
/// R/L^t, or (when u is a single variable) the reduced maximal ideal is
/// associated to R/(I+J)^t.  At least one side must hold.
CriterionReport check_dichotomy(const SplitDecomposition& split,
                                std::size_t t);

/// For squarefree ideals the maximal ideal is associated iff the ideal IS
/// the maximal ideal.
CriterionReport check_squarefree_maximal(const MonomialIdeal& ideal);

}  // namespace monideal
