#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace monideal::selftest {

/// Outcome of one property suite run.  `attempted` counts generated
/// instances, `applicable` the ones that actually exercised the property
/// (some suites gate on a computed precondition), `failures` the violations.
struct SuiteResult {
  std::string name;
  std::size_t attempted = 0;
  std::size_t applicable = 0;
  std::size_t failures = 0;
  std::vector<std::string> failure_details;  // first few only

  bool passed(std::size_t required_applicable) const {
    return failures == 0 && applicable >= required_applicable;
  }
};

struct Suite {
  const char* name;
  /// Runs until `target` applicable instances were seen (or an internal
  /// attempt budget is exhausted), deterministically from `seed`.
  SuiteResult (*run)(std::uint64_t seed, std::size_t target);
};

/// All property suites:
///   support-union            union of Ass supports equals the ideal support
///   colon-ass-inclusions     Ass(R/(I:f)) in Ass(R/I) in the union with
///                            Ass(R/(I,f)), for monomials f outside I
///   disjoint-sum-ass         Ass of a variable-disjoint sum is the set of
///                            pairwise unions
///   squarefree-maximal       squarefree checker conclusive and agreeing
///   chain-witness-soundness  constructed two-column chains always yield a
///                            witness and a negative socle test
///   split-identities         both power identities of random splits hold
///   split-dichotomy          the dichotomy disjunction holds whenever its
///                            precondition fires
///   corner-divisibility      forced divisibility of corners holds whenever
///                            the reduced exclusion applies
///   corner-definition        both corner routes agree and every witness
///                            satisfies the definition verbatim
///   decomposition-agreement  localization route equals decomposition route
///   kernel-equivalence       all registered kernel backends match scalar
const std::vector<Suite>& all_suites();

/// Runs one suite by name; throws InvalidArgument for unknown names.
SuiteResult run_suite(std::string_view name, std::uint64_t seed,
                      std::size_t target);

}  // namespace monideal::selftest
