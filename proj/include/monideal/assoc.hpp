#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "monideal/ideal.hpp"

namespace monideal {

/// A set of monomial primes of one ring, kept in canonical order
/// (by size, then variable indices).
class AssSet {
public:
  explicit AssSet(RingContext ctx) : ctx_(std::move(ctx)) {}

  const RingContext& context() const noexcept { return ctx_; }
  void insert(MonomialPrime p);
  bool contains(const MonomialPrime& p) const;
  bool contains_maximal() const;
  std::size_t size() const noexcept { return primes_.size(); }
  bool empty() const noexcept { return primes_.empty(); }
  const std::vector<MonomialPrime>& primes() const noexcept { return primes_; }

  friend bool operator==(const AssSet& a, const AssSet& b);
  friend bool operator!=(const AssSet& a, const AssSet& b) { return !(a == b); }

private:
  RingContext ctx_;
  std::vector<MonomialPrime> primes_;
};

std::string format(const AssSet& s);

/// A witness that m lies in Ass(R/I): a monomial f outside I whose product
/// with every variable lands in I.  Construction re-checks both properties
/// and the coordinatewise bound f_i < lcm(G(I))_i, so holding a value of
/// this type is proof.
class CornerWitness {
public:
  CornerWitness(const MonomialIdeal& ideal, Monomial witness);
  const Monomial& monomial() const noexcept { return witness_; }

private:
  Monomial witness_;
};

/// One irreducible component: variable -> exponent, each positive.  The
/// component is the ideal generated by x_v^{e_v} over its entries.
struct IrreducibleComponent {
  std::map<std::size_t, Exp> powers;

  MonomialIdeal to_ideal(const RingContext& ctx) const;
  /// true iff the component involves every ring variable.
  bool covers_all_vars(const RingContext& ctx) const;
};

/// The colon (I : m) by the maximal ideal, i.e. the intersection of the
/// colons (I : x_i) over all variables.  I must be proper and nonzero.
MonomialIdeal socle_colon(const MonomialIdeal& ideal);

/// Whether the maximal ideal is associated to R/I, decided by the socle
/// test (I : m) != I.  I must be proper and nonzero.
bool has_maximal_associated(const MonomialIdeal& ideal);

/// All corner monomials of I, i.e. the minimal generators of (I : m) that
/// lie outside I.  Empty exactly when the maximal ideal is not associated.
std::vector<CornerWitness> corner_elements(const MonomialIdeal& ideal);

/// Same set, found by brute-force search over the box below lcm(G(I)).
/// Throws CapExceeded when the box volume passes limits().corner_search_cap.
std::vector<CornerWitness> corner_elements_exhaustive(
    const MonomialIdeal& ideal);

/// Whether the monomial prime p is associated to R/I: localize at p (set
/// the other variables to 1) and run the socle test there.  I must be
/// proper and nonzero.
bool is_associated(const MonomialIdeal& ideal, const MonomialPrime& p);

/// All associated primes of R/I, by localizing at every subset of the
/// support.  Throws CapExceeded when |supp I| > limits().subset_cap.
AssSet ass_primes(const MonomialIdeal& ideal);

/// Irredundant irreducible decomposition of a proper nonzero ideal via
/// coprime splitting of mixed-support generators.  Deterministic; results
/// for recent inputs are memoized.
std::vector<IrreducibleComponent> irreducible_decomposition(
    const MonomialIdeal& ideal);

/// Associated primes read off as the supports of the irreducible
/// components.  Independent route from ass_primes; the two must agree.
AssSet ass_from_decomposition(const MonomialIdeal& ideal);

void clear_decomposition_memo();

/// Ass(R/I^s) for s = 1..s_max, plus the start of the longest constant tail
/// (1-based).  The tail index is an observation about the computed window
/// only; nothing is claimed about larger powers.
struct AssSequence {
  std::vector<AssSet> sets;
  std::size_t observed_stable_from = 1;
};

AssSequence ass_sequence(const MonomialIdeal& ideal, std::size_t s_max);

}  // namespace monideal
