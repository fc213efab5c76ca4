#include "monideal/assoc.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <unordered_map>

#include "monideal/errors.hpp"
#include "monideal/text.hpp"

namespace monideal {

namespace {

void require_proper_nonzero(const MonomialIdeal& ideal, const char* op) {
  if (ideal.is_zero())
    throw InvalidArgument(std::string(op) + " needs a nonzero ideal");
  if (ideal.is_unit())
    throw InvalidArgument(std::string(op) + " needs a proper ideal");
}

}  // namespace

void AssSet::insert(MonomialPrime p) {
  require_same_context(ctx_, p.context());
  const auto it = std::lower_bound(
      primes_.begin(), primes_.end(), p,
      [](const MonomialPrime& a, const MonomialPrime& b) {
        return canonical_compare(a, b) < 0;
      });
  if (it != primes_.end() && *it == p) return;
  primes_.insert(it, std::move(p));
}

bool AssSet::contains(const MonomialPrime& p) const {
  return std::any_of(primes_.begin(), primes_.end(),
                     [&](const MonomialPrime& q) { return q == p; });
}

bool AssSet::contains_maximal() const {
  return std::any_of(primes_.begin(), primes_.end(),
                     [](const MonomialPrime& q) { return q.is_maximal(); });
}

bool operator==(const AssSet& a, const AssSet& b) {
  return a.ctx_ == b.ctx_ && a.primes_ == b.primes_;
}

std::string format(const AssSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.primes().size(); ++i) {
    if (i) out += ", ";
    out += format(s.primes()[i]);
  }
  out += '}';
  return out;
}

CornerWitness::CornerWitness(const MonomialIdeal& ideal, Monomial witness)
    : witness_(std::move(witness)) {
  require_same_context(ideal.context(), witness_.context());
  if (ideal.contains(witness_))
    throw InvalidArgument("corner witness lies inside the ideal");
  const std::size_t n = ideal.var_count();
  std::vector<Exp> bumped(witness_.exponents().begin(),
                          witness_.exponents().end());
  for (std::size_t i = 0; i < n; ++i) {
    if (bumped[i] == INT32_MAX)
      throw ExponentOverflow("corner witness exponent at the range limit");
    ++bumped[i];
    const bool in = kernels::active().first_divisor(
                        ideal.flat().data(), ideal.gen_count(), n,
                        bumped.data(), n) != kernels::npos;
    --bumped[i];
    if (!in)
      throw InvalidArgument(
          "corner witness times a variable stays outside the ideal");
  }
  // A corner always sits strictly below the generator lcm coordinatewise;
  // failing this bound would mean the two checks above are inconsistent.
  const std::vector<Exp> box = lcm_exponents(ideal);
  for (std::size_t i = 0; i < n; ++i)
    if (witness_.exponents()[i] > box[i] - 1)
      throw InvariantViolation("corner witness escapes the lcm box");
}

MonomialIdeal IrreducibleComponent::to_ideal(const RingContext& ctx) const {
  std::vector<Monomial> gens;
  gens.reserve(powers.size());
  for (const auto& [var, exp] : powers)
    gens.push_back(variable_monomial(ctx, var, exp));
  return from_generators(ctx, gens);
}

bool IrreducibleComponent::covers_all_vars(const RingContext& ctx) const {
  return powers.size() == ctx.var_count();
}

MonomialIdeal socle_colon(const MonomialIdeal& ideal) {
  require_proper_nonzero(ideal, "socle computation");
  const RingContext& ctx = ideal.context();
  MonomialIdeal acc = colon_monomial(ideal, variable_monomial(ctx, 0));
  for (std::size_t v = 1; v < ctx.var_count(); ++v)
    acc = intersect(acc, colon_monomial(ideal, variable_monomial(ctx, v)));
  return acc;
}

bool has_maximal_associated(const MonomialIdeal& ideal) {
  return socle_colon(ideal) != ideal;
}

std::vector<CornerWitness> corner_elements(const MonomialIdeal& ideal) {
  const MonomialIdeal colon = socle_colon(ideal);
  std::vector<CornerWitness> out;
  for (std::size_t i = 0; i < colon.gen_count(); ++i) {
    Monomial g = colon.generator(i);
    if (!ideal.contains(g)) out.emplace_back(ideal, std::move(g));
  }
  return out;
}

std::vector<CornerWitness> corner_elements_exhaustive(
    const MonomialIdeal& ideal) {
  require_proper_nonzero(ideal, "corner search");
  const std::size_t n = ideal.var_count();
  const std::vector<Exp> box = lcm_exponents(ideal);
  // A corner f needs x_v * f in the ideal for every v; if some variable is
  // absent from every generator that is impossible, so the set is empty.
  for (Exp b : box)
    if (b == 0) return {};

  std::size_t volume = 1;
  for (Exp b : box) {
    if (volume > limits().corner_search_cap / static_cast<std::size_t>(b))
      throw CapExceeded("corner_search_cap",
                        "exhaustive corner search box exceeds the cap of " +
                            std::to_string(limits().corner_search_cap));
    volume *= static_cast<std::size_t>(b);
  }

  const auto& k = kernels::active();
  const Exp* rows = ideal.flat().data();
  const std::size_t count = ideal.gen_count();
  std::vector<Exp> digits(n, 0);
  std::vector<Monomial> found;
  for (std::size_t step = 0; step < volume; ++step) {
    const bool inside =
        k.first_divisor(rows, count, n, digits.data(), n) != kernels::npos;
    if (!inside) {
      bool corner = true;
      for (std::size_t v = 0; v < n && corner; ++v) {
        ++digits[v];
        corner = k.first_divisor(rows, count, n, digits.data(), n) !=
                 kernels::npos;
        --digits[v];
      }
      if (corner) found.emplace_back(ideal.context(), digits);
    }
    // Mixed-radix increment with digit v running over 0..box[v]-1.
    for (std::size_t v = n; v-- > 0;) {
      if (++digits[v] < box[v]) break;
      digits[v] = 0;
    }
  }
  std::sort(found.begin(), found.end(), [](const Monomial& a, const Monomial& b) {
    return canonical_compare(a, b) < 0;
  });
  std::vector<CornerWitness> out;
  out.reserve(found.size());
  for (Monomial& f : found) out.emplace_back(ideal, std::move(f));
  return out;
}

bool is_associated(const MonomialIdeal& ideal, const MonomialPrime& p) {
  require_same_context(ideal.context(), p.context());
  require_proper_nonzero(ideal, "associated-prime test");
  const std::vector<std::size_t> sup = support(ideal);
  if (!std::includes(sup.begin(), sup.end(), p.vars().begin(), p.vars().end()))
    return false;
  const MonomialIdeal local = localize_at(ideal, p.vars());
  if (local.is_unit()) return false;
  return has_maximal_associated(local);
}

AssSet ass_primes(const MonomialIdeal& ideal) {
  require_proper_nonzero(ideal, "associated-prime enumeration");
  const std::vector<std::size_t> sup = support(ideal);
  if (sup.size() > limits().subset_cap)
    throw CapExceeded("subset_cap",
                      "support of size " + std::to_string(sup.size()) +
                          " exceeds the subset enumeration cap of " +
                          std::to_string(limits().subset_cap));
  AssSet out(ideal.context());
  const std::size_t k = sup.size();
  std::vector<std::size_t> subset;
  for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
    subset.clear();
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (std::size_t{1} << i)) subset.push_back(sup[i]);
    const MonomialIdeal local = localize_at(ideal, subset);
    if (local.is_unit()) continue;
    if (has_maximal_associated(local))
      out.insert(MonomialPrime(ideal.context(), subset));
  }
  return out;
}

namespace {

// Memo for the splitting recursion, keyed on (var count, flat exponent rows).
// Bounded FIFO so repeated power/sequence queries reuse subproblems without
// growing without bound.
struct DecompositionMemo {
  std::mutex mutex;
  std::unordered_map<std::string, std::vector<IrreducibleComponent>> table;
  std::deque<std::string> order;

  static std::string key(const MonomialIdeal& ideal) {
    std::string k;
    const std::size_t n = ideal.var_count();
    k.reserve(ideal.flat().size() * sizeof(Exp) + sizeof(std::size_t));
    k.append(reinterpret_cast<const char*>(&n), sizeof(n));
    k.append(reinterpret_cast<const char*>(ideal.flat().data()),
             ideal.flat().size() * sizeof(Exp));
    return k;
  }

  bool find(const std::string& k, std::vector<IrreducibleComponent>& out) {
    std::lock_guard<std::mutex> lock(mutex);
    const auto it = table.find(k);
    if (it == table.end()) return false;
    out = it->second;
    return true;
  }

  void store(std::string k, const std::vector<IrreducibleComponent>& value) {
    std::lock_guard<std::mutex> lock(mutex);
    if (table.emplace(k, value).second) {
      order.push_back(std::move(k));
      while (order.size() > limits().memo_capacity) {
        table.erase(order.front());
        order.pop_front();
      }
    }
  }

  void clear() {
    std::lock_guard<std::mutex> lock(mutex);
    table.clear();
    order.clear();
  }
};

DecompositionMemo& memo() {
  static DecompositionMemo instance;
  return instance;
}

bool component_less(const IrreducibleComponent& a,
                    const IrreducibleComponent& b) {
  return std::lexicographical_compare(
      a.powers.begin(), a.powers.end(), b.powers.begin(), b.powers.end());
}

void sort_dedupe(std::vector<IrreducibleComponent>& comps) {
  std::sort(comps.begin(), comps.end(), component_less);
  comps.erase(std::unique(comps.begin(), comps.end(),
                          [](const IrreducibleComponent& a,
                             const IrreducibleComponent& b) {
                            return a.powers == b.powers;
                          }),
              comps.end());
}

// Returns the index of a generator with mixed support, or npos if all
// generators are pure variable powers (i.e. the ideal is irreducible).
std::size_t find_mixed_generator(const MonomialIdeal& ideal) {
  for (std::size_t r = 0; r < ideal.gen_count(); ++r) {
    const auto row = ideal.gen_exponents(r);
    std::size_t nz = 0;
    for (Exp e : row)
      if (e > 0 && ++nz >= 2) return r;
  }
  return kernels::npos;
}

std::vector<IrreducibleComponent> decompose_rec(const MonomialIdeal& ideal,
                                                std::size_t& steps) {
  const std::string k = DecompositionMemo::key(ideal);
  std::vector<IrreducibleComponent> out;
  if (memo().find(k, out)) return out;

  const std::size_t r = find_mixed_generator(ideal);
  if (r == kernels::npos) {
    IrreducibleComponent comp;
    for (std::size_t i = 0; i < ideal.gen_count(); ++i) {
      const auto row = ideal.gen_exponents(i);
      for (std::size_t v = 0; v < row.size(); ++v)
        if (row[v] > 0) comp.powers[v] = row[v];
    }
    out.push_back(std::move(comp));
  } else {
    if (++steps > limits().decomposition_cap)
      throw CapExceeded("decomposition_cap",
                        "irreducible decomposition exceeded " +
                            std::to_string(limits().decomposition_cap) +
                            " splitting steps");
    // Split the first mixed generator g = x_v^a * g' into the coprime parts
    // x_v^a and g'; the ideal is the intersection of the two enlargements.
    const auto row = ideal.gen_exponents(r);
    std::size_t v = 0;
    while (row[v] == 0) ++v;
    const Monomial pivot =
        variable_monomial(ideal.context(), v, row[v]);
    std::vector<Exp> rest(row.begin(), row.end());
    rest[v] = 0;
    const Monomial other(ideal.context(), std::move(rest));

    out = decompose_rec(sum(ideal, principal_ideal(pivot)), steps);
    auto right = decompose_rec(sum(ideal, principal_ideal(other)), steps);
    out.insert(out.end(), right.begin(), right.end());
    sort_dedupe(out);
  }
  memo().store(k, out);
  return out;
}

}  // namespace

std::vector<IrreducibleComponent> irreducible_decomposition(
    const MonomialIdeal& ideal) {
  require_proper_nonzero(ideal, "irreducible decomposition");
  std::size_t steps = 0;
  std::vector<IrreducibleComponent> comps = decompose_rec(ideal, steps);
  sort_dedupe(comps);

  // Drop redundant components until the decomposition is irredundant.  The
  // irredundant set is unique, so greedy removal is order-independent.
  std::vector<MonomialIdeal> as_ideals;
  as_ideals.reserve(comps.size());
  for (const auto& c : comps) as_ideals.push_back(c.to_ideal(ideal.context()));

  bool changed = true;
  while (changed && comps.size() > 1) {
    changed = false;
    const std::size_t k = comps.size();
    // prefix[i] = intersection of components before i; suffix likewise after.
    std::vector<MonomialIdeal> prefix, suffix(k, MonomialIdeal::unit(ideal.context()));
    prefix.reserve(k);
    MonomialIdeal acc = MonomialIdeal::unit(ideal.context());
    for (std::size_t i = 0; i < k; ++i) {
      prefix.push_back(acc);
      acc = intersect(acc, as_ideals[i]);
    }
    acc = MonomialIdeal::unit(ideal.context());
    for (std::size_t i = k; i-- > 0;) {
      suffix[i] = acc;
      acc = intersect(acc, as_ideals[i]);
    }
    for (std::size_t i = 0; i < k; ++i) {
      if (intersect(prefix[i], suffix[i]) == ideal) {
        comps.erase(comps.begin() + static_cast<std::ptrdiff_t>(i));
        as_ideals.erase(as_ideals.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  return comps;
}

AssSet ass_from_decomposition(const MonomialIdeal& ideal) {
  AssSet out(ideal.context());
  for (const IrreducibleComponent& c : irreducible_decomposition(ideal)) {
    std::vector<std::size_t> vars;
    vars.reserve(c.powers.size());
    for (const auto& [var, exp] : c.powers) vars.push_back(var);
    out.insert(MonomialPrime(ideal.context(), std::move(vars)));
  }
  return out;
}

void clear_decomposition_memo() { memo().clear(); }

AssSequence ass_sequence(const MonomialIdeal& ideal, std::size_t s_max) {
  if (s_max < 1)
    throw InvalidArgument("power sequence needs at least one step");
  require_proper_nonzero(ideal, "associated-prime sequence");
  AssSequence out;
  out.sets.reserve(s_max);
  MonomialIdeal pw = ideal;
  for (std::size_t s = 1; s <= s_max; ++s) {
    if (s > 1) pw = product(pw, ideal);
    out.sets.push_back(ass_primes(pw));
  }
  std::size_t from = s_max;
  while (from > 1 && out.sets[from - 2] == out.sets[from - 1]) --from;
  out.observed_stable_from = from;
  return out;
}

}  // namespace monideal
