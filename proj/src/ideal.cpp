#include "monideal/ideal.hpp"

#include <algorithm>
#include <numeric>

#include "monideal/errors.hpp"

namespace monideal {

Limits& limits() {
  static Limits instance;
  return instance;
}

namespace detail {

/// The single gate through which every ideal is built: sorts candidate rows
/// canonically, drops the ones divisible by an earlier kept row, and returns
/// the resulting minimal generating set.
struct IdealBuilder {
  static MonomialIdeal canonical(RingContext ctx, std::vector<Exp> rows) {
    const std::size_t n = ctx.var_count();
    const std::size_t count = rows.size() / n;
    if (count > limits().generator_cap)
      throw CapExceeded("generator_cap",
                        "candidate generator set of size " +
                            std::to_string(count) + " exceeds the cap of " +
                            std::to_string(limits().generator_cap));
    MonomialIdeal out(std::move(ctx));
    if (count == 0) return out;

    std::vector<std::int64_t> degree(count, 0);
    for (std::size_t r = 0; r < count; ++r)
      degree[r] = std::accumulate(rows.begin() + r * n,
                                  rows.begin() + (r + 1) * n, std::int64_t{0});

    std::vector<std::size_t> order(count);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) {
                if (degree[a] != degree[b]) return degree[a] < degree[b];
                const Exp* ra = rows.data() + a * n;
                const Exp* rb = rows.data() + b * n;
                for (std::size_t i = 0; i < n; ++i)
                  if (ra[i] != rb[i]) return ra[i] > rb[i];
                return false;
              });

    const auto& k = kernels::active();
    out.flat_.reserve(rows.size());
    for (std::size_t r : order) {
      const Exp* row = rows.data() + r * n;
      if (k.first_divisor(out.flat_.data(), out.count_, n, row, n) !=
          kernels::npos)
        continue;  // an already-kept generator divides this candidate
      out.flat_.insert(out.flat_.end(), row, row + n);
      ++out.count_;
    }
    return out;
  }
};

}  // namespace detail

using detail::IdealBuilder;

MonomialIdeal MonomialIdeal::zero(RingContext ctx) {
  return MonomialIdeal(std::move(ctx));
}

MonomialIdeal MonomialIdeal::unit(RingContext ctx) {
  MonomialIdeal out(std::move(ctx));
  out.count_ = 1;
  out.flat_.assign(out.ctx_.var_count(), 0);
  return out;
}

bool MonomialIdeal::is_unit() const noexcept {
  return count_ == 1 &&
         std::all_of(flat_.begin(), flat_.end(), [](Exp e) { return e == 0; });
}

std::span<const Exp> MonomialIdeal::gen_exponents(std::size_t i) const {
  if (i >= count_) throw InvalidArgument("generator index out of range");
  const std::size_t n = ctx_.var_count();
  return std::span<const Exp>(flat_.data() + i * n, n);
}

Monomial MonomialIdeal::generator(std::size_t i) const {
  const auto row = gen_exponents(i);
  return Monomial(ctx_, std::vector<Exp>(row.begin(), row.end()));
}

std::vector<Monomial> MonomialIdeal::generators() const {
  std::vector<Monomial> out;
  out.reserve(count_);
  for (std::size_t i = 0; i < count_; ++i) out.push_back(generator(i));
  return out;
}

bool MonomialIdeal::contains(const Monomial& f) const {
  return first_dividing_generator(f) != kernels::npos;
}

std::size_t MonomialIdeal::first_dividing_generator(const Monomial& f) const {
  require_same_context(ctx_, f.context());
  const std::size_t n = ctx_.var_count();
  return kernels::active().first_divisor(flat_.data(), count_, n,
                                         f.exponents().data(), n);
}

bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
  return a.ctx_ == b.ctx_ && a.count_ == b.count_ && a.flat_ == b.flat_;
}

MonomialIdeal from_generators(const RingContext& ctx,
                              std::span<const Monomial> gens) {
  std::vector<Exp> rows;
  rows.reserve(gens.size() * ctx.var_count());
  for (const Monomial& g : gens) {
    require_same_context(ctx, g.context());
    rows.insert(rows.end(), g.exponents().begin(), g.exponents().end());
  }
  return IdealBuilder::canonical(ctx, std::move(rows));
}

MonomialIdeal from_generators(const RingContext& ctx,
                              std::initializer_list<Monomial> gens) {
  return from_generators(ctx, std::span<const Monomial>(gens.begin(),
                                                        gens.size()));
}

MonomialIdeal principal_ideal(const Monomial& g) {
  std::vector<Exp> rows(g.exponents().begin(), g.exponents().end());
  return IdealBuilder::canonical(g.context(), std::move(rows));
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_context(a.context(), b.context());
  std::vector<Exp> rows;
  rows.reserve(a.flat().size() + b.flat().size());
  rows.insert(rows.end(), a.flat().begin(), a.flat().end());
  rows.insert(rows.end(), b.flat().begin(), b.flat().end());
  return IdealBuilder::canonical(a.context(), std::move(rows));
}

namespace {

void check_pair_cap(std::size_t ka, std::size_t kb, const char* what) {
  const std::size_t cap = limits().generator_cap;
  if (kb != 0 && ka > cap / kb)
    throw CapExceeded("generator_cap",
                      std::string(what) + " would materialize " +
                          std::to_string(ka) + "*" + std::to_string(kb) +
                          " candidates, over the cap of " +
                          std::to_string(cap));
}

}  // namespace

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_context(a.context(), b.context());
  if (a.is_zero() || b.is_zero()) return MonomialIdeal::zero(a.context());
  check_pair_cap(a.gen_count(), b.gen_count(), "ideal product");
  const std::size_t n = a.var_count();
  const auto& k = kernels::active();
  std::vector<Exp> rows(a.gen_count() * b.gen_count() * n);
  std::size_t r = 0;
  for (std::size_t i = 0; i < a.gen_count(); ++i)
    for (std::size_t j = 0; j < b.gen_count(); ++j) {
      if (!k.add_checked(rows.data() + r * n, a.gen_exponents(i).data(),
                         b.gen_exponents(j).data(), n))
        throw ExponentOverflow("ideal product exceeds the exponent range");
      ++r;
    }
  return IdealBuilder::canonical(a.context(), std::move(rows));
}

MonomialIdeal power(const MonomialIdeal& a, std::size_t t) {
  if (t < 1) throw InvalidArgument("ideal power needs exponent >= 1");
  MonomialIdeal acc = a;
  // Iterated product keeps intermediate sets minimal, which in practice
  // bounds the candidate blowup far below the binomial worst case.
  for (std::size_t i = 2; i <= t; ++i) acc = product(acc, a);
  return acc;
}

MonomialIdeal colon_monomial(const MonomialIdeal& a, const Monomial& f) {
  require_same_context(a.context(), f.context());
  const std::size_t n = a.var_count();
  const auto& k = kernels::active();
  std::vector<Exp> rows(a.flat().begin(), a.flat().end());
  for (std::size_t r = 0; r < a.gen_count(); ++r)
    k.sub_clamped(rows.data() + r * n, a.gen_exponents(r).data(),
                  f.exponents().data(), n);
  return IdealBuilder::canonical(a.context(), std::move(rows));
}

MonomialIdeal colon_ideal(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_context(a.context(), b.context());
  if (b.is_zero())
    throw InvalidArgument("colon by the zero ideal is undefined");
  MonomialIdeal acc = colon_monomial(a, b.generator(0));
  for (std::size_t i = 1; i < b.gen_count(); ++i)
    acc = intersect(acc, colon_monomial(a, b.generator(i)));
  return acc;
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_context(a.context(), b.context());
  if (a.is_zero() || b.is_zero()) return MonomialIdeal::zero(a.context());
  if (a.is_unit()) return b;
  if (b.is_unit()) return a;
  check_pair_cap(a.gen_count(), b.gen_count(), "ideal intersection");
  const std::size_t n = a.var_count();
  const auto& k = kernels::active();
  std::vector<Exp> rows(a.gen_count() * b.gen_count() * n);
  std::size_t r = 0;
  for (std::size_t i = 0; i < a.gen_count(); ++i)
    for (std::size_t j = 0; j < b.gen_count(); ++j) {
      k.cw_max(rows.data() + r * n, a.gen_exponents(i).data(),
               b.gen_exponents(j).data(), n);
      ++r;
    }
  return IdealBuilder::canonical(a.context(), std::move(rows));
}

MonomialIdeal intersect(std::span<const MonomialIdeal> ideals) {
  if (ideals.empty())
    throw InvalidArgument("intersection of an empty family is undefined");
  MonomialIdeal acc = ideals[0];
  for (std::size_t i = 1; i < ideals.size(); ++i)
    acc = intersect(acc, ideals[i]);
  return acc;
}

MonomialIdeal radical(const MonomialIdeal& a) {
  std::vector<Exp> rows(a.flat().begin(), a.flat().end());
  for (Exp& e : rows) e = e > 0 ? 1 : 0;
  return IdealBuilder::canonical(a.context(), std::move(rows));
}

bool is_squarefree(const MonomialIdeal& a) {
  return std::all_of(a.flat().begin(), a.flat().end(),
                     [](Exp e) { return e <= 1; });
}

MonomialIdeal delete_variable(const MonomialIdeal& a, std::size_t var) {
  if (var >= a.var_count())
    throw InvalidArgument("variable index out of range");
  std::vector<Exp> rows;
  for (std::size_t r = 0; r < a.gen_count(); ++r) {
    const auto row = a.gen_exponents(r);
    if (row[var] == 0) rows.insert(rows.end(), row.begin(), row.end());
  }
  return IdealBuilder::canonical(a.context(), std::move(rows));
}

std::vector<std::size_t> support(const MonomialIdeal& a) {
  std::vector<bool> seen(a.var_count(), false);
  for (std::size_t r = 0; r < a.gen_count(); ++r) {
    const auto row = a.gen_exponents(r);
    for (std::size_t i = 0; i < row.size(); ++i)
      if (row[i] > 0) seen[i] = true;
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (seen[i]) out.push_back(i);
  return out;
}

std::vector<Exp> lcm_exponents(const MonomialIdeal& a) {
  if (a.is_zero())
    throw InvalidArgument("lcm of the zero ideal's generators is undefined");
  const std::size_t n = a.var_count();
  std::vector<Exp> acc(a.gen_exponents(0).begin(), a.gen_exponents(0).end());
  const auto& k = kernels::active();
  for (std::size_t r = 1; r < a.gen_count(); ++r)
    k.cw_max(acc.data(), acc.data(), a.gen_exponents(r).data(), n);
  return acc;
}

MonomialIdeal saturate(const MonomialIdeal& a, const Monomial& f) {
  MonomialIdeal prev = a;
  for (;;) {
    MonomialIdeal next = colon_monomial(prev, f);
    if (next == prev) return prev;
    prev = std::move(next);
  }
}

bool contains_ideal(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_context(a.context(), b.context());
  for (std::size_t i = 0; i < b.gen_count(); ++i)
    if (!a.contains(b.generator(i))) return false;
  return true;
}

MonomialPrime::MonomialPrime(RingContext ctx, std::vector<std::size_t> vars)
    : ctx_(std::move(ctx)), vars_(std::move(vars)) {
  std::sort(vars_.begin(), vars_.end());
  vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
  if (vars_.empty())
    throw InvalidArgument("a monomial prime needs at least one variable");
  if (vars_.back() >= ctx_.var_count())
    throw InvalidArgument("variable index out of range in prime");
}

MonomialPrime MonomialPrime::maximal(RingContext ctx) {
  std::vector<std::size_t> all(ctx.var_count());
  std::iota(all.begin(), all.end(), 0);
  return MonomialPrime(std::move(ctx), std::move(all));
}

bool MonomialPrime::is_maximal() const noexcept {
  return vars_.size() == ctx_.var_count();
}

bool MonomialPrime::contains_var(std::size_t var) const noexcept {
  return std::binary_search(vars_.begin(), vars_.end(), var);
}

MonomialIdeal MonomialPrime::to_ideal() const {
  std::vector<Exp> rows(vars_.size() * ctx_.var_count(), 0);
  for (std::size_t i = 0; i < vars_.size(); ++i)
    rows[i * ctx_.var_count() + vars_[i]] = 1;
  return IdealBuilder::canonical(ctx_, std::move(rows));
}

bool operator==(const MonomialPrime& a, const MonomialPrime& b) {
  return a.ctx_ == b.ctx_ && a.vars_ == b.vars_;
}

int canonical_compare(const MonomialPrime& a, const MonomialPrime& b) {
  require_same_context(a.context(), b.context());
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  if (a.vars() < b.vars()) return -1;
  if (b.vars() < a.vars()) return 1;
  return 0;
}

MonomialPrime prime_minus(const MonomialPrime& p, std::size_t var) {
  if (!p.contains_var(var))
    throw InvalidArgument("prime does not contain the removed variable");
  if (p.size() < 2)
    throw InvalidArgument("removing the only variable of a prime");
  std::vector<std::size_t> rest;
  rest.reserve(p.size() - 1);
  for (std::size_t v : p.vars())
    if (v != var) rest.push_back(v);
  return MonomialPrime(p.context(), std::move(rest));
}

RingContext subring_context(const RingContext& ctx,
                            std::span<const std::size_t> vars) {
  std::vector<std::size_t> idx(vars.begin(), vars.end());
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  if (idx.empty())
    throw InvalidArgument("subring needs at least one variable");
  if (idx.back() >= ctx.var_count())
    throw InvalidArgument("variable index out of range");
  std::vector<std::string> names;
  names.reserve(idx.size());
  for (std::size_t v : idx) names.push_back(ctx.var_name(v));
  return RingContext(std::move(names));
}

MonomialIdeal localize_at(const MonomialIdeal& a,
                          std::span<const std::size_t> vars) {
  std::vector<std::size_t> idx(vars.begin(), vars.end());
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  RingContext sub = subring_context(a.context(), idx);
  std::vector<Exp> rows;
  rows.reserve(a.gen_count() * idx.size());
  for (std::size_t r = 0; r < a.gen_count(); ++r) {
    const auto row = a.gen_exponents(r);
    for (std::size_t v : idx) rows.push_back(row[v]);
  }
  return IdealBuilder::canonical(std::move(sub), std::move(rows));
}

}  // namespace monideal
