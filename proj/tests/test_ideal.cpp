#include <doctest.h>

#include <vector>

#include "monideal/errors.hpp"
#include "monideal/ideal.hpp"
#include "monideal/random_gen.hpp"
#include "monideal/text.hpp"
#include "support/oracles.hpp"

using namespace monideal;

namespace {

MonomialIdeal I(const RingContext& ctx, const char* text) {
  return parse_ideal(text, ctx);
}

Monomial M(const RingContext& ctx, const char* text) {
  return parse_monomial(text, ctx);
}

}  // namespace

TEST_CASE("minimalization removes divisible generators and sorts") {
  const RingContext ctx({"x", "y"});
  const MonomialIdeal a =
      from_generators(ctx, {M(ctx, "x^2*y"), M(ctx, "x^2"), M(ctx, "y^3"),
                            M(ctx, "x^4*y^2"), M(ctx, "x^2")});
  CHECK(a.gen_count() == 2);
  CHECK(format(a) == "(x^2, y^3)");

  // Canonical listing inside one degree: powers of earlier variables first.
  const MonomialIdeal sq =
      from_generators(ctx, {M(ctx, "y^2"), M(ctx, "x*y"), M(ctx, "x^2")});
  CHECK(format(sq) == "(x^2, x*y, y^2)");
}

TEST_CASE("zero and unit ideals") {
  const RingContext ctx({"x", "y"});
  const MonomialIdeal zero = MonomialIdeal::zero(ctx);
  const MonomialIdeal unit = MonomialIdeal::unit(ctx);
  CHECK(zero.is_zero());
  CHECK(zero.is_proper());
  CHECK(unit.is_unit());
  CHECK_FALSE(unit.is_proper());
  CHECK(format(zero) == "(0)");
  CHECK(format(unit) == "(1)");
  CHECK_FALSE(zero.contains(M(ctx, "x")));
  CHECK(unit.contains(Monomial(ctx)));

  const MonomialIdeal a = I(ctx, "(x^2, y)");
  CHECK(sum(a, zero) == a);
  CHECK(sum(a, unit) == unit);
  CHECK(product(a, zero) == zero);
  CHECK(product(a, unit) == a);
  CHECK(intersect(a, zero) == zero);
  CHECK(intersect(a, unit) == a);
  CHECK(power(a, 1) == a);
}

TEST_CASE("membership") {
  const RingContext ctx({"x", "y", "z"});
  const MonomialIdeal a = I(ctx, "(x^2, x*y, y^3*z)");
  CHECK(a.contains(M(ctx, "x^2*z")));
  CHECK(a.contains(M(ctx, "x*y^9")));
  CHECK_FALSE(a.contains(M(ctx, "x")));
  CHECK_FALSE(a.contains(M(ctx, "y^3")));
  CHECK(a.contains(M(ctx, "y^3*z^2")));
  CHECK(a.first_dividing_generator(M(ctx, "z")) == kernels::npos);
}

TEST_CASE("colon by monomial and by ideal") {
  const RingContext ctx({"x", "y"});
  CHECK(colon_monomial(I(ctx, "(x^2, x*y)"), M(ctx, "x")) ==
        I(ctx, "(x, y)"));
  CHECK(colon_ideal(I(ctx, "(x^2, x*y)"), I(ctx, "(x, y)")) == I(ctx, "(x)"));
  // Colon by something already inside gives the unit ideal.
  CHECK(colon_monomial(I(ctx, "(x)"), M(ctx, "x^3")).is_unit());
  // Colon of the zero ideal stays zero.
  CHECK(colon_monomial(MonomialIdeal::zero(ctx), M(ctx, "x")).is_zero());
}

TEST_CASE("intersection and product against naive membership") {
  InstanceRng rng(12345);
  for (int rep = 0; rep < 60; ++rep) {
    const RingContext ctx = random_ring(rng, 1, 3);
    const MonomialIdeal a = random_proper_ideal(rng, ctx, 4, 3);
    const MonomialIdeal b = random_proper_ideal(rng, ctx, 4, 3);

    const MonomialIdeal meet = intersect(a, b);
    const MonomialIdeal join = sum(a, b);
    const MonomialIdeal prod = product(a, b);

    // Every generator of the results behaves correctly under naive
    // membership in the operands.
    for (std::size_t i = 0; i < meet.gen_count(); ++i) {
      CHECK(oracles::naive_member(a, meet.generator(i)));
      CHECK(oracles::naive_member(b, meet.generator(i)));
    }
    for (std::size_t i = 0; i < join.gen_count(); ++i)
      CHECK((oracles::naive_member(a, join.generator(i)) ||
             oracles::naive_member(b, join.generator(i))));

    // The product agrees with the all-pairs construction.
    const auto naive = oracles::naive_product(oracles::rows_of(a),
                                              oracles::rows_of(b));
    for (std::size_t i = 0; i < prod.gen_count(); ++i) {
      const auto span = prod.gen_exponents(i);
      CHECK(oracles::naive_member(naive,
                                  oracles::Row(span.begin(), span.end())));
    }
    for (const auto& row : naive) {
      std::vector<Exp> exps(row.begin(), row.end());
      CHECK(prod.contains(Monomial(ctx, std::move(exps))));
    }

    // lcm-box probes: containment in the intersection means containment in
    // both operands.
    for (int probe = 0; probe < 20; ++probe) {
      const Monomial f = random_monomial(rng, ctx, 6, false);
      CHECK(meet.contains(f) == (a.contains(f) && b.contains(f)));
      CHECK(join.contains(f) ==
            (oracles::naive_member(a, f) || oracles::naive_member(b, f) ||
             join.contains(f)));  // sum may contain more than the union
    }
  }
}

TEST_CASE("power: known values") {
  const RingContext ctx({"x", "y"});
  const MonomialIdeal m = I(ctx, "(x, y)");
  CHECK(power(m, 2) == I(ctx, "(x^2, x*y, y^2)"));
  CHECK(power(m, 3) == I(ctx, "(x^3, x^2*y, x*y^2, y^3)"));
  CHECK_THROWS_AS(power(m, 0), InvalidArgument);

  const RingContext c3({"x", "y", "z"});
  // Three-variable family member with threshold 3.
  const MonomialIdeal ideal = I(c3, "(x^3, x*y*z, y^2*z)");
  CHECK(power(ideal, 3).gen_count() == 10);
}

TEST_CASE("radical and squarefree detection") {
  const RingContext ctx({"x", "y", "z"});
  CHECK(radical(I(ctx, "(x^2, y^3*z)")) == I(ctx, "(x, y*z)"));
  CHECK(is_squarefree(I(ctx, "(x, y*z)")));
  CHECK_FALSE(is_squarefree(I(ctx, "(x^2, y*z)")));
  CHECK(radical(MonomialIdeal::zero(ctx)).is_zero());
  CHECK(radical(MonomialIdeal::unit(ctx)).is_unit());

  InstanceRng rng(777);
  for (int rep = 0; rep < 40; ++rep) {
    const RingContext c = random_ring(rng, 1, 3);
    const MonomialIdeal a = random_proper_ideal(rng, c, 4, 4);
    const MonomialIdeal r = radical(a);
    CHECK(is_squarefree(r));
    CHECK(contains_ideal(r, a));
    CHECK(radical(r) == r);
  }
}

TEST_CASE("saturation") {
  const RingContext ctx({"x", "y", "z"});
  CHECK(saturate(I(ctx, "(x^2*y, x*z)"), M(ctx, "x")) == I(ctx, "(y, z)"));
  CHECK(saturate(I(ctx, "(x*y, z)"), M(ctx, "y")) == I(ctx, "(x, z)"));
  // Saturating by a variable not in any generator changes nothing.
  CHECK(saturate(I(ctx, "(x, y)"), M(ctx, "z")) == I(ctx, "(x, y)"));
}

TEST_CASE("delete variable, support, lcm box") {
  const RingContext ctx({"x", "y", "z"});
  const MonomialIdeal a = I(ctx, "(x^2*y, z^3, y*z)");
  // Setting y to zero kills generators that involve it.
  CHECK(delete_variable(a, 1) == I(ctx, "(z^3)"));
  // Setting x to zero keeps the others.
  CHECK(delete_variable(a, 0) == I(ctx, "(z^3, y*z)"));
  CHECK(support(a) == std::vector<std::size_t>{0, 1, 2});
  CHECK(support(I(ctx, "(y^4)")) == std::vector<std::size_t>{1});
  CHECK(lcm_exponents(a) == std::vector<Exp>{2, 1, 3});
}

TEST_CASE("contains_ideal") {
  const RingContext ctx({"x", "y"});
  CHECK(contains_ideal(I(ctx, "(x, y)"), I(ctx, "(x^2, x*y^3)")));
  CHECK_FALSE(contains_ideal(I(ctx, "(x^2)"), I(ctx, "(x)")));
  CHECK(contains_ideal(I(ctx, "(x)"), MonomialIdeal::zero(ctx)));
  CHECK(contains_ideal(MonomialIdeal::unit(ctx), I(ctx, "(x)")));
}

TEST_CASE("monomial primes") {
  const RingContext ctx({"x", "y", "z"});
  const MonomialPrime p(ctx, {2, 0});
  CHECK(p.vars() == std::vector<std::size_t>{0, 2});
  CHECK_FALSE(p.is_maximal());
  CHECK(MonomialPrime::maximal(ctx).is_maximal());
  CHECK(p.contains_var(0));
  CHECK_FALSE(p.contains_var(1));
  CHECK(p.to_ideal() == I(ctx, "(x, z)"));
  CHECK(format(p) == "(x, z)");
  CHECK_THROWS_AS(MonomialPrime(ctx, {}), InvalidArgument);
  CHECK_THROWS_AS(MonomialPrime(ctx, {3}), InvalidArgument);

  CHECK(prime_minus(MonomialPrime::maximal(ctx), 1) == p);
  CHECK_THROWS_AS(prime_minus(MonomialPrime(ctx, {0}), 0), InvalidArgument);
}

TEST_CASE("localization projects to the prime's variables") {
  const RingContext ctx({"x", "y", "z"});
  const MonomialIdeal a = I(ctx, "(x^2*y, x*z, y^3)");
  const MonomialPrime p(ctx, {0, 1});
  const RingContext sub = subring_context(ctx, p.vars());
  CHECK(sub.var_count() == 2);
  const MonomialIdeal localized = localize_at(a, p.vars());
  // z goes to 1: (x^2*y, x, y^3) minimalizes to (x, y^3).
  CHECK(localized == parse_ideal("(x, y^3)", sub));

  // Localizing at a single variable gives a principal power or the unit.
  const MonomialIdeal at_z = localize_at(a, std::vector<std::size_t>{2});
  CHECK(at_z.is_unit());
}

TEST_CASE("generator cap") {
  const RingContext ctx({"x", "y"});
  const std::size_t saved = limits().generator_cap;
  limits().generator_cap = 4;
  CHECK_THROWS_AS(power(I(ctx, "(x^4, x^3*y, x*y^3, y^4)"), 3), CapExceeded);
  limits().generator_cap = saved;
  CHECK(power(I(ctx, "(x^4, x^3*y, x*y^3, y^4)"), 3).gen_count() > 4);
}
