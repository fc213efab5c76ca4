#include <doctest.h>

#include <cstdint>

#include "monideal/errors.hpp"
#include "monideal/monomial.hpp"
#include "monideal/text.hpp"

using namespace monideal;

TEST_CASE("ring context validation") {
  const RingContext ctx({"x", "y", "z"});
  CHECK(ctx.var_count() == 3);
  CHECK(ctx.var_name(1) == "y");
  CHECK(ctx.var_index("z") == 2);
  CHECK_FALSE(ctx.var_index("w").has_value());
  CHECK(ctx == RingContext({"x", "y", "z"}));
  CHECK(ctx != RingContext({"x", "y"}));
  CHECK(ctx != RingContext({"x", "z", "y"}));

  CHECK_THROWS_AS(RingContext({}), InvalidArgument);
  CHECK_THROWS_AS(RingContext({"x", "x"}), InvalidArgument);
  CHECK_THROWS_AS(RingContext({""}), InvalidArgument);
  CHECK_THROWS_AS(RingContext({"2x"}), InvalidArgument);
  CHECK_THROWS_AS(RingContext({"a b"}), InvalidArgument);

  const RingContext numbered = numbered_ring("x", 1, 6);
  CHECK(numbered.var_count() == 6);
  CHECK(numbered.var_name(0) == "x1");
  CHECK(numbered.var_name(5) == "x6");
}

TEST_CASE("monomial construction and accessors") {
  const RingContext ctx({"x", "y", "z"});
  const Monomial one(ctx);
  CHECK(one.is_identity());
  CHECK(one.total_degree() == 0);

  const Monomial m(ctx, {2, 0, 1});
  CHECK(m.total_degree() == 3);
  CHECK(m.exponent(0) == 2);
  CHECK(m.exponent(2) == 1);
  CHECK_FALSE(m.is_identity());
  CHECK(support(m) == std::vector<std::size_t>{0, 2});
  CHECK(support(one).empty());

  CHECK_THROWS_AS(Monomial(ctx, {1, 2}), InvalidArgument);
  CHECK_THROWS_AS(Monomial(ctx, {1, -1, 0}), InvalidArgument);

  const Monomial x2 = variable_monomial(ctx, 0, 2);
  CHECK(x2 == Monomial(ctx, {2, 0, 0}));
  CHECK(variable_monomial(ctx, 1) == Monomial(ctx, {0, 1, 0}));
}

TEST_CASE("monomial arithmetic") {
  const RingContext ctx({"x", "y"});
  const Monomial a(ctx, {3, 1});
  const Monomial b(ctx, {1, 2});
  CHECK(multiply(a, b) == Monomial(ctx, {4, 3}));
  CHECK(lcm(a, b) == Monomial(ctx, {3, 2}));
  CHECK(gcd(a, b) == Monomial(ctx, {1, 1}));
  CHECK(colon_quotient(a, b) == Monomial(ctx, {2, 0}));
  CHECK(colon_quotient(b, a) == Monomial(ctx, {0, 1}));
  CHECK(divides(gcd(a, b), a));
  CHECK(divides(a, lcm(a, b)));
  CHECK_FALSE(divides(a, b));

  CHECK(monomial_power(a, 0).is_identity());
  CHECK(monomial_power(a, 3) == Monomial(ctx, {9, 3}));

  const Monomial big(ctx, {INT32_MAX, 0});
  CHECK_THROWS_AS(multiply(big, Monomial(ctx, {1, 0})), ExponentOverflow);
  CHECK_THROWS_AS(monomial_power(big, 2), ExponentOverflow);
  CHECK(multiply(big, Monomial(ctx)) == big);
}

TEST_CASE("mixed ring contexts are rejected") {
  const RingContext a({"x", "y"});
  const RingContext b({"u", "v"});
  CHECK_THROWS_AS(multiply(Monomial(a), Monomial(b)), ContextMismatch);
  CHECK_THROWS_AS(lcm(Monomial(a), Monomial(b)), ContextMismatch);
}

TEST_CASE("canonical generator order: degree then earlier variables first") {
  const RingContext ctx({"x", "y"});
  const Monomial x2(ctx, {2, 0});
  const Monomial xy(ctx, {1, 1});
  const Monomial y2(ctx, {0, 2});
  const Monomial x(ctx, {1, 0});
  CHECK(canonical_compare(x, x2) < 0);   // lower degree first
  CHECK(canonical_compare(x2, xy) < 0);  // same degree: x^2 before x*y
  CHECK(canonical_compare(xy, y2) < 0);
  CHECK(canonical_compare(y2, x2) > 0);
  CHECK(canonical_compare(xy, xy) == 0);
}

TEST_CASE("monomial formatting") {
  const RingContext ctx({"x", "y", "z"});
  CHECK(format(Monomial(ctx)) == "1");
  CHECK(format(Monomial(ctx, {2, 0, 1})) == "x^2*z");
  CHECK(format(Monomial(ctx, {0, 1, 0})) == "y");
  CHECK(format(Monomial(ctx, {1, 1, 3})) == "x*y*z^3");
}
