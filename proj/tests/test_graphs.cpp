#include <doctest.h>

#include <algorithm>

#include "monideal/assoc.hpp"
#include "monideal/errors.hpp"
#include "monideal/graphs.hpp"
#include "monideal/text.hpp"
#include "support/oracles.hpp"

using namespace monideal;

TEST_CASE("simple graph validation and normalization") {
  SimpleGraph g(4, {{2, 1}, {3, 4}, {1, 2}});
  CHECK(g.vertex_count() == 4);
  REQUIRE(g.edges().size() == 2);  // duplicate collapsed
  CHECK(g.edges()[0] == SimpleGraph::Edge{1, 2});
  CHECK(g.edges()[1] == SimpleGraph::Edge{3, 4});

  CHECK_THROWS_AS(SimpleGraph(0, {}), InvalidArgument);
  CHECK_THROWS_AS(SimpleGraph(3, {{1, 1}}), InvalidArgument);  // loop
  CHECK_THROWS_AS(SimpleGraph(3, {{1, 4}}), InvalidArgument);  // out of range
  CHECK_THROWS_AS(SimpleGraph(3, {{0, 2}}), InvalidArgument);  // 1-based
}

TEST_CASE("cycle and wheel constructors") {
  const SimpleGraph c5 = cycle_graph(5);
  CHECK(c5.vertex_count() == 5);
  CHECK(c5.edges().size() == 5);
  CHECK_THROWS_AS(cycle_graph(2), InvalidArgument);

  const SimpleGraph w6 = wheel_graph(6);
  CHECK(w6.vertex_count() == 6);
  CHECK(w6.edges().size() == 10);  // 5 rim + 5 spokes
  // Hub 6 touches every rim vertex.
  std::size_t hub_degree = 0;
  for (const auto& e : w6.edges()) hub_degree += (e.second == 6) ? 1 : 0;
  CHECK(hub_degree == 5);
  CHECK_THROWS_AS(wheel_graph(3), InvalidArgument);
}

TEST_CASE("edge ideal of the pentagon") {
  const SimpleGraph c5 = cycle_graph(5);
  const RingContext ctx = graph_ring(c5);
  CHECK(ctx.var_count() == 5);
  CHECK(ctx.var_name(0) == "x1");
  const MonomialIdeal ideal = edge_ideal(c5, ctx);
  CHECK(ideal.gen_count() == 5);
  CHECK(ideal.contains(parse_monomial("x1*x2", ctx)));
  CHECK(ideal.contains(parse_monomial("x5*x1", ctx)));
  CHECK_FALSE(ideal.contains(parse_monomial("x1*x3", ctx)));
  CHECK(is_squarefree(ideal));
}

TEST_CASE("cover ideal generators are the minimal vertex covers") {
  for (const SimpleGraph& g :
       {cycle_graph(4), cycle_graph(5), wheel_graph(6),
        SimpleGraph(4, {{1, 2}, {2, 3}, {3, 4}})}) {
    const RingContext ctx = graph_ring(g);
    const MonomialIdeal ideal = cover_ideal(g, ctx);
    const auto covers =
        oracles::naive_minimal_covers(g.vertex_count(), g.edges());
    REQUIRE(ideal.gen_count() == covers.size());
    for (const auto& cover : covers) {
      std::vector<Exp> exps(ctx.var_count(), 0);
      for (std::size_t v : cover) exps[v] = 1;
      const Monomial m(ctx, std::move(exps));
      // Each minimal cover appears as a generator (not just a member).
      bool found = false;
      for (std::size_t i = 0; i < ideal.gen_count(); ++i)
        found = found || ideal.generator(i) == m;
      CHECK(found);
    }
  }
}

TEST_CASE("edge and cover ideals of a graph are mutual duals") {
  for (const SimpleGraph& g : {cycle_graph(5), wheel_graph(6)}) {
    const RingContext ctx = graph_ring(g);
    const MonomialIdeal edges = edge_ideal(g, ctx);
    const MonomialIdeal covers = cover_ideal(g, ctx);
    // Every edge monomial meets every cover generator in some variable.
    for (std::size_t i = 0; i < edges.gen_count(); ++i)
      for (std::size_t j = 0; j < covers.gen_count(); ++j)
        CHECK_FALSE(gcd(edges.generator(i), covers.generator(j))
                        .is_identity());
  }
}

TEST_CASE("pentagon power thresholds") {
  const SimpleGraph c5 = cycle_graph(5);
  const RingContext ctx = graph_ring(c5);

  const MonomialIdeal edges = edge_ideal(c5, ctx);
  const AssSequence eseq = ass_sequence(edges, 3);
  CHECK_FALSE(eseq.sets[0].contains_maximal());
  CHECK_FALSE(eseq.sets[1].contains_maximal());
  CHECK(eseq.sets[2].contains_maximal());
  // At the threshold the set is the minimal primes plus the maximal ideal.
  AssSet expected = eseq.sets[0];
  expected.insert(MonomialPrime::maximal(ctx));
  CHECK(eseq.sets[2] == expected);
  CHECK(eseq.sets[0].size() == 5);  // five minimal vertex covers

  const MonomialIdeal covers = cover_ideal(c5, ctx);
  const AssSequence cseq = ass_sequence(covers, 3);
  CHECK_FALSE(cseq.sets[0].contains_maximal());
  CHECK(cseq.sets[1].contains_maximal());
  CHECK(cseq.sets[2].contains_maximal());
}

TEST_CASE("graph parsing") {
  const SimpleGraph c7 = parse_graph("cycle:7");
  CHECK(c7.vertex_count() == 7);
  CHECK(c7.edges().size() == 7);

  const SimpleGraph w8 = parse_graph("wheel:8");
  CHECK(w8.vertex_count() == 8);
  CHECK(w8.edges().size() == 14);

  const SimpleGraph path = parse_graph("graph 3; 1-2 2-3");
  CHECK(path.vertex_count() == 3);
  CHECK(path.edges().size() == 2);

  CHECK_THROWS_AS(parse_graph("cycle:2"), InvalidArgument);
  CHECK_THROWS_AS(parse_graph("triangle:3"), ParseError);
  CHECK_THROWS_AS(parse_graph("graph 3; 1-9"), InvalidArgument);
  CHECK_THROWS_AS(parse_graph("graph 3; 1+2"), ParseError);
}

TEST_CASE("edgeless graphs give the unit cover ideal") {
  const SimpleGraph g(3, {});
  const RingContext ctx = graph_ring(g);
  CHECK(cover_ideal(g, ctx).is_unit());
  CHECK(edge_ideal(g, ctx).is_zero());
}
