#include "monideal/graphs.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "monideal/errors.hpp"

namespace monideal {

SimpleGraph::SimpleGraph(std::size_t vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (vertex_count_ < 1)
    throw InvalidArgument("a graph needs at least one vertex");
  for (Edge& e : edges_) {
    if (e.first > e.second) std::swap(e.first, e.second);
    if (e.first < 1 || e.second > vertex_count_)
      throw InvalidArgument("edge endpoint out of range");
    if (e.first == e.second)
      throw InvalidArgument("loops are not allowed in a simple graph");
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

SimpleGraph cycle_graph(std::size_t k) {
  if (k < 3) throw InvalidArgument("a cycle needs at least three vertices");
  std::vector<SimpleGraph::Edge> edges;
  edges.reserve(k);
  for (std::size_t v = 1; v < k; ++v) edges.push_back({v, v + 1});
  edges.push_back({1, k});
  return SimpleGraph(k, std::move(edges));
}

SimpleGraph wheel_graph(std::size_t order) {
  if (order < 4) throw InvalidArgument("a wheel needs at least four vertices");
  const std::size_t rim = order - 1;
  SimpleGraph base = cycle_graph(rim);
  std::vector<SimpleGraph::Edge> edges = base.edges();
  for (std::size_t v = 1; v <= rim; ++v) edges.push_back({v, order});
  return SimpleGraph(order, std::move(edges));
}

RingContext graph_ring(const SimpleGraph& g) {
  return numbered_ring("x", 1, g.vertex_count());
}

MonomialIdeal edge_ideal(const SimpleGraph& g, const RingContext& ctx) {
  if (ctx.var_count() != g.vertex_count())
    throw InvalidArgument("ring size does not match the vertex count");
  std::vector<Monomial> gens;
  gens.reserve(g.edges().size());
  for (const auto& [u, v] : g.edges())
    gens.push_back(multiply(variable_monomial(ctx, u - 1),
                            variable_monomial(ctx, v - 1)));
  return from_generators(ctx, gens);
}

MonomialIdeal cover_ideal(const SimpleGraph& g, const RingContext& ctx) {
  if (ctx.var_count() != g.vertex_count())
    throw InvalidArgument("ring size does not match the vertex count");
  if (g.edges().empty()) return MonomialIdeal::unit(ctx);
  MonomialIdeal acc = MonomialIdeal::unit(ctx);
  for (const auto& [u, v] : g.edges()) {
    const MonomialIdeal edge_prime = from_generators(
        ctx, {variable_monomial(ctx, u - 1), variable_monomial(ctx, v - 1)});
    acc = intersect(acc, edge_prime);
  }
  return acc;
}

SimpleGraph parse_graph(std::string_view src) {
  // Family shorthand first: "cycle:k" or "wheel:k".
  const auto colon = src.find(':');
  auto trimmed = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
      s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
      s.remove_suffix(1);
    return s;
  };
  if (colon != std::string_view::npos) {
    const std::string_view name = trimmed(src.substr(0, colon));
    const std::string_view num = trimmed(src.substr(colon + 1));
    std::size_t k = 0;
    for (char c : num) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw ParseError("malformed graph family size", 1, colon + 2);
      k = k * 10 + static_cast<std::size_t>(c - '0');
      if (k > 100000) throw ParseError("graph family size too large", 1, 1);
    }
    if (name == "cycle") return cycle_graph(k);
    if (name == "wheel") return wheel_graph(k);
    throw ParseError("unknown graph family '" + std::string(name) + "'", 1, 1);
  }

  std::size_t pos = 0, line = 1, col = 1;
  auto step = [&]() {
    if (src[pos] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++pos;
  };
  auto skip_ws = [&]() {
    while (pos < src.size() &&
           std::isspace(static_cast<unsigned char>(src[pos])))
      step();
  };
  auto fail = [&](const std::string& msg) -> void {
    throw ParseError(msg, line, col);
  };
  auto number = [&]() -> std::size_t {
    if (pos >= src.size() ||
        !std::isdigit(static_cast<unsigned char>(src[pos])))
      fail("expected a vertex number");
    std::size_t v = 0;
    while (pos < src.size() &&
           std::isdigit(static_cast<unsigned char>(src[pos]))) {
      v = v * 10 + static_cast<std::size_t>(src[pos] - '0');
      if (v > 100000) fail("vertex number too large");
      step();
    }
    return v;
  };

  skip_ws();
  const char* kw = "graph";
  for (const char* c = kw; *c; ++c) {
    if (pos >= src.size() || src[pos] != *c) fail("expected 'graph'");
    step();
  }
  skip_ws();
  const std::size_t n = number();
  skip_ws();
  if (pos >= src.size() || src[pos] != ';') fail("expected ';'");
  step();

  std::vector<SimpleGraph::Edge> edges;
  for (;;) {
    skip_ws();
    if (pos >= src.size()) break;
    const std::size_t u = number();
    if (pos >= src.size() || src[pos] != '-') fail("expected '-'");
    step();
    const std::size_t v = number();
    edges.push_back({u, v});
  }
  return SimpleGraph(n, std::move(edges));
}

}  // namespace monideal
