#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "monideal/ideal.hpp"

namespace monideal {

/// A finite simple graph on vertices 1..vertex_count.  Edges are stored as
/// sorted unordered pairs; loops are rejected and duplicates collapse.
class SimpleGraph {
public:
  using Edge = std::pair<std::size_t, std::size_t>;

  SimpleGraph(std::size_t vertex_count, std::vector<Edge> edges);

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

private:
  std::size_t vertex_count_;
  std::vector<Edge> edges_;
};

/// Cycle on k >= 3 vertices: 1-2-...-k-1.
SimpleGraph cycle_graph(std::size_t k);

/// Wheel on `order` >= 4 vertices: a cycle on 1..order-1 plus a hub (the
/// highest-numbered vertex) joined to every rim vertex.
SimpleGraph wheel_graph(std::size_t order);

/// Ring with one variable x1..xN per vertex.
RingContext graph_ring(const SimpleGraph& g);

/// Edge ideal: one squarefree quadric x_u*x_v per edge.
MonomialIdeal edge_ideal(const SimpleGraph& g, const RingContext& ctx);

/// Cover ideal: intersection of the edge primes (x_u, x_v); its minimal
/// generators are exactly the minimal vertex covers.
MonomialIdeal cover_ideal(const SimpleGraph& g, const RingContext& ctx);

/// Parses either "graph N; u-v u-v ..." or a family name "cycle:k" /
/// "wheel:k".
SimpleGraph parse_graph(std::string_view src);

}  // namespace monideal
