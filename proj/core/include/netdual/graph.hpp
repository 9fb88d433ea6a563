#pragma once

#include <utility>
#include <vector>

#include "netdual/ground_set.hpp"
#include "netdual/subset.hpp"

namespace netdual {

/// Simple undirected graph on vertices 0..n-1 (no loops, no multi-edges).
/// Edges are kept sorted lexicographically; at most 64 vertices so that
/// vertex subsets are Masks.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  /// Throws invalid_input on loops, duplicates, or out-of-range endpoints.
  SimpleGraph(int vertices, std::vector<std::pair<int, int>> edges);

  static SimpleGraph complete(int vertices);

  int vertex_count() const { return vertices_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  bool has_edge(int u, int v) const;
  Subset neighbors(int v) const { return adjacency_[v]; }

  /// Ground set with one variable per edge, labeled "x{u+1}{v+1}".
  GroundSet edge_ground_set() const;

 private:
  int vertices_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<Subset> adjacency_;
};

/// Number of connected components of the induced subgraph on `window`;
/// 0 when window is empty.
int graph_components(const SimpleGraph& graph, Subset window);

/// Component count for a graph given as adjacency masks (used by the hot
/// subset sweeps; vertices outside `window` are ignored).
int mask_components(const std::vector<Subset>& adjacency, Subset window);

}  // namespace netdual
