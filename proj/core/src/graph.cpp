#include "netdual/graph.hpp"

#include <algorithm>

#include "netdual/errors.hpp"

namespace netdual {

SimpleGraph::SimpleGraph(int vertices, std::vector<std::pair<int, int>> edges)
    : vertices_(vertices) {
  if (vertices < 1 || vertices > kMaxVars)
    throw invalid_input("graph must have between 1 and 64 vertices");
  adjacency_.assign(vertices, Subset{});
  for (auto& [u, v] : edges) {
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= vertices) throw invalid_input("edge endpoint out of range");
    if (u == v) throw invalid_input("loops are not allowed");
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw invalid_input("multi-edges are not allowed");
  edges_ = std::move(edges);
  for (auto [u, v] : edges_) {
    adjacency_[u] = adjacency_[u].with(v);
    adjacency_[v] = adjacency_[v].with(u);
  }
}

SimpleGraph SimpleGraph::complete(int vertices) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < vertices; ++u)
    for (int v = u + 1; v < vertices; ++v) edges.emplace_back(u, v);
  return SimpleGraph(vertices, std::move(edges));
}

bool SimpleGraph::has_edge(int u, int v) const {
  return u != v && adjacency_[u].contains(v);
}

GroundSet SimpleGraph::edge_ground_set() const {
  GroundSet g;
  g.n = static_cast<int>(edges_.size());
  for (auto [u, v] : edges_)
    g.labels.push_back("x" + std::to_string(u + 1) + std::to_string(v + 1));
  validate(g);
  return g;
}

int mask_components(const std::vector<Subset>& adjacency, Subset window) {
  Mask remaining = window.bits();
  int components = 0;
  while (remaining) {
    ++components;
    Mask frontier = remaining & -remaining;  // lowest unvisited vertex
    Mask comp = 0;
    while (frontier) {
      comp |= frontier;
      Mask grow = 0;
      for (Mask b = frontier; b;) {
        int v = std::countr_zero(b);
        b &= b - 1;
        grow |= adjacency[v].bits();
      }
      frontier = grow & remaining & ~comp;
    }
    remaining &= ~comp;
  }
  return components;
}

int graph_components(const SimpleGraph& graph, Subset window) {
  if (!window.subset_of(Subset::full(graph.vertex_count())))
    throw invalid_input("window is not a subset of the vertex set");
  std::vector<Subset> adj(graph.vertex_count());
  for (int v = 0; v < graph.vertex_count(); ++v) adj[v] = graph.neighbors(v);
  return mask_components(adj, window);
}

}  // namespace netdual
