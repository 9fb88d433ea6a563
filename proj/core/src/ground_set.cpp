#include "netdual/ground_set.hpp"

#include <set>

#include "netdual/errors.hpp"

namespace netdual {

GroundSet GroundSet::numbered(int n) {
  GroundSet g;
  g.n = n;
  g.labels.reserve(n);
  for (int i = 0; i < n; ++i) g.labels.push_back("x" + std::to_string(i + 1));
  validate(g);
  return g;
}

GroundSet GroundSet::complete_graph_edges(int vertices) {
  GroundSet g;
  g.n = vertices * (vertices - 1) / 2;
  for (int u = 0; u < vertices; ++u)
    for (int v = u + 1; v < vertices; ++v)
      g.labels.push_back("x" + std::to_string(u + 1) + std::to_string(v + 1));
  validate(g);
  return g;
}

std::string GroundSet::render(Subset s) const {
  if (s.empty()) return "1";
  std::string out;
  for (int i : s.elements()) out += labels[i];
  return out;
}

std::string GroundSet::render_indices(Subset s) const {
  std::string out = "{";
  bool first = true;
  for (int i : s.elements()) {
    if (!first) out += ",";
    out += std::to_string(i + 1);
    first = false;
  }
  return out + "}";
}

void validate(const GroundSet& g) {
  if (g.n > kMaxVars)
    throw size_cap_error("ground set of size " + std::to_string(g.n) +
                         " exceeds the bitset cap of " + std::to_string(kMaxVars));
  if (g.n < 1)
    throw invalid_input("ground set needs at least one variable");
  if (static_cast<int>(g.labels.size()) != g.n)
    throw invalid_input("ground set has " + std::to_string(g.labels.size()) +
                        " labels for " + std::to_string(g.n) + " variables");
  std::set<std::string> seen(g.labels.begin(), g.labels.end());
  if (static_cast<int>(seen.size()) != g.n)
    throw invalid_input("ground set labels are not distinct");
}

}  // namespace netdual
