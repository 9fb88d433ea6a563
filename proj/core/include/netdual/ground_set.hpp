#pragma once

#include <string>
#include <vector>

#include "netdual/subset.hpp"

namespace netdual {

/// The fixed variable/vertex set x_1..x_n shared by an ideal and its
/// Stanley-Reisner complex. Labels are display names; for graphic
/// arrangements they look like "x12" for the edge {1,2}.
struct GroundSet {
  int n = 0;
  std::vector<std::string> labels;

  /// Labels x1..xn.
  static GroundSet numbered(int n);
  /// Ground set whose variables are the edges of K_vertices in
  /// lexicographic order: x12, x13, ..., x(n-1)n.
  static GroundSet complete_graph_edges(int vertices);

  Subset all() const { return Subset::full(n); }
  const std::string& label(int i) const { return labels[i]; }

  /// Renders a monomial/face, e.g. "x1x4"; the empty set renders as "1".
  std::string render(Subset s) const;
  /// Renders as a 1-based index list, e.g. "{1,4}".
  std::string render_indices(Subset s) const;

  bool operator==(const GroundSet& o) const { return n == o.n && labels == o.labels; }
};

/// Throws invalid_input unless 1 <= n <= kMaxVars and labels are distinct.
void validate(const GroundSet& g);

}  // namespace netdual
