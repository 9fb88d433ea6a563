#pragma once

#include <cstdint>
#include <optional>
#include <tuple>
#include <string>
#include <utility>
#include <vector>

#include "netdual/graph.hpp"
#include "netdual/subset.hpp"

namespace netdual {

/// A line ax + by + cz = 0 in P^2 with exact integer coefficients in
/// canonical primitive form: gcd 1, first nonzero coefficient positive.
struct RationalLine {
  long long a = 0, b = 0, c = 0;

  /// Normalizes; throws invalid_input on (0,0,0).
  static RationalLine make(long long a, long long b, long long c);
  /// Parses "a b c" where each entry is an integer or a fraction p/q;
  /// denominators are cleared exactly.
  static RationalLine parse(const std::string& text);

  bool operator==(const RationalLine& o) const { return a == o.a && b == o.b && c == o.c; }
  std::string to_string() const;
};

/// A point of P^2 in the same canonical primitive integer form.
struct RationalPoint {
  long long x = 0, y = 0, z = 0;
  static RationalPoint cross(const RationalLine& l1, const RationalLine& l2);
  bool on(const RationalLine& l) const;
  bool operator==(const RationalPoint& o) const { return x == o.x && y == o.y && z == o.z; }
  bool operator<(const RationalPoint& o) const {
    return std::tie(x, y, z) < std::tie(o.x, o.y, o.z);
  }
};

/// Lines plus their rank-2 flats with three or more lines (the "multiple
/// points"). Double points are implicit: every pair of lines not inside a
/// listed multiple point meets at a normal crossing.
class LineArrangement {
 public:
  LineArrangement() = default;
  /// Validates: every listed point has >= 3 lines, two points share at most
  /// one line, indices within range.
  LineArrangement(int lines, std::vector<Subset> multiple_points);

  int line_count() const { return lines_; }
  const std::vector<Subset>& multiple_points() const { return multiple_points_; }

  /// Pairs of lines covered by no multiple point, in canonical order.
  std::vector<Subset> double_pairs() const;
  /// Multiple points followed by implicit double pairs: the full set of
  /// rank-2 flats.
  std::vector<Subset> rank2_flats() const;
  /// mu(p) = |lines through p| - 1 for any flat.
  static int mu(Subset point) { return point.size() - 1; }

  /// The multiple point containing both lines, if any.
  std::optional<Subset> point_through(int line1, int line2) const;
  bool is_flat(Subset point) const;

 private:
  int lines_ = 0;
  std::vector<Subset> multiple_points_;
};

/// A potential (k,d) net: a partition of the lines into k blocks of size d
/// plus a point set X drawn from the arrangement's flats.
struct NetCandidate {
  std::vector<Subset> blocks;
  std::vector<Subset> points;  // X

  int k() const { return static_cast<int>(blocks.size()); }
  int d() const { return blocks.empty() ? 0 : blocks.front().size(); }
  int line_count() const;
  /// Index of the block containing the line, or -1.
  int block_of(int line) const;

  /// blocks pairwise disjoint, equal size d >= 2, k >= 3, union = all lines.
  void validate(int lines) const;
};

/// Groups all pairwise intersection points of the given lines by exact
/// rational arithmetic and returns the arrangement (multiple points only;
/// doubles stay implicit). Throws invalid_input on duplicate lines or
/// fewer than two lines.
LineArrangement l2_from_coordinates(const std::vector<RationalLine>& lines);

/// Rank-2 flats of the graphic matroid of G, over the edge ground set in
/// lexicographic edge order: all triangles of G, plus 2-edge sets whose
/// closure adds no edge (disjoint pairs always; adjacent pairs exactly when
/// the closing edge is absent from G).
std::vector<Subset> graphic_flats(const SimpleGraph& graph);

/// The Ceva family: 3d lines in three concurrent blocks of d with d^2
/// triple points; for d >= 3 the three d-fold block points are the only
/// other flats and there are no implicit doubles. Returns the arrangement
/// and its canonical (3,d) net candidate. Throws invalid_input for d < 2.
std::pair<LineArrangement, NetCandidate> ceva(int d);

/// Built-in catalog: braid-a3, pappus, non-pappus, ceva-D (e.g. ceva-3),
/// hessian. The candidate is absent for entries that support no net.
struct CatalogEntry {
  std::string name;
  std::string description;
  LineArrangement arrangement;
  std::optional<NetCandidate> candidate;
  /// Exact coordinates when a rational realization is shipped.
  std::vector<RationalLine> coordinates;
};
CatalogEntry catalog(const std::string& name);
std::vector<std::string> catalog_names();

}  // namespace netdual
