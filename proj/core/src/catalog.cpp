#include <algorithm>

#include "netdual/arrangement.hpp"
#include "netdual/errors.hpp"

namespace netdual {

namespace {

Subset of(std::initializer_list<int> one_based) {
  Subset s;
  for (int i : one_based) s = s.with(i - 1);
  return s;
}

CatalogEntry braid_a3() {
  CatalogEntry e;
  e.name = "braid-a3";
  e.description =
      "A3 braid arrangement: 6 lines (the K_4 graphic arrangement with edges "
      "12,23,13,34,14,24 as lines 1..6), 4 triple points, 3 double points; "
      "supports the unique (3,2) net.";
  e.arrangement = LineArrangement(
      6, {of({1, 2, 3}), of({1, 5, 6}), of({2, 4, 6}), of({3, 4, 5})});
  NetCandidate net;
  net.blocks = {of({1, 4}), of({2, 5}), of({3, 6})};
  net.points = e.arrangement.multiple_points();
  e.candidate = std::move(net);
  // In coordinates u = x1-x2, v = x2-x3, w = x3-x4 the six differences
  // x_i - x_j become:
  e.coordinates = {
      RationalLine::make(1, 0, 0),  // x1-x2
      RationalLine::make(0, 1, 0),  // x2-x3
      RationalLine::make(1, 1, 0),  // x1-x3
      RationalLine::make(0, 0, 1),  // x3-x4
      RationalLine::make(1, 1, 1),  // x1-x4
      RationalLine::make(0, 1, 1),  // x2-x4
  };
  return e;
}

CatalogEntry pappus() {
  CatalogEntry e;
  e.name = "pappus";
  e.description =
      "Pappus arrangement ((9_3)_1 configuration): 9 lines, 9 triple points, "
      "9 double points; supports a (3,3) net with blocks |169|258|347|.";
  e.arrangement = LineArrangement(
      9, {of({1, 2, 7}), of({1, 3, 5}), of({1, 4, 8}), of({2, 3, 9}), of({2, 4, 6}),
          of({3, 6, 8}), of({4, 5, 9}), of({5, 6, 7}), of({7, 8, 9})});
  NetCandidate net;
  net.blocks = {of({1, 6, 9}), of({2, 5, 8}), of({3, 4, 7})};
  net.points = e.arrangement.multiple_points();
  e.candidate = std::move(net);
  // A rational realization labeled to match: line 1 carries three collinear
  // points A_i = (a_i, 0), line 6 carries B_j = (0, b_j) with a = (1,2,4),
  // b = (1,2,5), lines 2,3,4,5,7,8 are the cross joins A_iB_j and line 9 is
  // the Pappus line of the three cross intersections.
  e.coordinates = {
      RationalLine::make(0, 1, 0),     // 1: L_A (y = 0)
      RationalLine::make(2, 1, -2),    // 2: A_1 B_2
      RationalLine::make(1, 2, -2),    // 3: A_2 B_1
      RationalLine::make(1, 2, -4),    // 4: A_3 B_2
      RationalLine::make(5, 2, -10),   // 5: A_2 B_3
      RationalLine::make(1, 0, 0),     // 6: L_B (x = 0)
      RationalLine::make(5, 1, -5),    // 7: A_1 B_3
      RationalLine::make(1, 4, -4),    // 8: A_3 B_1
      RationalLine::make(7, -10, 2),   // 9: L_C
  };
  return e;
}

CatalogEntry non_pappus() {
  CatalogEntry e;
  e.name = "non-pappus";
  e.description =
      "Non-Pappus arrangement ((9_3)_2 configuration, derived from the cyclic "
      "difference family {i,i+1,i+3} mod 9): 9 lines, 9 triple points, 9 double "
      "points; supports no net. Ships an exact rational realization.";
  std::vector<Subset> triples;
  for (int i = 0; i < 9; ++i) {
    Subset t;
    t = t.with(i).with((i + 1) % 9).with((i + 3) % 9);
    triples.push_back(t);
  }
  e.arrangement = LineArrangement(9, std::move(triples));
  // No candidate: no (3,3) partition of these lines forms a net (checked
  // exhaustively in the tests).
  // A rational realization whose triple points carry exactly these labels,
  // found by a parameter search over the one-dimensional moduli of the
  // configuration and machine-checked against the incidences above.
  e.coordinates = {
      RationalLine::make(4, 7, 0),   RationalLine::make(0, 1, 0),
      RationalLine::make(1, 3, -1),  RationalLine::make(1, 2, 0),
      RationalLine::make(4, 11, -4), RationalLine::make(1, 0, 2),
      RationalLine::make(6, 15, -4), RationalLine::make(5, 11, -2),
      RationalLine::make(20, 45, -8),
  };
  return e;
}

CatalogEntry hessian() {
  CatalogEntry e;
  e.name = "hessian";
  e.description =
      "Hessian arrangement (dual Hesse configuration / AG(2,3), derived): "
      "12 lines in 4 parallel classes, 9 quadruple points, 12 double points; "
      "supports the (4,3) net whose blocks are the parallel classes. "
      "Combinatorial entry only (not realizable over the rationals).";
  std::vector<Subset> points;
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) {
      Subset q;
      q = q.with(y);                      // lines 1..3:  y = b
      q = q.with(3 + ((y - x + 3) % 3));  // lines 4..6:  y = x + b
      q = q.with(6 + ((y - 2 * x + 6) % 3));  // lines 7..9:  y = 2x + b
      q = q.with(9 + x);                  // lines 10..12: x = c
      points.push_back(q);
    }
  e.arrangement = LineArrangement(12, std::move(points));
  NetCandidate net;
  net.blocks = {of({1, 2, 3}), of({4, 5, 6}), of({7, 8, 9}), of({10, 11, 12})};
  net.points = e.arrangement.multiple_points();
  e.candidate = std::move(net);
  return e;
}

}  // namespace

std::vector<std::string> catalog_names() {
  return {"braid-a3", "pappus", "non-pappus", "ceva-d", "hessian"};
}

CatalogEntry catalog(const std::string& name) {
  if (name == "braid-a3") return braid_a3();
  if (name == "pappus") return pappus();
  if (name == "non-pappus") return non_pappus();
  if (name == "hessian") return hessian();
  if (name.rfind("ceva-", 0) == 0) {
    int d = 0;
    try {
      d = std::stoi(name.substr(5));
    } catch (...) {
      throw invalid_input("cannot parse Ceva degree in '" + name + "'");
    }
    auto [arr, net] = ceva(d);
    CatalogEntry e;
    e.name = name;
    e.description = "Ceva arrangement of degree " + std::to_string(d) + ": 3d lines, a (3," +
                    std::to_string(d) + ") net with d^2 triple points" +
                    (d >= 3 ? " and three d-fold block points, no double points." : ".");
    e.arrangement = std::move(arr);
    e.candidate = std::move(net);
    if (d == 2) {
      // x^2-y^2, x^2-z^2, y^2-z^2 split into the six lines below.
      e.coordinates = {
          RationalLine::make(1, -1, 0), RationalLine::make(1, 1, 0),
          RationalLine::make(1, 0, -1), RationalLine::make(1, 0, 1),
          RationalLine::make(0, 1, -1), RationalLine::make(0, 1, 1),
      };
    }
    return e;
  }
  std::string names;
  for (const std::string& n : catalog_names()) names += (names.empty() ? "" : ", ") + n;
  throw invalid_input("unknown catalog entry '" + name + "'; available: " + names);
}

}  // namespace netdual
