#include "netdual/monomial_os.hpp"

#include <algorithm>

#include "netdual/errors.hpp"

namespace netdual {

GroundSet arrangement_ground(const LineArrangement& arr) {
  return GroundSet::numbered(arr.line_count());
}

void FlatFamily::validate() const {
  netdual::validate(ground);
  for (const auto& [flat, rank] : flats) {
    if (flat.size() < 2)
      throw invalid_input("a flat needs at least 2 elements to contribute");
    if (rank < 2) throw invalid_input("only flats of rank >= 2 generate J");
    if (!flat.subset_of(ground.all()))
      throw invalid_input("flat outside the ground set");
  }
  for (std::size_t i = 0; i < flats.size(); ++i)
    for (std::size_t j = 0; j < flats.size(); ++j)
      if (i != j && flats[i].second == flats[j].second &&
          flats[i].first.subset_of(flats[j].first) && !(flats[i].first == flats[j].first))
        throw invalid_input("flats of equal rank must not be nested");
}

FlatFamily FlatFamily::from_arrangement(const LineArrangement& arr, GroundSet ground) {
  FlatFamily f;
  f.ground = std::move(ground);
  for (Subset flat : arr.rank2_flats()) f.flats.emplace_back(flat, 2);
  f.validate();
  return f;
}

FlatFamily FlatFamily::from_arrangement(const LineArrangement& arr) {
  return from_arrangement(arr, arrangement_ground(arr));
}

FlatFamily FlatFamily::from_graph(const SimpleGraph& graph) {
  FlatFamily f;
  f.ground = graph.edge_ground_set();
  for (Subset flat : graphic_flats(graph)) f.flats.emplace_back(flat, 2);
  f.validate();
  return f;
}

MonomialIdeal build_J(const FlatFamily& flats) {
  flats.validate();
  if (flats.flats.empty()) throw invalid_input("build_J needs a nonempty flat family");
  std::vector<Monomial> gens;
  gens.reserve(flats.flats.size());
  for (const auto& [flat, rank] : flats.flats) gens.push_back(flat);
  MonomialIdeal ideal = MonomialIdeal::make(flats.ground, std::move(gens));
  return ideal;
}

MonomialIdeal build_J(const LineArrangement& arr) {
  MonomialIdeal ideal = build_J(FlatFamily::from_arrangement(arr));
  // At rank 2 no flat divides another, so generator count is exactly
  // (#multiple points) + (#implicit doubles).
  check_internal(ideal.gens().size() ==
                     arr.multiple_points().size() + arr.double_pairs().size(),
                 "rank-2 generators are not in bijection with the flats");
  return ideal;
}

MonomialIdeal j_complete_graph(int n) {
  return build_J(FlatFamily::from_graph(SimpleGraph::complete(n)));
}

MonomialIdeal j_pi(const GroundSet& ground, const NetCandidate& candidate) {
  candidate.validate(ground.n);
  return MonomialIdeal::make(ground, candidate.blocks);
}

MonomialIdeal j_x(const GroundSet& ground, const NetCandidate& candidate) {
  candidate.validate(ground.n);
  if (candidate.points.empty()) return MonomialIdeal::zero(ground);
  return MonomialIdeal::make(ground, candidate.points);
}

MonomialIdeal split_JY(const LineArrangement& arr, const NetCandidate& candidate) {
  GroundSet ground = arrangement_ground(arr);
  candidate.validate(ground.n);
  for (Subset p : candidate.points)
    if (!arr.is_flat(p))
      throw invalid_input("X contains " + ground.render_indices(p) +
                          " which is not a flat of the arrangement");

  MonomialIdeal j = build_J(arr);
  std::vector<Monomial> y_gens;
  for (Monomial g : j.gens())
    if (std::find(candidate.points.begin(), candidate.points.end(), g) ==
        candidate.points.end())
      y_gens.push_back(g);
  MonomialIdeal j_y = MonomialIdeal::make(ground, std::move(y_gens));

  // J = J_X + J_Y as generator sets, and the quadratic part sits in J_Y.
  std::vector<Monomial> together(j_y.gens());
  together.insert(together.end(), candidate.points.begin(), candidate.points.end());
  check_internal(MonomialIdeal::make(ground, std::move(together)) == j,
                 "J_X + J_Y does not recover J");
  MonomialIdeal j2 = quadratic_part(j);
  for (Monomial g : j2.gens())
    check_internal(j_y.contains(g), "a quadratic generator of J escaped J_Y");
  return j_y;
}

MonomialIdeal quadratic_part(const MonomialIdeal& ideal) {
  return ideal.graded_piece_gens(2);
}

}  // namespace netdual
