#pragma once

#include "netdual/arrangement.hpp"
#include "netdual/monomial_ideal.hpp"

namespace netdual {

/// Flats of a matroid tagged by rank, one variable per ground element.
/// Only flats of rank >= 2 contribute monomials (rank-1 flats would force
/// J = <all variables>, contradicting every worked instance).
struct FlatFamily {
  GroundSet ground;
  std::vector<std::pair<Subset, int>> flats;  // (flat, rank), rank >= 2

  static FlatFamily from_arrangement(const LineArrangement& arr);
  static FlatFamily from_arrangement(const LineArrangement& arr, GroundSet ground);
  static FlatFamily from_graph(const SimpleGraph& graph);

  /// Throws invalid_input on flats with < 2 elements or rank < 2, or flats
  /// of equal rank nested in one another.
  void validate() const;
};

/// The monomial OS ideal: generated by the monomials of the flats.
MonomialIdeal build_J(const FlatFamily& flats);
MonomialIdeal build_J(const LineArrangement& arr);

/// J(K_n): triangles and disjoint edge pairs of the complete graph, over
/// the edge variables x_ij.
MonomialIdeal j_complete_graph(int n);

/// J_Pi: the k block monomials of degree d.
MonomialIdeal j_pi(const GroundSet& ground, const NetCandidate& candidate);

/// J_X: one monomial per point of X (the zero ideal when X is empty).
MonomialIdeal j_x(const GroundSet& ground, const NetCandidate& candidate);

/// J_Y: the generators of build_J(arr) whose flats are not in X. Verifies
/// J = J_X + J_Y and J_2 ⊆ J_Y; throws invalid_input if X contains a
/// non-flat of arr.
MonomialIdeal split_JY(const LineArrangement& arr, const NetCandidate& candidate);

/// Subideal generated by the degree-2 generators.
MonomialIdeal quadratic_part(const MonomialIdeal& ideal);

/// Shared ground set for an arrangement's ideal: variables x1..xn, one per
/// line.
GroundSet arrangement_ground(const LineArrangement& arr);

}  // namespace netdual
