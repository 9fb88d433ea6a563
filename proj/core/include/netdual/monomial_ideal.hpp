#pragma once

#include <vector>

#include "netdual/ground_set.hpp"
#include "netdual/subset.hpp"

namespace netdual {

/// Squarefree monomials are identified with their supports.
using Monomial = Subset;

/// A squarefree monomial ideal, stored by its unique minimal generating set
/// (a divisibility antichain) in canonical order. The zero ideal has no
/// generators; the empty monomial (the unit) is never a generator, so every
/// ideal here is proper.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;

  static MonomialIdeal zero(GroundSet ground);

  /// Minimalizes the given monomials. Throws invalid_input if any monomial
  /// is empty (the ideal would be the unit ideal) or out of range.
  static MonomialIdeal make(GroundSet ground, std::vector<Monomial> monomials);

  const GroundSet& ground() const { return ground_; }
  const std::vector<Monomial>& gens() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }

  /// Ideal membership: some generator divides m.
  bool contains(Monomial m) const;

  /// All generators have the same degree (vacuously true when zero).
  bool equigenerated() const;
  int min_gen_degree() const;  // -1 for the zero ideal
  int max_gen_degree() const;  // -1 for the zero ideal

  /// Generators of the given degree, as a new ideal over the same ground.
  MonomialIdeal graded_piece_gens(int degree) const;

  bool operator==(const MonomialIdeal& o) const {
    return ground_ == o.ground_ && gens_ == o.gens_;
  }

 private:
  GroundSet ground_;
  std::vector<Monomial> gens_;
};

/// The divisibility antichain of the input; ideal membership unchanged.
/// Same contract as MonomialIdeal::make.
MonomialIdeal minimalize(GroundSet ground, std::vector<Monomial> monomials);

/// Reduces an arbitrary family of subsets to its inclusion-minimal members,
/// sorted canonically. (Shared by ideals, cofaces and hitting sets.)
std::vector<Subset> inclusion_minimal(std::vector<Subset> sets);
/// Inclusion-maximal members, sorted canonically.
std::vector<Subset> inclusion_maximal(std::vector<Subset> sets);

}  // namespace netdual
