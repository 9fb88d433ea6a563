#pragma once

#include <cstddef>
#include <vector>

#include "netdual/monomial_ideal.hpp"

namespace netdual {

/// A simplicial complex on a fixed ground set, stored by its facet list
/// (an inclusion antichain, canonically sorted). The complex {∅} is
/// represented by the single empty facet; the void complex (no faces at
/// all) is unrepresentable, matching the Stanley-Reisner side where every
/// proper ideal's complex contains the empty face.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  static SimplicialComplex from_facets(GroundSet ground, std::vector<Subset> faces);
  static SimplicialComplex empty_complex(GroundSet ground);  // just {∅}
  static SimplicialComplex full_simplex(GroundSet ground);

  const GroundSet& ground() const { return ground_; }
  const std::vector<Subset>& facets() const { return facets_; }

  /// dim {∅} = -1.
  int dim() const;
  bool is_face(Subset s) const;
  bool is_full_simplex() const;

  /// Vertices that appear in some facet.
  Subset vertex_support() const;

  /// Every face, including ∅, deduplicated, in canonical order.
  /// Throws size_cap_error if more than `cap` faces exist.
  std::vector<Subset> all_faces(std::size_t cap = 1u << 22) const;

  /// Number of faces, counting ∅; stops and returns cap+1 once exceeded.
  std::size_t count_faces(std::size_t cap) const;

  bool operator==(const SimplicialComplex& o) const {
    return ground_ == o.ground_ && facets_ == o.facets_;
  }

 private:
  GroundSet ground_;
  std::vector<Subset> facets_;
};

/// Stanley-Reisner complex of a proper squarefree monomial ideal: faces are
/// the supports of squarefree monomials outside I. Zero ideal -> full simplex.
SimplicialComplex sr_complex(const MonomialIdeal& ideal);

/// Stanley-Reisner ideal of a complex: generated by the minimal non-faces.
/// Full simplex -> zero ideal. Inverse of sr_complex.
MonomialIdeal sr_ideal(const SimplicialComplex& complex);

/// Faces of `complex` contained in `window`, re-indexed onto a ground set of
/// size |window| (labels inherited). window = ∅ yields the complex {∅} on an
/// empty ground set.
SimplicialComplex induced_subcomplex(const SimplicialComplex& complex, Subset window);

/// Facets of the induced subcomplex on `window`, kept on the ambient ground
/// set (no re-indexing). This is the form Hochster's formula consumes.
std::vector<Subset> restricted_facets(const SimplicialComplex& complex, Subset window);

}  // namespace netdual
