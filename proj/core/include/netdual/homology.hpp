#pragma once

#include <vector>

#include "netdual/field.hpp"
#include "netdual/simplicial_complex.hpp"

namespace netdual {

/// Reduced simplicial homology dimensions over a field, indexed from -1:
/// dim(-1) is 1 exactly for the complex {∅}.
struct HomologyProfile {
  std::vector<long long> dims;  // dims[q + 1] = dim H~_q, q = -1..top

  long long dim(int q) const {
    int i = q + 1;
    if (i < 0 || i >= static_cast<int>(dims.size())) return 0;
    return dims[i];
  }
  int top_degree() const { return static_cast<int>(dims.size()) - 2; }

  /// Reduced Euler characteristic sum (-1)^q dim H~_q.
  long long reduced_euler() const;
};

/// Homology of a complex given by its full face list (∅ included), over the
/// ambient masks; the reduced chain complex places ∅ in degree -1.
HomologyProfile reduced_homology_of_faces(const std::vector<Subset>& faces,
                                          const FieldChoice& field);

/// Ranks via exact elimination over the chosen field.
HomologyProfile reduced_homology(const SimplicialComplex& complex, const FieldChoice& field);

}  // namespace netdual
