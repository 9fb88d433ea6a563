#pragma once

#include <vector>

#include "netdual/simplicial_complex.hpp"

namespace netdual {

/// Primary decomposition of a squarefree monomial ideal: each component is
/// the ideal generated by one set of variables; the components form an
/// inclusion antichain and their intersection is the ideal.
struct PrimaryDecomposition {
  std::vector<Subset> components;  // canonical order

  bool operator==(const PrimaryDecomposition& o) const {
    return components == o.components;
  }
};

/// Minimal cofaces of a complex: the inclusion-minimal complements of faces,
/// i.e. the complements of the facets. Throws invalid_input on the full
/// simplex (no proper coface).
std::vector<Subset> minimal_cofaces(const SimplicialComplex& complex);

/// Components are computed independently of the facet route, as the minimal
/// hitting sets of the generator supports; tests pin the equality with
/// minimal_cofaces(sr_complex(I)). Throws invalid_input on the zero ideal.
PrimaryDecomposition primary_decomposition(const MonomialIdeal& ideal);

/// Membership in the variable ideal <x_i : i in component>.
bool primary_component_contains(Subset component, Monomial m);

/// Alexander dual, computed by two independent routes that are asserted
/// equal: (a) monomialized primary components, (b) complements of the facets
/// of sr_complex(I). Involution. Throws invalid_input on the zero ideal.
MonomialIdeal alexander_dual(const MonomialIdeal& ideal);

/// Combinatorial Alexander dual: faces are complements of non-faces.
/// Satisfies sr_ideal(dual_complex(Δ)) == alexander_dual(sr_ideal(Δ)).
SimplicialComplex dual_complex(const SimplicialComplex& complex);

/// Height of the ideal: minimum cardinality over primary components.
int codimension(const MonomialIdeal& ideal);

}  // namespace netdual
