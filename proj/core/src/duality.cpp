#include "netdual/duality.hpp"

#include <algorithm>

#include "netdual/errors.hpp"
#include "netdual/hitting_sets.hpp"

namespace netdual {

std::vector<Subset> minimal_cofaces(const SimplicialComplex& complex) {
  if (complex.is_full_simplex())
    throw invalid_input("the full simplex has no proper coface");
  Subset universe = complex.ground().all();
  std::vector<Subset> out;
  out.reserve(complex.facets().size());
  for (Subset f : complex.facets()) out.push_back(f.complement_in(universe));
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

PrimaryDecomposition primary_decomposition(const MonomialIdeal& ideal) {
  if (ideal.is_zero())
    throw invalid_input("the zero ideal has no primary decomposition here");
  // <x_i : i in sigma> contains I iff sigma meets every generator support;
  // the irredundant components are the minimal such sigma.
  return PrimaryDecomposition{minimal_hitting_sets(ideal.gens())};
}

bool primary_component_contains(Subset component, Monomial m) {
  return component.intersects(m);
}

MonomialIdeal alexander_dual(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw invalid_input("the zero ideal has no Alexander dual");
  // Route (a): monomialize the primary components.
  PrimaryDecomposition pd = primary_decomposition(ideal);
  MonomialIdeal via_components = MonomialIdeal::make(ideal.ground(), pd.components);
  // Route (b): complements of the facets of the Stanley-Reisner complex.
  SimplicialComplex delta = sr_complex(ideal);
  Subset universe = ideal.ground().all();
  std::vector<Subset> co;
  co.reserve(delta.facets().size());
  for (Subset f : delta.facets()) co.push_back(f.complement_in(universe));
  MonomialIdeal via_facets = MonomialIdeal::make(ideal.ground(), std::move(co));

  check_internal(via_components == via_facets,
                 "Alexander dual routes disagree (primary components vs facet complements)");
  return via_components;
}

SimplicialComplex dual_complex(const SimplicialComplex& complex) {
  if (complex.is_full_simplex())
    throw invalid_input("the full simplex has no Alexander dual complex");
  // Facets of the dual are complements of the minimal non-faces.
  MonomialIdeal ideal = sr_ideal(complex);
  Subset universe = complex.ground().all();
  std::vector<Subset> facets;
  facets.reserve(ideal.gens().size());
  for (Subset g : ideal.gens()) facets.push_back(g.complement_in(universe));
  return SimplicialComplex::from_facets(complex.ground(), std::move(facets));
}

int codimension(const MonomialIdeal& ideal) {
  PrimaryDecomposition pd = primary_decomposition(ideal);
  int codim = ideal.ground().n;
  for (Subset c : pd.components) codim = std::min(codim, c.size());
  return codim;
}

}  // namespace netdual
