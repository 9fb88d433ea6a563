#include "netdual/simplicial_complex.hpp"

#include <algorithm>
#include <unordered_set>

#include "netdual/errors.hpp"
#include "netdual/hitting_sets.hpp"

namespace netdual {

SimplicialComplex SimplicialComplex::from_facets(GroundSet ground,
                                                 std::vector<Subset> faces) {
  validate(ground);
  Subset universe = ground.all();
  for (Subset f : faces)
    if (!f.subset_of(universe))
      throw invalid_input("facet has vertices outside the ground set");
  SimplicialComplex c;
  c.ground_ = std::move(ground);
  if (faces.empty()) faces.push_back(Subset{});
  c.facets_ = inclusion_maximal(std::move(faces));
  return c;
}

SimplicialComplex SimplicialComplex::empty_complex(GroundSet ground) {
  return from_facets(std::move(ground), {Subset{}});
}

SimplicialComplex SimplicialComplex::full_simplex(GroundSet ground) {
  Subset all = ground.all();
  return from_facets(std::move(ground), {all});
}

int SimplicialComplex::dim() const {
  int d = -1;
  for (Subset f : facets_) d = std::max(d, f.size() - 1);
  return d;
}

bool SimplicialComplex::is_face(Subset s) const {
  for (Subset f : facets_)
    if (s.subset_of(f)) return true;
  return false;
}

bool SimplicialComplex::is_full_simplex() const {
  return facets_.size() == 1 && facets_[0] == ground_.all();
}

Subset SimplicialComplex::vertex_support() const {
  Subset s;
  for (Subset f : facets_) s = s | f;
  return s;
}

std::vector<Subset> SimplicialComplex::all_faces(std::size_t cap) const {
  std::unordered_set<Mask> seen;
  seen.insert(0);
  for (Subset f : facets_) {
    // All subsets of f via the standard submask walk.
    Mask m = f.bits();
    for (Mask sub = m;; sub = (sub - 1) & m) {
      seen.insert(sub);
      if (seen.size() > cap)
        throw size_cap_error("complex has more than " + std::to_string(cap) + " faces");
      if (sub == 0) break;
    }
  }
  std::vector<Subset> out;
  out.reserve(seen.size());
  for (Mask m : seen) out.push_back(Subset(m));
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

std::size_t SimplicialComplex::count_faces(std::size_t cap) const {
  std::unordered_set<Mask> seen;
  seen.insert(0);
  for (Subset f : facets_) {
    Mask m = f.bits();
    for (Mask sub = m;; sub = (sub - 1) & m) {
      seen.insert(sub);
      if (seen.size() > cap) return cap + 1;
      if (sub == 0) break;
    }
  }
  return seen.size();
}

SimplicialComplex sr_complex(const MonomialIdeal& ideal) {
  const GroundSet& g = ideal.ground();
  if (ideal.is_zero()) return SimplicialComplex::full_simplex(g);
  // F is a face iff no generator's support is inside F, i.e. the complement
  // of F meets every generator. Maximal faces <-> minimal transversals.
  std::vector<Subset> transversals = minimal_hitting_sets(ideal.gens());
  std::vector<Subset> facets;
  facets.reserve(transversals.size());
  Subset universe = g.all();
  for (Subset t : transversals) facets.push_back(t.complement_in(universe));
  return SimplicialComplex::from_facets(g, std::move(facets));
}

MonomialIdeal sr_ideal(const SimplicialComplex& complex) {
  const GroundSet& g = complex.ground();
  if (complex.is_full_simplex()) return MonomialIdeal::zero(g);
  // sigma is a non-face iff sigma meets the complement of every facet;
  // the minimal non-faces are the minimal transversals of those complements.
  Subset universe = g.all();
  std::vector<Subset> co;
  co.reserve(complex.facets().size());
  for (Subset f : complex.facets()) co.push_back(f.complement_in(universe));
  return MonomialIdeal::make(g, minimal_hitting_sets(co));
}

std::vector<Subset> restricted_facets(const SimplicialComplex& complex, Subset window) {
  std::vector<Subset> cut;
  cut.reserve(complex.facets().size());
  for (Subset f : complex.facets()) cut.push_back(f & window);
  return inclusion_maximal(std::move(cut));
}

SimplicialComplex induced_subcomplex(const SimplicialComplex& complex, Subset window) {
  if (!window.subset_of(complex.ground().all()))
    throw invalid_input("window is not a subset of the ground set");
  std::vector<int> verts = window.elements();
  if (verts.empty()) {
    // The {∅} complex needs a nonempty ground set to live on; keep one
    // placeholder vertex so downstream invariants (n >= 1) hold.
    GroundSet g;
    g.n = 1;
    g.labels = {"x1"};
    return SimplicialComplex::empty_complex(g);
  }
  GroundSet g;
  g.n = static_cast<int>(verts.size());
  for (int v : verts) g.labels.push_back(complex.ground().label(v));
  std::vector<Subset> facets;
  for (Subset f : restricted_facets(complex, window)) {
    Subset renamed;
    for (int i = 0; i < g.n; ++i)
      if (f.contains(verts[i])) renamed = renamed.with(i);
    facets.push_back(renamed);
  }
  return SimplicialComplex::from_facets(std::move(g), std::move(facets));
}

}  // namespace netdual
