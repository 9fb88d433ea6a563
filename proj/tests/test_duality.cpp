#include <doctest.h>

#include <algorithm>
#include <random>

#include "netdual/duality.hpp"
#include "netdual/errors.hpp"
#include "netdual/hitting_sets.hpp"

using namespace netdual;

namespace {

Subset of(std::initializer_list<int> one_based) {
  Subset s;
  for (int i : one_based) s = s.with(i - 1);
  return s;
}

// The two-hollow-triangles running example.
MonomialIdeal running_example() {
  return minimalize(GroundSet::numbered(4), {of({2, 4}), of({1, 2, 3}), of({1, 3, 4})});
}

MonomialIdeal random_ideal(std::mt19937& rng, int max_n) {
  int n = 3 + static_cast<int>(rng() % (max_n - 2));
  GroundSet g = GroundSet::numbered(n);
  std::vector<Monomial> gens;
  int count = 1 + static_cast<int>(rng() % 6);
  for (int i = 0; i < count; ++i) {
    Mask m = rng() & ((Mask{1} << n) - 1);
    if (m == 0) m = 1;
    gens.push_back(Subset(m));
  }
  return minimalize(g, gens);
}

}  // namespace

TEST_CASE("minimal hitting sets, small families") {
  CHECK(minimal_hitting_sets({}) == std::vector<Subset>{Subset{}});
  CHECK(minimal_hitting_sets({Subset{}}).empty());
  // {12},{13}: transversals {1},{23}
  auto hs = minimal_hitting_sets({of({1, 2}), of({1, 3})});
  CHECK(hs == std::vector<Subset>{of({1}), of({2, 3})});
}

TEST_CASE("minimal cofaces of the running example") {
  SimplicialComplex delta = sr_complex(running_example());
  auto cofaces = minimal_cofaces(delta);
  CHECK(cofaces == std::vector<Subset>{of({1, 2}), of({1, 4}), of({2, 3}), of({2, 4}),
                                       of({3, 4})});
}

TEST_CASE("minimal cofaces of the triangle boundary are the opposite vertices") {
  GroundSet g = GroundSet::numbered(3);
  SimplicialComplex boundary =
      SimplicialComplex::from_facets(g, {of({1, 2}), of({1, 3}), of({2, 3})});
  CHECK(minimal_cofaces(boundary) == std::vector<Subset>{of({1}), of({2}), of({3})});
  CHECK_THROWS_AS(minimal_cofaces(SimplicialComplex::full_simplex(g)), invalid_input);
}

TEST_CASE("primary decomposition of the running example matches the five components") {
  PrimaryDecomposition pd = primary_decomposition(running_example());
  CHECK(pd.components == std::vector<Subset>{of({1, 2}), of({1, 4}), of({2, 3}),
                                             of({2, 4}), of({3, 4})});
  // Same as the coface route.
  CHECK(pd.components == minimal_cofaces(sr_complex(running_example())));
}

TEST_CASE("primary decomposition of a product of variables") {
  MonomialIdeal ideal = minimalize(GroundSet::numbered(2), {of({1, 2})});
  CHECK(primary_decomposition(ideal).components ==
        std::vector<Subset>{of({1}), of({2})});
  CHECK_THROWS_AS(primary_decomposition(MonomialIdeal::zero(GroundSet::numbered(2))),
                  invalid_input);
}

TEST_CASE("primary decomposition intersects back to the ideal (membership sampling)") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    MonomialIdeal ideal = random_ideal(rng, 10);
    if (ideal.is_zero()) continue;
    PrimaryDecomposition pd = primary_decomposition(ideal);
    int n = ideal.ground().n;
    for (int s = 0; s < 200; ++s) {
      Monomial m = Subset(rng() & ((Mask{1} << n) - 1));
      bool in_all = true;
      for (Subset comp : pd.components)
        if (!primary_component_contains(comp, m)) {
          in_all = false;
          break;
        }
      CHECK(in_all == ideal.contains(m));
    }
  }
}

TEST_CASE("alexander dual of the running example") {
  MonomialIdeal dual = alexander_dual(running_example());
  CHECK(dual.gens() == std::vector<Subset>{of({1, 2}), of({1, 4}), of({2, 3}),
                                           of({2, 4}), of({3, 4})});
  CHECK(alexander_dual(dual) == running_example());
}

TEST_CASE("alexander dual swaps the product and the maximal ideal") {
  for (int n = 1; n <= 6; ++n) {
    GroundSet g = GroundSet::numbered(n);
    MonomialIdeal product = minimalize(g, {Subset::full(n)});
    std::vector<Monomial> singles;
    for (int i = 0; i < n; ++i) singles.push_back(Subset::single(i));
    MonomialIdeal maximal = minimalize(g, singles);
    CHECK(alexander_dual(product) == maximal);
    CHECK(alexander_dual(maximal) == product);
  }
}

TEST_CASE("dual complex of the running example has maximal faces 2, 4, 13") {
  SimplicialComplex delta = sr_complex(running_example());
  SimplicialComplex dual = dual_complex(delta);
  CHECK(dual.facets() == std::vector<Subset>{of({2}), of({4}), of({1, 3})});
  CHECK(dual_complex(dual) == delta);
  CHECK(sr_ideal(dual) == alexander_dual(sr_ideal(delta)));
}

TEST_CASE("codimension of the running example is 2; maximal ideal has codim n") {
  CHECK(codimension(running_example()) == 2);
  for (int n = 2; n <= 5; ++n) {
    GroundSet g = GroundSet::numbered(n);
    std::vector<Monomial> singles;
    for (int i = 0; i < n; ++i) singles.push_back(Subset::single(i));
    CHECK(codimension(minimalize(g, singles)) == n);
  }
}

TEST_CASE("duality involution and generator degrees on random ideals") {
  std::mt19937 rng(20240812);
  for (int trial = 0; trial < 120; ++trial) {
    MonomialIdeal ideal = random_ideal(rng, 12);
    if (ideal.is_zero()) continue;
    MonomialIdeal dual = alexander_dual(ideal);
    CHECK(alexander_dual(dual) == ideal);

    // Every dual generator degree is n - (size of some facet); the minimum
    // is n - (max facet size).
    SimplicialComplex delta = sr_complex(ideal);
    int n = ideal.ground().n;
    std::vector<int> facet_sizes;
    for (Subset f : delta.facets()) facet_sizes.push_back(f.size());
    int max_facet = *std::max_element(facet_sizes.begin(), facet_sizes.end());
    CHECK(dual.min_gen_degree() == n - max_facet);
    for (Monomial g : dual.gens()) {
      bool matches = false;
      for (int fs : facet_sizes)
        if (g.size() == n - fs) matches = true;
      CHECK(matches);
    }

    // Membership duality, sampled: m lies in I exactly when the complement
    // of its support is a face of sr_complex(I^dual).
    SimplicialComplex dual_delta = sr_complex(dual);
    for (int s = 0; s < 100; ++s) {
      Monomial m = Subset(rng() & ((Mask{1} << n) - 1));
      CHECK(ideal.contains(m) == dual_delta.is_face(m.complement_in(Subset::full(n))));
    }
  }
}

TEST_CASE("error paths: zero ideal duals and full-simplex dual complexes") {
  GroundSet g = GroundSet::numbered(3);
  CHECK_THROWS_AS(alexander_dual(MonomialIdeal::zero(g)), invalid_input);
  CHECK_THROWS_AS(dual_complex(SimplicialComplex::full_simplex(g)), invalid_input);
}
