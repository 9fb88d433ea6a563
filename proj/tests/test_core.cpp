#include <doctest.h>

#include <algorithm>
#include <random>

#include "netdual/errors.hpp"
#include "netdual/graph.hpp"
#include "netdual/monomial_ideal.hpp"
#include "netdual/simplicial_complex.hpp"

using namespace netdual;

namespace {

Subset of(std::initializer_list<int> one_based) {
  Subset s;
  for (int i : one_based) s = s.with(i - 1);
  return s;
}

}  // namespace

TEST_CASE("canonical order: degree first, then lex on element lists") {
  CHECK(canonical_less(of({1, 4}), of({1, 2, 3})));
  CHECK(canonical_less(of({1, 4}), of({2, 5})));
  CHECK(canonical_less(of({2, 5}), of({3, 6})));
  CHECK(canonical_less(of({1, 2, 3}), of({1, 5, 6})));
  CHECK(canonical_less(of({1, 5, 6}), of({2, 4, 6})));
  CHECK(canonical_less(of({2, 4, 6}), of({3, 4, 5})));
  CHECK_FALSE(canonical_less(of({3, 4, 5}), of({2, 4, 6})));
}

TEST_CASE("minimalize reduces to the divisibility antichain") {
  GroundSet g = GroundSet::numbered(4);

  MonomialIdeal a = minimalize(g, {of({1, 2}), of({1, 2, 3})});
  CHECK(a.gens() == std::vector<Subset>{of({1, 2})});

  MonomialIdeal b =
      minimalize(g, {of({2, 4}), of({1, 2, 3}), of({1, 3, 4}), of({1, 2, 3, 4})});
  CHECK(b.gens() == std::vector<Subset>{of({2, 4}), of({1, 2, 3}), of({1, 3, 4})});

  MonomialIdeal zero = minimalize(g, {});
  CHECK(zero.is_zero());

  CHECK_THROWS_AS(minimalize(g, {Subset{}}), invalid_input);
}

TEST_CASE("minimalize is idempotent and order-independent") {
  GroundSet g = GroundSet::numbered(5);
  std::vector<Subset> gens = {of({1, 2}), of({2, 3, 4}), of({1, 2, 5}), of({3, 4, 5})};
  MonomialIdeal first = minimalize(g, gens);
  std::reverse(gens.begin(), gens.end());
  MonomialIdeal second = minimalize(g, gens);
  CHECK(first == second);
  CHECK(minimalize(g, first.gens()) == first);
}

TEST_CASE("sr_complex of the running example recovers the five edges") {
  GroundSet g = GroundSet::numbered(4);
  MonomialIdeal ideal = minimalize(g, {of({2, 4}), of({1, 2, 3}), of({1, 3, 4})});
  SimplicialComplex delta = sr_complex(ideal);
  CHECK(delta.facets() == std::vector<Subset>{of({1, 2}), of({1, 3}), of({1, 4}),
                                              of({2, 3}), of({3, 4})});
  CHECK(delta.dim() == 1);
  CHECK(sr_ideal(delta) == ideal);
}

TEST_CASE("sr_complex of the zero ideal is the full simplex and back") {
  GroundSet g = GroundSet::numbered(3);
  SimplicialComplex full = sr_complex(MonomialIdeal::zero(g));
  CHECK(full.is_full_simplex());
  CHECK(full.facets() == std::vector<Subset>{of({1, 2, 3})});
  CHECK(sr_ideal(full).is_zero());
}

TEST_CASE("sr_ideal of isolated vertices is all quadrics") {
  GroundSet g = GroundSet::numbered(4);
  SimplicialComplex points =
      SimplicialComplex::from_facets(g, {of({1}), of({2}), of({3}), of({4})});
  MonomialIdeal ideal = sr_ideal(points);
  CHECK(ideal.gens().size() == 6);
  for (Monomial m : ideal.gens()) CHECK(m.size() == 2);
}

TEST_CASE("induced subcomplex keeps faces inside the window") {
  GroundSet g = GroundSet::numbered(4);
  MonomialIdeal ideal = minimalize(g, {of({2, 4}), of({1, 2, 3}), of({1, 3, 4})});
  SimplicialComplex delta = sr_complex(ideal);

  SimplicialComplex whole = induced_subcomplex(delta, of({1, 2, 3, 4}));
  CHECK(whole.facets() == delta.facets());

  SimplicialComplex empty = induced_subcomplex(delta, Subset{});
  CHECK(empty.dim() == -1);
  CHECK(empty.facets() == std::vector<Subset>{Subset{}});

  // Facets of any restriction are faces of the original.
  for (Mask w = 0; w < 16; ++w)
    for (Subset f : restricted_facets(delta, Subset(w))) CHECK(delta.is_face(f));
}

TEST_CASE("face enumeration counts the running example") {
  GroundSet g = GroundSet::numbered(4);
  MonomialIdeal ideal = minimalize(g, {of({2, 4}), of({1, 2, 3}), of({1, 3, 4})});
  auto faces = sr_complex(ideal).all_faces();
  // 1 empty + 4 vertices + 5 edges
  CHECK(faces.size() == 10);
}

TEST_CASE("graph components on induced subgraphs") {
  SimpleGraph k4 = SimpleGraph::complete(4);
  CHECK(graph_components(k4, Subset::full(4)) == 1);
  CHECK(graph_components(k4, Subset{}) == 0);

  SimpleGraph matching(4, {{0, 1}, {2, 3}});
  CHECK(graph_components(matching, Subset::full(4)) == 2);

  SimpleGraph path(3, {{0, 1}, {1, 2}});
  CHECK(graph_components(path, of({1, 3})) == 2);
  CHECK(graph_components(path, of({1, 2})) == 1);
}

TEST_CASE("graph validation") {
  CHECK_THROWS_AS(SimpleGraph(3, {{0, 0}}), invalid_input);
  CHECK_THROWS_AS(SimpleGraph(3, {{0, 1}, {1, 0}}), invalid_input);
  CHECK_THROWS_AS(SimpleGraph(3, {{0, 5}}), invalid_input);
}

TEST_CASE("round trip sr_ideal . sr_complex on random ideals") {
  std::mt19937 rng(20240811);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 3 + static_cast<int>(rng() % 8);  // up to 10
    GroundSet g = GroundSet::numbered(n);
    std::vector<Monomial> gens;
    int count = 1 + static_cast<int>(rng() % 6);
    for (int i = 0; i < count; ++i) {
      Mask m = rng() & ((Mask{1} << n) - 1);
      if (m == 0) m = 1;
      gens.push_back(Subset(m));
    }
    MonomialIdeal ideal = minimalize(g, gens);
    if (ideal.is_zero()) continue;
    CHECK(sr_ideal(sr_complex(ideal)) == ideal);

    SimplicialComplex delta = sr_complex(ideal);
    CHECK(sr_complex(sr_ideal(delta)) == delta);
  }
}

TEST_CASE("inducing on one star of the J(K_4) complex gives a full 2-simplex") {
  // Facets of the complex are the four vertex stars of K_4; restrict to one.
  GroundSet edges = GroundSet::complete_graph_edges(4);
  std::vector<Subset> stars;
  for (int v = 0; v < 4; ++v) {
    Subset star;
    for (int i = 0; i < 6; ++i) {
      // lex edge order: 12,13,14,23,24,34
      static const int ends[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
      if (ends[i][0] == v || ends[i][1] == v) star = star.with(i);
    }
    stars.push_back(star);
  }
  SimplicialComplex delta = SimplicialComplex::from_facets(edges, stars);
  SimplicialComplex induced = induced_subcomplex(delta, stars[0]);
  CHECK(induced.is_full_simplex());
  CHECK(induced.ground().n == 3);
  CHECK(induced.ground().labels == std::vector<std::string>{"x12", "x13", "x14"});
}
