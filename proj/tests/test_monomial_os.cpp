#include <doctest.h>

#include "netdual/errors.hpp"
#include "netdual/monomial_os.hpp"
#include "netdual/polynomial.hpp"

using namespace netdual;

namespace {

Subset of(std::initializer_list<int> one_based) {
  Subset s;
  for (int i : one_based) s = s.with(i - 1);
  return s;
}

}  // namespace

TEST_CASE("J of the braid arrangement: the seven generators, in print order") {
  MonomialIdeal j = build_J(catalog("braid-a3").arrangement);
  CHECK(j.gens() == std::vector<Subset>{of({1, 4}), of({2, 5}), of({3, 6}),
                                        of({1, 2, 3}), of({1, 5, 6}), of({2, 4, 6}),
                                        of({3, 4, 5})});
}

TEST_CASE("J(K_n) is generated by disjoint pairs and triangles") {
  for (int n = 4; n <= 7; ++n) {
    MonomialIdeal j = j_complete_graph(n);
    long long quadrics = 0, cubics = 0;
    for (Monomial g : j.gens()) {
      if (g.size() == 2) ++quadrics;
      if (g.size() == 3) ++cubics;
    }
    CHECK(quadrics == 3 * binomial(n, 4));
    CHECK(cubics == binomial(n, 3));
    CHECK(quadrics + cubics == static_cast<long long>(j.gens().size()));
  }
  // Edge labels for K_4: x12x34, x13x24, x14x23 and the four triangles.
  MonomialIdeal j4 = j_complete_graph(4);
  CHECK(j4.ground().labels[0] == "x12");
  CHECK(j4.contains(of({1, 6})));  // x12 x34
}

TEST_CASE("J of ceva(d): 3 + d^2 generators") {
  for (int d = 2; d <= 5; ++d) {
    MonomialIdeal j = build_J(catalog("ceva-" + std::to_string(d)).arrangement);
    CHECK(static_cast<int>(j.gens().size()) == 3 + d * d);
    if (d >= 3) {
      long long of_degree_d = 0, cubics = 0;
      for (Monomial g : j.gens()) {
        if (g.size() == d) ++of_degree_d;
        if (g.size() == 3) ++cubics;
      }
      if (d == 3) {
        CHECK(cubics == 12);  // blocks and triple points all have degree 3
      } else {
        CHECK(of_degree_d == 3);
        CHECK(cubics == d * d);
      }
    }
  }
}

TEST_CASE("generator count equals multiple points plus implicit doubles") {
  for (const char* name : {"braid-a3", "pappus", "non-pappus", "hessian", "ceva-4"}) {
    LineArrangement arr = catalog(name).arrangement;
    MonomialIdeal j = build_J(arr);
    CHECK(j.gens().size() == arr.multiple_points().size() + arr.double_pairs().size());
  }
}

TEST_CASE("build_J rejects undersized flats and empty families") {
  FlatFamily f;
  f.ground = GroundSet::numbered(3);
  CHECK_THROWS_AS(build_J(f), invalid_input);
  f.flats.emplace_back(of({1}), 2);
  CHECK_THROWS_AS(build_J(f), invalid_input);
}

TEST_CASE("general flat families are accepted with rank tags") {
  FlatFamily f;
  f.ground = GroundSet::numbered(5);
  f.flats.emplace_back(of({1, 2}), 2);
  f.flats.emplace_back(of({1, 2, 3, 4}), 3);
  MonomialIdeal j = build_J(f);
  CHECK(j.gens() == std::vector<Subset>{of({1, 2})});  // the rank-3 flat is swallowed
}

TEST_CASE("j_pi: one monomial per block, pairwise coprime") {
  CatalogEntry braid = catalog("braid-a3");
  GroundSet g = arrangement_ground(braid.arrangement);
  MonomialIdeal jpi = j_pi(g, *braid.candidate);
  CHECK(jpi.gens() == std::vector<Subset>{of({1, 4}), of({2, 5}), of({3, 6})});
  for (std::size_t i = 0; i < jpi.gens().size(); ++i)
    for (std::size_t j = i + 1; j < jpi.gens().size(); ++j)
      CHECK(!jpi.gens()[i].intersects(jpi.gens()[j]));

  CatalogEntry pappus = catalog("pappus");
  MonomialIdeal jpi9 = j_pi(arrangement_ground(pappus.arrangement), *pappus.candidate);
  CHECK(jpi9.gens() == std::vector<Subset>{of({1, 6, 9}), of({2, 5, 8}), of({3, 4, 7})});

  auto [ceva3, net3] = ceva(3);
  MonomialIdeal jpi3 = j_pi(arrangement_ground(ceva3), net3);
  CHECK(jpi3.gens() == std::vector<Subset>{of({1, 2, 3}), of({4, 5, 6}), of({7, 8, 9})});
}

TEST_CASE("j_x lists X; empty X gives the zero ideal") {
  CatalogEntry braid = catalog("braid-a3");
  GroundSet g = arrangement_ground(braid.arrangement);
  MonomialIdeal jx = j_x(g, *braid.candidate);
  CHECK(jx.gens() == std::vector<Subset>{of({1, 2, 3}), of({1, 5, 6}), of({2, 4, 6}),
                                         of({3, 4, 5})});

  NetCandidate vacuous = *braid.candidate;
  vacuous.points.clear();
  CHECK(j_x(g, vacuous).is_zero());
}

TEST_CASE("split_JY on the catalog nets") {
  CatalogEntry braid = catalog("braid-a3");
  MonomialIdeal jy = split_JY(braid.arrangement, *braid.candidate);
  CHECK(jy.gens() == std::vector<Subset>{of({1, 4}), of({2, 5}), of({3, 6})});

  CatalogEntry pappus = catalog("pappus");
  MonomialIdeal jy9 = split_JY(pappus.arrangement, *pappus.candidate);
  CHECK(jy9.gens().size() == 9);
  for (Monomial g : jy9.gens()) CHECK(g.size() == 2);

  auto [arr3, net3] = ceva(3);
  MonomialIdeal jy3 = split_JY(arr3, net3);
  CHECK(jy3.gens() == std::vector<Subset>{of({1, 2, 3}), of({4, 5, 6}), of({7, 8, 9})});

  // X containing a non-flat is rejected.
  NetCandidate bad = *braid.candidate;
  bad.points.push_back(of({1, 2, 4}));
  CHECK_THROWS_AS(split_JY(braid.arrangement, bad), invalid_input);
}

TEST_CASE("quadratic parts") {
  MonomialIdeal j = build_J(catalog("braid-a3").arrangement);
  CHECK(quadratic_part(j).gens() ==
        std::vector<Subset>{of({1, 4}), of({2, 5}), of({3, 6})});

  MonomialIdeal jceva = build_J(catalog("ceva-3").arrangement);
  CHECK(quadratic_part(jceva).is_zero());

  MonomialIdeal jpappus = build_J(catalog("pappus").arrangement);
  MonomialIdeal j2 = quadratic_part(jpappus);
  CHECK(j2.gens().size() == 9);
  // Three disjoint 3-variable blocks.
  Subset support;
  for (Monomial g : j2.gens()) support = support | g;
  CHECK(support == Subset::full(9));
  std::vector<Subset> blocks = catalog("pappus").candidate->blocks;
  for (Subset block : blocks) {
    int inside = 0;
    for (Monomial g : j2.gens())
      if (g.subset_of(block)) ++inside;
    CHECK(inside == 3);
  }
}
