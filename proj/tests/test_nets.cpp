#include <doctest.h>

#include <algorithm>

#include "netdual/errors.hpp"
#include "netdual/betti.hpp"
#include "netdual/nets.hpp"
#include "netdual/polynomial.hpp"

using namespace netdual;

namespace {

Subset of(std::initializer_list<int> one_based) {
  Subset s;
  for (int i : one_based) s = s.with(i - 1);
  return s;
}

}  // namespace

TEST_CASE("braid-a3 is a (3,2) net by both criteria") {
  CatalogEntry braid = catalog("braid-a3");
  NetVerdict direct = net_check_direct(braid.arrangement, *braid.candidate);
  NetVerdict dual = net_check_dual(arrangement_ground(braid.arrangement), *braid.candidate);
  CHECK(direct.is_net);
  CHECK(dual.is_net);
  CHECK(net_check_both(braid.arrangement, *braid.candidate).is_net);
}

TEST_CASE("pappus is a (3,3) net; hessian a (4,3) net; ceva(d) nets for d=2..5") {
  for (const char* name : {"pappus", "hessian", "ceva-2", "ceva-3", "ceva-4", "ceva-5"}) {
    CatalogEntry e = catalog(name);
    REQUIRE(e.candidate.has_value());
    CHECK(net_check_both(e.arrangement, *e.candidate).is_net);
  }
}

TEST_CASE("dropping a point of X flips both criteria with a certificate") {
  CatalogEntry braid = catalog("braid-a3");
  for (std::size_t drop = 0; drop < braid.candidate->points.size(); ++drop) {
    NetCandidate cut = *braid.candidate;
    cut.points.erase(cut.points.begin() + drop);
    NetVerdict direct = net_check_direct(braid.arrangement, cut);
    NetVerdict dual = net_check_dual(arrangement_ground(braid.arrangement), cut);
    CHECK_FALSE(direct.is_net);
    CHECK_FALSE(dual.is_net);
    REQUIRE(direct.certificate.has_value());
    REQUIRE(dual.certificate.has_value());
    CHECK(direct.certificate->kind == NetVerdict::Certificate::Kind::uncovered_pair);
    // The uncovered pair lies inside the dropped point.
    CHECK(direct.certificate->pair.subset_of(braid.candidate->points[drop]));
  }
}

TEST_CASE("dropping {345} reports an uncovered cross-block pair from it") {
  CatalogEntry braid = catalog("braid-a3");
  NetCandidate cut = *braid.candidate;
  Subset dropped = of({3, 4, 5});
  cut.points.erase(std::remove(cut.points.begin(), cut.points.end(), dropped),
                   cut.points.end());
  NetVerdict v = net_check_direct(braid.arrangement, cut);
  REQUIRE(v.certificate.has_value());
  CHECK(v.certificate->pair.subset_of(dropped));
  CHECK(v.certificate->describe(GroundSet::numbered(6)).find("meets in no point") !=
        std::string::npos);
}

TEST_CASE("a partition that is not a net yields a block violation or uncovered pair") {
  CatalogEntry braid = catalog("braid-a3");
  NetCandidate twisted = *braid.candidate;
  // Swap lines 4 and 5 between the first two blocks: {1,5},{2,4},{3,6}.
  twisted.blocks = {of({1, 5}), of({2, 4}), of({3, 6})};
  NetVerdict direct = net_check_direct(braid.arrangement, twisted);
  NetVerdict dual = net_check_dual(GroundSet::numbered(6), twisted);
  CHECK_FALSE(direct.is_net);
  CHECK_FALSE(dual.is_net);
}

TEST_CASE("non-pappus supports no (3,3) net: exhaustive over all 280 partitions") {
  LineArrangement arr = catalog("non-pappus").arrangement;
  GroundSet ground = arrangement_ground(arr);
  std::vector<int> lines = {0, 1, 2, 3, 4, 5, 6, 7, 8};
  int partitions = 0;
  // First block contains line 0; second block contains the smallest leftover.
  std::vector<int> rest(lines.begin() + 1, lines.end());
  std::vector<bool> pick(8, false);
  std::fill(pick.begin(), pick.begin() + 2, true);
  std::sort(pick.rbegin(), pick.rend());
  do {
    Subset block1 = Subset::single(0);
    std::vector<int> leftover;
    for (int i = 0; i < 8; ++i) (pick[i] ? (void)(block1 = block1.with(rest[i]))
                                         : leftover.push_back(rest[i]));
    std::vector<bool> pick2(5, false);
    std::fill(pick2.begin(), pick2.begin() + 2, true);
    std::sort(pick2.rbegin(), pick2.rend());
    do {
      Subset block2 = Subset::single(leftover[0]);
      Subset block3;
      for (int i = 1; i < 6; ++i)
        (pick2[i - 1] ? (void)(block2 = block2.with(leftover[i]))
                      : (void)(block3 = block3.with(leftover[i])));
      ++partitions;
      NetCandidate c;
      c.blocks = {block1, block2, block3};
      // The maximal possible X: triples with one line per block. If this X
      // fails, every X fails (removing points only loses coverage).
      for (Subset p : arr.multiple_points()) {
        bool transversal = true;
        for (Subset b : c.blocks)
          if ((p & b).size() != 1) transversal = false;
        if (transversal) c.points.push_back(p);
      }
      bool direct_ok = false;
      if (!c.points.empty()) {
        direct_ok = net_check_direct(arr, c).is_net;
        CHECK(net_check_dual(ground, c).is_net == direct_ok);
      }
      CHECK_FALSE(direct_ok);
    } while (std::prev_permutation(pick2.begin(), pick2.end()));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  CHECK(partitions == 280);
}

TEST_CASE("blocks_normal_crossing across the catalog") {
  auto run = [](const char* name) {
    CatalogEntry e = catalog(name);
    return blocks_normal_crossing(e.arrangement, *e.candidate);
  };
  CHECK(run("braid-a3"));
  CHECK(run("pappus"));
  CHECK(run("hessian"));
  CHECK(run("ceva-2"));
  CHECK_FALSE(run("ceva-3"));
  CHECK_FALSE(run("ceva-4"));
  CHECK_FALSE(run("ceva-5"));

  // Not defined for non-nets.
  CatalogEntry braid = catalog("braid-a3");
  NetCandidate cut = *braid.candidate;
  cut.points.pop_back();
  CHECK_THROWS_AS(blocks_normal_crossing(braid.arrangement, cut), invalid_input);
}

TEST_CASE("fy_slack reproduces the Euler-count cases") {
  CHECK(fy_slack(3, 2, 4, 3) == 0);
  CHECK(fy_slack(4, 3, 9, 12) == 0);
  CHECK(fy_slack(3, 3, 9, 9) == 3);
  CHECK_THROWS_AS(fy_slack(2, 2, 4, 3), invalid_input);
}

TEST_CASE("fy_slack is zero under all-normal-crossing blocks iff k = 6 - 6/d") {
  for (int k = 3; k <= 8; ++k)
    for (int d = 2; d <= 8; ++d) {
      long long slack = fy_slack(k, d, static_cast<long long>(d) * d,
                                 static_cast<long long>(k) * binomial(d, 2));
      bool characterized = (k * d == 6 * d - 6);
      CHECK((slack == 0) == characterized);
    }
}

TEST_CASE("extra fibers required except for (3,2) and (4,3)") {
  CHECK_FALSE(extra_fibers_required(*catalog("braid-a3").candidate));     // (3,2)
  CHECK_FALSE(extra_fibers_required(*catalog("hessian").candidate));      // (4,3)
  CHECK(extra_fibers_required(*catalog("pappus").candidate));             // (3,3)
  CHECK(extra_fibers_required(*catalog("ceva-2").candidate) == false);    // (3,2) again
  CHECK(extra_fibers_required(ceva(4).second));                           // (3,4)
}

TEST_CASE("within-block mu sums from the arrangements feed fy_slack") {
  // Pappus: nine within-block doubles, mu = 1 each.
  CatalogEntry pappus = catalog("pappus");
  long long mu_sum = 0;
  for (Subset b : pappus.candidate->blocks) {
    for (Subset p : pappus.arrangement.multiple_points())
      if (p.subset_of(b)) mu_sum += LineArrangement::mu(p);
    for (Subset p : pappus.arrangement.double_pairs())
      if (p.subset_of(b)) mu_sum += 1;
  }
  CHECK(mu_sum == 9);
  CHECK(fy_slack(3, 3, static_cast<long long>(pappus.candidate->points.size()), mu_sum) == 3);

  // Ceva(3): the three d-fold block points, mu = 2 each.
  auto [arr3, net3] = ceva(3);
  long long ceva_mu = 0;
  for (Subset b : net3.blocks) {
    for (Subset p : arr3.multiple_points())
      if (p.subset_of(b)) ceva_mu += LineArrangement::mu(p);
    for (Subset p : arr3.double_pairs())
      if (p.subset_of(b)) ceva_mu += 1;
  }
  CHECK(ceva_mu == 6);
  CHECK(fy_slack(3, 3, 9, ceva_mu) == 0);
}

TEST_CASE("normal-crossing blocks force the Eagon-Northcott consequences") {
  // For a net with all-normal-crossing blocks, S/J_2 is a tensor product of
  // k copies of the d-variable quadric quotient, so its betti series is the
  // k-th power of (1 + 3ut^2 + 2u^2t^3) for d = 3 (and of (1 + ut^2) for
  // d = 2), the dual has a linear resolution, and codim = pdim = k(d-1).
  const FieldChoice q = FieldChoice::rationals();
  for (const char* name : {"braid-a3", "ceva-2", "pappus", "hessian"}) {
    CatalogEntry e = catalog(name);
    REQUIRE(blocks_normal_crossing(e.arrangement, *e.candidate));
    int k = e.candidate->k(), d = e.candidate->d();

    MonomialIdeal j2 = quadratic_part(build_J(e.arrangement));
    BettiTable t = betti_table(j2, Subject::quotient, q);
    CHECK(t.pdim() == k * (d - 1));
    CHECK(codimension(j2) == k * (d - 1));
    CHECK(is_cohen_macaulay(j2, q));
    CHECK(has_linear_resolution(alexander_dual(j2), q));

    // Kunneth: the graded table is the k-th power of one block's table.
    std::map<std::pair<int, int>, long long> factor;
    factor[{0, 0}] = 1;
    if (d == 2) {
      factor[{1, 2}] = 1;
    } else {
      factor[{1, 2}] = 3;
      factor[{2, 3}] = 2;
    }
    std::map<std::pair<int, int>, long long> power = {{{0, 0}, 1}};
    for (int copy = 0; copy < k; ++copy) {
      std::map<std::pair<int, int>, long long> next;
      for (const auto& [a, ra] : power)
        for (const auto& [b, rb] : factor)
          next[{a.first + b.first, a.second + b.second}] += ra * rb;
      power = std::move(next);
    }
    for (const auto& [key, rank] : power) CHECK(t.graded(key.first, key.second) == rank);
    for (const auto& [key, rank] : t.graded_entries())
      if (rank != 0) CHECK(power.count(key) == 1);
  }
}
