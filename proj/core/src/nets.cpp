#include "netdual/nets.hpp"

#include <algorithm>

#include "netdual/duality.hpp"
#include "netdual/errors.hpp"
#include "netdual/polynomial.hpp"

namespace netdual {

std::string NetVerdict::Certificate::describe(const GroundSet& ground) const {
  switch (kind) {
    case Kind::uncovered_pair:
      return "cross-block pair " + ground.render_indices(pair) + " meets in no point of X";
    case Kind::block_violation:
      return "point " + ground.render_indices(point) + " does not meet block " +
             std::to_string(block + 1) + " in exactly one line";
    case Kind::dual_degree_mismatch: {
      std::string out = "(J_X^v)_d != (J_Pi)_d;";
      if (!missing.empty()) {
        out += " missing:";
        for (Subset m : missing) out += " " + ground.render(m);
      }
      if (!extra.empty()) {
        out += " extra:";
        for (Subset m : extra) out += " " + ground.render(m);
      }
      return out;
    }
  }
  return "";
}

NetVerdict net_check_direct(const LineArrangement& arr, const NetCandidate& candidate) {
  candidate.validate(arr.line_count());
  for (Subset p : candidate.points)
    if (!arr.is_flat(p))
      throw invalid_input("X contains a set that is not a flat of the arrangement");

  // (2) exactly one line of every block through each point of X.
  for (Subset p : candidate.points)
    for (int b = 0; b < candidate.k(); ++b)
      if ((p & candidate.blocks[b]).size() != 1) {
        NetVerdict v;
        NetVerdict::Certificate c;
        c.kind = NetVerdict::Certificate::Kind::block_violation;
        c.point = p;
        c.block = b;
        v.certificate = c;
        return v;
      }

  // (1) every pair of lines from distinct blocks lies in some point of X.
  for (int l1 = 0; l1 < arr.line_count(); ++l1)
    for (int l2 = l1 + 1; l2 < arr.line_count(); ++l2) {
      if (candidate.block_of(l1) == candidate.block_of(l2)) continue;
      Subset pair = Subset::single(l1) | Subset::single(l2);
      bool covered = false;
      for (Subset p : candidate.points)
        if (pair.subset_of(p)) {
          covered = true;
          break;
        }
      if (!covered) {
        NetVerdict v;
        NetVerdict::Certificate c;
        c.kind = NetVerdict::Certificate::Kind::uncovered_pair;
        c.pair = pair;
        v.certificate = c;
        return v;
      }
    }

  // Derived facts of a net: |X| = d^2 and every line on exactly d points.
  int d = candidate.d();
  check_internal(static_cast<int>(candidate.points.size()) == d * d,
                 "net with |X| != d^2");
  for (int l = 0; l < arr.line_count(); ++l) {
    int through = 0;
    for (Subset p : candidate.points)
      if (p.contains(l)) ++through;
    check_internal(through == d, "net with a line not on exactly d points of X");
  }
  NetVerdict v;
  v.is_net = true;
  return v;
}

namespace {

// Squarefree monomials of the given degree lying in the ideal.
std::vector<Subset> squarefree_piece(const MonomialIdeal& ideal, int degree) {
  std::vector<Subset> out;
  int n = ideal.ground().n;
  // Walk all degree-sized subsets via Gosper's hack.
  if (degree > n || degree <= 0) return out;
  Mask v = (Mask{1} << degree) - 1;
  Mask limit = n >= 64 ? ~Mask{0} : (Mask{1} << n);
  while (v < limit) {
    if (ideal.contains(Subset(v))) out.push_back(Subset(v));
    Mask t = v | (v - 1);
    v = (t + 1) | (((~t & -~t) - 1) >> (std::countr_zero(v) + 1));
    if (v == 0) break;
  }
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

}  // namespace

NetVerdict net_check_dual(const GroundSet& ground, const NetCandidate& candidate) {
  candidate.validate(ground.n);
  if (candidate.points.empty())
    throw invalid_input("the dual criterion needs a nonempty X");
  int d = candidate.d();
  MonomialIdeal jx = j_x(ground, candidate);
  MonomialIdeal jpi = j_pi(ground, candidate);
  MonomialIdeal dual = alexander_dual(jx);

  std::vector<Subset> lhs = squarefree_piece(dual, d);
  std::vector<Subset> rhs = squarefree_piece(jpi, d);
  if (lhs == rhs) {
    NetVerdict v;
    v.is_net = true;
    return v;
  }
  NetVerdict v;
  NetVerdict::Certificate c;
  c.kind = NetVerdict::Certificate::Kind::dual_degree_mismatch;
  std::set_difference(rhs.begin(), rhs.end(), lhs.begin(), lhs.end(),
                      std::back_inserter(c.missing), CanonicalLess{});
  std::set_difference(lhs.begin(), lhs.end(), rhs.begin(), rhs.end(),
                      std::back_inserter(c.extra), CanonicalLess{});
  v.certificate = c;
  return v;
}

NetVerdict net_check_both(const LineArrangement& arr, const NetCandidate& candidate) {
  NetVerdict direct = net_check_direct(arr, candidate);
  NetVerdict dual = net_check_dual(arrangement_ground(arr), candidate);
  // A net always satisfies the degree-d duality equality; a direct PASS with
  // a dual FAIL is impossible and means a bug. The converse can genuinely
  // happen for d >= 3 candidates missing points of X (the degree-d pieces
  // coincide although a cross-block pair goes uncovered), so the incidence
  // conditions are the verdict of record.
  check_internal(!(direct.is_net && !dual.is_net),
                 "a verified net failed the dual criterion; this is a bug");
  return direct;
}

bool blocks_normal_crossing(const LineArrangement& arr, const NetCandidate& candidate) {
  NetVerdict verdict = net_check_both(arr, candidate);
  if (!verdict.is_net)
    throw invalid_input("blocks_normal_crossing is only defined for nets");

  // Route 1: no multiple point inside a single block.
  bool no_point_in_block = true;
  for (Subset p : arr.multiple_points())
    for (Subset b : candidate.blocks)
      if (p.subset_of(b)) no_point_in_block = false;

  // Route 2: the quadratic part of J is exactly all within-block pairs.
  MonomialIdeal j2 = quadratic_part(build_J(arr));
  std::vector<Subset> expected;
  for (Subset b : candidate.blocks) {
    auto lines = b.elements();
    for (std::size_t i = 0; i < lines.size(); ++i)
      for (std::size_t j = i + 1; j < lines.size(); ++j)
        expected.push_back(Subset::single(lines[i]) | Subset::single(lines[j]));
  }
  std::sort(expected.begin(), expected.end(), CanonicalLess{});
  bool full_blocks = j2.gens() == expected;

  check_internal(no_point_in_block == full_blocks,
                 "normal-crossing block routes disagree");
  return full_blocks;
}

long long fy_slack(int k, int d, long long x_size, long long within_block_mu_sum) {
  if (k < 3 || d < 2) throw invalid_input("fy_slack needs k >= 3, d >= 2");
  long long lhs = 3 + x_size;
  long long rhs = static_cast<long long>(2 - k) * (3LL * d - static_cast<long long>(d) * d) +
                  2LL * k * d - within_block_mu_sum;
  return lhs - rhs;
}

bool extra_fibers_required(const NetCandidate& candidate) {
  int k = candidate.k(), d = candidate.d();
  bool exempt = (k == 3 && d == 2) || (k == 4 && d == 3);
  // Cross-check against the Euler count with all-normal-crossing blocks:
  // slack 0 exactly when k = 6 - 6/d, i.e. (3,2), (4,3) or the (5,6) case
  // that cannot occur for a net.
  long long slack = fy_slack(k, d, static_cast<long long>(d) * d,
                             static_cast<long long>(k) * binomial(d, 2));
  check_internal((slack == 0) == (exempt || (k == 5 && d == 6)),
                 "Euler slack disagrees with the (3,2)/(4,3)/(5,6) classification");
  return !exempt;
}

}  // namespace netdual
