#pragma once

#include <optional>
#include <string>

#include "netdual/arrangement.hpp"
#include "netdual/monomial_os.hpp"

namespace netdual {

/// Outcome of a net test; a failure always carries a witness.
struct NetVerdict {
  bool is_net = false;

  struct Certificate {
    enum class Kind {
      uncovered_pair,        // lines from distinct blocks meeting outside X
      block_violation,       // a point of X without exactly one line per block
      dual_degree_mismatch,  // (J_X^∨)_d != (J_Pi)_d
    };
    Kind kind;
    Subset pair;                   // for uncovered_pair
    Subset point;                  // for block_violation
    int block = -1;                // for block_violation
    std::vector<Subset> missing;   // (J_Pi)_d \ (J_X^∨)_d
    std::vector<Subset> extra;     // (J_X^∨)_d \ (J_Pi)_d
    std::string describe(const GroundSet& ground) const;
  };
  std::optional<Certificate> certificate;
};

/// Definition-level test: (1) every cross-block pair of lines lies in some
/// point of X; (2) every point of X meets each block in exactly one line.
/// X must consist of flats of the arrangement. On success the derived facts
/// (every line on exactly d points of X, |X| = d^2) are asserted.
NetVerdict net_check_direct(const LineArrangement& arr, const NetCandidate& candidate);

/// Duality-level test: the degree-d squarefree monomials of alexander_dual(J_X)
/// coincide with those of J_Pi. Requires X nonempty.
NetVerdict net_check_dual(const GroundSet& ground, const NetCandidate& candidate);

/// Runs both checks and returns the incidence-level verdict. A direct PASS
/// with a dual FAIL is impossible (nets always satisfy the degree-d duality
/// equality) and raises internal_check_error; the reverse can occur for
/// d >= 3 candidates with missing points of X, where the degree-d equality
/// holds vacuously, and is reported as not-a-net.
NetVerdict net_check_both(const LineArrangement& arr, const NetCandidate& candidate);

/// With `candidate` a net for arr: true iff all within-block intersections
/// are normal crossings, equivalently the quadratic part of J decomposes as
/// k disjoint full blocks of C(d,2) quadrics. Both routes are computed and
/// asserted equal. Throws invalid_input when the candidate is not a net.
bool blocks_normal_crossing(const LineArrangement& arr, const NetCandidate& candidate);

/// LHS - RHS of the Euler-characteristic inequality
///   3 + |X| >= (2-k)(3d - d^2) + 2kd - sum_{p in X-bar} mu(p);
/// slack 0 means the only singular fibers of the net are the blocks.
long long fy_slack(int k, int d, long long x_size, long long within_block_mu_sum);

/// For a net with all-normal-crossing blocks: extra singular fibers are
/// forced unless (k,d) is (3,2) or (4,3).
bool extra_fibers_required(const NetCandidate& candidate);

}  // namespace netdual
