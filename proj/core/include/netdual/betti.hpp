#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "netdual/duality.hpp"
#include "netdual/field.hpp"
#include "netdual/homology.hpp"

namespace netdual {

enum class Subject { ideal, quotient };

/// Z^n- and Z-graded Betti numbers of I or S/I. The graded table is always
/// the multidegree-sum of the multigraded one.
class BettiTable {
 public:
  using GradedKey = std::pair<int, int>;  // (homological index i, total degree j)

  BettiTable() = default;
  BettiTable(Subject subject, int nvars) : subject_(subject), nvars_(nvars) {}

  Subject subject() const { return subject_; }
  int nvars() const { return nvars_; }

  void add(int i, Subset multidegree, long long rank);

  long long graded(int i, int j) const;
  long long multigraded(int i, Subset m) const;
  const std::map<GradedKey, long long>& graded_entries() const { return graded_; }
  const std::map<std::pair<int, Mask>, long long>& multigraded_entries() const {
    return multigraded_;
  }

  /// sup { i : b_i != 0 }; 0 for an empty table.
  int pdim() const;
  /// sup { j : b_{i,i+j} != 0 }.
  int reg() const;

  /// b_{i,j}(S/I) = b_{i-1,j}(I) for i >= 1 plus b_{0,0}(S/I) = 1.
  BettiTable as_quotient() const;
  BettiTable as_ideal() const;
  BettiTable as(Subject s) const { return s == Subject::quotient ? as_quotient() : as_ideal(); }

  bool operator==(const BettiTable& o) const {
    return subject_ == o.subject_ && nvars_ == o.nvars_ && multigraded_ == o.multigraded_;
  }
  /// Compares only the Z-graded tables.
  bool graded_equal(const BettiTable& o) const { return graded_ == o.graded_; }

  /// Macaulay2-style text layout: columns i, rows j, entry b_{i,i+j},
  /// "--" for zero.
  std::string render_text() const;

 private:
  Subject subject_ = Subject::ideal;
  int nvars_ = 0;
  std::map<GradedKey, long long> graded_;
  std::map<std::pair<int, Mask>, long long> multigraded_;
};

struct HochsterOptions {
  /// Sweep every squarefree multidegree instead of just the LCM lattice
  /// (validation mode; exponential in n).
  bool exhaustive = false;
  int threads = 1;
  /// Refuse exhaustive sweeps above this many variables (validation mode
  /// targets n <= 12).
  int exhaustive_cap = 16;
  /// When the Stanley-Reisner complex of I has more faces than this but the
  /// dual side is small, switch to computing through links in the dual
  /// complex (same numbers by Alexander duality).
  std::size_t direct_face_cap = 60000;
};

/// Multigraded Betti numbers of the IDEAL via Hochster's formula:
/// b_{i,m}(I) = dim H~_{|m|-i-2}(Δ_m) with Δ = sr_complex(I).
/// Candidate multidegrees are the LCMs of generator subsets by default.
BettiTable hochster_betti(const MonomialIdeal& ideal, const FieldChoice& field,
                          const HochsterOptions& options = {});

/// Full table plus derived invariants, rendered for the requested subject.
BettiTable betti_table(const MonomialIdeal& ideal, Subject subject, const FieldChoice& field,
                       const HochsterOptions& options = {});

/// Independent brute-force oracle: Tor via the full Koszul complex on all
/// variables, multidegree by multidegree. Refuses ground sets larger than
/// 12 variables. Returns the IDEAL-subject table.
BettiTable koszul_tor_oracle(const MonomialIdeal& ideal, const FieldChoice& field);

/// All distinct LCMs (unions) of nonempty subsets of the generators.
std::vector<Subset> lcm_lattice(const MonomialIdeal& ideal, std::size_t cap = 1u << 22);

/// I is generated in one degree t and b_{i,j}(I) = 0 whenever j != i + t.
bool has_linear_resolution(const MonomialIdeal& ideal, const FieldChoice& field = {});

/// Two Eagon-Reiner routes asserted consistent: pdim(S/I) == codim(I), and,
/// when I^∨ is equigenerated, I^∨ has a linear resolution.
bool is_cohen_macaulay(const MonomialIdeal& ideal, const FieldChoice& field = {});

}  // namespace netdual
