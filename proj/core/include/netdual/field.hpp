#pragma once

#include <string>
#include <vector>

namespace netdual {

/// Coefficient field for homology / Betti computations: exact rationals
/// (the default; characteristic zero like the setting everything here is
/// stated in) or a prime field as a fast path.
struct FieldChoice {
  enum class Kind { rationals, prime };
  Kind kind = Kind::rationals;
  long long p = 0;

  static FieldChoice rationals() { return {}; }
  static FieldChoice prime(long long p);
  /// Default prime fast path.
  static FieldChoice prime_default() { return prime(32003); }
  /// Parses "q" | "gf:P".
  static FieldChoice parse(const std::string& text);

  bool is_rationals() const { return kind == Kind::rationals; }
  std::string name() const;
  bool operator==(const FieldChoice& o) const { return kind == o.kind && p == o.p; }
};

/// Dense integer matrix, rows x cols, row-major.
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<long long> entries;

  long long& at(int r, int c) { return entries[static_cast<std::size_t>(r) * cols + c]; }
  long long at(int r, int c) const { return entries[static_cast<std::size_t>(r) * cols + c]; }
  static IntMatrix zero(int rows, int cols) {
    return IntMatrix{rows, cols, std::vector<long long>(static_cast<std::size_t>(rows) * cols, 0)};
  }
};

/// Rank over the chosen field. Over the rationals: fraction-free Bareiss on
/// int64 with overflow detection, escalating to GMP integers only when
/// needed. Over GF(p): ordinary modular elimination.
int matrix_rank(const IntMatrix& m, const FieldChoice& field);

}  // namespace netdual
