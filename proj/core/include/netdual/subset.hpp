#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace netdual {

using Mask = std::uint64_t;

/// Hard cap on ground-set size. Everything is a 64-bit mask; the largest
/// instance anyone needs here is the K_7 edge set (21 variables).
inline constexpr int kMaxVars = 64;

/// A subset of {0,...,n-1}, used both as a squarefree monomial support and
/// as a face of a simplicial complex. Indices are 0-based internally and
/// rendered 1-based at the I/O boundary.
class Subset {
 public:
  constexpr Subset() = default;
  explicit constexpr Subset(Mask bits) : bits_(bits) {}

  static constexpr Subset full(int n) {
    return Subset(n >= 64 ? ~Mask{0} : ((Mask{1} << n) - 1));
  }
  static constexpr Subset single(int i) { return Subset(Mask{1} << i); }

  constexpr Mask bits() const { return bits_; }
  int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }

  constexpr bool contains(int i) const { return (bits_ >> i) & 1; }
  constexpr bool subset_of(Subset o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool superset_of(Subset o) const { return o.subset_of(*this); }
  constexpr bool intersects(Subset o) const { return (bits_ & o.bits_) != 0; }

  constexpr Subset operator|(Subset o) const { return Subset(bits_ | o.bits_); }
  constexpr Subset operator&(Subset o) const { return Subset(bits_ & o.bits_); }
  constexpr Subset minus(Subset o) const { return Subset(bits_ & ~o.bits_); }
  constexpr Subset complement_in(Subset universe) const {
    return Subset(universe.bits_ & ~bits_);
  }
  constexpr Subset with(int i) const { return Subset(bits_ | (Mask{1} << i)); }
  constexpr Subset without(int i) const { return Subset(bits_ & ~(Mask{1} << i)); }

  int min_element() const { return std::countr_zero(bits_); }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(size());
    for (Mask b = bits_; b;) {
      int i = std::countr_zero(b);
      out.push_back(i);
      b &= b - 1;
    }
    return out;
  }

  friend constexpr bool operator==(Subset a, Subset b) { return a.bits_ == b.bits_; }
  friend constexpr bool operator!=(Subset a, Subset b) { return a.bits_ != b.bits_; }

 private:
  Mask bits_ = 0;
};

/// Canonical order used everywhere output must be deterministic:
/// by cardinality, then lexicographically on the ascending element list.
/// The element-wise tiebreak is "the smaller set is the one owning the
/// smallest element where they differ".
inline bool canonical_less(Subset a, Subset b) {
  int sa = a.size(), sb = b.size();
  if (sa != sb) return sa < sb;
  Mask d = a.bits() ^ b.bits();
  if (d == 0) return false;
  return a.contains(std::countr_zero(d));
}

struct CanonicalLess {
  bool operator()(Subset a, Subset b) const { return canonical_less(a, b); }
};

/// Arbitrary strict total order for use as a std::map/set key.
struct BitsLess {
  bool operator()(Subset a, Subset b) const { return a.bits() < b.bits(); }
};

}  // namespace netdual
