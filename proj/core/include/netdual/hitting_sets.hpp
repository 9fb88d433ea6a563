#pragma once

#include <cstddef>
#include <vector>

#include "netdual/subset.hpp"

namespace netdual {

/// All inclusion-minimal transversals of the family (sets meeting every
/// member), via Berge's incremental antichain insertion. Exponential in the
/// worst case; the instances here are tiny. Conventions:
///   - empty family -> { ∅ }
///   - any empty member -> no transversal exists -> { }
/// Throws size_cap_error if the working antichain exceeds `cap`.
std::vector<Subset> minimal_hitting_sets(const std::vector<Subset>& family,
                                         std::size_t cap = 1u << 20);

}  // namespace netdual
