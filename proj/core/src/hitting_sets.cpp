#include "netdual/hitting_sets.hpp"

#include <algorithm>

#include "netdual/errors.hpp"
#include "netdual/monomial_ideal.hpp"

namespace netdual {

std::vector<Subset> minimal_hitting_sets(const std::vector<Subset>& family,
                                         std::size_t cap) {
  std::vector<Subset> sets = family;
  // Processing small members first keeps the intermediate antichain tight.
  std::sort(sets.begin(), sets.end(), CanonicalLess{});
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());

  for (Subset s : sets)
    if (s.empty()) return {};  // nothing can hit the empty set

  std::vector<Subset> transversals = {Subset{}};
  for (Subset s : sets) {
    std::vector<Subset> hit, missed;
    for (Subset t : transversals)
      (t.intersects(s) ? hit : missed).push_back(t);
    if (missed.empty()) continue;  // s already hit by everything

    std::vector<Subset> next = std::move(hit);
    for (Subset t : missed) {
      for (int v : s.elements()) {
        Subset candidate = t.with(v);
        // Minimal unless some survivor (or smaller extension) is inside it.
        bool dominated = false;
        for (Subset k : next)
          if (k.subset_of(candidate)) {
            dominated = true;
            break;
          }
        if (!dominated) next.push_back(candidate);
      }
    }
    transversals = inclusion_minimal(std::move(next));
    if (transversals.size() > cap)
      throw size_cap_error("minimal transversal antichain exceeded cap of " +
                           std::to_string(cap));
  }
  std::sort(transversals.begin(), transversals.end(), CanonicalLess{});
  return transversals;
}

}  // namespace netdual
