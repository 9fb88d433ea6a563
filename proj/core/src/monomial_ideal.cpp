#include "netdual/monomial_ideal.hpp"

#include <algorithm>

#include "netdual/errors.hpp"

namespace netdual {

namespace {

// Minimal (or maximal, if invert) members of a family under inclusion.
std::vector<Subset> antichain(std::vector<Subset> sets, bool want_minimal) {
  std::sort(sets.begin(), sets.end(), CanonicalLess{});
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<Subset> kept;
  for (Subset s : sets) {
    bool dominated = false;
    for (Subset k : kept) {
      if (want_minimal ? k.subset_of(s) : s.subset_of(k)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(s);
  }
  if (!want_minimal) {
    // Sorted by ascending size, so later sets may strictly contain earlier
    // ones; sweep once more from the large end.
    std::vector<Subset> out;
    for (std::size_t i = 0; i < kept.size(); ++i) {
      bool dominated = false;
      for (std::size_t j = i + 1; j < kept.size(); ++j)
        if (kept[i].subset_of(kept[j])) {
          dominated = true;
          break;
        }
      if (!dominated) out.push_back(kept[i]);
    }
    return out;
  }
  return kept;
}

}  // namespace

std::vector<Subset> inclusion_minimal(std::vector<Subset> sets) {
  return antichain(std::move(sets), true);
}

std::vector<Subset> inclusion_maximal(std::vector<Subset> sets) {
  return antichain(std::move(sets), false);
}

MonomialIdeal MonomialIdeal::zero(GroundSet ground) {
  validate(ground);
  MonomialIdeal ideal;
  ideal.ground_ = std::move(ground);
  return ideal;
}

MonomialIdeal MonomialIdeal::make(GroundSet ground, std::vector<Monomial> monomials) {
  validate(ground);
  Subset universe = ground.all();
  for (Monomial m : monomials) {
    if (m.empty())
      throw invalid_input("the empty monomial generates the unit ideal; ideals here are proper");
    if (!m.subset_of(universe))
      throw invalid_input("monomial has variables outside the ground set");
  }
  MonomialIdeal ideal;
  ideal.ground_ = std::move(ground);
  ideal.gens_ = inclusion_minimal(std::move(monomials));
  return ideal;
}

bool MonomialIdeal::contains(Monomial m) const {
  for (Monomial g : gens_)
    if (g.subset_of(m)) return true;
  return false;
}

bool MonomialIdeal::equigenerated() const {
  for (Monomial g : gens_)
    if (g.size() != gens_.front().size()) return false;
  return true;
}

int MonomialIdeal::min_gen_degree() const {
  return gens_.empty() ? -1 : gens_.front().size();  // canonical order: size first
}

int MonomialIdeal::max_gen_degree() const {
  return gens_.empty() ? -1 : gens_.back().size();
}

MonomialIdeal MonomialIdeal::graded_piece_gens(int degree) const {
  std::vector<Monomial> kept;
  for (Monomial g : gens_)
    if (g.size() == degree) kept.push_back(g);
  MonomialIdeal out;
  out.ground_ = ground_;
  out.gens_ = std::move(kept);
  return out;
}

MonomialIdeal minimalize(GroundSet ground, std::vector<Monomial> monomials) {
  return MonomialIdeal::make(std::move(ground), std::move(monomials));
}

}  // namespace netdual
