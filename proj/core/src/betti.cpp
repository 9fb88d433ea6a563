#include "netdual/betti.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <sstream>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "netdual/errors.hpp"

namespace netdual {

void BettiTable::add(int i, Subset m, long long rank) {
  if (rank == 0) return;
  multigraded_[{i, m.bits()}] += rank;
  graded_[{i, m.size()}] += rank;
}

long long BettiTable::graded(int i, int j) const {
  auto it = graded_.find({i, j});
  return it == graded_.end() ? 0 : it->second;
}

long long BettiTable::multigraded(int i, Subset m) const {
  auto it = multigraded_.find({i, m.bits()});
  return it == multigraded_.end() ? 0 : it->second;
}

int BettiTable::pdim() const {
  int p = 0;
  for (const auto& [key, rank] : graded_)
    if (rank != 0) p = std::max(p, key.first);
  return p;
}

int BettiTable::reg() const {
  int r = 0;
  for (const auto& [key, rank] : graded_)
    if (rank != 0) r = std::max(r, key.second - key.first);
  return r;
}

BettiTable BettiTable::as_quotient() const {
  if (subject_ == Subject::quotient) return *this;
  BettiTable out(Subject::quotient, nvars_);
  out.add(0, Subset{}, 1);
  for (const auto& [key, rank] : multigraded_)
    out.add(key.first + 1, Subset(key.second), rank);
  return out;
}

BettiTable BettiTable::as_ideal() const {
  if (subject_ == Subject::ideal) return *this;
  BettiTable out(Subject::ideal, nvars_);
  for (const auto& [key, rank] : multigraded_) {
    if (key.first == 0) {
      check_internal(Subset(key.second).empty() && rank == 1,
                     "quotient table has unexpected 0-th column");
      continue;
    }
    out.add(key.first - 1, Subset(key.second), rank);
  }
  return out;
}

std::string BettiTable::render_text() const {
  int max_i = 0, min_j = 0, max_j = 0;
  bool any = false;
  for (const auto& [key, rank] : graded_) {
    if (rank == 0) continue;
    int i = key.first, j = key.second - key.first;
    max_i = std::max(max_i, i);
    if (!any) {
      min_j = max_j = j;
      any = true;
    } else {
      min_j = std::min(min_j, j);
      max_j = std::max(max_j, j);
    }
  }
  if (!any) return "(zero table)\n";

  std::vector<std::vector<std::string>> cells(max_j - min_j + 2,
                                              std::vector<std::string>(max_i + 2));
  cells[0][0] = "j\\i";
  for (int i = 0; i <= max_i; ++i) cells[0][i + 1] = std::to_string(i);
  for (int j = min_j; j <= max_j; ++j) {
    cells[j - min_j + 1][0] = std::to_string(j);
    for (int i = 0; i <= max_i; ++i) {
      long long b = graded(i, i + j);
      cells[j - min_j + 1][i + 1] = b == 0 ? "--" : std::to_string(b);
    }
  }
  std::vector<std::size_t> width(max_i + 2, 0);
  for (const auto& row : cells)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  std::ostringstream out;
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      out << std::string(width[c] - row[c].size(), ' ') << row[c];
      out << (c + 1 == row.size() ? "" : "  ");
    }
    out << '\n';
  }
  return out.str();
}

std::vector<Subset> lcm_lattice(const MonomialIdeal& ideal, std::size_t cap) {
  std::unordered_set<Mask> seen;
  std::vector<Mask> frontier;
  for (Subset g : ideal.gens())
    if (seen.insert(g.bits()).second) frontier.push_back(g.bits());
  std::vector<Mask> all(frontier);
  while (!frontier.empty()) {
    std::vector<Mask> next;
    for (Mask m : frontier) {
      for (Subset g : ideal.gens()) {
        Mask u = m | g.bits();
        if (seen.insert(u).second) {
          next.push_back(u);
          if (seen.size() > cap)
            throw size_cap_error("LCM lattice exceeded cap of " + std::to_string(cap));
        }
      }
    }
    all.insert(all.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  std::vector<Subset> out;
  out.reserve(all.size());
  for (Mask m : all) out.push_back(Subset(m));
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

namespace {

std::vector<Subset> candidate_multidegrees(const MonomialIdeal& ideal,
                                           const HochsterOptions& options) {
  if (!options.exhaustive) return lcm_lattice(ideal);
  int n = ideal.ground().n;
  if (n > options.exhaustive_cap)
    throw size_cap_error("exhaustive multidegree sweep refused for n = " + std::to_string(n) +
                         " > " + std::to_string(options.exhaustive_cap));
  std::vector<Subset> out;
  out.reserve((std::size_t{1} << n) - 1);
  for (Mask m = 1; m < (Mask{1} << n); ++m) out.push_back(Subset(m));
  return out;
}

// Faces of the induced subcomplex Δ_m, from a precomputed global face list.
std::vector<Subset> faces_within(const std::vector<Subset>& faces, Subset m) {
  std::vector<Subset> out;
  for (Subset f : faces)
    if (f.subset_of(m)) out.push_back(f);
  return out;
}

// Runs fn(k) for k in [0, count) over the requested number of threads.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& fn) {
  if (threads <= 1 || count < 2) {
    for (std::size_t k = 0; k < count; ++k) fn(k);
    return;
  }
  std::vector<std::thread> pool;
  std::atomic<std::size_t> cursor{0};
  int workers = std::min<std::size_t>(threads, count);
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (;;) {
        std::size_t k = cursor.fetch_add(1);
        if (k >= count) return;
        fn(k);
      }
    });
  for (auto& t : pool) t.join();
}

// Direct Hochster sweep on Δ = sr_complex(I).
BettiTable hochster_direct(const MonomialIdeal& ideal, const SimplicialComplex& delta,
                           const FieldChoice& field, const HochsterOptions& options) {
  std::vector<Subset> faces = delta.all_faces();
  std::vector<Subset> degrees = candidate_multidegrees(ideal, options);

  std::vector<std::vector<std::pair<std::pair<int, Mask>, long long>>> partial(degrees.size());
  parallel_for(degrees.size(), options.threads, [&](std::size_t k) {
    Subset m = degrees[k];
    HomologyProfile h = reduced_homology_of_faces(faces_within(faces, m), field);
    int size = m.size();
    for (int q = -1; q <= h.top_degree(); ++q) {
      long long d = h.dim(q);
      if (d == 0) continue;
      int i = size - q - 2;  // b_{i,m}(I) = dim H~_{|m|-i-2}
      if (i < 0) continue;
      partial[k].push_back({{i, m.bits()}, d});
    }
  });

  BettiTable table(Subject::ideal, ideal.ground().n);
  for (const auto& chunk : partial)
    for (const auto& [key, rank] : chunk) table.add(key.first, Subset(key.second), rank);
  return table;
}

// Hochster through the Alexander dual: b_{i,m}(I) = dim H~_{i-1} of the link
// of (complement of m) in sr_complex(I^∨). Used when Δ(I) is too big to
// enumerate but the dual side is small.
BettiTable hochster_via_dual_links(const MonomialIdeal& ideal,
                                   const SimplicialComplex& dual_delta,
                                   const FieldChoice& field, const HochsterOptions& options) {
  std::vector<Subset> faces = dual_delta.all_faces();
  std::vector<Subset> degrees = candidate_multidegrees(ideal, options);
  Subset universe = ideal.ground().all();

  std::vector<std::vector<std::pair<std::pair<int, Mask>, long long>>> partial(degrees.size());
  parallel_for(degrees.size(), options.threads, [&](std::size_t k) {
    Subset m = degrees[k];
    Subset sigma = m.complement_in(universe);
    if (!dual_delta.is_face(sigma)) return;  // link is void: no contribution
    std::vector<Subset> link;
    for (Subset f : faces)
      if (sigma.subset_of(f)) link.push_back(f.minus(sigma));
    HomologyProfile h = reduced_homology_of_faces(link, field);
    for (int q = -1; q <= h.top_degree(); ++q) {
      long long d = h.dim(q);
      if (d == 0) continue;
      int i = q + 1;  // b_{i,m}(I) = dim H~_{i-1}(link)
      partial[k].push_back({{i, m.bits()}, d});
    }
  });

  BettiTable table(Subject::ideal, ideal.ground().n);
  for (const auto& chunk : partial)
    for (const auto& [key, rank] : chunk) table.add(key.first, Subset(key.second), rank);
  return table;
}

}  // namespace

BettiTable hochster_betti(const MonomialIdeal& ideal, const FieldChoice& field,
                          const HochsterOptions& options) {
  if (ideal.ground().n > kMaxVars)
    throw size_cap_error("ground set exceeds the bitset cap");
  if (ideal.is_zero()) return BettiTable(Subject::ideal, ideal.ground().n);

  // Work on whichever side of the duality has the smaller complex: homology
  // cost is driven entirely by face counts, and the two sweeps compute the
  // same table.
  SimplicialComplex delta = sr_complex(ideal);
  std::size_t primal_faces = delta.count_faces(options.direct_face_cap);
  if (primal_faces <= 2048) return hochster_direct(ideal, delta, field, options);
  MonomialIdeal dual = alexander_dual(ideal);
  SimplicialComplex dual_delta = sr_complex(dual);
  std::size_t dual_faces = dual_delta.count_faces(options.direct_face_cap);

  if (primal_faces <= dual_faces && primal_faces <= options.direct_face_cap)
    return hochster_direct(ideal, delta, field, options);
  if (dual_faces <= options.direct_face_cap)
    return hochster_via_dual_links(ideal, dual_delta, field, options);
  if (primal_faces <= options.direct_face_cap)
    return hochster_direct(ideal, delta, field, options);

  throw size_cap_error(
      "both the Stanley-Reisner complex and its dual are too large to sweep");
}

BettiTable betti_table(const MonomialIdeal& ideal, Subject subject, const FieldChoice& field,
                       const HochsterOptions& options) {
  return hochster_betti(ideal, field, options).as(subject);
}

BettiTable koszul_tor_oracle(const MonomialIdeal& ideal, const FieldChoice& field) {
  int n = ideal.ground().n;
  if (n > 12)
    throw size_cap_error("koszul_tor_oracle is exponential; refusing n = " +
                         std::to_string(n) + " > 12 variables");
  if (ideal.is_zero()) return BettiTable(Subject::ideal, n);

  BettiTable quotient(Subject::quotient, n);
  // For each squarefree multidegree m, the Koszul complex strand has basis
  // e_F x^{m-F} for F ⊆ m with x^{m-F} not in I.
  for (Mask mm = 0; mm < (Mask{1} << n); ++mm) {
    Subset m(mm);
    int msize = m.size();
    std::vector<std::vector<Subset>> strand(msize + 1);  // by |F|
    std::vector<std::unordered_map<Mask, int>> pos(msize + 1);
    for (Mask sub = mm;; sub = (sub - 1) & mm) {
      Subset f(sub);
      if (!ideal.contains(m.minus(f))) {
        int s = f.size();
        pos[s][f.bits()] = static_cast<int>(strand[s].size());
        strand[s].push_back(f);
      }
      if (sub == 0) break;
    }
    std::vector<int> rank(msize + 2, 0);
    for (int s = 1; s <= msize; ++s) {
      if (strand[s].empty() || strand[s - 1].empty()) continue;
      IntMatrix mat = IntMatrix::zero(static_cast<int>(strand[s - 1].size()),
                                      static_cast<int>(strand[s].size()));
      for (std::size_t j = 0; j < strand[s].size(); ++j) {
        Subset f = strand[s][j];
        int sign = 1;
        for (int v : f.elements()) {
          auto it = pos[s - 1].find(f.without(v).bits());
          if (it != pos[s - 1].end()) mat.at(it->second, static_cast<int>(j)) = sign;
          sign = -sign;
        }
      }
      rank[s] = matrix_rank(mat, field);
    }
    for (int s = 0; s <= msize; ++s) {
      long long dim = static_cast<long long>(strand[s].size()) - rank[s] - rank[s + 1];
      if (dim != 0) quotient.add(s, m, dim);
    }
  }
  return quotient.as_ideal();
}

bool has_linear_resolution(const MonomialIdeal& ideal, const FieldChoice& field) {
  if (ideal.is_zero()) return false;
  if (!ideal.equigenerated()) return false;
  int t = ideal.min_gen_degree();
  BettiTable table = hochster_betti(ideal, field);
  for (const auto& [key, rank] : table.graded_entries())
    if (rank != 0 && key.second != key.first + t) return false;
  return true;
}

bool is_cohen_macaulay(const MonomialIdeal& ideal, const FieldChoice& field) {
  if (ideal.is_zero()) throw invalid_input("Cohen-Macaulayness of S needs no table here");
  BettiTable quotient = hochster_betti(ideal, field).as_quotient();
  bool by_pdim = quotient.pdim() == codimension(ideal);
  MonomialIdeal dual = alexander_dual(ideal);
  if (dual.equigenerated()) {
    bool by_eagon_reiner = has_linear_resolution(dual, field);
    check_internal(by_pdim == by_eagon_reiner,
                   "Eagon-Reiner routes disagree on Cohen-Macaulayness");
  }
  return by_pdim;
}

}  // namespace netdual
