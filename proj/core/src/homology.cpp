#include "netdual/homology.hpp"

#include <algorithm>
#include <unordered_map>

#include "netdual/errors.hpp"

namespace netdual {

long long HomologyProfile::reduced_euler() const {
  // sum over q >= -1 of (-1)^q dim H~_q; equals sum (-1)^q f_q - 0 by the
  // rank-nullity ladder, so {∅} has reduced Euler characteristic -1.
  long long acc = 0;
  int sign = -1;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    acc += sign * dims[i];
    sign = -sign;
  }
  return acc;
}

HomologyProfile reduced_homology_of_faces(const std::vector<Subset>& faces,
                                          const FieldChoice& field) {
  // Bucket faces by cardinality; degree q faces have q+1 vertices.
  int max_size = 0;
  for (Subset f : faces) max_size = std::max(max_size, f.size());

  std::vector<std::vector<Subset>> by_size(max_size + 1);
  for (Subset f : faces) by_size[f.size()].push_back(f);
  for (auto& bucket : by_size) std::sort(bucket.begin(), bucket.end(), BitsLess{});

  check_internal(!by_size[0].empty(), "face list must contain the empty face");

  std::vector<std::unordered_map<Mask, int>> index(max_size + 1);
  for (int s = 0; s <= max_size; ++s)
    for (std::size_t i = 0; i < by_size[s].size(); ++i)
      index[s][by_size[s][i].bits()] = static_cast<int>(i);

  // rank of boundary map from (s)-element faces to (s-1)-element faces,
  // s = 1..max_size; the map from vertices to {∅} is all-ones.
  std::vector<int> boundary_rank(max_size + 2, 0);
  for (int s = 1; s <= max_size; ++s) {
    const auto& source = by_size[s];
    const auto& target = by_size[s - 1];
    IntMatrix m = IntMatrix::zero(static_cast<int>(target.size()),
                                  static_cast<int>(source.size()));
    for (std::size_t j = 0; j < source.size(); ++j) {
      Subset f = source[j];
      int sign = 1;
      for (int v : f.elements()) {
        Subset sub = f.without(v);
        auto it = index[s - 1].find(sub.bits());
        check_internal(it != index[s - 1].end(), "face list is not subset-closed");
        m.at(it->second, static_cast<int>(j)) = sign;
        sign = -sign;
      }
    }
    boundary_rank[s] = matrix_rank(m, field);
  }

  HomologyProfile profile;
  profile.dims.resize(max_size + 1);
  for (int s = 0; s <= max_size; ++s) {
    long long f_count = static_cast<long long>(by_size[s].size());
    profile.dims[s] = f_count - boundary_rank[s] - boundary_rank[s + 1];
  }
  while (profile.dims.size() > 1 && profile.dims.back() == 0) profile.dims.pop_back();
  return profile;
}

HomologyProfile reduced_homology(const SimplicialComplex& complex, const FieldChoice& field) {
  return reduced_homology_of_faces(complex.all_faces(), field);
}

}  // namespace netdual
