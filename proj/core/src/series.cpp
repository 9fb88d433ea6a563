#include "netdual/series.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "netdual/errors.hpp"
#include "netdual/graph.hpp"

namespace netdual {

IntPolynomial f_polynomial(const SimplicialComplex& complex) {
  int top = complex.dim() + 1;
  std::vector<long long> face_counts(top + 1, 0);  // by cardinality
  for (Subset f : complex.all_faces()) ++face_counts[f.size()];
  std::vector<long long> coeffs(top + 1, 0);
  for (int i = 0; i <= top; ++i) coeffs[top - i] = face_counts[i];
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial f_formula_kn(int n) {
  if (n < 3) throw invalid_input("f_formula_kn needs n >= 3");
  IntPolynomial out = IntPolynomial::monomial(1, n - 1);
  for (int i = 1; i <= n - 1; ++i)
    out = out + IntPolynomial::monomial(n * binomial(n - 1, i), n - 1 - i);
  out = out - IntPolynomial::monomial(binomial(n, 2), n - 2);
  return out;
}

IntPolynomial h_polynomial(const SimplicialComplex& complex) {
  return f_polynomial(complex).shift_argument_down();
}

HilbertSeries hilbert_numerator(const SimplicialComplex& complex) {
  int top = complex.dim() + 1;
  IntPolynomial h = h_polynomial(complex);
  // h_i is the coefficient of x^{top-i}; the numerator is sum h_i t^i.
  HilbertSeries series{h.reversed(top), top};

  // Low-degree consistency: the expansion must count the monomials of each
  // degree with support a face (standard Stanley-Reisner Hilbert function).
  std::vector<long long> expanded = series.expand(std::min(6, top + 3));
  std::vector<Subset> faces = complex.all_faces();
  for (std::size_t deg = 0; deg < expanded.size(); ++deg) {
    long long count = 0;
    for (Subset f : faces) {
      int s = f.size();
      if (s > static_cast<int>(deg)) continue;
      if (s == 0) {
        count += deg == 0 ? 1 : 0;
        continue;
      }
      // Monomials of this degree with full support f.
      count += binomial(static_cast<int>(deg) - 1, s - 1);
    }
    check_internal(expanded[deg] == count,
                   "Hilbert numerator disagrees with monomial counting");
  }
  return series;
}

HilbertSeries theoremB_primal(int n) {
  if (n < 3) throw invalid_input("theoremB_primal needs n >= 3");
  IntPolynomial p = IntPolynomial::constant(n) +
                    IntPolynomial::one_minus_t_power(n - 1) * (1 - n) -
                    IntPolynomial::monomial(binomial(n, 2), 1) *
                        IntPolynomial::one_minus_t_power(n - 2);
  return HilbertSeries{p, n - 1};
}

HilbertSeries theoremB_dual(int n) {
  if (n < 3) throw invalid_input("theoremB_dual needs n >= 3");
  int nc2 = static_cast<int>(binomial(n, 2));
  IntPolynomial p = IntPolynomial::constant(1) -
                    IntPolynomial::monomial(n, static_cast<int>(binomial(n - 1, 2))) +
                    IntPolynomial::monomial(binomial(n, 2), nc2 - 1) -
                    IntPolynomial::monomial(binomial(n - 1, 2), nc2);
  return HilbertSeries{p, n - 1};
}

namespace {

// Adjacency masks of the 1-skeleton of the Stanley-Reisner complex of an
// edge ideal: u ~ v iff x_u x_v is not in the ideal.
std::vector<Subset> skeleton_adjacency(const MonomialIdeal& ideal) {
  for (Monomial g : ideal.gens())
    if (g.size() != 2)
      throw invalid_input("cut polynomial needs an edge ideal; found a generator of degree " +
                          std::to_string(g.size()));
  int n = ideal.ground().n;
  std::vector<Subset> adj(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      Subset pair = Subset::single(u) | Subset::single(v);
      if (!ideal.contains(pair)) {
        adj[u] = adj[u].with(v);
        adj[v] = adj[v].with(u);
      }
    }
  return adj;
}

}  // namespace

long long cut_coefficient(const MonomialIdeal& edge_ideal, int j) {
  std::vector<Subset> adj = skeleton_adjacency(edge_ideal);
  int n = edge_ideal.ground().n;
  if (j < 1 || j > n) return 0;
  long long total = 0;
  Mask v = (Mask{1} << j) - 1;
  Mask limit = n >= 64 ? ~Mask{0} : (Mask{1} << n);
  while (v < limit) {
    total += mask_components(adj, Subset(v)) - 1;
    Mask t = v | (v - 1);  // Gosper: next subset of the same size
    Mask next = (t + 1) | (((~t & -~t) - 1) >> (std::countr_zero(v) + 1));
    if (next <= v) break;
    v = next;
  }
  return total;
}

long long cut_coefficient(const SimplicialComplex& complex, int j) {
  return cut_coefficient(sr_ideal(complex), j);
}

IntPolynomial cut_polynomial(const MonomialIdeal& edge_ideal, int threads) {
  std::vector<Subset> adj = skeleton_adjacency(edge_ideal);
  int n = edge_ideal.ground().n;
  if (n > 24)
    throw size_cap_error("cut polynomial sweep refused for n = " + std::to_string(n) +
                         " > 24 vertices");
  Mask limit = Mask{1} << n;
  int workers = std::max(1, threads);
  std::vector<std::vector<long long>> partial(workers, std::vector<long long>(n + 1, 0));

  auto run = [&](int w) {
    Mask chunk = (limit + workers - 1) / workers;
    Mask begin = chunk * w;
    Mask end = std::min(limit, begin + chunk);
    for (Mask m = std::max<Mask>(begin, 1); m < end; ++m) {
      Subset window(m);
      int comps = mask_components(adj, window);
      if (comps > 1) partial[w][window.size()] += comps - 1;
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }

  std::vector<long long> coeffs(n + 1, 0);
  for (const auto& p : partial)
    for (int j = 0; j <= n; ++j) coeffs[j] += p[j];
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial cut_polynomial(const SimplicialComplex& complex, int threads) {
  return cut_polynomial(sr_ideal(complex), threads);
}

long long c2_formula_kn(int n) { return 3 * binomial(n, 4); }

long long c3_formula_kn(int n) {
  long long first = n >= 5 ? 3 * multinomial(n, {2, 3, n - 5}) : 0;
  long long second = n >= 6 ? multinomial(n, {2, 2, 2, n - 6}) : 0;
  check_internal(second % 3 == 0, "c3 closed form is not integral");
  return first + second / 3;
}

std::map<int, long long> linear_strand(const MonomialIdeal& edge_ideal, int threads) {
  for (Monomial g : edge_ideal.gens())
    if (g.size() != 2) throw invalid_input("linear_strand needs a quadratically generated ideal");
  IntPolynomial cut = cut_polynomial(edge_ideal, threads);
  std::map<int, long long> out;
  for (int j = 1; j + 1 <= cut.degree(); ++j)
    if (cut.coefficient(j + 1) != 0) out[j] = cut.coefficient(j + 1);
  return out;
}

HilbertSeries k_polynomial_from_betti(const BettiTable& table) {
  BettiTable quotient = table.as_quotient();
  IntPolynomial k;
  for (const auto& [key, rank] : quotient.graded_entries()) {
    if (rank == 0) continue;
    long long sign = key.first % 2 == 0 ? 1 : -1;
    k = k + IntPolynomial::monomial(sign * rank, key.second);
  }
  return HilbertSeries{k, quotient.nvars()};
}

}  // namespace netdual
