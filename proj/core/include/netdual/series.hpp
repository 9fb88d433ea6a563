#pragma once

#include <map>

#include "netdual/betti.hpp"
#include "netdual/polynomial.hpp"
#include "netdual/simplicial_complex.hpp"

namespace netdual {

/// f(Δ,x) = sum_i f_{i-1} x^{(dim Δ + 1) - i} with f_{-1} = 1.
IntPolynomial f_polynomial(const SimplicialComplex& complex);

/// Closed form for Δ_{J(K_n)}:
///   x^{n-1} + n * sum_{i=1}^{n-1} C(n-1,i) x^{n-1-i} - C(n,2) x^{n-2}.
IntPolynomial f_formula_kn(int n);

/// h(Δ,x) = f(Δ,x-1).
IntPolynomial h_polynomial(const SimplicialComplex& complex);

/// Hilbert series of the Stanley-Reisner ring: the reversed h-vector over
/// (1-t)^{dim Δ + 1}. Spot-checked against direct monomial counting in
/// low degrees.
HilbertSeries hilbert_numerator(const SimplicialComplex& complex);

/// Closed-form Hilbert numerators for S/J(K_n) and S/J(K_n)^∨, both
/// presented over (1-t)^{n-1}; the dual numerator equals the alternating sum
/// of the dual betti table (its K-polynomial), not a reduced rational
/// function.
HilbertSeries theoremB_primal(int n);
HilbertSeries theoremB_dual(int n);

/// Cut polynomial of the 1-skeleton of Δ: coefficient c_j is the sum over
/// j-subsets W of (components of the skeleton restricted to W) - 1.
/// Δ must be the Stanley-Reisner complex of an ideal generated by quadrics
/// (an edge ideal); otherwise invalid_input. `threads` splits the subset
/// sweep; results are identical for any thread count.
IntPolynomial cut_polynomial(const SimplicialComplex& complex, int threads = 1);
IntPolynomial cut_polynomial(const MonomialIdeal& edge_ideal, int threads = 1);

/// c_j for a single j (iterates only over j-subsets; cheap for small j).
long long cut_coefficient(const SimplicialComplex& complex, int j);
long long cut_coefficient(const MonomialIdeal& edge_ideal, int j);

/// Closed forms for the quadratic part of J(K_n):
///   c_2 = 3 C(n,4),  c_3 = 3 C(n;2,3,n-5) + (1/3) C(n;2,2,2,n-6)
/// (the fraction is exact; integrality is asserted).
long long c2_formula_kn(int n);
long long c3_formula_kn(int n);

/// Linear strand of an edge ideal: j -> b_{j,j+1}(S/I) = c_{j+1}.
std::map<int, long long> linear_strand(const MonomialIdeal& edge_ideal, int threads = 1);

/// K-polynomial of the table: sum (-1)^i b_{i,j}(S/I) t^j over (1-t)^nvars.
HilbertSeries k_polynomial_from_betti(const BettiTable& table);

}  // namespace netdual
