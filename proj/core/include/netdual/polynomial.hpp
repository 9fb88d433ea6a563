#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace netdual {

/// Dense univariate polynomial with exact 64-bit integer coefficients,
/// index = degree, trailing zeros trimmed. Arithmetic checks for overflow
/// and throws internal_check_error rather than wrapping.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<long long> coefficients);
  static IntPolynomial constant(long long c);
  static IntPolynomial monomial(long long c, int degree);
  /// (1 - t)^k expanded.
  static IntPolynomial one_minus_t_power(int k);
  static IntPolynomial binomial_theorem(long long a, long long b, int k);  // (a + b t)^k

  const std::vector<long long>& coefficients() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for 0
  bool is_zero() const { return coeffs_.empty(); }
  long long coefficient(int degree) const;
  long long leading_coefficient() const;

  IntPolynomial operator+(const IntPolynomial& o) const;
  IntPolynomial operator-(const IntPolynomial& o) const;
  IntPolynomial operator*(const IntPolynomial& o) const;
  IntPolynomial operator*(long long scalar) const;
  bool operator==(const IntPolynomial& o) const { return coeffs_ == o.coeffs_; }

  /// q(x) = p(x - 1); the f-vector to h-vector transform.
  IntPolynomial shift_argument_down() const;

  /// Exact division; throws internal_check_error if the remainder is nonzero.
  IntPolynomial divide_exact(const IntPolynomial& divisor) const;
  /// True iff divisor divides *this exactly.
  bool divisible_by(const IntPolynomial& divisor) const;

  long long evaluate(long long x) const;

  /// Coefficients reversed relative to degree `top` (degree d -> top - d).
  IntPolynomial reversed(int top) const;

  /// "x^3 + 6x^2 + 12x + 4" (descending powers).
  std::string to_string_descending(const std::string& var = "x") const;
  /// "1+3t+3t^2-3t^3" (ascending powers, compact signs).
  std::string to_string_ascending(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<long long> coeffs_;
};

/// Integer-coefficient numerator over (1 - t)^denominator_power.
struct HilbertSeries {
  IntPolynomial numerator;
  int denominator_power = 0;

  /// Cancel as many (1-t) factors as divide the numerator exactly.
  HilbertSeries reduced() const;
  /// Rewrite with the given denominator power by exact division of the
  /// numerator by (1-t)^(denominator_power - target); throws
  /// internal_check_error if that division is not exact.
  HilbertSeries with_denominator_power(int target) const;
  /// Equality as rational functions: cross-multiplied polynomial identity.
  bool same_series(const HilbertSeries& o) const;

  /// Dimension counts of the graded ring: coefficients of the power-series
  /// expansion numerator/(1-t)^k up to `degree`.
  std::vector<long long> expand(int degree) const;

  std::string to_string() const;  // "1+3t+3t^2-3t^3 over (1-t)^3"

  bool operator==(const HilbertSeries& o) const {
    return denominator_power == o.denominator_power && numerator == o.numerator;
  }
};

long long binomial(int n, int k);
/// n! / (k1! k2! ... kr!) with sum(ki) == n.
long long multinomial(int n, const std::vector<int>& parts);

}  // namespace netdual
