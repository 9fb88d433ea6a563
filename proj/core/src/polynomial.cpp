#include "netdual/polynomial.hpp"

#include <limits>

#include "netdual/errors.hpp"

namespace netdual {

namespace {

long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r))
    throw internal_check_error("integer overflow in polynomial addition");
  return r;
}

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r))
    throw internal_check_error("integer overflow in polynomial multiplication");
  return r;
}

}  // namespace

IntPolynomial::IntPolynomial(std::vector<long long> coefficients)
    : coeffs_(std::move(coefficients)) {
  trim();
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::constant(long long c) {
  return IntPolynomial(std::vector<long long>{c});
}

IntPolynomial IntPolynomial::monomial(long long c, int degree) {
  std::vector<long long> v(degree + 1, 0);
  v[degree] = c;
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::binomial_theorem(long long a, long long b, int k) {
  // (a + b t)^k
  std::vector<long long> v(k + 1, 0);
  for (int i = 0; i <= k; ++i) {
    long long c = binomial(k, i);
    for (int j = 0; j < i; ++j) c = checked_mul(c, b);
    for (int j = i; j < k; ++j) c = checked_mul(c, a);
    v[i] = c;
  }
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::one_minus_t_power(int k) {
  return binomial_theorem(1, -1, k);
}

long long IntPolynomial::coefficient(int degree) const {
  if (degree < 0 || degree >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[degree];
}

long long IntPolynomial::leading_coefficient() const {
  return coeffs_.empty() ? 0 : coeffs_.back();
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
  std::vector<long long> v(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i)
    v[i] = checked_add(coefficient(static_cast<int>(i)), o.coefficient(static_cast<int>(i)));
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
  return *this + (o * -1);
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
  if (is_zero() || o.is_zero()) return IntPolynomial{};
  std::vector<long long> v(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      v[i + j] = checked_add(v[i + j], checked_mul(coeffs_[i], o.coeffs_[j]));
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator*(long long scalar) const {
  std::vector<long long> v = coeffs_;
  for (auto& c : v) c = checked_mul(c, scalar);
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::shift_argument_down() const {
  // p(x-1) = sum_d c_d (x-1)^d
  IntPolynomial out;
  for (int d = 0; d <= degree(); ++d) {
    if (coeffs_[d] == 0) continue;
    out = out + binomial_theorem(-1, 1, d) * coeffs_[d];
  }
  return out;
}

bool IntPolynomial::divisible_by(const IntPolynomial& divisor) const {
  if (divisor.is_zero()) return is_zero();
  IntPolynomial rem = *this;
  long long lead = divisor.leading_coefficient();
  while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
    long long top = rem.leading_coefficient();
    if (top % lead != 0) return false;
    long long q = top / lead;
    rem = rem - divisor * IntPolynomial::monomial(q, rem.degree() - divisor.degree());
  }
  return rem.is_zero();
}

IntPolynomial IntPolynomial::divide_exact(const IntPolynomial& divisor) const {
  if (divisor.is_zero()) throw internal_check_error("division by zero polynomial");
  IntPolynomial rem = *this;
  IntPolynomial quotient;
  long long lead = divisor.leading_coefficient();
  while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
    long long top = rem.leading_coefficient();
    if (top % lead != 0)
      throw internal_check_error("polynomial division is not exact");
    IntPolynomial term = IntPolynomial::monomial(top / lead, rem.degree() - divisor.degree());
    quotient = quotient + term;
    rem = rem - divisor * term;
  }
  if (!rem.is_zero()) throw internal_check_error("polynomial division is not exact");
  return quotient;
}

long long IntPolynomial::evaluate(long long x) const {
  long long acc = 0;
  for (int d = degree(); d >= 0; --d) acc = checked_add(checked_mul(acc, x), coeffs_[d]);
  return acc;
}

IntPolynomial IntPolynomial::reversed(int top) const {
  if (degree() > top) throw internal_check_error("reversal degree below actual degree");
  std::vector<long long> v(top + 1, 0);
  for (int d = 0; d <= degree(); ++d) v[top - d] = coeffs_[d];
  return IntPolynomial(std::move(v));
}

namespace {

std::string format_term(long long c, int d, const std::string& var, bool first) {
  std::string out;
  long long a = c < 0 ? -c : c;
  if (first)
    out += (c < 0 ? "-" : "");
  else
    out += (c < 0 ? "-" : "+");
  if (a != 1 || d == 0) out += std::to_string(a);
  if (d >= 1) {
    out += var;
    if (d >= 2) out += "^" + std::to_string(d);
  }
  return out;
}

}  // namespace

std::string IntPolynomial::to_string_descending(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int d = degree(); d >= 0; --d) {
    if (coeffs_[d] == 0) continue;
    out += format_term(coeffs_[d], d, var, first);
    first = false;
  }
  return out;
}

std::string IntPolynomial::to_string_ascending(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int d = 0; d <= degree(); ++d) {
    if (coeffs_[d] == 0) continue;
    out += format_term(coeffs_[d], d, var, first);
    first = false;
  }
  return out;
}

HilbertSeries HilbertSeries::reduced() const {
  HilbertSeries out = *this;
  IntPolynomial one_minus_t = IntPolynomial::one_minus_t_power(1);
  while (out.denominator_power > 0 && out.numerator.divisible_by(one_minus_t)) {
    out.numerator = out.numerator.divide_exact(one_minus_t);
    --out.denominator_power;
  }
  return out;
}

HilbertSeries HilbertSeries::with_denominator_power(int target) const {
  if (target > denominator_power) {
    HilbertSeries out;
    out.numerator = numerator * IntPolynomial::one_minus_t_power(target - denominator_power);
    out.denominator_power = target;
    return out;
  }
  HilbertSeries out;
  out.numerator =
      numerator.divide_exact(IntPolynomial::one_minus_t_power(denominator_power - target));
  out.denominator_power = target;
  return out;
}

bool HilbertSeries::same_series(const HilbertSeries& o) const {
  int k = std::max(denominator_power, o.denominator_power);
  IntPolynomial lhs = numerator * IntPolynomial::one_minus_t_power(k - denominator_power);
  IntPolynomial rhs = o.numerator * IntPolynomial::one_minus_t_power(k - o.denominator_power);
  return lhs == rhs;
}

std::vector<long long> HilbertSeries::expand(int degree) const {
  // numerator * (1-t)^{-k}: coefficients of (1-t)^{-k} are C(k-1+i, i).
  std::vector<long long> out(degree + 1, 0);
  for (int i = 0; i <= degree; ++i) {
    long long acc = 0;
    for (int d = 0; d <= std::min(i, numerator.degree()); ++d) {
      long long c = numerator.coefficient(d);
      if (c == 0) continue;
      long long ways =
          denominator_power == 0 ? (i == d ? 1 : 0) : binomial(denominator_power - 1 + i - d, i - d);
      acc += c * ways;
    }
    out[i] = acc;
  }
  return out;
}

std::string HilbertSeries::to_string() const {
  std::string out = numerator.to_string_ascending("t");
  if (denominator_power > 0)
    out += " over (1-t)^" + std::to_string(denominator_power);
  return out;
}

long long binomial(int n, int k) {
  if (k < 0 || k > n || n < 0) return 0;
  k = std::min(k, n - k);
  long long num = 1;
  for (int i = 1; i <= k; ++i) {
    // Multiply before dividing stays integral at every step.
    num = num * (n - k + i);
    num /= i;
  }
  return num;
}

long long multinomial(int n, const std::vector<int>& parts) {
  int sum = 0;
  for (int p : parts) {
    if (p < 0) return 0;
    sum += p;
  }
  if (sum != n) throw invalid_input("multinomial parts must sum to n");
  long long out = 1;
  int used = 0;
  for (int p : parts) {
    out *= binomial(used + p, p);
    used += p;
  }
  return out;
}

}  // namespace netdual
