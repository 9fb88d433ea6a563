#include "netdual/field.hpp"

#include <gmpxx.h>

#include <cstdlib>

#include "netdual/errors.hpp"

namespace netdual {

FieldChoice FieldChoice::prime(long long p) {
  if (p < 2) throw invalid_input("prime field characteristic must be >= 2");
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) throw invalid_input(std::to_string(p) + " is not prime");
  FieldChoice f;
  f.kind = Kind::prime;
  f.p = p;
  return f;
}

FieldChoice FieldChoice::parse(const std::string& text) {
  if (text == "q" || text == "Q" || text == "rationals") return rationals();
  if (text.rfind("gf:", 0) == 0) {
    char* end = nullptr;
    long long p = std::strtoll(text.c_str() + 3, &end, 10);
    if (end == nullptr || *end != '\0')
      throw invalid_input("cannot parse field '" + text + "'");
    return prime(p);
  }
  if (text == "gf") return prime_default();
  throw invalid_input("unknown field '" + text + "' (expected q or gf:p)");
}

std::string FieldChoice::name() const {
  return is_rationals() ? "QQ" : "GF(" + std::to_string(p) + ")";
}

namespace {

struct Overflow {};

long long mul_checked(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}

long long sub_checked(long long a, long long b) {
  long long r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
  return r;
}

// Fraction-free Bareiss elimination; exact over the integers, so the rank
// it reports is the rank over the rationals.
template <typename I>
int bareiss_rank(std::vector<I> a, int rows, int cols) {
  auto at = [&](int r, int c) -> I& { return a[static_cast<std::size_t>(r) * cols + c]; };
  int rank = 0;
  I prev = 1;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (at(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int c = 0; c < cols; ++c) std::swap(at(pivot, c), at(rank, c));
    I p = at(rank, col);
    for (int r = rank + 1; r < rows; ++r) {
      I head = at(r, col);
      for (int c = col; c < cols; ++c) {
        if constexpr (std::is_same_v<I, long long>) {
          I t = sub_checked(mul_checked(p, at(r, c)), mul_checked(head, at(rank, c)));
          at(r, c) = t / prev;
        } else {
          at(r, c) = (p * at(r, c) - head * at(rank, c)) / prev;
        }
      }
    }
    prev = p;
    ++rank;
  }
  return rank;
}

int modular_rank(const IntMatrix& m, long long p) {
  std::vector<long long> a(m.entries.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    long long v = m.entries[i] % p;
    a[i] = v < 0 ? v + p : v;
  }
  auto at = [&](int r, int c) -> long long& {
    return a[static_cast<std::size_t>(r) * m.cols + c];
  };
  auto inverse = [&](long long x) {
    long long r = 1, e = p - 2, base = x % p;
    while (e) {
      if (e & 1) r = r * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return r;
  };
  int rank = 0;
  for (int col = 0; col < m.cols && rank < m.rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < m.rows; ++r)
      if (at(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int c = 0; c < m.cols; ++c) std::swap(at(pivot, c), at(rank, c));
    long long inv = inverse(at(rank, col));
    for (int r = rank + 1; r < m.rows; ++r) {
      long long factor = at(r, col) * inv % p;
      if (factor == 0) continue;
      for (int c = col; c < m.cols; ++c) {
        at(r, c) = (at(r, c) - factor * at(rank, c)) % p;
        if (at(r, c) < 0) at(r, c) += p;
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

int matrix_rank(const IntMatrix& m, const FieldChoice& field) {
  if (m.rows == 0 || m.cols == 0) return 0;
  if (!field.is_rationals()) return modular_rank(m, field.p);
  try {
    return bareiss_rank<long long>(m.entries, m.rows, m.cols);
  } catch (const Overflow&) {
    std::vector<mpz_class> big;
    big.reserve(m.entries.size());
    for (long long v : m.entries) big.emplace_back(static_cast<long>(v));
    return bareiss_rank<mpz_class>(std::move(big), m.rows, m.cols);
  }
}

}  // namespace netdual
