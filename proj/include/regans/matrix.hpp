#pragma once

// Dense arbitrary-precision integer matrices and vectors with instrumented
// products. Schoolbook multiplication throughout.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

namespace regans {

using BigInt = mpz_class;
using BigVector = std::vector<BigInt>;

/// Number of matrix-matrix, matrix-vector and vector-vector products
/// performed. Owned by the caller of an operation, never global.
struct OpCounters {
  std::uint64_t matrix_matrix = 0;
  std::uint64_t matrix_vector = 0;
  std::uint64_t vector_vector = 0;

  void reset() noexcept { *this = {}; }
  bool operator==(const OpCounters&) const = default;
};

class BigMatrix {
 public:
  BigMatrix() = default;
  explicit BigMatrix(std::size_t n) : n_(n), data_(n * n) {}

  static BigMatrix identity(std::size_t n) {
    BigMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t size() const noexcept { return n_; }

  BigInt& operator()(std::size_t row, std::size_t col) { return data_[row * n_ + col]; }
  const BigInt& operator()(std::size_t row, std::size_t col) const { return data_[row * n_ + col]; }

  bool operator==(const BigMatrix&) const = default;

 private:
  std::size_t n_ = 0;
  BigVector data_;
};

inline BigMatrix multiply(const BigMatrix& a, const BigMatrix& b, OpCounters* counters = nullptr) {
  if (a.size() != b.size()) throw std::invalid_argument("matrix size mismatch");
  const std::size_t n = a.size();
  BigMatrix c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  }
  if (counters) ++counters->matrix_matrix;
  return c;
}

/// M * v for a column vector v.
inline BigVector multiply(const BigMatrix& m, const BigVector& v, OpCounters* counters = nullptr) {
  if (m.size() != v.size()) throw std::invalid_argument("matrix/vector size mismatch");
  const std::size_t n = m.size();
  BigVector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(m(i, j)) != 0) out[i] += m(i, j) * v[j];
    }
  }
  if (counters) ++counters->matrix_vector;
  return out;
}

/// v * M for a row vector v.
inline BigVector multiply(const BigVector& v, const BigMatrix& m, OpCounters* counters = nullptr) {
  if (m.size() != v.size()) throw std::invalid_argument("matrix/vector size mismatch");
  const std::size_t n = m.size();
  BigVector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(v[i]) == 0) continue;
    for (std::size_t j = 0; j < n; ++j) out[j] += v[i] * m(i, j);
  }
  if (counters) ++counters->matrix_vector;
  return out;
}

inline BigInt dot(const BigVector& u, const BigVector& v, OpCounters* counters = nullptr) {
  if (u.size() != v.size()) throw std::invalid_argument("vector size mismatch");
  BigInt sum = 0;
  for (std::size_t i = 0; i < u.size(); ++i) sum += u[i] * v[i];
  if (counters) ++counters->vector_vector;
  return sum;
}

/// M^e by left-to-right binary exponentiation. e = 0 yields the identity
/// and e = 1 returns M without any product.
inline BigMatrix mat_pow(const BigMatrix& m, std::uint64_t e, OpCounters* counters = nullptr) {
  if (e == 0) return BigMatrix::identity(m.size());
  int top = 63;
  while (!((e >> top) & 1U)) --top;
  BigMatrix result = m;
  for (int bit = top - 1; bit >= 0; --bit) {
    result = multiply(result, result, counters);
    if ((e >> bit) & 1U) result = multiply(result, m, counters);
  }
  return result;
}

}  // namespace regans
