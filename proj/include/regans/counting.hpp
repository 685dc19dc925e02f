#pragma once

#include <cstddef>
#include <cstdint>
#include <deque>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "regans/automata.hpp"
#include "regans/error.hpp"
#include "regans/matrix.hpp"

namespace regans {

/// Adjacency matrix of a trim DFA plus its initial (row) and accepting
/// (column) indicator vectors. M(p, q) counts the symbols leading p to q.
struct MatrixRep {
  BigMatrix adjacency;
  BigVector initial;
  BigVector accepting;

  std::size_t size() const noexcept { return adjacency.size(); }
};

inline MatrixRep matrix_rep(const Dfa& dfa) {
  require_trim(dfa);
  const std::size_t n = dfa.num_states();
  MatrixRep rep{BigMatrix(n), BigVector(n), BigVector(n)};
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t s = 0; s < dfa.num_symbols(); ++s) {
      StateId q = dfa.next(static_cast<StateId>(p), static_cast<int>(s));
      if (q != kNoState) rep.adjacency(p, q) += 1;
    }
    rep.accepting[p] = dfa.is_accepting(static_cast<StateId>(p)) ? 1 : 0;
  }
  if (!dfa.is_empty_language()) rep.initial[dfa.initial()] = 1;
  return rep;
}

/// Incrementally grown ladder of suffix-count vectors u_k = M^k V_F and
/// their running sums s_k = u_0 + ... + u_k, with memoized
/// C(n) = V_I . u_n and C<=(n) = V_I . s_n.
///
/// Extension is serialized by a mutex. Entries are never modified once
/// appended and the deques keep references stable, so a reference returned
/// by suffix_counts() stays valid while other threads extend the cache.
///
/// Counting convention: u_0 = V_F and every s_k cost nothing (additions
/// only); each new u_k is one matrix-vector product; each first evaluation
/// of count() or cum_count() is one vector-vector product.
class CountCache {
 public:
  explicit CountCache(MatrixRep rep) : rep_(std::move(rep)) {
    suffix_.push_back(rep_.accepting);
    prefix_sum_.push_back(rep_.accepting);
    count_.emplace_back();
    cum_.emplace_back();
  }

  CountCache(const CountCache&) = delete;
  CountCache& operator=(const CountCache&) = delete;

  const MatrixRep& matrix() const noexcept { return rep_; }

  /// Largest k with u_k cached.
  std::size_t high_water() const {
    std::lock_guard lock(mutex_);
    return suffix_.size() - 1;
  }

  /// Number of accepted length-k continuations from every state.
  const BigVector& suffix_counts(std::size_t k, OpCounters* counters = nullptr) {
    std::lock_guard lock(mutex_);
    extend(k, counters);
    return suffix_[k];
  }

  /// C(n): number of accepted words of length n.
  BigInt count(std::size_t n, OpCounters* counters = nullptr) {
    std::lock_guard lock(mutex_);
    extend(n, counters);
    if (!count_[n]) count_[n] = dot(rep_.initial, suffix_[n], counters);
    return *count_[n];
  }

  /// C<=(n) = C(0) + ... + C(n); zero for n = -1.
  BigInt cum_count(std::int64_t n, OpCounters* counters = nullptr) {
    if (n < 0) return 0;
    std::lock_guard lock(mutex_);
    return cum_at(static_cast<std::size_t>(n), counters);
  }

  /// Smallest l with C<=(l) > n, by galloping then bisection over the
  /// ladder. Only terminates for infinite languages.
  std::size_t shortest_length_above(const BigInt& n, OpCounters* counters = nullptr) {
    std::lock_guard lock(mutex_);
    std::size_t lo = 0, hi = 0;
    while (cum_at(hi, counters) <= n) {
      lo = hi + 1;
      hi = 2 * hi + 1;
    }
    while (lo < hi) {
      const std::size_t mid = lo + (hi - lo) / 2;
      if (cum_at(mid, counters) <= n) {
        lo = mid + 1;
      } else {
        hi = mid;
      }
    }
    return lo;
  }

  /// Pointers to u_0 .. u_k, taken under one lock.
  std::vector<const BigVector*> ladder(std::size_t k, OpCounters* counters = nullptr) {
    std::lock_guard lock(mutex_);
    extend(k, counters);
    std::vector<const BigVector*> out(k + 1);
    for (std::size_t i = 0; i <= k; ++i) out[i] = &suffix_[i];
    return out;
  }

 private:
  const BigInt& cum_at(std::size_t k, OpCounters* counters) {
    extend(k, counters);
    if (!cum_[k]) cum_[k] = dot(rep_.initial, prefix_sum_[k], counters);
    return *cum_[k];
  }

  void extend(std::size_t k, OpCounters* counters) {
    while (suffix_.size() <= k) {
      BigVector next = multiply(rep_.adjacency, suffix_.back(), counters);
      BigVector sum = prefix_sum_.back();
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += next[i];
      suffix_.push_back(std::move(next));
      prefix_sum_.push_back(std::move(sum));
      count_.emplace_back();
      cum_.emplace_back();
    }
  }

  MatrixRep rep_;
  mutable std::mutex mutex_;
  std::deque<BigVector> suffix_;
  std::deque<BigVector> prefix_sum_;
  std::deque<std::optional<BigInt>> count_;
  std::deque<std::optional<BigInt>> cum_;
};

/// C(n) = V_I M^n V_F evaluated through mat_pow, independently of the
/// cached ladder.
inline BigInt count_by_power(const MatrixRep& rep, std::uint64_t n, OpCounters* counters = nullptr) {
  return dot(multiply(rep.initial, mat_pow(rep.adjacency, n, counters), counters), rep.accepting, counters);
}

/// Smallest length l with C<=(l) > n, found by repeated squaring of the
/// augmented matrix B = [[M, V_F], [0, 1]], for which
/// (V_I, 0) B^k (V_F, 1)^T = C<=(k). Costs O(log l) matrix products, so it
/// works for lengths far beyond what the ladder could hold. The language
/// must be infinite.
inline BigInt length_for_rank(const MatrixRep& rep, const BigInt& n, OpCounters* counters = nullptr) {
  const std::size_t d = rep.size();
  BigMatrix step(d + 1);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) step(i, j) = rep.adjacency(i, j);
    step(i, d) = rep.accepting[i];
  }
  step(d, d) = 1;
  BigVector row(d + 1), column(d + 1);
  for (std::size_t i = 0; i < d; ++i) {
    row[i] = rep.initial[i];
    column[i] = rep.accepting[i];
  }
  column[d] = 1;

  if (dot(row, column, counters) > n) return 0;
  // powers[j] = B^(2^j); grow until C<=(2^j) > n.
  std::vector<BigMatrix> powers{step};
  while (dot(multiply(row, powers.back(), counters), column, counters) <= n) {
    if (powers.size() > 4096) throw FiniteLanguageError("rank exceeds the language size");
    powers.push_back(multiply(powers.back(), powers.back(), counters));
  }
  // Largest k < 2^j with C<=(k) <= n, built from the high bit down.
  BigInt k = 0;
  BigVector prefix = row;  // row * B^k
  for (std::size_t j = powers.size() - 1; j-- > 0;) {
    BigVector candidate = multiply(prefix, powers[j], counters);
    if (dot(candidate, column, counters) <= n) {
      prefix = std::move(candidate);
      k += BigInt(1) << static_cast<mp_bitcnt_t>(j);
    }
  }
  return k + 1;
}

}  // namespace regans
