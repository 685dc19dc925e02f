#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "regans/alphabet.hpp"
#include "regans/automata.hpp"
#include "regans/counting.hpp"
#include "regans/error.hpp"

namespace regans {

/// Abstract numeration system: an infinite regular language over an ordered
/// alphabet, whose words are numbered 0, 1, 2, ... in radix order.
///
/// Copies share one CountCache; the cache serializes its own growth, so an
/// Ans may be used from several threads.
class Ans {
 public:
  explicit Ans(const Dfa& dfa) : dfa_(dfa.is_trim() ? dfa : trim(dfa)) {
    if (dfa_.is_empty_language()) throw FiniteLanguageError("language is empty");
    if (!is_infinite(dfa_)) throw FiniteLanguageError("language is finite");
    cache_ = std::make_shared<CountCache>(matrix_rep(dfa_));
  }

  Ans(const Dfa& dfa, const OrderedAlphabet& alphabet) : Ans(dfa) {
    if (!(dfa.alphabet() == alphabet)) throw AlphabetError("automaton is over a different alphabet");
  }

  static Ans from_regex(std::string_view regex, std::string_view alphabet) {
    return Ans(compile(regex, OrderedAlphabet(alphabet)));
  }

  const Dfa& dfa() const noexcept { return dfa_; }
  const OrderedAlphabet& alphabet() const noexcept { return dfa_.alphabet(); }
  CountCache& cache() const noexcept { return *cache_; }

  BigInt count(std::size_t n, OpCounters* counters = nullptr) const { return cache_->count(n, counters); }
  BigInt cum_count(std::int64_t n, OpCounters* counters = nullptr) const {
    return cache_->cum_count(n, counters);
  }

  /// Throws MembershipError unless `word` is in the language.
  void check_member(std::string_view word) const {
    const std::vector<int> symbols = alphabet().indices(word);
    StateId q = dfa_.initial();
    for (std::size_t i = 0; i < symbols.size(); ++i) {
      q = dfa_.next(q, symbols[i]);
      if (q == kNoState) {
        throw MembershipError(MembershipError::Kind::PrefixDies, i,
                              "word leaves the language at offset " + std::to_string(i));
      }
    }
    if (!dfa_.is_accepting(q)) {
      throw MembershipError(MembershipError::Kind::NotAccepting, symbols.size(),
                            "word ends in a non-accepting state");
    }
  }

  /// Zero-based radix-order rank of `word`: all shorter words, plus for each
  /// position the completions of every smaller symbol that keeps the run
  /// alive. Costs |word| - 1 matrix-vector and one vector-vector product on
  /// a cold cache.
  BigInt val(std::string_view word, OpCounters* counters = nullptr) const {
    check_member(word);
    const std::vector<int> symbols = alphabet().indices(word);
    const std::size_t len = symbols.size();
    BigInt rank = 0;
    StateId q = dfa_.initial();
    for (std::size_t i = 0; i < len; ++i) {
      const std::size_t remaining = len - 1 - i;
      const BigVector* completions = nullptr;
      for (int s = 0; s < symbols[i]; ++s) {
        StateId t = dfa_.next(q, s);
        if (t == kNoState) continue;
        if (!completions) completions = &cache_->suffix_counts(remaining, counters);
        rank += (*completions)[t];
      }
      q = dfa_.next(q, symbols[i]);
    }
    return cache_->cum_count(static_cast<std::int64_t>(len) - 1, counters) + rank;
  }

  /// The (n+1)-th word of the language in radix order.
  std::string rep(const BigInt& n, OpCounters* counters = nullptr) const {
    if (sgn(n) < 0) throw std::invalid_argument("rank must be nonnegative");
    const std::size_t len = cache_->shortest_length_above(n, counters);
    BigInt offset = n - cache_->cum_count(static_cast<std::int64_t>(len) - 1, counters);

    std::string word;
    word.reserve(len);
    if (len == 0) return word;
    const auto ladder = cache_->ladder(len - 1, counters);
    StateId q = dfa_.initial();
    for (std::size_t i = 0; i < len; ++i) {
      const BigVector& completions = *ladder[len - 1 - i];
      for (std::size_t s = 0;; ++s) {
        // offset < C(len) guarantees some symbol's block contains it.
        StateId t = dfa_.next(q, static_cast<int>(s));
        if (t == kNoState) continue;
        if (offset < completions[t]) {
          word.push_back(static_cast<char>(alphabet().symbol_at(s)));
          q = t;
          break;
        }
        offset -= completions[t];
      }
    }
    return word;
  }

  /// |rep(n)| without building the word; repeated squaring, so this works
  /// for ranks whose representation is astronomically long.
  BigInt rep_length(const BigInt& n, OpCounters* counters = nullptr) const {
    return length_for_rank(cache_->matrix(), n, counters);
  }

  /// Radix-greatest word of length n.
  std::string max_string(std::size_t n) const {
    if (sgn(count(n)) == 0) throw MembershipError(MembershipError::Kind::NotAccepting, n,
                                                  "no word of length " + std::to_string(n));
    return rep(cum_count(static_cast<std::int64_t>(n)) - 1);
  }

  std::strong_ordering radix_cmp(std::string_view u, std::string_view v) const {
    return regans::radix_cmp(alphabet(), u, v);
  }

 private:
  Dfa dfa_;
  std::shared_ptr<CountCache> cache_;
};

}  // namespace regans
