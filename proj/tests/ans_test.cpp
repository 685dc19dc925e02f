#include <gtest/gtest.h>

#include <random>

#include "corpus.hpp"
#include "oracles.hpp"
#include "regans/ans.hpp"

namespace regans {
namespace {

Ans fibonacci() { return Ans::from_regex("(a|ba)*", "ab"); }
Ans binary() { return Ans::from_regex("0|1(0|1)*", "01"); }

TEST(NewAns, ValidSystems) {
  EXPECT_NO_THROW(binary());
  EXPECT_NO_THROW(fibonacci());
  const Dfa dfa = compile("(a|ba)*", OrderedAlphabet("ab"));
  EXPECT_NO_THROW(Ans(dfa, OrderedAlphabet("ab")));
  EXPECT_THROW(Ans(dfa, OrderedAlphabet("ba")), AlphabetError);
}

TEST(NewAns, RejectsFiniteAndEmptyLanguages) {
  EXPECT_THROW(Ans::from_regex("ab", "ab"), FiniteLanguageError);
  EXPECT_THROW(Ans::from_regex("", "ab"), FiniteLanguageError);
  Dfa empty(OrderedAlphabet("a"), 1);
  empty.set_initial(0);
  empty.set_transition(0, 0, 0);
  EXPECT_THROW(Ans{empty}, FiniteLanguageError);
}

TEST(RadixCmp, Examples) {
  const Ans s2 = binary();
  EXPECT_EQ(s2.radix_cmp("1", "10"), std::strong_ordering::less);
  EXPECT_EQ(s2.radix_cmp("101", "101"), std::strong_ordering::equal);
  EXPECT_EQ(fibonacci().radix_cmp("ba", "aaa"), std::strong_ordering::less);
  EXPECT_EQ(fibonacci().radix_cmp("ba", "ab"), std::strong_ordering::greater);
  EXPECT_THROW(s2.radix_cmp("2", "1"), AlphabetError);
  // The order comes from the alphabet, not from byte values.
  const OrderedAlphabet reversed("ba");
  EXPECT_EQ(radix_cmp(reversed, "ab", "ba"), std::strong_ordering::greater);
}

TEST(Val, BinaryGoldens) {
  const Ans s2 = binary();
  EXPECT_EQ(s2.val("11"), 3);
  EXPECT_EQ(s2.val("100"), 4);
}

TEST(Val, FibonacciBa) {
  // Radix-ordered members: eps, a, aa, ba.
  const auto members = oracle::members_upto("ab", 2, oracle::RegexOracle("(a|ba)*"));
  ASSERT_EQ(members, (std::vector<std::string>{"", "a", "aa", "ba"}));
  EXPECT_EQ(fibonacci().val("ba"), 3);
}

TEST(Val, MembershipErrorsAreDistinguished) {
  const Ans fib = fibonacci();
  try {
    fib.val("abba");
    FAIL();
  } catch (const MembershipError& e) {
    EXPECT_EQ(e.kind(), MembershipError::Kind::PrefixDies);
    EXPECT_EQ(e.position(), 2U);
  }
  try {
    fib.val("ab");
    FAIL();
  } catch (const MembershipError& e) {
    EXPECT_EQ(e.kind(), MembershipError::Kind::NotAccepting);
  }
  EXPECT_THROW(fib.val("ac"), AlphabetError);
}

TEST(Rep, Examples) {
  const Ans s2 = binary();
  EXPECT_EQ(s2.rep(4), "100");
  EXPECT_EQ(s2.rep(0), "0");
  EXPECT_EQ(fibonacci().rep(0), "");
  // Brute force: aaa has rank 4, aba rank 5.
  const auto members = oracle::members_upto("ab", 3, oracle::RegexOracle("(a|ba)*"));
  EXPECT_EQ(members[4], "aaa");
  EXPECT_EQ(members[5], "aba");
  EXPECT_EQ(fibonacci().rep(5), "aba");
}

TEST(Rep, SkipsZeroCountLengths) {
  const Ans even = Ans::from_regex("(aa)*", "a");
  EXPECT_EQ(even.rep(0), "");
  EXPECT_EQ(even.rep(1), "aa");
  EXPECT_EQ(even.rep(3), "aaaaaa");
  EXPECT_EQ(even.val("aaaa"), 2);
}

TEST(Rep, HugeRank) {
  const Ans s2 = binary();
  const BigInt n = (BigInt(1) << 300) + 12345;
  const std::string w = s2.rep(n);
  EXPECT_EQ(w.size(), 301U);
  EXPECT_EQ(s2.val(w), n);
  EXPECT_EQ(s2.rep_length(n), 301);
}

TEST(MaxString, Examples) {
  EXPECT_EQ(binary().max_string(2), "11");
  EXPECT_EQ(fibonacci().max_string(3), "baa");
  EXPECT_EQ(Ans::from_regex("a*", "a").max_string(5), "aaaaa");
  EXPECT_THROW(Ans::from_regex("(aa)*", "a").max_string(3), MembershipError);
}

TEST(Epsilon, RankZero) {
  for (const auto& entry : corpus()) {
    if (!entry.infinite) continue;
    const Ans ans = Ans::from_regex(entry.regex, entry.alphabet);
    if (ans.dfa().accepts("")) {
      EXPECT_EQ(ans.val(""), 0) << entry.regex;
      EXPECT_EQ(ans.rep(0), "") << entry.regex;
    }
  }
}

// Ranking and unranking are mutually inverse and agree with a radix-ordered
// brute-force enumeration of every member of length <= 8.
TEST(Bijection, MatchesEnumeration) {
  for (const auto& entry : corpus()) {
    if (!entry.infinite) continue;
    const Ans ans = Ans::from_regex(entry.regex, entry.alphabet);
    const oracle::RegexOracle reference(entry.regex);
    const std::size_t max_len = entry.alphabet.size() > 4 ? 6 : 8;
    const auto members = oracle::members_upto(entry.alphabet, max_len, reference);
    for (std::size_t i = 0; i < members.size(); ++i) {
      ASSERT_EQ(ans.val(members[i]), static_cast<unsigned long>(i)) << entry.regex << " " << members[i];
      ASSERT_EQ(ans.rep(static_cast<unsigned long>(i)), members[i]) << entry.regex;
    }
  }
}

TEST(Bijection, RangeLawAndOrder) {
  std::mt19937_64 rng(11);
  for (const auto& entry : corpus()) {
    if (!entry.infinite) continue;
    const Ans ans = Ans::from_regex(entry.regex, entry.alphabet);
    std::string previous;
    for (unsigned long n = 0; n < 500; ++n) {
      const std::string w = ans.rep(n);
      const auto len = static_cast<std::int64_t>(w.size());
      EXPECT_LE(ans.cum_count(len - 1), n);
      EXPECT_LT(n, ans.cum_count(len));
      if (n > 0) {
        ASSERT_EQ(ans.radix_cmp(previous, w), std::strong_ordering::less) << entry.regex;
      }
      previous = w;
    }
    std::uniform_int_distribution<unsigned long> pick(0, 50000);
    for (int i = 0; i < 50; ++i) {
      unsigned long m = pick(rng), n = pick(rng);
      if (m == n) continue;
      if (m > n) std::swap(m, n);
      EXPECT_EQ(ans.radix_cmp(ans.rep(m), ans.rep(n)), std::strong_ordering::less) << entry.regex;
    }
  }
}

// Counting convention: a fresh val(w) does |w| - 1 matrix-vector products
// and one vector-vector product.
TEST(Val, InstrumentedCost) {
  for (std::size_t len : {1U, 2U, 10U, 200U}) {
    const Ans fib = fibonacci();
    const std::string w = fib.max_string(len);
    const Ans fresh = fibonacci();
    OpCounters counters;
    fresh.val(w, &counters);
    EXPECT_EQ(counters.matrix_vector, len - 1) << len;
    EXPECT_EQ(counters.vector_vector, 1U) << len;
    EXPECT_EQ(counters.matrix_matrix, 0U) << len;
  }
}

TEST(Ans, CopiesShareTheCache) {
  const Ans a = fibonacci();
  const Ans b = a;
  a.count(40);
  EXPECT_EQ(&a.cache(), &b.cache());
  EXPECT_EQ(b.cache().high_water(), 40U);
}

}  // namespace
}  // namespace regans
