// One PASS/FAIL line per acceptance criterion. Exit status is nonzero when
// any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "regans/regans.hpp"

namespace {

using namespace regans;

struct Outcome {
  bool ok = true;
  std::string detail;
};

const double kPhi = (1.0 + std::sqrt(5.0)) / 2.0;
const double kFibToBinary = std::log(kPhi) / std::log(2.0);

Outcome fail(std::string why) { return {false, std::move(why)}; }

std::string fmt(double x, int digits = 6) {
  std::ostringstream s;
  s.precision(digits);
  s << std::fixed << x;
  return s.str();
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Outcome fibonacci_counts() {
  const auto start = std::chrono::steady_clock::now();
  const Ans fib = Ans::from_regex("(a|ba)*", "ab");
  const int first[] = {1, 1, 2, 3, 5};
  for (int n = 0; n < 5; ++n) {
    if (fib.count(n) != first[n]) return fail("count(" + std::to_string(n) + ")");
  }
  for (unsigned n = 0; n <= 40; ++n) {
    if (fib.count(n) != static_cast<unsigned long>(oracle::fibonacci(n + 1))) {
      return fail("count(" + std::to_string(n) + ") != F(" + std::to_string(n + 1) + ")");
    }
  }
  const double t = seconds_since(start);
  if (t >= 1.0) return fail("took " + fmt(t, 3) + " s");
  return {true, "count(40) = " + fib.count(40).get_str() + ", " + fmt(t, 4) + " s"};
}

Outcome index_values() {
  const Dfa fib = compile("(a|ba)*", OrderedAlphabet("ab"));
  const Dfa poly = compile("[ab]*[cd]*[ef]+", OrderedAlphabet("abcdef"));
  const auto [fib_index, fib_class] = index(fib);
  const auto [poly_index, poly_class] = index(poly);
  if (fib_class != GrowthClass::Exponential) return fail("fibonacci class " + to_string(fib_class));
  if (std::abs(fib_index - 1.6180339887) > 1e-6) return fail("fibonacci index " + fmt(fib_index, 12));
  if (std::abs(poly_index - 2.0) > 1e-9) return fail("chain index " + fmt(poly_index, 12));
  const int fib_pd = polynomial_index(fib);
  const int poly_pd = polynomial_index(poly);
  if (fib_pd != 0 || poly_pd != 2) return fail("pd " + std::to_string(fib_pd) + ", " + std::to_string(poly_pd));
  return {true, "index " + fmt(fib_index, 10) + " and " + fmt(poly_index, 10) + ", pd 0 and 2"};
}

Outcome binary_goldens() {
  const Ans s2 = Ans::from_regex("0|1(0|1)*", "01");
  const std::vector<std::string> expected = {"0", "1", "10", "11", "100"};
  for (unsigned long n = 0; n < expected.size(); ++n) {
    if (s2.rep(n) != expected[n]) return fail("rep(" + std::to_string(n) + ") = " + s2.rep(n));
    if (s2.val(expected[n]) != n) return fail("val(" + expected[n] + ")");
  }
  return {true, "rep(0..4) = 0 1 10 11 100"};
}

Outcome bijection_and_order() {
  const auto start = std::chrono::steady_clock::now();
  std::size_t languages = 0, members_checked = 0;
  for (const auto& entry : corpus()) {
    if (!entry.infinite) continue;
    ++languages;
    const Ans ans = Ans::from_regex(entry.regex, entry.alphabet);
    std::string previous;
    for (unsigned long n = 0; n <= 10000; ++n) {
      const std::string w = ans.rep(n);
      if (ans.val(w) != n) return fail(entry.regex + ": val(rep(" + std::to_string(n) + "))");
      if (n > 0 && ans.radix_cmp(previous, w) != std::strong_ordering::less) {
        return fail(entry.regex + ": rep not increasing at " + std::to_string(n));
      }
      previous = w;
    }
    const oracle::RegexOracle member(entry.regex);
    const auto members =
        entry.prefixes.empty()
            ? oracle::members_upto(entry.alphabet, 10, member)
            : oracle::members_upto_pruned(entry.alphabet, 10, oracle::RegexOracle(entry.prefixes), member);
    for (std::size_t i = 0; i < members.size(); ++i) {
      const BigInt rank = ans.val(members[i]);
      if (rank != static_cast<unsigned long>(i)) return fail(entry.regex + ": rank of " + members[i]);
      if (ans.rep(rank) != members[i]) return fail(entry.regex + ": rep(val(" + members[i] + "))");
    }
    members_checked += members.size();
  }
  const double t = seconds_since(start);
  if (languages < 8) return fail("only " + std::to_string(languages) + " languages");
  if (t >= 30.0) return fail("took " + fmt(t, 2) + " s");
  return {true, std::to_string(languages) + " languages, " + std::to_string(members_checked) + " members, " +
                    fmt(t, 2) + " s"};
}

Outcome val_cost() {
  const std::size_t len = 1000;
  const std::string w = Ans::from_regex("(a|ba)*", "ab").max_string(len);
  const Ans fresh = Ans::from_regex("(a|ba)*", "ab");
  OpCounters counters;
  fresh.val(w, &counters);
  if (counters.matrix_vector != len - 1 || counters.vector_vector != 1 || counters.matrix_matrix != 0) {
    return fail("M-M=" + std::to_string(counters.matrix_matrix) + " M-V=" + std::to_string(counters.matrix_vector) +
                " V-V=" + std::to_string(counters.vector_vector));
  }
  return {true, "M-V=999 V-V=1"};
}

Outcome ratio_convergence() {
  const auto start = std::chrono::steady_clock::now();
  const Converter cv(Ans::from_regex("(a|ba)*", "ab"), Ans::from_regex("0|1(0|1)*", "01"));
  // Output lengths are integers, so the error is a sawtooth in n; it must
  // shrink along the doublings from 100 to 400.
  double previous_error = 1e300;
  std::string trace;
  for (std::size_t n : {100U, 200U, 400U}) {
    const double error = std::abs(cv.measure_cr_at(n) - kFibToBinary);
    trace += " " + std::to_string(n) + ":" + fmt(error, 4);
    if (error >= previous_error) return fail("error grew at n=" + std::to_string(n) + trace);
    previous_error = error;
  }
  const double t = seconds_since(start);
  if (previous_error >= 0.02) return fail("error at 400 is " + fmt(previous_error, 4));
  if (t >= 30.0) return fail("took " + fmt(t, 2) + " s");
  return {true, "error" + trace};
}

Outcome divergence_and_zero_limit() {
  const Converter to_linear(Ans::from_regex("0|1(0|1)*", "01"), Ans::from_regex("a*b*", "ab"));
  const double cr50 = to_linear.measure_cr_at(50);
  const double cr400 = to_linear.measure_cr_at(400);
  if (!(cr400 > 4 * cr50)) return fail("CR(400)=" + fmt(cr400, 3) + " CR(50)=" + fmt(cr50, 3));
  const Converter to_quadratic(Ans::from_regex("a*b*", "ab"), Ans::from_regex("a*b*c*", "abc"));
  const double zero = to_quadratic.measure_cr_at(400);
  if (!(zero < 0.25)) return fail("polynomial CR(400)=" + fmt(zero, 4));
  std::ostringstream growth;
  growth.precision(3);
  growth << cr400 / cr50;
  return {true, "CR(400)/CR(50) = " + growth.str() + ", polynomial CR(400) = " + fmt(zero, 4)};
}

std::string random_factor_of_fibonacci(std::size_t length) {
  std::mt19937_64 rng(2024);
  std::bernoulli_distribution b(0.38);
  std::string w;
  while (w.size() < length) w += (!w.empty() && w.back() == 'b') || !b(rng) ? 'a' : 'b';
  return w;
}

Outcome block_compression() {
  const Ans src_fact(factorial_closure(compile("(a|ba)*", OrderedAlphabet("ab"))));
  const Ans dst = Ans::from_regex("0|1(0|1)*", "01");
  const std::string w = random_factor_of_fibonacci(16384);
  double previous_gap = 1e300;
  std::string trace;
  for (std::uint32_t len : {16U, 64U, 256U}) {
    const BlockCodecConfig cfg = make_block_config(src_fact, dst, len);
    const std::vector<std::uint8_t> bytes = compress(cfg, w, 4);
    if (decompress(cfg, bytes, 4) != w) return fail("round trip at block length " + std::to_string(len));
    const double gap = std::abs(block_cr(cfg, decode_frame(bytes, dst.alphabet()), w.size()) - kFibToBinary);
    trace += " " + std::to_string(len) + ":" + fmt(gap, 4);
    if (gap >= previous_gap) return fail("gap not shrinking" + trace);
    previous_gap = gap;
  }
  if (previous_gap >= 0.05) return fail("gap at 256 is " + fmt(previous_gap, 4));
  return {true, "gap" + trace};
}

Outcome factorial_closure_checks() {
  const OrderedAlphabet ab("ab");
  const Dfa fact = factorial_closure(compile("(a|ba)*", ab));
  std::size_t words = 0;
  for (std::size_t n = 0; n <= 10; ++n) {
    for (const auto& w : oracle::words_of_length("ab", n)) {
      const bool expected = w.find("bb") == std::string::npos;
      if (accepts(fact, w) != expected) return fail("closure disagrees on '" + w + "'");
      ++words;
    }
  }
  for (const auto& entry : corpus()) {
    const OrderedAlphabet alphabet(entry.alphabet);
    const Dfa dfa = compile(entry.regex, alphabet);
    const auto [idx, cls] = index(dfa);
    const auto [fact_idx, fact_cls] = index(factorial_closure(dfa));
    if (cls != fact_cls) return fail(entry.regex + ": " + to_string(cls) + " vs " + to_string(fact_cls));
    if (std::abs(idx - fact_idx) > 1e-6) return fail(entry.regex + ": index " + fmt(idx) + " vs " + fmt(fact_idx));
  }
  return {true, std::to_string(words) + " words, " + std::to_string(corpus().size()) + " languages"};
}

Outcome golden_frames() {
  for (const auto& f : golden_fixtures()) {
    const auto frame = read_bytes(f.frame_path());
    const auto plain = read_bytes(f.plain_path());
    if (frame.empty() || plain.empty()) return fail(f.name + ": missing fixture");
    const BlockCodecConfig cfg = f.config();
    const std::string text(plain.begin(), plain.end());
    if (decompress(cfg, frame) != text) return fail(f.name + ": decode");
    if (compress(cfg, text) != frame) return fail(f.name + ": re-encode");
  }
  return {true, std::to_string(golden_fixtures().size()) + " frames"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"fibonacci counts", fibonacci_counts},
      {"index values", index_values},
      {"binary goldens", binary_goldens},
      {"bijection and order", bijection_and_order},
      {"val cost", val_cost},
      {"ratio convergence", ratio_convergence},
      {"divergence and zero limit", divergence_and_zero_limit},
      {"block compression", block_compression},
      {"factorial closure", factorial_closure_checks},
      {"golden frames", golden_frames},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome outcome;
    try {
      outcome = criteria[i].second();
    } catch (const std::exception& e) {
      outcome = fail(std::string("exception: ") + e.what());
    }
    failures += !outcome.ok;
    std::printf("%s [%zu] %s: %s\n", outcome.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                outcome.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
