#pragma once

// Command-line front end. Kept in a header so tests can drive run() in
// process with string streams.

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "regans/regans.hpp"

namespace regans::cli {

inline constexpr const char* kEpsilon = "<eps>";

enum ExitCode : int { kOk = 0, kLibraryError = 1, kUsageError = 2, kIoError = 3 };

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CliConfig {
  std::string regex;
  std::string alphabet;
  std::string dst_regex;
  std::string dst_alphabet;
  std::string word;
  std::string rank;
  std::uint32_t block_length = 0;
  std::string in_path;
  std::string out_path;
  std::size_t counts = 0;
  bool want_counts = false;
  bool dump_dfa = false;
  bool counters = false;
  bool assume_factorial = false;
  unsigned jobs = 1;
  int verbosity = 0;
};

inline std::string show_word(const std::string& w) { return w.empty() ? kEpsilon : w; }
inline std::string read_word(const std::string& w) { return w == kEpsilon ? std::string() : w; }

inline std::string read_input(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") return {std::istreambuf_iterator<char>(in), {}};
  std::ifstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open input file '" + path + "'");
  return {std::istreambuf_iterator<char>(file), {}};
}

inline void write_output(const std::string& path, std::ostream& out, const std::string& bytes) {
  if (path.empty() || path == "-") {
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file || !file.write(bytes.data(), static_cast<std::streamsize>(bytes.size()))) {
    throw IoError("cannot write output file '" + path + "'");
  }
}

inline void print_counters(std::ostream& out, const OpCounters& c) {
  out << "counters M-M=" << c.matrix_matrix << " M-V=" << c.matrix_vector << " V-V=" << c.vector_vector
      << '\n';
}

inline BigInt parse_rank(const std::string& text) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
    throw std::invalid_argument("rank must be a nonnegative decimal integer, got '" + text + "'");
  }
  return BigInt(text);
}

inline std::string format_index(double value) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(12) << value;
  return s.str();
}

inline void analyze(const CliConfig& cfg, std::ostream& out) {
  const Dfa dfa = compile(cfg.regex, OrderedAlphabet(cfg.alphabet));
  if (cfg.dump_dfa) out << dump(dfa);
  const GrowthInfo info = analyze_growth(dfa);
  out << "states " << dfa.num_states() << '\n';
  out << "growth " << to_string(info.growth_class) << '\n';
  out << "index " << format_index(info.index) << '\n';
  if (info.growth_class == GrowthClass::Finite) {
    out << "pd undefined\n";
  } else {
    out << "pd " << info.polynomial_index << '\n';
  }
  out << "scc_count " << info.scc_count << '\n';
  if (info.growth_class != GrowthClass::Finite) {
    out << "theta n^" << info.polynomial_index << " * " << format_index(info.index) << "^n\n";
  }
  if (cfg.want_counts) {
    CountCache cache(matrix_rep(dfa));
    out << "counts\n";
    for (std::size_t n = 0; n <= cfg.counts; ++n) out << cache.count(n) << '\n';
    out << "cumulative\n";
    for (std::size_t n = 0; n <= cfg.counts; ++n) out << cache.cum_count(static_cast<std::int64_t>(n)) << '\n';
  }
}

inline Ans source_ans(const CliConfig& cfg) { return Ans::from_regex(cfg.regex, cfg.alphabet); }
inline Ans destination_ans(const CliConfig& cfg) { return Ans::from_regex(cfg.dst_regex, cfg.dst_alphabet); }

inline BlockCodecConfig block_config(const CliConfig& cfg) {
  const OrderedAlphabet alphabet(cfg.alphabet);
  Dfa src = compile(cfg.regex, alphabet);
  if (!cfg.assume_factorial) src = factorial_closure(src);
  return make_block_config(Ans(src), destination_ans(cfg), cfg.block_length);
}

inline int selftest(std::ostream& out) {
  int failures = 0;
  auto check = [&](const std::string& name, bool ok) {
    out << (ok ? "PASS " : "FAIL ") << name << '\n';
    failures += ok ? 0 : 1;
  };
  const Ans fib = Ans::from_regex("(a|ba)*", "ab");
  const Ans binary = Ans::from_regex("0|1(0|1)*", "01");

  bool counts_ok = true;
  const int expected_counts[] = {1, 1, 2, 3, 5};
  for (int n = 0; n < 5; ++n) counts_ok = counts_ok && fib.count(n) == expected_counts[n];
  check("fibonacci counts", counts_ok);

  bool binary_ok = true;
  const char* expected_words[] = {"0", "1", "10", "11", "100"};
  for (int n = 0; n < 5; ++n) {
    binary_ok = binary_ok && binary.rep(n) == expected_words[n] && binary.val(expected_words[n]) == n;
  }
  check("binary system", binary_ok);

  const GrowthInfo growth = analyze_growth(fib.dfa());
  check("fibonacci index", std::abs(growth.index - 1.6180339887498949) < 1e-9 && growth.polynomial_index == 0);

  const BlockCodecConfig codec = make_block_config(Ans(factorial_closure(fib.dfa())), binary, 16);
  const std::string sample = "babaabaaababaabababaaabaababaab";
  check("block round trip", decompress(codec, compress(codec, sample)) == sample);
  return failures == 0 ? kOk : kLibraryError;
}

/// Parses argv and executes one verb. Returns the process exit code.
inline int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Abstract numeration systems on regular languages", "regans"};
  app.require_subcommand(1);
  CliConfig cfg;

  auto add_source = [&](CLI::App* sub) {
    sub->add_option("--regex,--src-regex", cfg.regex, "source language")->required();
    sub->add_option("--alphabet", cfg.alphabet, "ordered source alphabet, smallest first")->required();
  };
  auto add_destination = [&](CLI::App* sub) {
    sub->add_option("--dst-regex", cfg.dst_regex, "destination language")->required();
    sub->add_option("--dst-alphabet", cfg.dst_alphabet, "ordered destination alphabet")->required();
  };
  auto add_counters = [&](CLI::App* sub) {
    sub->add_flag("--counters", cfg.counters, "report matrix/vector product counts");
  };

  auto* analyze_cmd = app.add_subcommand("analyze", "growth class, index and counts of a language");
  add_source(analyze_cmd);
  analyze_cmd->add_option("--counts", cfg.counts, "print C(0..N) and cumulative counts")
      ->each([&](const std::string&) { cfg.want_counts = true; });
  analyze_cmd->add_flag("--dump-dfa", cfg.dump_dfa, "print the minimal DFA");

  auto* rank_cmd = app.add_subcommand("rank", "radix-order rank of a word");
  add_source(rank_cmd);
  rank_cmd->add_option("--word", cfg.word, "word, or <eps>")->required();
  add_counters(rank_cmd);

  auto* unrank_cmd = app.add_subcommand("unrank", "word of a given rank");
  add_source(unrank_cmd);
  unrank_cmd->add_option("--n", cfg.rank, "zero-based rank")->required();
  add_counters(unrank_cmd);

  auto* convert_cmd = app.add_subcommand("convert", "base conversion of a single word");
  add_source(convert_cmd);
  add_destination(convert_cmd);
  convert_cmd->add_option("--word", cfg.word, "word, or <eps>")->required();
  add_counters(convert_cmd);

  auto add_codec = [&](CLI::App* sub) {
    add_source(sub);
    add_destination(sub);
    sub->add_option("--block-len", cfg.block_length, "source block length")->required()->check(CLI::PositiveNumber);
    sub->add_option("--in", cfg.in_path, "input file (default stdin)");
    sub->add_option("--out", cfg.out_path, "output file (default stdout)");
    sub->add_flag("--assume-factorial", cfg.assume_factorial, "source language is already factorial");
    sub->add_option("--jobs", cfg.jobs, "worker threads for block conversion")->check(CLI::PositiveNumber);
  };
  auto* compress_cmd = app.add_subcommand("compress", "block compression into a frame");
  add_codec(compress_cmd);
  auto* decompress_cmd = app.add_subcommand("decompress", "inverse of compress");
  add_codec(decompress_cmd);

  auto* selftest_cmd = app.add_subcommand("selftest", "run built-in sanity checks");
  app.add_flag("-v,--verbose", cfg.verbosity, "more diagnostics");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    OpCounters counters;
    if (analyze_cmd->parsed()) {
      analyze(cfg, out);
    } else if (rank_cmd->parsed()) {
      out << source_ans(cfg).val(read_word(cfg.word), &counters) << '\n';
      if (cfg.counters) print_counters(out, counters);
    } else if (unrank_cmd->parsed()) {
      out << show_word(source_ans(cfg).rep(parse_rank(cfg.rank), &counters)) << '\n';
      if (cfg.counters) print_counters(out, counters);
    } else if (convert_cmd->parsed()) {
      const Ans src = source_ans(cfg);
      const Ans dst = destination_ans(cfg);
      out << show_word(dst.rep(src.val(read_word(cfg.word), &counters), &counters)) << '\n';
      if (cfg.counters) print_counters(out, counters);
    } else if (compress_cmd->parsed()) {
      const BlockCodecConfig codec = block_config(cfg);
      const std::string input = read_input(cfg.in_path, in);
      const Frame frame = block_compress(codec, input, cfg.jobs);
      const std::vector<std::uint8_t> bytes = encode_frame(frame, codec.dst.alphabet());
      write_output(cfg.out_path, out, std::string(bytes.begin(), bytes.end()));
      if (cfg.verbosity > 0) {
        err << "blocks " << frame.blocks.size() << " len_min " << codec.len_min << " len_max " << codec.len_max
            << " ratio " << (input.empty() ? 0.0 : block_cr(codec, frame, input.size())) << '\n';
      }
    } else if (decompress_cmd->parsed()) {
      const BlockCodecConfig codec = block_config(cfg);
      const std::string input = read_input(cfg.in_path, in);
      const std::string plain = decompress(codec, std::vector<std::uint8_t>(input.begin(), input.end()), cfg.jobs);
      write_output(cfg.out_path, out, plain);
    } else if (selftest_cmd->parsed()) {
      return selftest(out);
    }
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kLibraryError;
  }
  return kOk;
}

}  // namespace regans::cli
