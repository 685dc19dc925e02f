#pragma once

#include <fstream>
#include <iterator>
#include <string>
#include <vector>

#include "regans/codec.hpp"

#ifndef REGANS_TEST_DATA
#error "REGANS_TEST_DATA must point at tests/data"
#endif

// Committed frame files and the plaintexts they decode to. The same
// parameters appear in tests/data/README.md as CLI invocations.
struct GoldenFixture {
  std::string name;
  std::string src_regex;
  std::string src_alphabet;
  std::string dst_regex;
  std::string dst_alphabet;
  std::uint32_t block_length;

  std::string plain_path() const { return std::string(REGANS_TEST_DATA) + "/" + name + ".txt"; }
  std::string frame_path() const { return std::string(REGANS_TEST_DATA) + "/" + name + ".ansc"; }

  regans::BlockCodecConfig config() const {
    const regans::Dfa src = regans::factorial_closure(regans::compile(src_regex, regans::OrderedAlphabet(src_alphabet)));
    return regans::make_block_config(regans::Ans(src), regans::Ans::from_regex(dst_regex, dst_alphabet), block_length);
  }
};

inline const std::vector<GoldenFixture>& golden_fixtures() {
  static const std::vector<GoldenFixture> fixtures = {
      {"fibonacci_to_binary", "(a|ba)*", "ab", "0|1(0|1)*", "01", 8},
      {"bits_to_fibonacci", "(0|1)*", "01", "(a|ba)*", "ab", 16},
      {"text_to_hex", "[a-z ]*", " abcdefghijklmnopqrstuvwxyz", "[0-9a-f]*", "0123456789abcdef", 32},
  };
  return fixtures;
}

inline std::vector<std::uint8_t> read_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}
