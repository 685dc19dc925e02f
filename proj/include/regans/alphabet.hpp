#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "regans/error.hpp"

namespace regans {

using Symbol = std::uint8_t;

/// A totally ordered finite set of byte symbols. Declaration order is the
/// order: index 0 is the smallest symbol.
class OrderedAlphabet {
 public:
  static constexpr int kAbsent = -1;

  explicit OrderedAlphabet(std::string_view symbols) {
    if (symbols.empty()) throw AlphabetError("alphabet must not be empty");
    if (symbols.size() > 256) throw AlphabetError("alphabet has more than 256 symbols");
    index_.fill(kAbsent);
    for (char c : symbols) {
      auto s = static_cast<Symbol>(c);
      if (index_[s] != kAbsent) {
        throw AlphabetError(std::string("duplicate symbol '") + c + "' in alphabet");
      }
      index_[s] = static_cast<int>(symbols_.size());
      symbols_.push_back(s);
    }
  }

  std::size_t size() const noexcept { return symbols_.size(); }

  bool contains(Symbol s) const noexcept { return index_[s] != kAbsent; }

  /// Position of `s` in the order.
  int index_of(Symbol s) const {
    if (index_[s] == kAbsent) {
      throw AlphabetError("symbol " + describe(s) + " is not in the alphabet");
    }
    return index_[s];
  }

  Symbol symbol_at(std::size_t index) const { return symbols_.at(index); }

  const std::vector<Symbol>& symbols() const noexcept { return symbols_; }

  std::string to_string() const { return {symbols_.begin(), symbols_.end()}; }

  /// Maps a word to its symbol indices, rejecting foreign symbols.
  std::vector<int> indices(std::string_view word) const {
    std::vector<int> out;
    out.reserve(word.size());
    for (char c : word) out.push_back(index_of(static_cast<Symbol>(c)));
    return out;
  }

  std::strong_ordering compare(Symbol a, Symbol b) const {
    return index_of(a) <=> index_of(b);
  }

  bool operator==(const OrderedAlphabet& other) const { return symbols_ == other.symbols_; }

  static std::string describe(Symbol s) {
    if (s >= 0x20 && s < 0x7f) return std::string("'") + static_cast<char>(s) + "'";
    static constexpr char kHex[] = "0123456789abcdef";
    return std::string("0x") + kHex[s >> 4] + kHex[s & 0xf];
  }

 private:
  std::vector<Symbol> symbols_;
  std::array<int, 256> index_{};
};

/// Radix (length-lexicographic) order: shorter words first, equal lengths
/// compared symbol by symbol in alphabet order.
inline std::strong_ordering radix_cmp(const OrderedAlphabet& alphabet, std::string_view u,
                                      std::string_view v) {
  auto iu = alphabet.indices(u);
  auto iv = alphabet.indices(v);
  if (iu.size() != iv.size()) return iu.size() <=> iv.size();
  return iu <=> iv;
}

}  // namespace regans
