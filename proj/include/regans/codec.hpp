#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "regans/ans.hpp"
#include "regans/automata.hpp"
#include "regans/error.hpp"

namespace regans {

/// Base conversion: the word of `dst` with the same rank as the input word
/// has in `src`.
class Converter {
 public:
  Converter(Ans src, Ans dst) : src_(std::move(src)), dst_(std::move(dst)) {}

  const Ans& src() const noexcept { return src_; }
  const Ans& dst() const noexcept { return dst_; }

  Converter reversed() const { return Converter(dst_, src_); }

  std::string convert(std::string_view word) const { return dst_.rep(src_.val(word)); }

  /// |convert(word)| / |word|.
  double measure_cr(std::string_view word) const {
    if (word.empty()) throw std::invalid_argument("compression ratio of the empty word");
    return to_double(dst_.rep_length(src_.val(word))) / static_cast<double>(word.size());
  }

  /// Compression ratio of the radix-greatest source word of length n. That
  /// word has rank C<=(n) - 1, so it is never materialized.
  double measure_cr_at(std::size_t n) const {
    if (n == 0 || sgn(src_.count(n)) == 0) {
      throw MembershipError(MembershipError::Kind::NotAccepting, n,
                            "no source word of length " + std::to_string(n));
    }
    const BigInt rank = src_.cum_count(static_cast<std::int64_t>(n)) - 1;
    return to_double(dst_.rep_length(rank)) / static_cast<double>(n);
  }

 private:
  static double to_double(const BigInt& x) { return x.get_d(); }

  Ans src_;
  Ans dst_;
};

/// Parameters shared by block compressor and decompressor. Every block of
/// `block_length` source symbols converts to a destination word whose length
/// lies in [len_min, len_max].
struct BlockCodecConfig {
  std::uint32_t block_length = 0;
  Ans src_fact;
  Ans dst;
  std::uint32_t len_min = 0;
  std::uint32_t len_max = 0;
  std::uint32_t len_field_bits = 0;
};

/// Bits needed to store a value in [0, range).
inline std::uint32_t bits_for_range(std::uint64_t range) {
  std::uint32_t bits = 0;
  while (bits < 64 && (std::uint64_t{1} << bits) < range) ++bits;
  return bits;
}

/// Ranks of length-l source words form the interval
/// [C<=(l-1), C<=(l) - 1] and rep is monotone, so the image lengths of its
/// two ends bound every block.
inline BlockCodecConfig make_block_config(const Ans& src_fact, const Ans& dst, std::uint32_t block_length) {
  if (block_length == 0) throw std::invalid_argument("block length must be positive");
  if (!is_factorial(src_fact.dfa())) throw AutomatonError("block source language is not factorial");
  if (sgn(src_fact.count(block_length)) == 0) {
    throw FiniteLanguageError("source language has no word of the block length");
  }
  const BigInt lo = dst.rep_length(src_fact.cum_count(static_cast<std::int64_t>(block_length) - 1));
  const BigInt hi = dst.rep_length(src_fact.cum_count(block_length) - 1);
  if (!hi.fits_ulong_p() || hi > 0xffffffffUL) throw std::overflow_error("converted block too long");
  BlockCodecConfig cfg{block_length, src_fact, dst, static_cast<std::uint32_t>(lo.get_ui()),
                       static_cast<std::uint32_t>(hi.get_ui()), 0};
  cfg.len_field_bits = bits_for_range(std::uint64_t{cfg.len_max} - cfg.len_min + 1);
  return cfg;
}

/// Logical content of a compressed frame.
struct Frame {
  static constexpr char kMagic[4] = {'A', 'N', 'S', 'C'};
  static constexpr std::uint8_t kVersion = 1;

  std::uint32_t block_length = 0;
  std::uint32_t len_min = 0;
  std::uint32_t len_field_bits = 0;
  /// Converted blocks, as destination words.
  std::vector<std::string> blocks;
  /// Trailing source symbols that do not fill a block, stored raw.
  std::string tail;

  bool operator==(const Frame&) const = default;
};

/// A source block outside the factorial language.
class BlockError : public Error {
 public:
  BlockError(std::size_t block, std::size_t offset)
      : Error("block " + std::to_string(block) + " leaves the source language at input offset " +
              std::to_string(offset)),
        block_(block),
        offset_(offset) {}

  std::size_t block() const noexcept { return block_; }
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t block_;
  std::size_t offset_;
};

namespace detail {

template <typename Fn>
void for_each_block(std::size_t count, unsigned jobs, Fn&& fn) {
  jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (jobs == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::jthread> workers;
  std::vector<std::exception_ptr> errors(jobs);
  for (unsigned j = 0; j < jobs; ++j) {
    workers.emplace_back([&, j] {
      try {
        for (std::size_t i = j; i < count; i += jobs) fn(i);
      } catch (...) {
        errors[j] = std::current_exception();
      }
    });
  }
  workers.clear();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

// Offset within `piece` of the first symbol on which the run dies, or
// piece.size() if the piece is accepted. Every state of a trim automaton
// for a factorial language is accepting, so a rejected piece always dies.
inline std::size_t first_rejected(const Dfa& dfa, std::string_view piece) {
  StateId q = dfa.initial();
  for (std::size_t i = 0; i < piece.size(); ++i) {
    const auto s = static_cast<Symbol>(piece[i]);
    if (!dfa.alphabet().contains(s)) return i;
    q = dfa.next(q, dfa.alphabet().index_of(s));
    if (q == kNoState) return i;
  }
  return dfa.is_accepting(q) ? piece.size() : 0;
}

}  // namespace detail

/// Splits `input` into blocks of cfg.block_length symbols and converts each.
/// The whole input is validated before any conversion happens.
inline Frame block_compress(const BlockCodecConfig& cfg, std::string_view input, unsigned jobs = 1) {
  const std::size_t ell = cfg.block_length;
  const std::size_t m = input.size() / ell;
  for (std::size_t i = 0; i <= m; ++i) {
    const std::string_view piece = input.substr(i * ell, i < m ? ell : std::string_view::npos);
    const std::size_t bad = detail::first_rejected(cfg.src_fact.dfa(), piece);
    if (bad != piece.size()) throw BlockError(i, i * ell + bad);
  }
  Frame frame{cfg.block_length, cfg.len_min, cfg.len_field_bits, std::vector<std::string>(m),
              std::string(input.substr(m * ell))};
  if (m > 0) {
    // Warm both caches so workers mostly read.
    cfg.src_fact.cum_count(static_cast<std::int64_t>(ell));
    cfg.dst.cum_count(cfg.len_max);
  }
  detail::for_each_block(m, jobs, [&](std::size_t i) {
    frame.blocks[i] = cfg.dst.rep(cfg.src_fact.val(input.substr(i * ell, ell)));
  });
  return frame;
}

inline std::string block_decompress(const BlockCodecConfig& cfg, const Frame& frame, unsigned jobs = 1) {
  if (frame.block_length != cfg.block_length || frame.len_min != cfg.len_min ||
      frame.len_field_bits != cfg.len_field_bits) {
    throw FrameError("frame parameters do not match the codec configuration");
  }
  const std::size_t ell = cfg.block_length;
  const BigInt first = cfg.src_fact.cum_count(static_cast<std::int64_t>(ell) - 1);
  const BigInt end = cfg.src_fact.cum_count(static_cast<std::int64_t>(ell));
  std::string out(frame.blocks.size() * ell, '\0');
  detail::for_each_block(frame.blocks.size(), jobs, [&](std::size_t i) {
    BigInt rank;
    try {
      rank = cfg.dst.val(frame.blocks[i]);
    } catch (const Error& e) {
      throw FrameError("block " + std::to_string(i) + " is not a destination word: " + e.what());
    }
    if (rank < first || rank >= end) {
      throw FrameError("block " + std::to_string(i) + " decodes to a rank outside the block range");
    }
    const std::string block = cfg.src_fact.rep(rank);
    std::copy(block.begin(), block.end(), out.begin() + static_cast<std::ptrdiff_t>(i * ell));
  });
  if (frame.tail.size() >= ell ||
      detail::first_rejected(cfg.src_fact.dfa(), frame.tail) != frame.tail.size()) {
    throw FrameError("frame tail is not a short source factor");
  }
  return out + frame.tail;
}

/// Frame cost in destination symbols: converted blocks, plus the length
/// fields expressed in destination symbols, plus the raw tail.
inline double frame_symbol_cost(const Frame& frame, std::size_t dst_alphabet_size) {
  double symbols = 0;
  for (const auto& b : frame.blocks) symbols += static_cast<double>(b.size());
  const double bits_per_symbol = dst_alphabet_size > 1 ? std::log2(static_cast<double>(dst_alphabet_size)) : 1.0;
  symbols += static_cast<double>(frame.blocks.size()) * frame.len_field_bits / bits_per_symbol;
  return symbols + static_cast<double>(frame.tail.size());
}

inline double block_cr(const BlockCodecConfig& cfg, const Frame& frame, std::size_t input_length) {
  return frame_symbol_cost(frame, cfg.dst.alphabet().size()) / static_cast<double>(input_length);
}

// Byte layout:
//   "ANSC"  u8 version
//   u32le block_length, len_min, len_field_bits, block_count, tail_length
//   body: MSB-first bit stream; per block a len_field_bits-wide
//         (length - len_min) followed by 8 bits per destination symbol
//         index; zero-padded to a byte boundary
//   tail: tail_length raw source bytes

namespace detail {

class BitWriter {
 public:
  explicit BitWriter(std::vector<std::uint8_t>& out) : out_(out) {}

  void write(std::uint64_t value, std::uint32_t bits) {
    for (std::uint32_t i = bits; i-- > 0;) {
      acc_ = static_cast<std::uint8_t>((acc_ << 1) | ((value >> i) & 1U));
      if (++filled_ == 8) {
        out_.push_back(acc_);
        acc_ = 0;
        filled_ = 0;
      }
    }
  }

  void flush() {
    if (filled_ > 0) write(0, 8 - filled_);
  }

 private:
  std::vector<std::uint8_t>& out_;
  std::uint8_t acc_ = 0;
  std::uint32_t filled_ = 0;
};

class BitReader {
 public:
  BitReader(const std::vector<std::uint8_t>& in, std::size_t offset) : in_(in), byte_(offset) {}

  std::uint64_t read(std::uint32_t bits) {
    std::uint64_t value = 0;
    for (std::uint32_t i = 0; i < bits; ++i) {
      if (byte_ >= in_.size()) throw FrameError("truncated frame body");
      value = (value << 1) | ((in_[byte_] >> (7 - bit_)) & 1U);
      if (++bit_ == 8) {
        bit_ = 0;
        ++byte_;
      }
    }
    return value;
  }

  /// Offset of the first byte after the padded bit stream.
  std::size_t aligned_offset() const { return byte_ + (bit_ ? 1 : 0); }

 private:
  const std::vector<std::uint8_t>& in_;
  std::size_t byte_;
  std::uint32_t bit_ = 0;
};

inline void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

inline std::uint32_t get_u32(const std::vector<std::uint8_t>& in, std::size_t at) {
  if (at + 4 > in.size()) throw FrameError("truncated frame header");
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= std::uint32_t{in[at + i]} << (8 * i);
  return v;
}

}  // namespace detail

inline constexpr std::size_t kFrameHeaderSize = 4 + 1 + 5 * 4;

/// Serializes a frame. `dst_alphabet` maps destination symbols to indices.
inline std::vector<std::uint8_t> encode_frame(const Frame& frame, const OrderedAlphabet& dst_alphabet) {
  std::vector<std::uint8_t> out(std::begin(Frame::kMagic), std::end(Frame::kMagic));
  out.push_back(Frame::kVersion);
  for (std::uint32_t v : {frame.block_length, frame.len_min, frame.len_field_bits,
                          static_cast<std::uint32_t>(frame.blocks.size()),
                          static_cast<std::uint32_t>(frame.tail.size())}) {
    detail::put_u32(out, v);
  }
  detail::BitWriter bits(out);
  for (const auto& block : frame.blocks) {
    if (block.size() < frame.len_min ||
        (frame.len_field_bits < 64 && block.size() - frame.len_min >= (std::uint64_t{1} << frame.len_field_bits))) {
      throw FrameError("block length does not fit the length field");
    }
    bits.write(block.size() - frame.len_min, frame.len_field_bits);
    for (char c : block) bits.write(static_cast<std::uint64_t>(dst_alphabet.index_of(static_cast<Symbol>(c))), 8);
  }
  bits.flush();
  out.insert(out.end(), frame.tail.begin(), frame.tail.end());
  return out;
}

inline Frame decode_frame(const std::vector<std::uint8_t>& bytes, const OrderedAlphabet& dst_alphabet) {
  if (bytes.size() < 5 || !std::equal(std::begin(Frame::kMagic), std::end(Frame::kMagic), bytes.begin())) {
    throw FrameError("bad frame magic");
  }
  if (bytes[4] != Frame::kVersion) throw FrameError("unsupported frame version " + std::to_string(bytes[4]));
  Frame frame;
  frame.block_length = detail::get_u32(bytes, 5);
  frame.len_min = detail::get_u32(bytes, 9);
  frame.len_field_bits = detail::get_u32(bytes, 13);
  const std::uint32_t count = detail::get_u32(bytes, 17);
  const std::uint32_t tail = detail::get_u32(bytes, 21);
  if (frame.len_field_bits > 32) throw FrameError("length field wider than 32 bits");
  // Every block occupies at least one bit unless both widths are zero.
  if (frame.len_field_bits + 8ULL * frame.len_min > 0 && count > 8 * (bytes.size() - kFrameHeaderSize)) {
    throw FrameError("truncated frame body");
  }

  detail::BitReader bits(bytes, kFrameHeaderSize);
  frame.blocks.reserve(count);
  for (std::uint32_t i = 0; i < count; ++i) {
    const std::uint64_t len = frame.len_min + bits.read(frame.len_field_bits);
    std::string block;
    for (std::uint64_t j = 0; j < len; ++j) {
      const std::uint64_t index = bits.read(8);
      if (index >= dst_alphabet.size()) throw FrameError("symbol index outside the destination alphabet");
      block.push_back(static_cast<char>(dst_alphabet.symbol_at(index)));
    }
    frame.blocks.push_back(std::move(block));
  }
  const std::size_t tail_at = bits.aligned_offset();
  if (tail_at + tail != bytes.size()) {
    throw FrameError(tail_at + tail > bytes.size() ? "truncated frame tail" : "trailing bytes after frame");
  }
  frame.tail.assign(bytes.begin() + static_cast<std::ptrdiff_t>(tail_at), bytes.end());
  return frame;
}

inline std::vector<std::uint8_t> compress(const BlockCodecConfig& cfg, std::string_view input, unsigned jobs = 1) {
  return encode_frame(block_compress(cfg, input, jobs), cfg.dst.alphabet());
}

inline std::string decompress(const BlockCodecConfig& cfg, const std::vector<std::uint8_t>& bytes,
                              unsigned jobs = 1) {
  return block_decompress(cfg, decode_frame(bytes, cfg.dst.alphabet()), jobs);
}

}  // namespace regans
