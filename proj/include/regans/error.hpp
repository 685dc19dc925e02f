#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace regans {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t offset)
      : Error("syntax error at offset " + std::to_string(offset) + ": " + what),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// A symbol outside the declared alphabet, or a malformed alphabet.
class AlphabetError : public Error {
 public:
  using Error::Error;
};

/// Raised when a string is not a member of the language it is ranked in.
class MembershipError : public Error {
 public:
  enum class Kind { PrefixDies, NotAccepting };

  MembershipError(Kind kind, std::size_t position, const std::string& what)
      : Error(what), kind_(kind), position_(position) {}

  Kind kind() const noexcept { return kind_; }
  /// Offset of the first symbol with no transition (PrefixDies), or the word
  /// length (NotAccepting).
  std::size_t position() const noexcept { return position_; }

 private:
  Kind kind_;
  std::size_t position_;
};

/// The language is finite (or empty) where an infinite one is required.
class FiniteLanguageError : public Error {
 public:
  using Error::Error;
};

/// A precondition on an automaton was violated (e.g. it is not trim).
class AutomatonError : public Error {
 public:
  using Error::Error;
};

class FrameError : public Error {
 public:
  using Error::Error;
};

}  // namespace regans
