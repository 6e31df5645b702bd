#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace braidcount {

// Malformed word/braid/expression text. `position` is the 0-based byte offset
// of the offending token.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// An operation was called outside its domain (e.g. entropy bounds for a word
// that is not cyclically syllable reduced).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace braidcount
