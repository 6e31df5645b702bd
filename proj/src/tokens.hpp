#pragma once

// Shared tokenizer for the word and braid text syntax: whitespace-separated
// symbols with an optional caret exponent ("a1^-3", "D^2").

#include <charconv>
#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "braidcount/error.hpp"

namespace braidcount::detail {

struct Token {
  std::string symbol;
  std::int64_t exponent;
  std::size_t position;
};

inline std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  const auto n = text.size();
  auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
  while (i < n) {
    if (is_space(text[i])) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < n && std::isalnum(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start) throw ParseError(std::string("unexpected character '") + text[i] + "'", i);
    Token tok{std::string(text.substr(start, i - start)), 1, start};
    if (i < n && text[i] == '^') {
      ++i;
      const std::size_t num_start = i;
      if (i < n && (text[i] == '-' || text[i] == '+')) ++i;
      while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      std::string_view digits = text.substr(num_start, i - num_start);
      if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
      std::int64_t value = 0;
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
      if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size()) {
        throw ParseError("malformed exponent", num_start);
      }
      tok.exponent = value;
    }
    if (i < n && !is_space(text[i])) {
      throw ParseError(std::string("unexpected character '") + text[i] + "'", i);
    }
    out.push_back(std::move(tok));
  }
  return out;
}

}  // namespace braidcount::detail
