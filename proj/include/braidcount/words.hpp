#pragma once

// Word algebra in the free group F2 = <a1, a2>, which models the pure braid
// group modulo its center (a1 = s1^2, a2 = s2^2).

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace braidcount {

enum class Generator : std::uint8_t { a1 = 1, a2 = 2 };

constexpr Generator other(Generator g) noexcept {
  return g == Generator::a1 ? Generator::a2 : Generator::a1;
}

// a_gen^exponent, exponent != 0 once part of a FreeWord.
struct Term {
  Generator gen;
  std::int64_t exponent;

  friend bool operator==(const Term&, const Term&) = default;
};

// A freely reduced word, stored run-length encoded: adjacent terms always use
// distinct generators and the empty sequence is the identity.
class FreeWord {
 public:
  FreeWord() = default;

  static FreeWord generator(Generator g, std::int64_t exponent = 1);

  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_identity() const noexcept { return terms_.empty(); }
  const Term& front() const { return terms_.front(); }
  const Term& back() const { return terms_.back(); }

  // Sum of |exponent| over all terms (letter length).
  std::int64_t degree() const;

  FreeWord inverse() const;

  friend FreeWord operator*(const FreeWord& lhs, const FreeWord& rhs);
  friend bool operator==(const FreeWord&, const FreeWord&) = default;
  friend auto operator<=>(const FreeWord& lhs, const FreeWord& rhs) {
    return std::lexicographical_compare_three_way(
        lhs.terms_.begin(), lhs.terms_.end(), rhs.terms_.begin(), rhs.terms_.end(),
        [](const Term& x, const Term& y) {
          if (x.gen != y.gen) return x.gen <=> y.gen;
          return x.exponent <=> y.exponent;
        });
  }

 private:
  friend FreeWord reduce(std::span<const Term> raw);
  std::vector<Term> terms_;
};

// Free reduction of an arbitrary term sequence. Zero exponents are dropped.
// Throws std::overflow_error if merged exponents leave the int64 range.
FreeWord reduce(std::span<const Term> raw);

enum class SyllableKind : std::uint8_t { first, second };

// first:  one term a_start^(sign*degree) with degree >= 2.
// second: `degree` terms of exponent `sign`, generators alternating from `start`.
struct Syllable {
  SyllableKind kind;
  std::int64_t degree;
  int sign;
  Generator start;

  std::vector<Term> expand() const;
  // Generator of the last term in the expansion.
  Generator end() const noexcept;

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

using SyllableDecomposition = std::vector<Syllable>;

SyllableDecomposition syllable_decompose(const FreeWord& w);

// w is cyclically reduced if it has at most one term or its first and last
// terms use different generators.
bool is_cyclically_reduced(const FreeWord& w) noexcept;

struct CyclicReduction {
  FreeWord core;
  FreeWord conjugator;  // conjugator * core * conjugator^-1 == w
};

CyclicReduction cyclic_reduce(const FreeWord& w);

// Requires a cyclically reduced non-identity word (PreconditionError otherwise).
// True iff the periodic word ...www... is cut into w's by syllable boundaries,
// i.e. the first and last syllables of w do not merge across the wrap.
bool is_cyclically_syllable_reduced(const FreeWord& w);

bool are_conjugate_free(const FreeWord& w1, const FreeWord& w2);

// Some g with g^-1 * w1 * g == w2, if w1 and w2 are conjugate.
std::optional<FreeWord> free_conjugator(const FreeWord& w1, const FreeWord& w2);

// Text syntax: whitespace-separated tokens a1, a2 (A1, A2 for inverses), each
// with an optional caret exponent such as a1^-3. Empty text is the identity.
FreeWord parse_word(std::string_view text);
std::string render(const FreeWord& w);

}  // namespace braidcount
