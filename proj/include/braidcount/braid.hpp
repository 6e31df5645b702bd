#pragma once

// Arithmetic in B3 modulo its center Z3 = <Delta^2>.
//
// B3/Z3 is the free product Z/2 * Z/3 generated by a = Delta (order 2) and
// t = s1 s2 (order 3), with s1 = t^2 a and s2 = a t^2. Elements are kept as
// alternating canonical words in {a} and {t, t^2}, so structural equality is
// equality in the quotient.

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "braidcount/words.hpp"

namespace braidcount {

struct BraidLetter {
  int generator;  // 1 or 2
  int exponent;   // +1 or -1

  friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
};

struct BraidWord {
  std::vector<BraidLetter> letters;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

enum class CosetLetter : std::uint8_t { a, t, t2 };

class CosetElement {
 public:
  CosetElement() = default;

  static CosetElement delta();

  std::span<const CosetLetter> letters() const noexcept { return letters_; }
  bool is_identity() const noexcept { return letters_.empty(); }

  CosetElement inverse() const;
  CosetElement& operator*=(const CosetElement& rhs);
  friend CosetElement operator*(CosetElement lhs, const CosetElement& rhs) { return lhs *= rhs; }

  // Appends one letter, cancelling/merging at the junction.
  void push(CosetLetter letter);

  friend bool operator==(const CosetElement&, const CosetElement&) = default;
  friend auto operator<=>(const CosetElement&, const CosetElement&) = default;

 private:
  std::vector<CosetLetter> letters_;
};

// Image in S3 (strand permutation) of an element of B3/Z3. perm[i] is the
// image of strand i; s1 swaps strands 0,1 and s2 swaps 1,2.
using Permutation = std::array<std::uint8_t, 3>;
Permutation permutation(const CosetElement& x);

bool is_pure(const CosetElement& x);

CosetElement eval(const BraidWord& b);
CosetElement eval(BraidLetter letter);

// a_i -> s_i^2, then eval.
CosetElement embed_pure(const FreeWord& w);

// Inverse of embed_pure on the pure subgroup; PreconditionError if x is not pure.
FreeWord pure_word(const CosetElement& x);

// s_generator^exponent
CosetElement sigma_power(int generator, std::int64_t exponent);

// Even neighbour of l towards zero (l itself when even). Rejects l == 0.
std::int64_t q(std::int64_t l);

struct PowerOfDelta {
  int ell;  // 0 or 1

  friend bool operator==(const PowerOfDelta&, const PowerOfDelta&) = default;
};

// s_j^k * b1 * Delta^ell with k != 0; a non-identity b1 starts with a power of
// a2 when j == 1 and of a1 when j == 2.
struct GeneralForm {
  int j;
  std::int64_t k;
  FreeWord b1;
  int ell;

  friend bool operator==(const GeneralForm&, const GeneralForm&) = default;
};

using NormalForm = std::variant<PowerOfDelta, GeneralForm>;

NormalForm normal_form(const CosetElement& x);
NormalForm normal_form(const BraidWord& b);

// Multiplies the form back out.
CosetElement remultiply(const NormalForm& form);

// s_j^q(k) * b1 as a reduced word in a1, a2. PreconditionError for PowerOfDelta.
FreeWord theta(const NormalForm& form);

// Conjugation by Delta: exchanges a1 and a2.
FreeWord delta_conjugate(const FreeWord& w);

// g * x * g^-1
CosetElement conjugate(const CosetElement& g, const CosetElement& x);

// Braid text syntax: s1, s2 (S1, S2 inverses) and D for Delta, each with an
// optional caret exponent. D^k is spelled out as (s1 s2 s1)^k.
BraidWord parse_braid(std::string_view text);
std::string render(const BraidWord& b);
std::string render(const CosetElement& x);  // "e" for the identity
std::string render(const NormalForm& form);

}  // namespace braidcount
