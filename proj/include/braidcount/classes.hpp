#pragma once

// The alternating word families a1^(+-2) a2^(+-2) ... used for exponential
// lower bounds, their conjugacy orbits, and a bounded search for conjugations
// of the restricted shape s_j * beta1 * Delta^ell between family words.

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "braidcount/braid.hpp"
#include "braidcount/counting.hpp"
#include "braidcount/numeric.hpp"
#include "braidcount/words.hpp"

namespace braidcount {

// a1^(2 s_1) a2^(2 s_2) ... a1^(2 s_{2j-1}) a2^(2 s_{2j}), s_i in {+1, -1}.
struct FamilyWord {
  std::vector<std::int8_t> signs;

  FreeWord expand() const;

  friend bool operator==(const FamilyWord&, const FamilyWord&) = default;
  friend auto operator<=>(const FamilyWord&, const FamilyWord&) = default;
};

// All 2^(2j) sign vectors, '+' before '-' lexicographically.
std::vector<FamilyWord> enumerate_family(unsigned j);

// Orbit under rotation of the sign vector by one position (shift the terms by
// one, then conjugate by Delta to swap a1 and a2).
std::set<FamilyWord> orbit_of(const FamilyWord& w);

// Number of orbits on {+1,-1}^(2j).
Count class_count(unsigned j);

// One rotation step as an explicit conjugation in B3/Z3:
// conjugate(step_conjugator(w), embed(w)) == embed(rotate(w)).
CosetElement step_conjugator(const FamilyWord& w);
FamilyWord rotate(const FamilyWord& w);

enum class ReportVariant { lambda, entropy };

struct LowerBoundReport {
  ReportVariant variant;
  ClosedForm y;
  unsigned index = 0;            // j0 (lambda) or j0' (entropy)
  Count family_size;
  std::optional<Count> classes;  // entropy only
  std::string target_bound;       // 1/2 exp(Y/900) or 1/2 exp(Y/(900 pi)), rounded up
  bool family_within_y = false;  // every family word's L+-based upper bound <= Y
  bool bound_satisfied = false;  // counted quantity >= target bound
  bool satisfied() const { return family_within_y && bound_satisfied; }
};

// Rejects Y below 600 log 8 (lambda) or 600 pi log 8 (entropy).
LowerBoundReport lower_bound_report(const ClosedForm& y, ReportVariant variant);

struct ForbiddenConjugation {
  FreeWord b1;            // family word with 2j terms
  FreeWord b2;            // beta * b1 * beta^-1, again alternating +-2
  BraidWord conjugator;   // beta = s_i beta1 Delta^ell
};

// Conjugates every word of both alternating shapes (a1-first and a2-first)
// with 2j terms by every beta = s_i * beta1 * Delta^ell, beta1 a reduced word
// of total degree <= max_conj_len, and reports conjugates that are again of
// alternating +-2 shape. A bounded search, not a proof.
std::vector<ForbiddenConjugation> search_forbidden_conjugations(unsigned j, unsigned max_conj_len);

// True iff the alternating shape check accepts w: nonempty, all exponents +-2.
bool is_alternating_family_shape(const FreeWord& w);

}  // namespace braidcount
