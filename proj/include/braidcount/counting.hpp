#pragma once

// Exact counting functions over syllable-degree tuples and reduced words with
// prod(3 d_k) <= X, plus the analytic upper bounds they are checked against.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <span>

#include "braidcount/numeric.hpp"

namespace braidcount {

using Count = mpz_class;

// Constraint prod(3 d_k) <= X, i.e. L- <= log X.
struct Threshold {
  mpz_class x;

  explicit Threshold(mpz_class value);
  // Kernels run on 64-bit thresholds; throws std::out_of_range above 2^63.
  std::uint64_t as_u64() const;
};

// X = floor(e^Y), certified. Rejects negative Y.
Threshold threshold_from_Y(const ClosedForm& y);

// Largest j with 3^j <= X (0 when X < 3).
unsigned log3_floor(const Threshold& t);

// N_j*(X): tuples (d_1..d_j), d_k >= 1, with prod(3 d_k) <= X.
Count count_tuples_j(unsigned j, const Threshold& t);

// N*(X) = sum over j >= 1 of N_j*(X).
Count count_tuples(const Threshold& t);

// (1/(j-1)!) (1/3) (2/3)^(j-1) X log((1/3)(2/3)^(j-1) X)^(j-1), rounded up;
// nullopt when X < 3^j.
std::optional<BigFloat> bound_tuples_j(unsigned j, const Threshold& t);

// (X/3)^(5/3) rounded up.
BigFloat bound_tuples_total(const Threshold& t);

// N^{L-}: nonidentity reduced words in a1, a2 with prod(3 d_k) <= X. The
// top-level sum may be split over `workers` threads; the result is exact and
// independent of the split.
Count count_words(const Threshold& t, unsigned workers = 1);

// count_words restricted to total degree <= max_degree.
Count count_words_bounded(const Threshold& t, std::int64_t max_degree);

// Number of reduced words whose syllable degrees, left to right, are exactly
// `degrees`.
Count words_per_signature(std::span<const std::int64_t> degrees);

struct WordBound {
  mpq_class half_cube;  // X^3 / 2 = e^(3Y) / 2 at Y = log X
  Count chain;          // 2 * 4^log3_floor(X) * N*(X)
};

WordBound bound_words(const Threshold& t);

}  // namespace braidcount
