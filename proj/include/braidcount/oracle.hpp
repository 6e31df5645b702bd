#pragma once

// Naive reference implementations. They deliberately avoid the counting and
// normal-form kernels so that agreement is meaningful.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "braidcount/braid.hpp"
#include "braidcount/counting.hpp"
#include "braidcount/words.hpp"

namespace braidcount::oracle {

// Every reduced word of letter length 1..max_len exactly once, built letter by
// letter over {a1, A1, a2, A2}.
void for_each_reduced_word(unsigned max_len, const std::function<void(const FreeWord&)>& visit);
std::vector<FreeWord> enumerate_reduced_words(unsigned max_len);

// Depth-first enumeration of degree tuples with running product <= X.
Count brute_count_tuples(std::uint64_t x);

// Reduced words of length <= max_len with prod(3 d_k) <= X. max_len <= 14.
Count brute_count_words(std::uint64_t x, unsigned max_len);

// One enumeration pass: result[i][l] = brute_count_words(xs[i], l) for
// l = 0..max_len.
std::vector<std::vector<Count>> brute_count_words_grid(std::span<const std::uint64_t> xs, unsigned max_len);

// First g (shortest, then enumeration order) with g x g^-1 == y among braid
// words of length <= max_len. max_len <= 10.
std::optional<BraidWord> brute_conjugator_search(const CosetElement& x, const CosetElement& y,
                                                 unsigned max_len);

}  // namespace braidcount::oracle
