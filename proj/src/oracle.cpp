#include "braidcount/oracle.hpp"

#include <stdexcept>

#include "braidcount/error.hpp"

namespace braidcount::oracle {

namespace {

// 0: a1, 1: a1^-1, 2: a2, 3: a2^-1
constexpr int inverse_letter(int l) { return l ^ 1; }

Term letter_term(int l) {
  return {l < 2 ? Generator::a1 : Generator::a2, (l & 1) != 0 ? -1 : 1};
}

void extend(std::vector<int>& letters, unsigned max_len, const std::function<void(const FreeWord&)>& visit) {
  if (!letters.empty()) {
    std::vector<Term> terms;
    for (int l : letters) terms.push_back(letter_term(l));
    visit(reduce(terms));
  }
  if (letters.size() == max_len) return;
  for (int l = 0; l < 4; ++l) {
    if (!letters.empty() && letters.back() == inverse_letter(l)) continue;
    letters.push_back(l);
    extend(letters, max_len, visit);
    letters.pop_back();
  }
}

// prod(3 d_k), saturating at UINT64_MAX.
std::uint64_t l_minus_argument(const FreeWord& w) {
  unsigned __int128 p = 1;
  for (const auto& s : syllable_decompose(w)) {
    p *= 3 * static_cast<unsigned __int128>(s.degree);
    if (p > UINT64_MAX) return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(p);
}

void count_tuples_from(std::uint64_t x, unsigned __int128 product, Count& total) {
  for (std::uint64_t d = 1;; ++d) {
    const unsigned __int128 next = product * 3 * d;
    if (next > x) return;
    ++total;
    count_tuples_from(x, next, total);
  }
}

}  // namespace

void for_each_reduced_word(unsigned max_len, const std::function<void(const FreeWord&)>& visit) {
  std::vector<int> letters;
  extend(letters, max_len, visit);
}

std::vector<FreeWord> enumerate_reduced_words(unsigned max_len) {
  std::vector<FreeWord> out;
  for_each_reduced_word(max_len, [&](const FreeWord& w) { out.push_back(w); });
  return out;
}

Count brute_count_tuples(std::uint64_t x) {
  Count total = 0;
  count_tuples_from(x, 1, total);
  return total;
}

Count brute_count_words(std::uint64_t x, unsigned max_len) {
  if (max_len > 14) throw PreconditionError("word oracle limited to length 14");
  Count total = 0;
  for_each_reduced_word(max_len, [&](const FreeWord& w) {
    if (l_minus_argument(w) <= x) ++total;
  });
  return total;
}

std::vector<std::vector<Count>> brute_count_words_grid(std::span<const std::uint64_t> xs, unsigned max_len) {
  if (max_len > 14) throw PreconditionError("word oracle limited to length 14");
  // hits[i][l]: words of length exactly l passing xs[i]
  std::vector<std::vector<std::uint64_t>> hits(xs.size(), std::vector<std::uint64_t>(max_len + 1, 0));
  for_each_reduced_word(max_len, [&](const FreeWord& w) {
    const auto arg = l_minus_argument(w);
    const auto len = static_cast<std::size_t>(w.degree());
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (arg <= xs[i]) ++hits[i][len];
    }
  });
  std::vector<std::vector<Count>> out(xs.size(), std::vector<Count>(max_len + 1));
  for (std::size_t i = 0; i < xs.size(); ++i) {
    std::uint64_t running = 0;
    for (unsigned l = 0; l <= max_len; ++l) {
      running += hits[i][l];
      out[i][l] = static_cast<unsigned long>(running);
    }
  }
  return out;
}

std::optional<BraidWord> brute_conjugator_search(const CosetElement& x, const CosetElement& y,
                                                 unsigned max_len) {
  if (max_len > 10) throw PreconditionError("conjugator search limited to length 10");
  constexpr BraidLetter kLetters[] = {{1, 1}, {1, -1}, {2, 1}, {2, -1}};
  for (unsigned len = 0; len <= max_len; ++len) {
    std::vector<int> digits(len, 0);
    while (true) {
      BraidWord g;
      for (int d : digits) g.letters.push_back(kLetters[d]);
      const auto ge = eval(g);
      if (ge * x * ge.inverse() == y) return g;
      // odometer
      std::size_t pos = 0;
      while (pos < len && ++digits[pos] == 4) digits[pos++] = 0;
      if (pos == len) break;
    }
  }
  return std::nullopt;
}

}  // namespace braidcount::oracle
