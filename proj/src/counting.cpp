#include "braidcount/counting.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <thread>
#include <unordered_map>
#include <vector>

#include "braidcount/error.hpp"

namespace braidcount {

namespace {

// Visits the maximal blocks [lo, hi] within [first, m] on which m / d is
// constant, passing (block length, m / d).
template <typename F>
void for_each_quotient_block(std::uint64_t m, std::uint64_t first, F&& visit) {
  for (std::uint64_t lo = first; lo <= m;) {
    const std::uint64_t v = m / lo;
    const std::uint64_t hi = m / v;
    visit(hi - lo + 1, v);
    lo = hi + 1;
  }
}

class TupleCounter {
 public:
  // N*(X) = M + sum_{d=1..M} N*(floor(M/d)), M = floor(X/3).
  const Count& total(std::uint64_t x) {
    if (auto it = total_.find(x); it != total_.end()) return it->second;
    const std::uint64_t m = x / 3;
    Count r = m;
    for_each_quotient_block(m, 1, [&](std::uint64_t len, std::uint64_t v) {
      r += Count(static_cast<unsigned long>(len)) * total(v);
    });
    return total_.emplace(x, std::move(r)).first->second;
  }

  // N_j*(X) = sum_{d=1..M} N_{j-1}*(floor(M/d)), N_0* = 1.
  const Count& of_length(unsigned j, std::uint64_t x) {
    if (by_length_.size() <= j) by_length_.resize(j + 1);
    auto& memo = by_length_[j];
    if (auto it = memo.find(x); it != memo.end()) return it->second;
    Count r = 0;
    if (j == 0) {
      r = x >= 1 ? 1 : 0;
    } else {
      const std::uint64_t m = x / 3;
      for_each_quotient_block(m, 1, [&](std::uint64_t len, std::uint64_t v) {
        r += Count(static_cast<unsigned long>(len)) * of_length(j - 1, v);
      });
    }
    return by_length_[j].emplace(x, std::move(r)).first->second;
  }

 private:
  std::unordered_map<std::uint64_t, Count> total_;
  std::vector<std::unordered_map<std::uint64_t, Count>> by_length_;
};

// Syllable transfer counts. After a first-kind syllable (single term, |exp| >= 2)
// the next syllable's generator is forced and its sign is free: 2 ways to
// either kind. After a second-kind syllable (a run of +-1 of one sign) the
// next second-kind run must have the opposite sign: 1 way; a first-kind term
// still has 2.
constexpr unsigned kFirstToFirst = 2;
constexpr unsigned kFirstToSecond = 2;
constexpr unsigned kSecondToFirst = 2;
constexpr unsigned kSecondToSecond = 1;
constexpr unsigned kOpeningChoices = 4;

struct Continuations {
  Count after_first;   // words completing a prefix that ended in a first-kind syllable
  Count after_second;
};

class WordCounter {
 public:
  // Continuations (including the empty one) with remaining budget y.
  const Continuations& from(std::uint64_t y) {
    if (auto it = memo_.find(y); it != memo_.end()) return it->second;
    const auto [to_second, to_first] = next_sums(y / 3, 1, y / 3);
    Continuations c;
    c.after_first = 1 + kFirstToSecond * to_second + kFirstToFirst * to_first;
    c.after_second = 1 + kSecondToSecond * to_second + kSecondToFirst * to_first;
    return memo_.emplace(y, std::move(c)).first->second;
  }

  // For degrees d in [d_lo, d_hi] (d_hi <= m): sum of after_second(m/d) over
  // d >= 1 and sum of after_first(m/d) over d >= 2.
  std::pair<Count, Count> next_sums(std::uint64_t m, std::uint64_t d_lo, std::uint64_t d_hi) {
    Count to_second = 0;
    Count to_first = 0;
    for (std::uint64_t lo = d_lo; lo <= d_hi;) {
      const std::uint64_t v = m / lo;
      const std::uint64_t hi = std::min(m / v, d_hi);
      const auto& c = from(v);
      to_second += Count(static_cast<unsigned long>(hi - lo + 1)) * c.after_second;
      const std::uint64_t first_lo = std::max<std::uint64_t>(lo, 2);
      if (first_lo <= hi) to_first += Count(static_cast<unsigned long>(hi - first_lo + 1)) * c.after_first;
      lo = hi + 1;
    }
    return {std::move(to_second), std::move(to_first)};
  }

 private:
  std::unordered_map<std::uint64_t, Continuations> memo_;
};

class BoundedWordCounter {
 public:
  const Continuations& from(std::uint64_t y, std::int64_t budget) {
    const auto key = std::make_pair(y, budget);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const auto [to_second, to_first] = next_sums(y / 3, budget);
    Continuations c;
    c.after_first = 1 + kFirstToSecond * to_second + kFirstToFirst * to_first;
    c.after_second = 1 + kSecondToSecond * to_second + kSecondToFirst * to_first;
    return memo_.emplace(key, std::move(c)).first->second;
  }

  std::pair<Count, Count> next_sums(std::uint64_t m, std::int64_t budget) {
    Count to_second = 0;
    Count to_first = 0;
    const auto top = std::min<std::uint64_t>(m, budget < 0 ? 0 : static_cast<std::uint64_t>(budget));
    for (std::uint64_t d = 1; d <= top; ++d) {
      const auto& c = from(m / d, budget - static_cast<std::int64_t>(d));
      to_second += c.after_second;
      if (d >= 2) to_first += c.after_first;
    }
    return {std::move(to_second), std::move(to_first)};
  }

 private:
  std::map<std::pair<std::uint64_t, std::int64_t>, Continuations> memo_;
};

}  // namespace

Threshold::Threshold(mpz_class value) : x(std::move(value)) {
  if (x < 0) throw PreconditionError("threshold must be nonnegative");
}

std::uint64_t Threshold::as_u64() const {
  if (x > mpz_class("9223372036854775807")) throw std::out_of_range("threshold exceeds 2^63");
  return std::stoull(x.get_str());
}

Threshold threshold_from_Y(const ClosedForm& y) {
  if (y.sign() < 0) throw PreconditionError("Y must be nonnegative");
  return Threshold(floor_exp(y));
}

unsigned log3_floor(const Threshold& t) {
  unsigned j = 0;
  mpz_class p = 3;
  while (p <= t.x) {
    p *= 3;
    ++j;
  }
  return j;
}

Count count_tuples_j(unsigned j, const Threshold& t) {
  if (j == 0) throw PreconditionError("tuple length must be >= 1");
  const auto x = t.as_u64();
  TupleCounter counter;
  return counter.of_length(j, x);
}

Count count_tuples(const Threshold& t) {
  TupleCounter counter;
  return counter.total(t.as_u64());
}

std::optional<BigFloat> bound_tuples_j(unsigned j, const Threshold& t) {
  if (j == 0) throw PreconditionError("tuple length must be >= 1");
  mpz_class three_j;
  mpz_ui_pow_ui(three_j.get_mpz_t(), 3, j);
  if (t.x < three_j) return std::nullopt;
  // base = (1/3)(2/3)^(j-1) X = 2^(j-1) X / 3^j
  mpz_class two_j1;
  mpz_ui_pow_ui(two_j1.get_mpz_t(), 2, j - 1);
  const mpq_class base_q(two_j1 * t.x, three_j);
  BigFloat base;
  mpfr_set_q(base.get(), base_q.get_mpq_t(), MPFR_RNDU);
  if (j == 1) return base;
  BigFloat log_term;
  mpfr_log(log_term.get(), base.get(), MPFR_RNDU);
  mpfr_pow_ui(log_term.get(), log_term.get(), j - 1, MPFR_RNDU);
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), j - 1);
  BigFloat r;
  mpfr_mul(r.get(), base.get(), log_term.get(), MPFR_RNDU);
  mpfr_div_z(r.get(), r.get(), fact.get_mpz_t(), MPFR_RNDU);
  return r;
}

BigFloat bound_tuples_total(const Threshold& t) {
  mpz_class x5;
  mpz_pow_ui(x5.get_mpz_t(), t.x.get_mpz_t(), 5);
  const mpq_class q(x5, 243);
  BigFloat r;
  mpfr_set_q(r.get(), q.get_mpq_t(), MPFR_RNDU);
  mpfr_cbrt(r.get(), r.get(), MPFR_RNDU);
  return r;
}

Count count_words(const Threshold& t, unsigned workers) {
  const std::uint64_t m = t.as_u64() / 3;
  if (m == 0) return 0;
  workers = std::max(1u, workers);
  // Split d in [1, m] into contiguous ranges; each worker owns its memo.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> ranges;
  {
    std::vector<std::uint64_t> block_starts;
    for_each_quotient_block(m, 1, [&, lo = std::uint64_t{1}](std::uint64_t len, std::uint64_t) mutable {
      block_starts.push_back(lo);
      lo += len;
    });
    const std::size_t n = block_starts.size();
    const std::size_t parts = std::min<std::size_t>(workers, n);
    for (std::size_t p = 0; p < parts; ++p) {
      const std::size_t b0 = n * p / parts;
      const std::size_t b1 = n * (p + 1) / parts;
      const std::uint64_t lo = block_starts[b0];
      const std::uint64_t hi = b1 < n ? block_starts[b1] - 1 : m;
      ranges.emplace_back(lo, hi);
    }
  }
  std::vector<std::pair<Count, Count>> partial(ranges.size());
  auto work = [&](std::size_t i) {
    WordCounter counter;
    partial[i] = counter.next_sums(m, ranges[i].first, ranges[i].second);
  };
  if (ranges.size() == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(ranges.size());
    for (std::size_t i = 0; i < ranges.size(); ++i) threads.emplace_back(work, i);
    for (auto& th : threads) th.join();
  }
  Count total = 0;
  for (const auto& [to_second, to_first] : partial) {
    total += kOpeningChoices * to_second + kOpeningChoices * to_first;
  }
  return total;
}

Count count_words_bounded(const Threshold& t, std::int64_t max_degree) {
  if (max_degree < 0) throw PreconditionError("degree bound must be nonnegative");
  BoundedWordCounter counter;
  const auto [to_second, to_first] = counter.next_sums(t.as_u64() / 3, max_degree);
  return kOpeningChoices * to_second + kOpeningChoices * to_first;
}

Count words_per_signature(std::span<const std::int64_t> degrees) {
  if (degrees.empty()) return 0;
  if (degrees[0] < 1) throw PreconditionError("syllable degrees must be >= 1");
  Count ending_first = degrees[0] >= 2 ? Count(kOpeningChoices) : Count(0);
  Count ending_second = kOpeningChoices;
  for (std::size_t i = 1; i < degrees.size(); ++i) {
    if (degrees[i] < 1) throw PreconditionError("syllable degrees must be >= 1");
    Count next_second = kFirstToSecond * ending_first + kSecondToSecond * ending_second;
    Count next_first = degrees[i] >= 2 ? Count(kFirstToFirst * ending_first + kSecondToFirst * ending_second)
                                       : Count(0);
    ending_first = std::move(next_first);
    ending_second = std::move(next_second);
  }
  return ending_first + ending_second;
}

WordBound bound_words(const Threshold& t) {
  mpz_class cube;
  mpz_pow_ui(cube.get_mpz_t(), t.x.get_mpz_t(), 3);
  WordBound b;
  b.half_cube = mpq_class(cube, 2);
  b.half_cube.canonicalize();
  const unsigned j0 = log3_floor(t);
  mpz_class four_j0;
  mpz_ui_pow_ui(four_j0.get_mpz_t(), 4, j0);
  b.chain = 2 * four_j0 * count_tuples(t);
  return b;
}

}  // namespace braidcount
