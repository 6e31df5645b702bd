#include <doctest.h>

#include <set>

#include "braidcount/error.hpp"
#include "braidcount/oracle.hpp"

using namespace braidcount;

TEST_CASE("reduced word enumeration") {
  CHECK(oracle::enumerate_reduced_words(0).empty());
  CHECK(oracle::enumerate_reduced_words(1).size() == 4);
  CHECK(oracle::enumerate_reduced_words(2).size() == 16);
  CHECK(oracle::enumerate_reduced_words(3).size() == 52);
  const auto words = oracle::enumerate_reduced_words(6);
  const std::set<FreeWord> distinct(words.begin(), words.end());
  CHECK(distinct.size() == words.size());
  std::vector<std::size_t> by_length(7, 0);
  for (const auto& w : words) {
    ++by_length[static_cast<std::size_t>(w.degree())];
    for (std::size_t i = 1; i < w.size(); ++i) CHECK(w.terms()[i].gen != w.terms()[i - 1].gen);
  }
  std::size_t expected = 4;
  for (unsigned l = 1; l <= 6; ++l, expected *= 3) CHECK(by_length[l] == expected);
}

TEST_CASE("tuple enumeration") {
  CHECK(oracle::brute_count_tuples(2) == 0);
  CHECK(oracle::brute_count_tuples(9) == 4);
  CHECK(oracle::brute_count_tuples(27) == 15);
}

TEST_CASE("word filtering") {
  CHECK(oracle::brute_count_words(3, 12) == 4);
  CHECK(oracle::brute_count_words(6, 2) == 12);
  CHECK(oracle::brute_count_words(531441, 1) == 4);
  CHECK_THROWS_AS(oracle::brute_count_words(3, 15), PreconditionError);
  const std::vector<std::uint64_t> xs{3, 6, 81};
  const auto grid = oracle::brute_count_words_grid(xs, 3);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (unsigned l = 0; l <= 3; ++l) CHECK(grid[i][l] == oracle::brute_count_words(xs[i], l));
  }
}

TEST_CASE("conjugator search") {
  const auto x = eval(parse_braid("s1^3 S2"));
  const auto g = oracle::brute_conjugator_search(x, x, 3);
  REQUIRE(g.has_value());
  CHECK(g->letters.empty());

  const auto s1sq = eval(parse_braid("s1^2"));
  const auto s2sq = eval(parse_braid("s2^2"));
  const auto found = oracle::brute_conjugator_search(s1sq, s2sq, 3);
  REQUIRE(found.has_value());
  const auto c = eval(*found);
  CHECK(c * s1sq * c.inverse() == s2sq);

  CHECK_FALSE(oracle::brute_conjugator_search(s1sq, eval(parse_braid("s1^4")), 6).has_value());
  CHECK_THROWS_AS(oracle::brute_conjugator_search(x, x, 11), PreconditionError);
}

TEST_CASE("conjugator search succeeds symmetrically") {
  const char* samples[] = {"s1^2", "s2^-2", "s1 s2", "s1^2 s2^-2", "D", "s1^3", "S1 s2^2", "s1^-4 D^4"};
  for (const char* a : samples) {
    for (const char* b : samples) {
      const auto x = eval(parse_braid(a));
      const auto y = eval(parse_braid(b));
      CHECK(oracle::brute_conjugator_search(x, y, 4).has_value() ==
            oracle::brute_conjugator_search(y, x, 4).has_value());
    }
  }
}
