#include <doctest.h>

#include <numeric>

#include "braidcount/classes.hpp"
#include "braidcount/error.hpp"

using namespace braidcount;

namespace {

// Orbits of Z/n acting on binary strings of length n, by Burnside.
mpz_class necklaces(unsigned n) {
  mpz_class sum = 0;
  for (unsigned s = 1; s <= n; ++s) {
    mpz_class term;
    mpz_ui_pow_ui(term.get_mpz_t(), 2, std::gcd(s, n));
    sum += term;
  }
  return sum / n;
}

FamilyWord F(std::initializer_list<int> signs) {
  FamilyWord w;
  for (int s : signs) w.signs.push_back(static_cast<std::int8_t>(s));
  return w;
}

}  // namespace

TEST_CASE("family enumeration") {
  CHECK(enumerate_family(1).size() == 4);
  CHECK(enumerate_family(2).size() == 16);
  CHECK(enumerate_family(3).size() == 64);
  const auto fam = enumerate_family(2);
  CHECK(fam.front() == F({1, 1, 1, 1}));
  CHECK(fam[1] == F({1, 1, 1, -1}));
  CHECK(fam.back() == F({-1, -1, -1, -1}));
  CHECK(F({1, -1, -1, 1}).expand() == parse_word("a1^2 a2^-2 a1^-2 a2^2"));
  CHECK_THROWS_AS(enumerate_family(0), PreconditionError);
}

TEST_CASE("family words are cyclically syllable reduced with 2j syllables of degree 2") {
  for (unsigned j = 1; j <= 4; ++j) {
    for (const auto& f : enumerate_family(j)) {
      const auto w = f.expand();
      CHECK(is_cyclically_reduced(w));
      CHECK(is_cyclically_syllable_reduced(w));
      const auto s = syllable_decompose(w);
      CHECK(s.size() == 2 * j);
      for (const auto& syl : s) CHECK(syl.degree == 2);
      CHECK(is_alternating_family_shape(w));
    }
  }
  CHECK_FALSE(is_alternating_family_shape(parse_word("")));
  CHECK_FALSE(is_alternating_family_shape(parse_word("a1^2 a2")));
}

TEST_CASE("orbits") {
  CHECK(orbit_of(F({1, 1, 1, 1})).size() == 1);
  CHECK(orbit_of(F({1, 1, 1, -1})).size() == 4);
  CHECK(orbit_of(F({1, -1, 1, -1})).size() == 2);
  CHECK(rotate(F({1, 1, -1, 1})) == F({1, -1, 1, 1}));
}

TEST_CASE("rotation is a conjugation in the quotient") {
  for (unsigned j = 1; j <= 3; ++j) {
    for (const auto& f : enumerate_family(j)) {
      const auto image = conjugate(step_conjugator(f), embed_pure(f.expand()));
      CHECK(image == embed_pure(rotate(f).expand()));
    }
  }
}

TEST_CASE("orbits partition the family") {
  for (unsigned j = 1; j <= 6; ++j) {
    std::set<FamilyWord> covered;
    std::size_t orbits = 0;
    for (const auto& f : enumerate_family(j)) {
      if (covered.contains(f)) continue;
      const auto o = orbit_of(f);
      CHECK((2 * j) % o.size() == 0);
      for (const auto& g : o) CHECK(covered.insert(g).second);
      ++orbits;
    }
    CHECK(covered.size() == (std::size_t{1} << (2 * j)));
    CHECK(class_count(j) == orbits);
  }
}

TEST_CASE("class counts") {
  CHECK(class_count(1) == 3);
  CHECK(class_count(2) == 6);
  CHECK(class_count(1) == necklaces(2));
  CHECK(class_count(2) == necklaces(4));
  for (unsigned j = 1; j <= 14; ++j) {
    const auto c = class_count(j);
    CHECK(c == necklaces(2 * j));
    mpz_class family;
    mpz_ui_pow_ui(family.get_mpz_t(), 2, 2 * j);
    CHECK(c * (2 * j) >= family);
    CHECK(c <= family);
  }
  CHECK(class_count(100) == necklaces(200));
  CHECK_THROWS_AS(class_count(0), PreconditionError);
}

TEST_CASE("lower bound reports") {
  auto r = lower_bound_report(parse_closed_form("600*log(8)"), ReportVariant::lambda);
  CHECK(r.index == 2);
  CHECK(r.family_size == 4);
  CHECK_FALSE(r.classes.has_value());
  CHECK(r.target_bound == "2");
  CHECK(r.family_within_y);
  CHECK(r.bound_satisfied);
  CHECK(r.satisfied());

  r = lower_bound_report(parse_closed_form("600*pi*log(8)"), ReportVariant::entropy);
  CHECK(r.index == 2);
  CHECK(r.family_size == 16);
  REQUIRE(r.classes.has_value());
  CHECK(*r.classes == 6);
  CHECK(r.target_bound == "2");
  CHECK(r.satisfied());

  r = lower_bound_report(parse_closed_form("2000*log(8)"), ReportVariant::lambda);
  CHECK(r.index == 6);
  CHECK(r.family_size == 64);
  CHECK(r.satisfied());

  r = lower_bound_report(parse_closed_form("5000*pi*log(8)"), ReportVariant::entropy);
  CHECK(r.index == 16);
  CHECK(*r.classes == class_count(16));
  CHECK(r.satisfied());

  // just below the next index
  r = lower_bound_report(parse_closed_form("899.99*log(8)"), ReportVariant::lambda);
  CHECK(r.index == 2);

  CHECK_THROWS_AS(lower_bound_report(parse_closed_form("1"), ReportVariant::lambda), PreconditionError);
  CHECK_THROWS_AS(lower_bound_report(parse_closed_form("600*log(8)"), ReportVariant::entropy),
                  PreconditionError);
}

TEST_CASE("restricted conjugations between family words") {
  CHECK(search_forbidden_conjugations(2, 4).empty());
  CHECK(search_forbidden_conjugations(3, 3).empty());
  CHECK_THROWS_AS(search_forbidden_conjugations(1, 2), PreconditionError);
}

TEST_CASE("unrestricted conjugators do move family-shaped words") {
  // s2^-1 takes a1^-2 (that is s1^-4 D^4) to a1 a2 a1 a2
  const auto image = conjugate(eval(parse_braid("S2")), embed_pure(parse_word("a1^-2")));
  CHECK(image == embed_pure(parse_word("a1 a2 a1 a2")));
  // and a rotation step is itself a conjugation between family words
  const auto f = F({1, -1, 1, 1});
  CHECK(conjugate(step_conjugator(f), embed_pure(f.expand())) == embed_pure(rotate(f).expand()));
}
