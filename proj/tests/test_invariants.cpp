#include <doctest.h>

#include "braidcount/error.hpp"
#include "braidcount/invariants.hpp"
#include "braidcount/oracle.hpp"

using namespace braidcount;

namespace {

FreeWord W(const char* text) { return parse_word(text); }

// prod(c * d) over syllable degrees, re-derived from the term list.
mpz_class scanned_product(const FreeWord& w, unsigned c) {
  mpz_class p = 1;
  const auto t = w.terms();
  std::size_t i = 0;
  while (i < t.size()) {
    const auto e = t[i].exponent;
    if (e > 1 || e < -1) {
      p *= mpz_class(static_cast<long>(c)) * mpz_class(static_cast<long>(e < 0 ? -e : e));
      ++i;
      continue;
    }
    std::size_t k = i;
    while (k < t.size() && t[k].exponent == e) ++k;
    p *= mpz_class(static_cast<long>(c * (k - i)));
    i = k;
  }
  return p;
}

bool single_generator_power(const FreeWord& w) { return w.size() <= 1; }

}  // namespace

TEST_CASE("log arguments") {
  CHECK(l_minus(W("")).argument() == 1);
  CHECK(l_minus(W("")).value().is_zero());
  CHECK(l_minus(W("a1")).argument() == 3);
  CHECK(l_plus(W("a1")).argument() == 4);
  CHECK(l_minus(W("a1^2 A2^2")).argument() == 36);
  CHECK(l_plus(W("a1^2 A2^2")).argument() == 64);
  // a1 a2 is one syllable of degree 2
  CHECK(l_minus(W("a1 a2")).argument() == 6);
  CHECK(l_plus(W("a1 a2")).argument() == 8);
  CHECK((LogInteger(6) + LogInteger(4)).argument() == 24);
  CHECK(LogInteger(6) < LogInteger(7));
  CHECK_THROWS_AS(LogInteger(0), PreconditionError);
}

TEST_CASE("log arguments agree with a direct scan") {
  oracle::for_each_reduced_word(8, [](const FreeWord& w) {
    const auto lo = l_minus(w).argument();
    const auto hi = l_plus(w).argument();
    CHECK(lo == scanned_product(w, 3));
    CHECK(hi == scanned_product(w, 4));
    CHECK(lo <= hi);
  });
}

TEST_CASE("appending a syllable multiplies the argument") {
  // a1^2 then a2^d: new first-kind syllable of degree d
  for (std::int64_t d = 2; d <= 9; ++d) {
    const auto w = W("a1^2 A2 A1");
    const auto longer = w * FreeWord::generator(Generator::a2, d);
    CHECK(l_minus(longer).argument() == l_minus(w).argument() * 3 * d);
  }
}

TEST_CASE("word intervals") {
  CHECK(lambda_tr_bounds_word(W("a1^5")).exact_zero);
  CHECK(lambda_tr_bounds_word(W("")).exact_zero);
  CHECK(lambda_tr_bounds_word(W("a1^5")).lower_text() == "0");

  const auto b = lambda_tr_bounds_word(W("a1 a2"));
  CHECK_FALSE(b.exact_zero);
  CHECK(b.lower_arg.argument() == 6);
  CHECK(b.upper_arg.argument() == 8);
  CHECK(b.lower() == ClosedForm::log_of(6) / (ClosedForm(mpq_class(2)) * ClosedForm::pi()));
  CHECK(b.upper() == ClosedForm(mpq_class(300)) * ClosedForm::log_of(8));
  CHECK(b.lower_text() == "0.285167376359");
  CHECK(b.upper_text() == "623.832462504");

  const auto c = lambda_tr_bounds_word(W("a1 A2"));
  CHECK(c.lower_arg.argument() == 9);
  CHECK(c.upper_arg.argument() == 16);
}

TEST_CASE("single generator powers are exactly the zero intervals") {
  oracle::for_each_reduced_word(6, [](const FreeWord& w) {
    CHECK(lambda_tr_bounds_word(w).exact_zero == single_generator_power(w));
  });
}

TEST_CASE("braid intervals") {
  CHECK(lambda_tr_bounds_braid(parse_braid("s1^7 D^3")).exact_zero);
  CHECK(lambda_tr_bounds_braid(parse_braid("D")).exact_zero);
  CHECK(lambda_tr_bounds_braid(parse_braid("")).exact_zero);
  CHECK(lambda_tr_bounds_braid(parse_braid("S2^3 D")).exact_zero);

  const auto b = lambda_tr_bounds_braid(parse_braid("s1^2 s2^2"));
  CHECK(b.lower_arg.argument() == 6);
  CHECK(b.upper_arg.argument() == 8);

  // theta = a1 is a single term but b1 is not trivial
  const auto c = lambda_tr_bounds_braid(parse_braid("s1 s2^2"));
  CHECK_FALSE(c.exact_zero);
  CHECK(c.lower_arg.argument() == 3);
  CHECK(c.upper_arg.argument() == 4);
}

TEST_CASE("braid intervals ignore a trailing Delta") {
  constexpr BraidLetter kLetters[] = {{1, 1}, {1, -1}, {2, 1}, {2, -1}};
  for (unsigned len = 0; len <= 8; ++len) {
    for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << (2 * len)); ++idx) {
      BraidWord b;
      auto i = idx;
      for (unsigned k = 0; k < len; ++k, i /= 4) b.letters.push_back(kLetters[i % 4]);
      auto bd = b;
      bd.letters.insert(bd.letters.end(), {{1, 1}, {2, 1}, {1, 1}});
      CHECK(lambda_tr_bounds_braid(b) == lambda_tr_bounds_braid(bd));
    }
  }
}

TEST_CASE("generator swap keeps the bounds") {
  oracle::for_each_reduced_word(6, [](const FreeWord& w) {
    CHECK(lambda_tr_bounds_word(w) == lambda_tr_bounds_word(delta_conjugate(w)));
  });
}

TEST_CASE("entropy intervals") {
  const auto b = entropy_bounds(W("a1^2 A2^2"));
  CHECK(b.lower_arg.argument() == 36);
  CHECK(b.upper_arg.argument() == 64);
  CHECK(b.lower() == ClosedForm::log_of(36) / ClosedForm(mpq_class(4)));
  CHECK(b.upper() == ClosedForm(mpq_class(150)) * ClosedForm::pi() * ClosedForm::log_of(64));
  CHECK(b.lower_text() == "0.895879734614");
  CHECK(b.upper_text() == "1959.82748128");
  CHECK_THROWS_AS(entropy_bounds(W("a1^4")), PreconditionError);
  CHECK_THROWS_AS(entropy_bounds(W("a1 a2^2 a1 a2")), PreconditionError);
  CHECK_THROWS_AS(entropy_bounds(W("a1 a2")), PreconditionError);
  CHECK_THROWS_AS(entropy_bounds(W("")), PreconditionError);
  CHECK(std::string(kEntropyConversion).find("pi/2") != std::string::npos);
}

TEST_CASE("scale constants") {
  CHECK(lambda_upper_scale() == ClosedForm(mpq_class(300)));
  CHECK(entropy_lower_scale() == ClosedForm(mpq_class(1, 4)));
  // entropy = (pi/2) * lambda on the upper side
  CHECK(entropy_upper_scale() == lambda_upper_scale() * ClosedForm::pi() / ClosedForm(mpq_class(2)));
}

TEST_CASE("endpoints are rounded outward") {
  oracle::for_each_reduced_word(4, [](const FreeWord& w) {
    const auto b = lambda_tr_bounds_word(w);
    if (b.exact_zero) return;
    const auto lo = b.lower().enclose(256);
    const auto hi = b.upper().enclose(256);
    CHECK(mpfr_cmp_d(lo.lo.get(), std::stod(b.lower_text())) >= 0);
    CHECK(mpfr_cmp_d(hi.hi.get(), std::stod(b.upper_text())) <= 0);
  });
}
