#include "braidcount/verify.hpp"

#include <map>
#include <random>
#include <stdexcept>

#include "braidcount/braid.hpp"
#include "braidcount/classes.hpp"
#include "braidcount/counting.hpp"
#include "braidcount/oracle.hpp"
#include "braidcount/words.hpp"

namespace braidcount::verify {

namespace {

constexpr std::uint64_t kSeed = 0x5eed'b4a1'd000'0003ULL;

std::vector<Term> random_terms(std::mt19937_64& rng, int max_terms) {
  std::uniform_int_distribution<int> len(0, max_terms);
  std::uniform_int_distribution<int> gen(1, 2);
  std::uniform_int_distribution<int> mag(1, 3);
  std::bernoulli_distribution neg(0.5);
  std::vector<Term> raw(static_cast<std::size_t>(len(rng)));
  for (auto& t : raw) {
    t.gen = gen(rng) == 1 ? Generator::a1 : Generator::a2;
    t.exponent = mag(rng) * (neg(rng) ? -1 : 1);
  }
  return raw;
}

BraidWord braid_from_index(std::uint64_t index, unsigned len) {
  constexpr BraidLetter kLetters[] = {{1, 1}, {1, -1}, {2, 1}, {2, -1}};
  BraidWord b;
  for (unsigned i = 0; i < len; ++i) {
    b.letters.push_back(kLetters[index % 4]);
    index /= 4;
  }
  return b;
}

struct Recorder {
  std::string suite;
  std::vector<CheckResult> results;

  void add(std::string name, bool passed, std::string detail = {}) {
    results.push_back({suite, std::move(name), passed, std::move(detail)});
  }
};

bool first_term_ok(const GeneralForm& g) {
  if (g.b1.is_identity()) return true;
  return g.b1.front().gen == (g.j == 1 ? Generator::a2 : Generator::a1);
}

}  // namespace

std::vector<CheckResult> run_words(const Limits& limits) {
  Recorder rec{"words", {}};
  std::mt19937_64 rng(kSeed);

  std::size_t failures = 0;
  for (int i = 0; i < 2000; ++i) {
    const auto raw = random_terms(rng, 12);
    const auto once = reduce(raw);
    const auto twice = reduce(once.terms());
    if (!(once == twice) || !(once * once.inverse()).is_identity()) ++failures;
  }
  rec.add("reduce idempotent, w w^-1 = e", failures == 0, std::to_string(failures) + " failures");

  failures = 0;
  const unsigned len = std::min(limits.max_len, 8u);
  std::size_t checked = 0;
  oracle::for_each_reduced_word(len, [&](const FreeWord& w) {
    std::vector<Term> concat;
    std::int64_t degrees = 0;
    for (const auto& s : syllable_decompose(w)) {
      const auto e = s.expand();
      concat.insert(concat.end(), e.begin(), e.end());
      degrees += s.degree;
    }
    if (!std::equal(concat.begin(), concat.end(), w.terms().begin(), w.terms().end()) ||
        degrees != w.degree()) {
      ++failures;
    }
    ++checked;
  });
  rec.add("syllable expansion reproduces word", failures == 0,
          std::to_string(checked) + " words up to length " + std::to_string(len));

  failures = 0;
  for (int i = 0; i < 2000; ++i) {
    const auto w = reduce(random_terms(rng, 8));
    const auto g = reduce(random_terms(rng, 6));
    const auto conj = g.inverse() * w * g;
    const auto witness = free_conjugator(w, conj);
    if (!witness || !(witness->inverse() * w * *witness == conj)) ++failures;
    const auto cr = cyclic_reduce(conj);
    if (!is_cyclically_reduced(cr.core) || !(cr.conjugator * cr.core * cr.conjugator.inverse() == conj)) {
      ++failures;
    }
  }
  rec.add("conjugates detected with witness", failures == 0, std::to_string(failures) + " failures");
  return rec.results;
}

std::vector<CheckResult> run_braid(const Limits& limits) {
  Recorder rec{"braid", {}};
  auto b = [](std::string_view text) { return eval(parse_braid(text)); };
  const CosetElement e;
  rec.add("braid relation s1 s2 s1 = s2 s1 s2", b("s1 s2 s1") == b("s2 s1 s2"));
  rec.add("Delta^2 central trivial", b("D^2").is_identity() && !b("D").is_identity());
  rec.add("(s1 s2)^3 trivial", b("s1 s2 s1 s2 s1 s2") == e);
  rec.add("Delta s1 = s2 Delta", b("D s1") == b("s2 D"));
  rec.add("Delta s2 = s1 Delta", b("D s2") == b("s1 D"));
  rec.add("s1^-1 (s2^-4 D^4) s1 = s2^2 s1^2 s2^2 s1^2", b("S1 s2^-4 D^4 s1") == b("s2^2 s1^2 s2^2 s1^2"));
  rec.add("s2^-1 (s1^-4 D^4) s2 = s1^2 s2^2 s1^2 s2^2", b("S2 s1^-4 D^4 s2") == b("s1^2 s2^2 s1^2 s2^2"));

  const unsigned len = std::min(limits.max_len, 8u);
  std::size_t failures = 0;
  std::size_t checked = 0;
  std::map<CosetElement, NormalForm> seen;
  for (unsigned l = 0; l <= len; ++l) {
    const std::uint64_t count = std::uint64_t{1} << (2 * l);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      const auto word = braid_from_index(idx, l);
      const auto x = eval(word);
      const auto form = normal_form(x);
      bool ok = remultiply(form) == x;
      if (const auto* g = std::get_if<GeneralForm>(&form)) ok = ok && g->k != 0 && first_term_ok(*g);
      auto [it, inserted] = seen.emplace(x, form);
      if (!inserted) ok = ok && it->second == form;
      if (!ok) ++failures;
      ++checked;
    }
  }
  rec.add("normal form round trip, first-term constraint, canonical", failures == 0,
          std::to_string(checked) + " braid words up to length " + std::to_string(len));

  failures = 0;
  for (const auto& [x, form] : seen) {
    const auto shifted = normal_form(x * CosetElement::delta());
    if (std::holds_alternative<GeneralForm>(form) != std::holds_alternative<GeneralForm>(shifted)) {
      ++failures;
    } else if (std::holds_alternative<GeneralForm>(form) && !(theta(form) == theta(shifted))) {
      ++failures;
    }
  }
  rec.add("theta(b Delta) = theta(b)", failures == 0, std::to_string(seen.size()) + " cosets");

  failures = 0;
  std::map<CosetElement, FreeWord> images;
  oracle::for_each_reduced_word(6, [&](const FreeWord& w) {
    auto [it, inserted] = images.emplace(embed_pure(w), w);
    if (!inserted || !(pure_word(it->first) == w)) ++failures;
  });
  rec.add("embed_pure injective to degree 6", failures == 0, std::to_string(images.size()) + " words");
  return rec.results;
}

std::vector<CheckResult> run_counting(const Limits& limits) {
  Recorder rec{"counting", {}};
  std::size_t failures = 0;
  for (std::uint64_t x = 0; x <= limits.max_x; ++x) {
    const Threshold t{mpz_class(static_cast<unsigned long>(x))};
    if (count_tuples_j(1, t) != x / 3) ++failures;
    const auto exact = count_tuples(t);
    if (exact != oracle::brute_count_tuples(x)) ++failures;
    Count by_length = 0;
    for (unsigned j = 1; j <= log3_floor(t); ++j) by_length += count_tuples_j(j, t);
    if (by_length != exact) ++failures;
  }
  rec.add("tuple counts vs oracle, N_1* = floor(X/3), N* = sum N_j*", failures == 0,
          "X <= " + std::to_string(limits.max_x));

  std::vector<std::uint64_t> grid;
  for (std::uint64_t p = 1, k = 0; k <= limits.max_len; ++k, p *= 3) {
    grid.push_back(p);
    grid.push_back(2 * p);
  }
  const unsigned len = std::min(limits.max_len, 14u);
  const auto brute = oracle::brute_count_words_grid(grid, len);
  failures = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    for (unsigned l = 0; l <= len; ++l) {
      if (count_words_bounded(Threshold{mpz_class(static_cast<unsigned long>(grid[i]))}, l) != brute[i][l]) {
        ++failures;
      }
    }
  }
  rec.add("bounded word counts vs oracle", failures == 0,
          "L <= " + std::to_string(len) + ", X in {3^k, 2*3^k}");

  failures = 0;
  for (std::uint64_t x = 0; x <= limits.max_x; x += 1 + x / 50) {
    const Threshold t{mpz_class(static_cast<unsigned long>(x))};
    const auto exact = count_words(t);
    const auto bound = bound_words(t);
    if (2 * exact > t.x * t.x * t.x || exact > bound.chain) ++failures;
  }
  rec.add("2 N^{L-} <= X^3 and N^{L-} <= 2 4^j0 N*", failures == 0);
  return rec.results;
}

std::vector<CheckResult> run_classes(const Limits& limits) {
  Recorder rec{"classes", {}};
  const unsigned top = std::min(limits.pairs, 10u);
  std::size_t failures = 0;
  for (unsigned j = 1; j <= top; ++j) {
    const auto family = enumerate_family(j);
    std::set<FamilyWord> covered;
    std::size_t orbits = 0;
    for (const auto& w : family) {
      if (covered.contains(w)) continue;
      const auto orbit = orbit_of(w);
      if ((2 * j) % orbit.size() != 0) ++failures;
      covered.insert(orbit.begin(), orbit.end());
      ++orbits;
    }
    if (covered.size() != family.size() || class_count(j) != orbits) ++failures;
    // 2^(2j) / (2j) <= classes
    if (Count(static_cast<unsigned long>(2 * j)) * class_count(j) < Count(static_cast<unsigned long>(family.size()))) {
      ++failures;
    }
  }
  rec.add("orbits partition family, sizes divide 2j, classes >= 4^j/(2j)", failures == 0,
          "j <= " + std::to_string(top));

  for (unsigned j = 2; j <= std::max(2u, std::min(limits.pairs, 3u)); ++j) {
    const auto hits = search_forbidden_conjugations(j, limits.conj_len);
    rec.add("no s_i beta1 Delta^ell conjugation between family words, j=" + std::to_string(j), hits.empty(),
            std::to_string(hits.size()) + " hits, conjugator degree <= " + std::to_string(limits.conj_len));
  }
  const auto control = conjugate(eval(parse_braid("S2")), eval(parse_braid("s1^-4 D^4")));
  rec.add("positive control s2^-1 (s1^-4 D^4) s2", control == embed_pure(parse_word("a1 a2 a1 a2")));
  return rec.results;
}

std::vector<CheckResult> run_suite(const std::string& suite, const Limits& limits) {
  std::vector<CheckResult> all;
  auto append = [&](std::vector<CheckResult> r) { all.insert(all.end(), r.begin(), r.end()); };
  if (suite == "words" || suite == "all") append(run_words(limits));
  if (suite == "braid" || suite == "all") append(run_braid(limits));
  if (suite == "counting" || suite == "all") append(run_counting(limits));
  if (suite == "classes" || suite == "all") append(run_classes(limits));
  if (all.empty()) throw std::invalid_argument("unknown suite '" + suite + "'");
  return all;
}

}  // namespace braidcount::verify
