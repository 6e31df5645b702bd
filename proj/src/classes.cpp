#include "braidcount/classes.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "braidcount/error.hpp"
#include "braidcount/invariants.hpp"

namespace braidcount {

namespace {

constexpr unsigned kDirectEnumerationLimit = 12;  // 2^24 sign vectors
constexpr unsigned kMaxReportIndex = 4096;
constexpr unsigned kMaxListedWords = 1u << 16;

FreeWord alternating_word(const std::vector<std::int8_t>& signs, Generator first) {
  std::vector<Term> terms;
  terms.reserve(signs.size());
  Generator g = first;
  for (auto s : signs) {
    terms.push_back({g, 2 * static_cast<std::int64_t>(s)});
    g = other(g);
  }
  return reduce(terms);
}

std::vector<std::int8_t> signs_of_mask(std::uint64_t mask, unsigned n) {
  std::vector<std::int8_t> signs(n);
  for (unsigned k = 0; k < n; ++k) signs[k] = ((mask >> (n - 1 - k)) & 1u) != 0 ? -1 : 1;
  return signs;
}

Count burnside_count(unsigned j) {
  const unsigned n = 2 * j;
  Count sum = 0;
  for (unsigned s = 0; s < n; ++s) {
    mpz_class fixed;
    mpz_ui_pow_ui(fixed.get_mpz_t(), 2, std::gcd(s, n));
    sum += fixed;
  }
  return sum / n;
}

Count enumerated_count(unsigned j) {
  const unsigned n = 2 * j;
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  std::uint64_t orbits = 0;
  for (std::uint64_t mask = 0; mask <= full; ++mask) {
    bool minimal = true;
    std::uint64_t r = mask;
    for (unsigned s = 1; s < n && minimal; ++s) {
      r = ((r << 1) | (r >> (n - 1))) & full;
      minimal = mask <= r;
    }
    if (minimal) ++orbits;
  }
  return Count(static_cast<unsigned long>(orbits));
}

// Reduced words of total degree <= max_degree, in generation order.
std::vector<FreeWord> words_up_to_degree(unsigned max_degree) {
  std::vector<FreeWord> out{FreeWord{}};
  std::size_t level_begin = 0;
  for (unsigned len = 1; len <= max_degree; ++len) {
    const std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (auto g : {Generator::a1, Generator::a2}) {
        for (int e : {1, -1}) {
          auto next = out[i] * FreeWord::generator(g, e);
          if (next.degree() == static_cast<std::int64_t>(len)) out.push_back(std::move(next));
        }
      }
    }
    level_begin = level_end;
  }
  return out;
}

BraidWord spell(int i, const FreeWord& beta1, int ell) {
  BraidWord b;
  b.letters.push_back({i, 1});
  for (const auto& t : beta1.terms()) {
    const int gen = t.gen == Generator::a1 ? 1 : 2;
    const int dir = t.exponent < 0 ? -1 : 1;
    for (std::int64_t k = 0; k != 2 * t.exponent; k += dir) b.letters.push_back({gen, dir});
  }
  if (ell == 1) b.letters.insert(b.letters.end(), {{1, 1}, {2, 1}, {1, 1}});
  return b;
}

// True iff log(p_plus) * scale <= y for the shared degree tuple of `words`.
bool family_within(const std::vector<FreeWord>& words, const ClosedForm& scale, const ClosedForm& y) {
  for (const auto& w : words) {
    if (compare(scale * l_plus(w).value(), y) > 0) return false;
  }
  return true;
}

std::string half_exp_up(const ClosedForm& exponent) {
  auto e = exp_up(exponent);
  mpfr_div_ui(e.get(), e.get(), 2, MPFR_RNDU);
  return format_up(e);
}

}  // namespace

FreeWord FamilyWord::expand() const { return alternating_word(signs, Generator::a1); }

std::vector<FamilyWord> enumerate_family(unsigned j) {
  if (j == 0) throw PreconditionError("family index must be >= 1");
  if (j > 12) throw PreconditionError("family enumeration limited to j <= 12");
  const unsigned n = 2 * j;
  std::vector<FamilyWord> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    out.push_back({signs_of_mask(mask, n)});
  }
  return out;
}

FamilyWord rotate(const FamilyWord& w) {
  FamilyWord r = w;
  if (!r.signs.empty()) std::rotate(r.signs.begin(), r.signs.begin() + 1, r.signs.end());
  return r;
}

std::set<FamilyWord> orbit_of(const FamilyWord& w) {
  std::set<FamilyWord> orbit;
  FamilyWord cur = w;
  for (std::size_t s = 0; s < w.signs.size(); ++s) {
    orbit.insert(cur);
    cur = rotate(cur);
  }
  return orbit;
}

CosetElement step_conjugator(const FamilyWord& w) {
  if (w.signs.empty()) return {};
  auto g = CosetElement::delta();
  g *= embed_pure(FreeWord::generator(Generator::a1, -2 * static_cast<std::int64_t>(w.signs.front())));
  return g;
}

Count class_count(unsigned j) {
  if (j == 0) throw PreconditionError("family index must be >= 1");
  return j <= kDirectEnumerationLimit ? enumerated_count(j) : burnside_count(j);
}

LowerBoundReport lower_bound_report(const ClosedForm& y, ReportVariant variant) {
  const bool entropy = variant == ReportVariant::entropy;
  const auto log8 = ClosedForm::log_of(8);
  auto unit = ClosedForm(mpq_class(300)) * log8;  // L+ of one +-2 syllable, scaled
  if (entropy) unit *= ClosedForm::pi();
  if (compare(y, ClosedForm(mpq_class(2)) * unit) < 0) {
    throw PreconditionError(entropy ? "Y must be at least 600*pi*log(8)" : "Y must be at least 600*log(8)");
  }
  const mpz_class index = floor(y / unit);
  if (index > kMaxReportIndex) throw PreconditionError("Y too large for an explicit report");

  LowerBoundReport r;
  r.variant = variant;
  r.y = y;
  r.index = static_cast<unsigned>(index.get_ui());
  const unsigned terms = entropy ? 2 * r.index : r.index;
  mpz_ui_pow_ui(r.family_size.get_mpz_t(), 2, terms);

  // Every family word has the same degree tuple (2, ..., 2); list them all
  // when feasible, otherwise check one representative.
  std::vector<FreeWord> words;
  const std::uint64_t listed = terms <= 16 ? (std::uint64_t{1} << terms) : 1;
  for (std::uint64_t mask = 0; mask < listed && mask < kMaxListedWords; ++mask) {
    words.push_back(alternating_word(signs_of_mask(mask, terms), Generator::a1));
  }
  const auto scale = entropy ? entropy_upper_scale() : lambda_upper_scale();
  r.family_within_y = family_within(words, scale, y);

  Count counted = r.family_size;
  ClosedForm exponent = y / ClosedForm(mpq_class(900));
  if (entropy) {
    r.classes = class_count(r.index);
    counted = *r.classes;
    exponent /= ClosedForm::pi();
  }
  r.target_bound = half_exp_up(exponent);
  // 1/2 exp(E) <= N  <=>  E <= log(2N)
  r.bound_satisfied = compare(exponent, ClosedForm::log_of(2 * counted)) <= 0;
  return r;
}

bool is_alternating_family_shape(const FreeWord& w) {
  if (w.is_identity()) return false;
  for (const auto& t : w.terms()) {
    if (t.exponent != 2 && t.exponent != -2) return false;
  }
  return true;
}

std::vector<ForbiddenConjugation> search_forbidden_conjugations(unsigned j, unsigned max_conj_len) {
  if (j < 2) throw PreconditionError("the family words need at least four terms (j >= 2)");
  std::vector<FreeWord> family;
  for (const auto& f : enumerate_family(j)) {
    family.push_back(f.expand());
    family.push_back(alternating_word(f.signs, Generator::a2));
  }
  std::vector<CosetElement> embedded;
  embedded.reserve(family.size());
  for (const auto& w : family) embedded.push_back(embed_pure(w));

  std::vector<ForbiddenConjugation> hits;
  for (const auto& beta1 : words_up_to_degree(max_conj_len)) {
    for (int i : {1, 2}) {
      for (int ell : {0, 1}) {
        auto beta = sigma_power(i, 1);
        beta *= embed_pure(beta1);
        if (ell == 1) beta *= CosetElement::delta();
        for (std::size_t f = 0; f < family.size(); ++f) {
          const auto image = conjugate(beta, embedded[f]);
          if (!is_pure(image)) continue;
          auto w = pure_word(image);
          if (is_alternating_family_shape(w)) {
            hits.push_back({family[f], std::move(w), spell(i, beta1, ell)});
          }
        }
      }
    }
  }
  return hits;
}

}  // namespace braidcount
