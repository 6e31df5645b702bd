#include "braidcount/words.hpp"

#include <algorithm>
#include <stdexcept>

#include "braidcount/error.hpp"
#include "tokens.hpp"

namespace braidcount {

namespace {

std::int64_t checked_add(std::int64_t x, std::int64_t y) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(x, y, &r)) throw std::overflow_error("exponent overflow");
  return r;
}

std::int64_t magnitude(std::int64_t e) {
  if (e == INT64_MIN) throw std::overflow_error("exponent overflow");
  return e < 0 ? -e : e;
}

int sign_of(std::int64_t e) { return e < 0 ? -1 : 1; }

}  // namespace

FreeWord FreeWord::generator(Generator g, std::int64_t exponent) {
  const Term t{g, exponent};
  return reduce(std::span<const Term>(&t, 1));
}

std::int64_t FreeWord::degree() const {
  std::int64_t total = 0;
  for (const auto& t : terms_) total = checked_add(total, magnitude(t.exponent));
  return total;
}

FreeWord FreeWord::inverse() const {
  FreeWord inv;
  inv.terms_.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (it->exponent == INT64_MIN) throw std::overflow_error("exponent overflow");
    inv.terms_.push_back({it->gen, -it->exponent});
  }
  return inv;
}

FreeWord operator*(const FreeWord& lhs, const FreeWord& rhs) {
  std::vector<Term> raw;
  raw.reserve(lhs.size() + rhs.size());
  raw.insert(raw.end(), lhs.terms_.begin(), lhs.terms_.end());
  raw.insert(raw.end(), rhs.terms_.begin(), rhs.terms_.end());
  return reduce(raw);
}

FreeWord reduce(std::span<const Term> raw) {
  FreeWord w;
  auto& stack = w.terms_;
  stack.reserve(raw.size());
  for (const auto& t : raw) {
    if (t.exponent == 0) continue;
    if (!stack.empty() && stack.back().gen == t.gen) {
      stack.back().exponent = checked_add(stack.back().exponent, t.exponent);
      if (stack.back().exponent == 0) stack.pop_back();
    } else {
      stack.push_back(t);
    }
  }
  return w;
}

std::vector<Term> Syllable::expand() const {
  if (kind == SyllableKind::first) return {Term{start, sign * degree}};
  std::vector<Term> out;
  out.reserve(static_cast<std::size_t>(degree));
  Generator g = start;
  for (std::int64_t i = 0; i < degree; ++i) {
    out.push_back({g, sign});
    g = other(g);
  }
  return out;
}

Generator Syllable::end() const noexcept {
  if (kind == SyllableKind::first || degree % 2 == 1) return start;
  return other(start);
}

SyllableDecomposition syllable_decompose(const FreeWord& w) {
  SyllableDecomposition out;
  const auto terms = w.terms();
  std::size_t i = 0;
  while (i < terms.size()) {
    const auto& t = terms[i];
    const auto mag = magnitude(t.exponent);
    if (mag >= 2) {
      out.push_back({SyllableKind::first, mag, sign_of(t.exponent), t.gen});
      ++i;
      continue;
    }
    // Maximal run of +-1 exponents with constant sign.
    std::size_t j = i + 1;
    while (j < terms.size() && terms[j].exponent == t.exponent) ++j;
    out.push_back({SyllableKind::second, static_cast<std::int64_t>(j - i), sign_of(t.exponent),
                   t.gen});
    i = j;
  }
  return out;
}

bool is_cyclically_reduced(const FreeWord& w) noexcept {
  return w.size() <= 1 || w.front().gen != w.back().gen;
}

CyclicReduction cyclic_reduce(const FreeWord& w) {
  std::vector<Term> core(w.terms().begin(), w.terms().end());
  std::vector<Term> conj;
  // Peel matching outer terms: w = a^p u a^q  ->  a^p (u a^(p+q)) a^-p.
  std::size_t lo = 0;
  std::size_t hi = core.size();
  while (hi - lo >= 2 && core[lo].gen == core[hi - 1].gen) {
    const auto p = core[lo].exponent;
    conj.push_back(core[lo]);
    ++lo;
    core[hi - 1].exponent = checked_add(core[hi - 1].exponent, p);
    if (core[hi - 1].exponent == 0) --hi;
  }
  std::vector<Term> kept(core.begin() + static_cast<std::ptrdiff_t>(lo),
                         core.begin() + static_cast<std::ptrdiff_t>(hi));
  return {reduce(kept), reduce(conj)};
}

bool is_cyclically_syllable_reduced(const FreeWord& w) {
  if (w.is_identity()) throw PreconditionError("cyclic syllable reduction is undefined for the identity");
  if (!is_cyclically_reduced(w)) throw PreconditionError("word is not cyclically reduced");
  if (w.size() == 1) return true;
  const auto terms = w.terms();
  const auto e0 = terms.front().exponent;
  if ((e0 == 1 || e0 == -1) &&
      std::all_of(terms.begin(), terms.end(), [e0](const Term& t) { return t.exponent == e0; })) {
    return true;
  }
  // Across the wrap the last and first terms use different generators, so
  // they merge into one syllable exactly when both are the same +-1 power.
  const auto e1 = terms.back().exponent;
  const bool merges = (e0 == 1 || e0 == -1) && e0 == e1;
  return !merges;
}

std::optional<FreeWord> free_conjugator(const FreeWord& w1, const FreeWord& w2) {
  const auto r1 = cyclic_reduce(w1);
  const auto r2 = cyclic_reduce(w2);
  const auto t1 = r1.core.terms();
  const auto t2 = r2.core.terms();
  if (t1.size() != t2.size()) return std::nullopt;
  const std::size_t n = t1.size();
  if (n == 0) return r1.conjugator * r2.conjugator.inverse();
  // Search t2 inside t1 t1.
  for (std::size_t r = 0; r < n; ++r) {
    bool match = true;
    for (std::size_t i = 0; i < n && match; ++i) match = t1[(r + i) % n] == t2[i];
    if (!match) continue;
    // core2 = P^-1 core1 P with P = the first r terms of core1.
    const FreeWord prefix = reduce(t1.subspan(0, r));
    return r1.conjugator * prefix * r2.conjugator.inverse();
  }
  return std::nullopt;
}

bool are_conjugate_free(const FreeWord& w1, const FreeWord& w2) {
  return free_conjugator(w1, w2).has_value();
}

FreeWord parse_word(std::string_view text) {
  std::vector<Term> raw;
  for (const auto& tok : detail::tokenize(text)) {
    Generator g{};
    int dir = 1;
    if (tok.symbol == "a1") {
      g = Generator::a1;
    } else if (tok.symbol == "a2") {
      g = Generator::a2;
    } else if (tok.symbol == "A1") {
      g = Generator::a1;
      dir = -1;
    } else if (tok.symbol == "A2") {
      g = Generator::a2;
      dir = -1;
    } else {
      throw ParseError("unknown word symbol '" + tok.symbol + "'", tok.position);
    }
    raw.push_back({g, dir * tok.exponent});
  }
  return reduce(raw);
}

std::string render(const FreeWord& w) {
  std::string out;
  for (const auto& t : w.terms()) {
    if (!out.empty()) out += ' ';
    out += t.gen == Generator::a1 ? "a1" : "a2";
    if (t.exponent != 1) out += "^" + std::to_string(t.exponent);
  }
  return out;
}

}  // namespace braidcount
