#include "braidcount/braid.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "braidcount/error.hpp"
#include "tokens.hpp"

namespace braidcount {

namespace {

constexpr bool same_factor(CosetLetter x, CosetLetter y) {
  return (x == CosetLetter::a) == (y == CosetLetter::a);
}

constexpr int t_exponent(CosetLetter x) { return x == CosetLetter::t ? 1 : 2; }

constexpr CosetLetter t_letter(int e) { return e == 1 ? CosetLetter::t : CosetLetter::t2; }

// "p then q"
constexpr Permutation then(const Permutation& p, const Permutation& q) {
  return {q[p[0]], q[p[1]], q[p[2]]};
}

constexpr Permutation kIdentityPerm{0, 1, 2};
constexpr Permutation kS1Perm{1, 0, 2};
constexpr Permutation kS2Perm{0, 2, 1};
// a = s1 s2 s1, t = s1 s2
constexpr Permutation kDeltaPerm = then(then(kS1Perm, kS2Perm), kS1Perm);
constexpr Permutation kTPerm = then(kS1Perm, kS2Perm);

constexpr Permutation letter_perm(CosetLetter x) {
  switch (x) {
    case CosetLetter::a: return kDeltaPerm;
    case CosetLetter::t: return kTPerm;
    case CosetLetter::t2: return then(kTPerm, kTPerm);
  }
  return kIdentityPerm;
}

void push_sigma(CosetElement& x, int generator, int exponent) {
  // s1 = t2 a, s1^-1 = a t, s2 = a t2, s2^-1 = t a
  if (generator == 1) {
    if (exponent > 0) {
      x.push(CosetLetter::t2);
      x.push(CosetLetter::a);
    } else {
      x.push(CosetLetter::a);
      x.push(CosetLetter::t);
    }
  } else {
    if (exponent > 0) {
      x.push(CosetLetter::a);
      x.push(CosetLetter::t2);
    } else {
      x.push(CosetLetter::t);
      x.push(CosetLetter::a);
    }
  }
}

std::int64_t checked_mul_add(std::int64_t m, std::int64_t factor, std::int64_t add) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(m, factor, &r) || __builtin_add_overflow(r, add, &r)) {
    throw std::overflow_error("exponent overflow");
  }
  return r;
}

// Reidemeister-Schreier transducer for the pure subgroup (index 6). Reading a
// canonical letter x in coset state p emits the pure element
// T_p x T_{p.x}^-1, stored as a word in a1, a2.
class SchreierTable {
 public:
  static const SchreierTable& instance() {
    static const SchreierTable table;
    return table;
  }

  std::size_t state_of(const Permutation& p) const {
    for (std::size_t i = 0; i < states_.size(); ++i) {
      if (states_[i] == p) return i;
    }
    throw std::logic_error("permutation outside S3");
  }

  std::size_t next(std::size_t state, CosetLetter x) const {
    return next_[state][static_cast<std::size_t>(x)];
  }
  const FreeWord& emitted(std::size_t state, CosetLetter x) const {
    return emitted_[state][static_cast<std::size_t>(x)];
  }

 private:
  SchreierTable() {
    constexpr std::array letters{CosetLetter::a, CosetLetter::t, CosetLetter::t2};
    states_.push_back(kIdentityPerm);
    transversal_.emplace_back();
    for (std::size_t i = 0; i < states_.size(); ++i) {
      for (auto x : letters) {
        const auto p = then(states_[i], letter_perm(x));
        if (std::find(states_.begin(), states_.end(), p) == states_.end()) {
          states_.push_back(p);
          auto rep = transversal_[i];
          rep.push(x);
          transversal_.push_back(rep);
        }
      }
    }
    if (states_.size() != 6) throw std::logic_error("coset enumeration did not find 6 cosets");

    // Pure elements of short a-length, keyed by canonical form.
    std::map<CosetElement, FreeWord> known;
    std::vector<FreeWord> frontier{FreeWord{}};
    known.emplace(CosetElement{}, FreeWord{});
    for (int len = 1; len <= 6; ++len) {
      std::vector<FreeWord> grown;
      for (const auto& w : frontier) {
        for (auto g : {Generator::a1, Generator::a2}) {
          for (int e : {1, -1}) {
            const auto next = w * FreeWord::generator(g, e);
            if (next.degree() != len) continue;
            known.emplace(embed_pure(next), next);
            grown.push_back(next);
          }
        }
      }
      frontier = std::move(grown);
    }

    for (std::size_t i = 0; i < 6; ++i) {
      for (auto x : letters) {
        const auto target = state_of(then(states_[i], letter_perm(x)));
        auto h = transversal_[i];
        h.push(x);
        h *= transversal_[target].inverse();
        const auto it = known.find(h);
        if (it == known.end()) throw std::logic_error("Schreier generator outside search radius");
        next_[i][static_cast<std::size_t>(x)] = target;
        emitted_[i][static_cast<std::size_t>(x)] = it->second;
      }
    }
  }

  std::vector<Permutation> states_;
  std::vector<CosetElement> transversal_;
  std::array<std::array<std::size_t, 3>, 6> next_{};
  std::array<std::array<FreeWord, 3>, 6> emitted_{};
};

}  // namespace

CosetElement CosetElement::delta() {
  CosetElement d;
  d.push(CosetLetter::a);
  return d;
}

void CosetElement::push(CosetLetter letter) {
  if (letters_.empty() || !same_factor(letters_.back(), letter)) {
    letters_.push_back(letter);
    return;
  }
  if (letter == CosetLetter::a) {
    letters_.pop_back();
    return;
  }
  const int e = (t_exponent(letters_.back()) + t_exponent(letter)) % 3;
  if (e == 0) {
    letters_.pop_back();
  } else {
    letters_.back() = t_letter(e);
  }
}

CosetElement& CosetElement::operator*=(const CosetElement& rhs) {
  letters_.reserve(letters_.size() + rhs.letters_.size());
  for (auto x : rhs.letters_) push(x);
  return *this;
}

CosetElement CosetElement::inverse() const {
  CosetElement inv;
  inv.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    switch (*it) {
      case CosetLetter::a: inv.letters_.push_back(CosetLetter::a); break;
      case CosetLetter::t: inv.letters_.push_back(CosetLetter::t2); break;
      case CosetLetter::t2: inv.letters_.push_back(CosetLetter::t); break;
    }
  }
  return inv;
}

Permutation permutation(const CosetElement& x) {
  Permutation p = kIdentityPerm;
  for (auto l : x.letters()) p = then(p, letter_perm(l));
  return p;
}

bool is_pure(const CosetElement& x) { return permutation(x) == kIdentityPerm; }

CosetElement eval(BraidLetter letter) {
  CosetElement x;
  push_sigma(x, letter.generator, letter.exponent);
  return x;
}

CosetElement eval(const BraidWord& b) {
  CosetElement x;
  for (const auto& l : b.letters) push_sigma(x, l.generator, l.exponent);
  return x;
}

CosetElement sigma_power(int generator, std::int64_t exponent) {
  CosetElement x;
  const int dir = exponent < 0 ? -1 : 1;
  for (std::int64_t i = 0; i != exponent; i += dir) push_sigma(x, generator, dir);
  return x;
}

CosetElement embed_pure(const FreeWord& w) {
  CosetElement x;
  for (const auto& t : w.terms()) {
    const int gen = t.gen == Generator::a1 ? 1 : 2;
    const int dir = t.exponent < 0 ? -1 : 1;
    for (std::int64_t i = 0; i != t.exponent; i += dir) {
      push_sigma(x, gen, dir);
      push_sigma(x, gen, dir);
    }
  }
  return x;
}

FreeWord pure_word(const CosetElement& x) {
  const auto& table = SchreierTable::instance();
  std::size_t state = table.state_of(kIdentityPerm);
  std::vector<Term> raw;
  for (auto l : x.letters()) {
    const auto& piece = table.emitted(state, l);
    raw.insert(raw.end(), piece.terms().begin(), piece.terms().end());
    state = table.next(state, l);
  }
  if (state != table.state_of(kIdentityPerm)) {
    throw PreconditionError("element is not in the pure subgroup");
  }
  return reduce(raw);
}

std::int64_t q(std::int64_t l) {
  if (l == 0) throw PreconditionError("q is undefined at 0");
  if (l % 2 == 0) return l;
  return l > 0 ? l - 1 : l + 1;
}

NormalForm normal_form(const CosetElement& x) {
  for (int ell : {0, 1}) {
    auto y = x;
    if (ell == 1) y.push(CosetLetter::a);  // Delta^-1 = Delta in the quotient
    const auto p = permutation(y);
    if (p == kIdentityPerm) {
      auto w = pure_word(y);
      if (w.is_identity()) return PowerOfDelta{ell};
      const auto first = w.front();
      const int j = first.gen == Generator::a1 ? 1 : 2;
      const auto rest = reduce(w.terms().subspan(1));
      return GeneralForm{j, checked_mul_add(first.exponent, 2, 0), rest, ell};
    }
    for (int j : {1, 2}) {
      if (p != (j == 1 ? kS1Perm : kS2Perm)) continue;
      // y = s_j^k b1 with k odd, so s_j^-1 y = a_j^((k-1)/2) b1 is pure.
      auto pure_part = eval(BraidLetter{j, -1});
      pure_part *= y;
      auto w = pure_word(pure_part);
      const auto gen_j = j == 1 ? Generator::a1 : Generator::a2;
      if (!w.is_identity() && w.front().gen == gen_j) {
        const auto m = w.front().exponent;
        return GeneralForm{j, checked_mul_add(m, 2, 1), reduce(w.terms().subspan(1)), ell};
      }
      return GeneralForm{j, 1, w, ell};
    }
  }
  throw std::logic_error("no Delta parity yields a normal form");
}

NormalForm normal_form(const BraidWord& b) { return normal_form(eval(b)); }

CosetElement remultiply(const NormalForm& form) {
  if (const auto* pd = std::get_if<PowerOfDelta>(&form)) {
    return pd->ell % 2 == 0 ? CosetElement{} : CosetElement::delta();
  }
  const auto& g = std::get<GeneralForm>(form);
  auto x = sigma_power(g.j, g.k);
  x *= embed_pure(g.b1);
  if (g.ell % 2 != 0) x.push(CosetLetter::a);
  return x;
}

FreeWord theta(const NormalForm& form) {
  const auto* g = std::get_if<GeneralForm>(&form);
  if (g == nullptr) throw PreconditionError("theta is undefined for powers of Delta");
  const auto gen = g->j == 1 ? Generator::a1 : Generator::a2;
  return FreeWord::generator(gen, q(g->k) / 2) * g->b1;
}

FreeWord delta_conjugate(const FreeWord& w) {
  std::vector<Term> swapped;
  swapped.reserve(w.size());
  for (const auto& t : w.terms()) swapped.push_back({other(t.gen), t.exponent});
  return reduce(swapped);
}

CosetElement conjugate(const CosetElement& g, const CosetElement& x) {
  auto r = g;
  r *= x;
  r *= g.inverse();
  return r;
}

BraidWord parse_braid(std::string_view text) {
  constexpr std::size_t kMaxLetters = std::size_t{1} << 24;
  BraidWord b;
  for (const auto& tok : detail::tokenize(text)) {
    int gen = 0;
    int dir = 1;
    if (tok.symbol == "s1" || tok.symbol == "S1") {
      gen = 1;
      dir = tok.symbol[0] == 'S' ? -1 : 1;
    } else if (tok.symbol == "s2" || tok.symbol == "S2") {
      gen = 2;
      dir = tok.symbol[0] == 'S' ? -1 : 1;
    } else if (tok.symbol != "D") {
      throw ParseError("unknown braid symbol '" + tok.symbol + "'", tok.position);
    }
    const std::int64_t e = tok.exponent;
    const std::uint64_t reps = e < 0 ? 0 - static_cast<std::uint64_t>(e) : static_cast<std::uint64_t>(e);
    const std::uint64_t per = gen == 0 ? 3 : 1;
    if (reps > kMaxLetters || b.letters.size() + reps * per > kMaxLetters) {
      throw ParseError("braid word too long", tok.position);
    }
    const int sign = dir * (e < 0 ? -1 : 1);
    for (std::uint64_t i = 0; i < reps; ++i) {
      if (gen != 0) {
        b.letters.push_back({gen, sign});
      } else if (sign > 0) {
        b.letters.insert(b.letters.end(), {{1, 1}, {2, 1}, {1, 1}});
      } else {
        b.letters.insert(b.letters.end(), {{1, -1}, {2, -1}, {1, -1}});
      }
    }
  }
  return b;
}

std::string render(const BraidWord& b) {
  std::string out;
  const auto& ls = b.letters;
  for (std::size_t i = 0; i < ls.size();) {
    std::size_t j = i;
    while (j < ls.size() && ls[j] == ls[i]) ++j;
    const auto run = static_cast<std::int64_t>(j - i) * ls[i].exponent;
    if (!out.empty()) out += ' ';
    out += ls[i].generator == 1 ? "s1" : "s2";
    if (run != 1) out += "^" + std::to_string(run);
    i = j;
  }
  return out;
}

std::string render(const CosetElement& x) {
  if (x.is_identity()) return "e";
  std::string out;
  for (auto l : x.letters()) {
    if (!out.empty()) out += ' ';
    out += l == CosetLetter::a ? "a" : (l == CosetLetter::t ? "t" : "t2");
  }
  return out;
}

std::string render(const NormalForm& form) {
  if (const auto* pd = std::get_if<PowerOfDelta>(&form)) {
    return "power_of_delta ell=" + std::to_string(pd->ell);
  }
  const auto& g = std::get<GeneralForm>(form);
  const auto b1 = g.b1.is_identity() ? std::string("ε") : render(g.b1);
  return "j=" + std::to_string(g.j) + " k=" + std::to_string(g.k) + " b1=" + b1 +
         " ell=" + std::to_string(g.ell);
}

}  // namespace braidcount
