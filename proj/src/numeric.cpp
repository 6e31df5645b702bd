#include "braidcount/numeric.hpp"

#include <cctype>
#include <cstdlib>
#include <memory>
#include <stdexcept>

#include "braidcount/error.hpp"

namespace braidcount {

namespace {

constexpr mpfr_prec_t kDefaultPrecision = 128;
constexpr mpfr_prec_t kPrecisionCap = mpfr_prec_t{1} << 16;

std::string format_with(const BigFloat& x, const char* fmt) {
  char* buf = nullptr;
  if (mpfr_asprintf(&buf, fmt, x.get()) < 0) throw std::runtime_error("mpfr_asprintf failed");
  std::unique_ptr<char, void (*)(char*)> owner(buf, [](char* p) { mpfr_free_str(p); });
  return std::string(buf);
}

// [lo, hi]^e for 0 < lo <= hi.
void pow_interval(BigFloat& lo, BigFloat& hi, int e) {
  if (e >= 0) {
    mpfr_pow_si(lo.get(), lo.get(), e, MPFR_RNDD);
    mpfr_pow_si(hi.get(), hi.get(), e, MPFR_RNDU);
  } else {
    BigFloat new_lo(mpfr_get_prec(lo.get()));
    mpfr_pow_si(new_lo.get(), hi.get(), e, MPFR_RNDD);
    mpfr_pow_si(hi.get(), lo.get(), e, MPFR_RNDU);
    lo = std::move(new_lo);
  }
}

}  // namespace

mpfr_prec_t working_precision() {
  static const mpfr_prec_t prec = [] {
    const char* env = std::getenv("BRAIDCOUNT_PRECISION");
    if (env == nullptr || *env == '\0') return kDefaultPrecision;
    const long bits = std::strtol(env, nullptr, 10);
    if (bits < 32 || bits > kPrecisionCap) return kDefaultPrecision;
    return static_cast<mpfr_prec_t>(bits);
  }();
  return prec;
}

std::string format_up(const BigFloat& x) { return format_with(x, "%.12RUg"); }
std::string format_down(const BigFloat& x) { return format_with(x, "%.12RDg"); }

std::string format_rational(const mpq_class& x) {
  mpz_class den = x.get_den();
  unsigned twos = 0;
  unsigned fives = 0;
  while (mpz_divisible_ui_p(den.get_mpz_t(), 2) != 0) {
    den /= 2;
    ++twos;
  }
  while (mpz_divisible_ui_p(den.get_mpz_t(), 5) != 0) {
    den /= 5;
    ++fives;
  }
  if (den != 1) {
    BigFloat f;
    mpfr_set_q(f.get(), x.get_mpq_t(), MPFR_RNDU);
    return format_up(f);
  }
  const unsigned places = std::max(twos, fives);
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, places);
  mpz_class scaled = x.get_num() * scale / x.get_den();
  const bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  std::string digits = scaled.get_str();
  if (places > 0) {
    if (digits.size() <= places) digits.insert(0, places + 1 - digits.size(), '0');
    digits.insert(digits.size() - places, ".");
    while (digits.back() == '0') digits.pop_back();
    if (digits.back() == '.') digits.pop_back();
  }
  return negative ? "-" + digits : digits;
}

ClosedForm ClosedForm::pi() {
  ClosedForm c(mpq_class(1));
  c.pi_power_ = 1;
  return c;
}

ClosedForm ClosedForm::log_of(const mpz_class& n) {
  if (n < 1) throw PreconditionError("log argument must be >= 1");
  if (n == 1) return ClosedForm{};
  mpz_class base = n;
  unsigned long exponent = 1;
  const auto bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  for (unsigned long e = bits; e >= 2; --e) {
    mpz_class root;
    if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), e) != 0) {
      base = root;
      exponent = e;
      break;
    }
  }
  ClosedForm c(mpq_class(static_cast<long>(exponent)));
  c.logs_[base] = 1;
  return c;
}

const mpz_class* ClosedForm::single_log_base() const {
  if (pi_power_ != 0 || logs_.size() != 1 || logs_.begin()->second != 1) return nullptr;
  return &logs_.begin()->first;
}

void ClosedForm::normalize() {
  coeff_.canonicalize();
  if (coeff_ == 0) {
    pi_power_ = 0;
    logs_.clear();
  }
  std::erase_if(logs_, [](const auto& kv) { return kv.second == 0; });
}

ClosedForm& ClosedForm::operator*=(const ClosedForm& rhs) {
  coeff_ *= rhs.coeff_;
  pi_power_ += rhs.pi_power_;
  for (const auto& [base, e] : rhs.logs_) logs_[base] += e;
  normalize();
  return *this;
}

ClosedForm& ClosedForm::operator/=(const ClosedForm& rhs) {
  if (rhs.is_zero()) throw std::domain_error("division by zero");
  coeff_ /= rhs.coeff_;
  pi_power_ -= rhs.pi_power_;
  for (const auto& [base, e] : rhs.logs_) logs_[base] -= e;
  normalize();
  return *this;
}

Enclosure ClosedForm::enclose(mpfr_prec_t prec) const {
  Enclosure out{BigFloat(prec), BigFloat(prec)};
  // Transcendental part, strictly positive.
  BigFloat tlo(prec);
  BigFloat thi(prec);
  mpfr_set_ui(tlo.get(), 1, MPFR_RNDN);
  mpfr_set_ui(thi.get(), 1, MPFR_RNDN);
  auto multiply = [&](BigFloat flo, BigFloat fhi, int e) {
    pow_interval(flo, fhi, e);
    mpfr_mul(tlo.get(), tlo.get(), flo.get(), MPFR_RNDD);
    mpfr_mul(thi.get(), thi.get(), fhi.get(), MPFR_RNDU);
  };
  if (pi_power_ != 0) {
    BigFloat lo(prec);
    BigFloat hi(prec);
    mpfr_const_pi(lo.get(), MPFR_RNDD);
    mpfr_const_pi(hi.get(), MPFR_RNDU);
    multiply(std::move(lo), std::move(hi), pi_power_);
  }
  for (const auto& [base, e] : logs_) {
    BigFloat lo(prec);
    BigFloat hi(prec);
    mpfr_set_z(lo.get(), base.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(hi.get(), base.get_mpz_t(), MPFR_RNDU);
    mpfr_log(lo.get(), lo.get(), MPFR_RNDD);
    mpfr_log(hi.get(), hi.get(), MPFR_RNDU);
    multiply(std::move(lo), std::move(hi), e);
  }
  BigFloat clo(prec);
  BigFloat chi(prec);
  mpfr_set_q(clo.get(), coeff_.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(chi.get(), coeff_.get_mpq_t(), MPFR_RNDU);
  if (coeff_ >= 0) {
    mpfr_mul(out.lo.get(), clo.get(), tlo.get(), MPFR_RNDD);
    mpfr_mul(out.hi.get(), chi.get(), thi.get(), MPFR_RNDU);
  } else {
    mpfr_mul(out.lo.get(), clo.get(), thi.get(), MPFR_RNDD);
    mpfr_mul(out.hi.get(), chi.get(), tlo.get(), MPFR_RNDU);
  }
  return out;
}

std::string ClosedForm::to_string() const {
  std::string out = coeff_.get_str();
  if (pi_power_ != 0) {
    out += "*pi";
    if (pi_power_ != 1) out += "^" + std::to_string(pi_power_);
  }
  for (const auto& [base, e] : logs_) {
    out += "*log(" + base.get_str() + ")";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

int compare(const ClosedForm& a, const ClosedForm& b) {
  const int sa = a.sign();
  const int sb = b.sign();
  if (sa != sb || sa == 0) return sa < sb ? -1 : (sa > sb ? 1 : 0);
  const ClosedForm ratio = a / b;  // positive
  int c = 0;
  if (ratio.is_rational()) {
    c = cmp(ratio.coefficient(), 1);
    c = c < 0 ? -1 : (c > 0 ? 1 : 0);
  } else {
    for (mpfr_prec_t prec = working_precision();; prec *= 2) {
      if (prec > kPrecisionCap) throw std::runtime_error("cannot separate " + a.to_string() + " and " + b.to_string());
      const auto enc = ratio.enclose(prec);
      if (mpfr_cmp_ui(enc.lo.get(), 1) > 0) {
        c = 1;
        break;
      }
      if (mpfr_cmp_ui(enc.hi.get(), 1) < 0) {
        c = -1;
        break;
      }
    }
  }
  return sa > 0 ? c : -c;
}

mpz_class floor(const ClosedForm& x) {
  if (x.is_rational()) {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), x.coefficient().get_num_mpz_t(), x.coefficient().get_den_mpz_t());
    return r;
  }
  for (mpfr_prec_t prec = working_precision(); prec <= kPrecisionCap; prec *= 2) {
    const auto enc = x.enclose(prec);
    mpz_class lo;
    mpz_class hi;
    mpfr_get_z(lo.get_mpz_t(), enc.lo.get(), MPFR_RNDD);
    mpfr_get_z(hi.get_mpz_t(), enc.hi.get(), MPFR_RNDD);
    if (lo == hi) return lo;
  }
  throw std::runtime_error("cannot certify floor of " + x.to_string());
}

mpz_class floor_exp(const ClosedForm& x) {
  if (x.sign() < 0) throw PreconditionError("exponent must be nonnegative");
  if (x.is_zero()) return 1;
  if (const auto* base = x.single_log_base()) {
    // exp(a/b * log r) = r^(a/b)
    const auto& c = x.coefficient();
    if (!c.get_num().fits_ulong_p() || !c.get_den().fits_ulong_p()) {
      throw std::runtime_error("exponent too large");
    }
    const unsigned long a = c.get_num().get_ui();
    const unsigned long b = c.get_den().get_ui();
    if (static_cast<double>(a) * static_cast<double>(mpz_sizeinbase(base->get_mpz_t(), 2)) > (1 << 26)) {
      throw std::runtime_error("threshold too large");
    }
    mpz_class power;
    mpz_pow_ui(power.get_mpz_t(), base->get_mpz_t(), a);
    mpz_class root;
    mpz_root(root.get_mpz_t(), power.get_mpz_t(), b);
    return root;
  }
  for (mpfr_prec_t prec = working_precision(); prec <= kPrecisionCap; prec *= 2) {
    auto enc = x.enclose(prec);
    mpfr_exp(enc.lo.get(), enc.lo.get(), MPFR_RNDD);
    mpfr_exp(enc.hi.get(), enc.hi.get(), MPFR_RNDU);
    mpz_class lo;
    mpz_class hi;
    mpfr_get_z(lo.get_mpz_t(), enc.lo.get(), MPFR_RNDD);
    mpfr_get_z(hi.get_mpz_t(), enc.hi.get(), MPFR_RNDD);
    if (lo == hi) return lo;
  }
  throw std::runtime_error("cannot certify floor(exp(" + x.to_string() + "))");
}

BigFloat exp_up(const ClosedForm& x) {
  BigFloat r;
  // r^(a/b) is often an integer (e.g. exp(2/3 log 8) = 4); keep it exact then.
  if (const auto* base = x.single_log_base(); base != nullptr && x.sign() > 0) {
    const auto& c = x.coefficient();
    if (c.get_num().fits_ulong_p() && c.get_den().fits_ulong_p() && c.get_num() < 4096) {
      mpz_class power;
      mpz_pow_ui(power.get_mpz_t(), base->get_mpz_t(), c.get_num().get_ui());
      mpz_class root;
      if (mpz_root(root.get_mpz_t(), power.get_mpz_t(), c.get_den().get_ui()) != 0 &&
          mpfr_set_z(r.get(), root.get_mpz_t(), MPFR_RNDU) == 0) {
        return r;
      }
    }
  }
  auto enc = x.enclose(working_precision());
  mpfr_exp(r.get(), enc.hi.get(), MPFR_RNDU);
  return r;
}

namespace {

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  ClosedForm parse() {
    auto value = product();
    skip_space();
    if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
    return value;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) throw ParseError(std::string("expected '") + c + "'", pos_);
  }

  ClosedForm product() {
    auto value = factor();
    while (true) {
      if (accept('*')) {
        value *= factor();
      } else if (accept('/')) {
        const auto at = pos_;
        auto divisor = factor();
        if (divisor.is_zero()) throw ParseError("division by zero", at);
        value /= divisor;
      } else {
        return value;
      }
    }
  }

  mpz_class integer() {
    skip_space();
    const auto start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected integer", start);
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  ClosedForm factor() {
    skip_space();
    if (accept('-')) return ClosedForm(mpq_class(-1)) * factor();
    if (accept('(')) {
      auto inner = product();
      expect(')');
      return inner;
    }
    const auto start = pos_;
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      mpz_class whole = integer();
      mpq_class value(whole);
      if (pos_ < text_.size() && text_[pos_] == '.') {
        ++pos_;
        const auto frac_start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        const auto frac = text_.substr(frac_start, pos_ - frac_start);
        if (!frac.empty()) {
          mpz_class scale;
          mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
          value += mpq_class(mpz_class(std::string(frac)), scale);
        }
      }
      return ClosedForm(value);
    }
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const auto ident = text_.substr(start, pos_ - start);
    if (ident == "pi") return ClosedForm::pi();
    if (ident == "log") {
      expect('(');
      const auto at = pos_;
      auto n = integer();
      if (n < 1) throw ParseError("log argument must be >= 1", at);
      expect(')');
      return ClosedForm::log_of(n);
    }
    throw ParseError(ident.empty() ? "expected a number, pi or log(n)" : "unknown identifier '" + std::string(ident) + "'",
                     start);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ClosedForm parse_closed_form(std::string_view text) { return ExprParser(text).parse(); }

}  // namespace braidcount
