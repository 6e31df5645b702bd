#pragma once

// Arbitrary-precision helpers: an RAII MPFR float, directed-rounding decimal
// formatting, and closed-form real monomials c * pi^p * prod log(r)^e used for
// thresholds such as 600*log(8) that must be compared exactly.

#include <gmpxx.h>
#include <mpfr.h>

#include <map>
#include <string>
#include <string_view>
#include <utility>

namespace braidcount {

// Working precision in bits; BRAIDCOUNT_PRECISION overrides the default 128.
mpfr_prec_t working_precision();

class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t prec = working_precision()) { mpfr_init2(value_, prec); }
  BigFloat(const BigFloat& other) {
    mpfr_init2(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  BigFloat(BigFloat&& other) noexcept : BigFloat(mpfr_get_prec(other.value_)) {
    mpfr_swap(value_, other.value_);
  }
  BigFloat& operator=(BigFloat other) noexcept {
    mpfr_swap(value_, other.value_);
    return *this;
  }
  ~BigFloat() { mpfr_clear(value_); }

  mpfr_ptr get() noexcept { return value_; }
  mpfr_srcptr get() const noexcept { return value_; }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

 private:
  mpfr_t value_;
};

// 12 significant digits rounded towards +inf / -inf.
std::string format_up(const BigFloat& x);
std::string format_down(const BigFloat& x);

// Exact decimal rendering of a rational with a terminating expansion
// (denominator 2^a 5^b); other rationals fall back to format_up.
std::string format_rational(const mpq_class& x);

struct Enclosure {
  BigFloat lo;
  BigFloat hi;
};

class ClosedForm {
 public:
  ClosedForm() = default;
  explicit ClosedForm(mpq_class coefficient) : coeff_(std::move(coefficient)) { normalize(); }

  static ClosedForm pi();
  // log(n) for n >= 1; perfect powers are rewritten as e * log(root).
  static ClosedForm log_of(const mpz_class& n);

  const mpq_class& coefficient() const noexcept { return coeff_; }
  bool is_rational() const noexcept { return pi_power_ == 0 && logs_.empty(); }
  bool is_zero() const noexcept { return coeff_ == 0; }
  int sign() const { return sgn(coeff_); }

  // Nonzero when the monomial is exactly c * log(r) with r a non-power base.
  const mpz_class* single_log_base() const;

  ClosedForm& operator*=(const ClosedForm& rhs);
  ClosedForm& operator/=(const ClosedForm& rhs);
  friend ClosedForm operator*(ClosedForm lhs, const ClosedForm& rhs) { return lhs *= rhs; }
  friend ClosedForm operator/(ClosedForm lhs, const ClosedForm& rhs) { return lhs /= rhs; }
  friend bool operator==(const ClosedForm&, const ClosedForm&) = default;

  // Guaranteed lo <= value <= hi at `prec` bits.
  Enclosure enclose(mpfr_prec_t prec) const;

  std::string to_string() const;

 private:
  void normalize();

  mpq_class coeff_{0};
  int pi_power_ = 0;
  std::map<mpz_class, int> logs_;
};

// Sign of a - b, decided exactly when a/b is rational and by interval
// refinement otherwise. Throws std::runtime_error if refinement to the
// precision cap cannot separate the values.
int compare(const ClosedForm& a, const ClosedForm& b);

mpz_class floor(const ClosedForm& x);

// floor(exp(x)) for x >= 0, exact for rational multiples of a single log.
mpz_class floor_exp(const ClosedForm& x);

// exp(x) rounded up.
BigFloat exp_up(const ClosedForm& x);

// Parses products/quotients of decimals, `pi`, `log(<integer>)` and
// parenthesised sub-expressions, with optional unary minus.
ClosedForm parse_closed_form(std::string_view text);

}  // namespace braidcount
