#pragma once

// L-, L+ and the two-sided bounds on the extremal length with totally real
// boundary values (Lambda_tr) and on entropy, built from syllable degrees.

#include <gmpxx.h>

#include <string>

#include "braidcount/braid.hpp"
#include "braidcount/numeric.hpp"
#include "braidcount/words.hpp"

namespace braidcount {

// The real number log(argument), argument >= 1. Sums of such values are
// products of arguments, so comparisons stay exact.
class LogInteger {
 public:
  LogInteger() = default;
  explicit LogInteger(mpz_class argument);

  const mpz_class& argument() const noexcept { return argument_; }
  ClosedForm value() const { return ClosedForm::log_of(argument_); }

  LogInteger& operator+=(const LogInteger& rhs) {
    argument_ *= rhs.argument_;
    return *this;
  }
  friend LogInteger operator+(LogInteger lhs, const LogInteger& rhs) { return lhs += rhs; }
  friend bool operator==(const LogInteger& lhs, const LogInteger& rhs) {
    return lhs.argument_ == rhs.argument_;
  }
  friend auto operator<=>(const LogInteger& lhs, const LogInteger& rhs) {
    const int c = cmp(lhs.argument_, rhs.argument_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpz_class argument_{1};
};

// sum log(3 d_k) and sum log(4 d_k) over the syllable degrees of w.
LogInteger l_minus(const FreeWord& w);
LogInteger l_plus(const FreeWord& w);

// lower_scale * log(lower_arg) <= value <= upper_scale * log(upper_arg),
// or exactly zero.
struct BoundInterval {
  bool exact_zero = false;
  LogInteger lower_arg;
  LogInteger upper_arg;
  ClosedForm lower_scale;
  ClosedForm upper_scale;

  ClosedForm lower() const { return exact_zero ? ClosedForm{} : lower_scale * lower_arg.value(); }
  ClosedForm upper() const { return exact_zero ? ClosedForm{} : upper_scale * upper_arg.value(); }
  // Outward-rounded decimal endpoints.
  std::string lower_text() const;
  std::string upper_text() const;

  friend bool operator==(const BoundInterval&, const BoundInterval&) = default;
};

// Scale constants: Lambda_tr in [L-/(2 pi), 300 L+]; entropy in
// [L-/4, 150 pi L+]. For conjugacy classes h = (pi/2) * Lambda.
ClosedForm lambda_lower_scale();
ClosedForm lambda_upper_scale();
ClosedForm entropy_lower_scale();
ClosedForm entropy_upper_scale();
inline constexpr const char* kEntropyConversion = "h = (pi/2) * Lambda (conjugacy classes)";

// Exactly zero for the identity and powers of a single generator.
BoundInterval lambda_tr_bounds_word(const FreeWord& w);

// Zero for Delta powers and s_j^k Delta^ell; otherwise the word interval of
// theta(b), applied even when theta(b) is a single term.
BoundInterval lambda_tr_bounds_braid(const BraidWord& b);
BoundInterval lambda_tr_bounds_braid(const CosetElement& b);

// Entropy of the conjugacy class of w; w must be cyclically syllable reduced
// with at least two syllables (PreconditionError otherwise).
BoundInterval entropy_bounds(const FreeWord& w);

}  // namespace braidcount
