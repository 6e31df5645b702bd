#include "braidcount/invariants.hpp"

#include "braidcount/error.hpp"

namespace braidcount {

namespace {

mpz_class degree_product(const FreeWord& w, unsigned long factor) {
  mpz_class p = 1;
  for (const auto& s : syllable_decompose(w)) {
    p *= mpz_class(factor) * mpz_class(static_cast<signed long>(s.degree));
  }
  return p;
}

BoundInterval interval_for(const FreeWord& w, ClosedForm lower_scale, ClosedForm upper_scale) {
  BoundInterval b;
  b.lower_arg = l_minus(w);
  b.upper_arg = l_plus(w);
  b.lower_scale = std::move(lower_scale);
  b.upper_scale = std::move(upper_scale);
  return b;
}

BoundInterval zero_interval() {
  BoundInterval b;
  b.exact_zero = true;
  return b;
}

}  // namespace

LogInteger::LogInteger(mpz_class argument) : argument_(std::move(argument)) {
  if (argument_ < 1) throw PreconditionError("log argument must be >= 1");
}

LogInteger l_minus(const FreeWord& w) { return LogInteger(degree_product(w, 3)); }
LogInteger l_plus(const FreeWord& w) { return LogInteger(degree_product(w, 4)); }

ClosedForm lambda_lower_scale() { return ClosedForm(mpq_class(1, 2)) / ClosedForm::pi(); }
ClosedForm lambda_upper_scale() { return ClosedForm(mpq_class(300)); }
ClosedForm entropy_lower_scale() { return ClosedForm(mpq_class(1, 4)); }
ClosedForm entropy_upper_scale() { return ClosedForm(mpq_class(150)) * ClosedForm::pi(); }

std::string BoundInterval::lower_text() const {
  if (exact_zero) return "0";
  return format_down(lower().enclose(working_precision()).lo);
}

std::string BoundInterval::upper_text() const {
  if (exact_zero) return "0";
  return format_up(upper().enclose(working_precision()).hi);
}

BoundInterval lambda_tr_bounds_word(const FreeWord& w) {
  if (w.size() <= 1) return zero_interval();
  return interval_for(w, lambda_lower_scale(), lambda_upper_scale());
}

BoundInterval lambda_tr_bounds_braid(const CosetElement& b) {
  const auto form = normal_form(b);
  const auto* g = std::get_if<GeneralForm>(&form);
  if (g == nullptr || g->b1.is_identity()) return zero_interval();
  return interval_for(theta(form), lambda_lower_scale(), lambda_upper_scale());
}

BoundInterval lambda_tr_bounds_braid(const BraidWord& b) { return lambda_tr_bounds_braid(eval(b)); }

BoundInterval entropy_bounds(const FreeWord& w) {
  if (!is_cyclically_syllable_reduced(w)) {
    throw PreconditionError("word is not cyclically syllable reduced");
  }
  if (syllable_decompose(w).size() < 2) {
    throw PreconditionError("entropy bounds need at least two syllables");
  }
  return interval_for(w, entropy_lower_scale(), entropy_upper_scale());
}

}  // namespace braidcount
