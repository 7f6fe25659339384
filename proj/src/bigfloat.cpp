#include "workbench/bigfloat.hpp"

#include <cctype>
#include <cstdlib>
#include <vector>

#include "workbench/errors.hpp"

namespace workbench {

mpfr_prec_t working_precision() {
  static mpfr_prec_t prec = [] {
    const char *env = std::getenv("WORKBENCH_PRECISION_BITS");
    if (!env || !*env) return static_cast<mpfr_prec_t>(256);
    std::string s(env);
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw ValidationError("WORKBENCH_PRECISION_BITS must be a positive integer");
    long bits = std::strtol(env, nullptr, 10);
    if (bits < MPFR_PREC_MIN || bits > 1000000)
      throw ValidationError("WORKBENCH_PRECISION_BITS out of range");
    return static_cast<mpfr_prec_t>(bits);
  }();
  return prec;
}

BigFloat::BigFloat() { mpfr_init2(v_, working_precision()); mpfr_set_zero(v_, 1); }

BigFloat::BigFloat(const Rational &r) {
  mpfr_init2(v_, working_precision());
  mpfr_set_q(v_, r.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(double d) {
  mpfr_init2(v_, working_precision());
  mpfr_set_d(v_, d, MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat &o) {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat &&o) noexcept {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_swap(v_, o.v_);
}

BigFloat &BigFloat::operator=(const BigFloat &o) {
  if (this != &o) mpfr_set(v_, o.v_, MPFR_RNDN);
  return *this;
}

BigFloat &BigFloat::operator=(BigFloat &&o) noexcept {
  if (this != &o) mpfr_swap(v_, o.v_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::infinity() {
  BigFloat f;
  mpfr_set_inf(f.v_, 1);
  return f;
}

bool BigFloat::is_finite() const { return mpfr_number_p(v_) != 0; }
bool BigFloat::is_inf() const { return mpfr_inf_p(v_) != 0; }
double BigFloat::to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

std::string BigFloat::str(int digits) const {
  if (is_inf()) return mpfr_sgn(v_) > 0 ? "inf" : "-inf";
  std::string fmt = "%." + std::to_string(digits) + "Rg";
  char *out = nullptr;
  mpfr_asprintf(&out, fmt.c_str(), v_);
  std::string s(out);
  mpfr_free_str(out);
  return s;
}

BigFloat BigFloat::operator+(const BigFloat &o) const {
  BigFloat r;
  mpfr_add(r.v_, v_, o.v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::operator-(const BigFloat &o) const {
  BigFloat r;
  mpfr_sub(r.v_, v_, o.v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::operator*(const BigFloat &o) const {
  BigFloat r;
  mpfr_mul(r.v_, v_, o.v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::operator/(const BigFloat &o) const {
  BigFloat r;
  mpfr_div(r.v_, v_, o.v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::abs() const {
  BigFloat r;
  mpfr_abs(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::sqrt() const {
  if (mpfr_sgn(v_) < 0) throw ContractViolation("sqrt of negative value");
  BigFloat r;
  mpfr_sqrt(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::root(unsigned long k) const {
  if (k == 0) throw ValidationError("zeroth root");
  if (mpfr_sgn(v_) < 0) throw ContractViolation("root of negative value");
  BigFloat r;
  mpfr_rootn_ui(r.v_, v_, k, MPFR_RNDN);
  return r;
}

int BigFloat::cmp(const BigFloat &o) const { return mpfr_cmp(v_, o.v_); }

} // namespace workbench
