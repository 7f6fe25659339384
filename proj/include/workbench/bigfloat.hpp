#pragma once

#include <mpfr.h>

#include <string>

#include "workbench/scalar.hpp"

namespace workbench {

/// Working precision in bits: WORKBENCH_PRECISION_BITS when set, else 256.
mpfr_prec_t working_precision();

/// Arbitrary-precision real at working_precision(), used only for the
/// floating-point diagnostics; everything structural stays rational.
class BigFloat {
public:
  BigFloat();
  explicit BigFloat(const Rational &r);
  explicit BigFloat(double d);
  BigFloat(const BigFloat &o);
  BigFloat(BigFloat &&o) noexcept;
  BigFloat &operator=(const BigFloat &o);
  BigFloat &operator=(BigFloat &&o) noexcept;
  ~BigFloat();

  static BigFloat infinity();

  bool is_finite() const;
  bool is_inf() const;
  double to_double() const;
  std::string str(int digits = 20) const;

  BigFloat operator+(const BigFloat &o) const;
  BigFloat operator-(const BigFloat &o) const;
  BigFloat operator*(const BigFloat &o) const;
  BigFloat operator/(const BigFloat &o) const;

  BigFloat abs() const;
  BigFloat sqrt() const;
  /// k-th root, k >= 1; requires a nonnegative value.
  BigFloat root(unsigned long k) const;

  int cmp(const BigFloat &o) const;
  bool operator<(const BigFloat &o) const { return cmp(o) < 0; }
  bool operator>(const BigFloat &o) const { return cmp(o) > 0; }
  bool operator<=(const BigFloat &o) const { return cmp(o) <= 0; }
  bool operator>=(const BigFloat &o) const { return cmp(o) >= 0; }

private:
  mpfr_t v_;
};

} // namespace workbench
