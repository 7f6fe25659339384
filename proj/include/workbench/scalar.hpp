#ifndef WORKBENCH_SCALAR_HPP
#define WORKBENCH_SCALAR_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace workbench {

using Int = mpz_class;
using Rational = mpq_class;

/// Canonical "p/q" with q > 0 and gcd(|p|,q) = 1; the "/q" is always printed.
std::string rational_str(const Rational &r);

/// Display form: omits the denominator when it is 1.
std::string rational_display(const Rational &r);

/// Parses "p", "p/q", optional sign and surrounding spaces. Throws ParseError
/// (line/column 0) on malformed input or zero denominator.
Rational parse_rational(const std::string &text);

/// Gaussian rational: re + im*i with exact rational components.
class Scalar {
public:
  Scalar() : re_(0), im_(0) {}
  Scalar(long v) : re_(v), im_(0) {}
  Scalar(const Rational &re) : re_(re), im_(0) {}
  Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static Scalar i() { return Scalar(Rational(0), Rational(1)); }

  const Rational &re() const { return re_; }
  const Rational &im() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }

  Scalar conj() const { return Scalar(re_, -im_); }
  /// |z|^2 = re^2 + im^2 as an exact rational.
  Rational norm2() const { return re_ * re_ + im_ * im_; }

  Scalar operator-() const { return Scalar(-re_, -im_); }
  Scalar &operator+=(const Scalar &o);
  Scalar &operator-=(const Scalar &o);
  Scalar &operator*=(const Scalar &o);
  Scalar &operator/=(const Scalar &o);

  friend Scalar operator+(Scalar a, const Scalar &b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar &b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar &b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar &b) { return a /= b; }

  friend bool operator==(const Scalar &a, const Scalar &b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Scalar &a, const Scalar &b) {
    return !(a == b);
  }
  /// Lexicographic (re, im); gives deterministic orderings, nothing more.
  friend bool operator<(const Scalar &a, const Scalar &b) {
    int c = cmp(a.re_, b.re_);
    if (c != 0) return c < 0;
    return cmp(a.im_, b.im_) < 0;
  }

  /// Display form: integers without "/1", imaginary part only when nonzero.
  std::string str() const;
  /// Series-file form: "p/q + r/s i" with both parts and denominators always.
  std::string str_spaced() const;
  /// Token form without spaces: "p/q+r/si", both parts always.
  std::string str_compact() const;

private:
  Rational re_, im_;
};

/// Parses "p/q", "p/q+r/si", "i", "-i", "3i", "1/2 - 3/4 i", ... Spaces are
/// ignored; the imaginary unit is a trailing 'i'.
Scalar parse_scalar(const std::string &text);

Rational rational_pow(const Rational &r, unsigned long e);
Scalar scalar_pow(const Scalar &s, unsigned long e);

std::ostream &operator<<(std::ostream &os, const Scalar &s);

} // namespace workbench

#endif
