#include "workbench/scalar.hpp"

#include <cctype>
#include <ostream>

#include "workbench/errors.hpp"

namespace workbench {

std::string rational_str(const Rational &r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string rational_display(const Rational &r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return rational_str(r);
}

Rational parse_rational(const std::string &text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw ParseError("empty rational", 0, 0);
  auto ok_part = [](const std::string &p) {
    if (p.empty()) return false;
    std::size_t k = (p[0] == '-' || p[0] == '+') ? 1 : 0;
    if (k == p.size()) return false;
    for (; k < p.size(); ++k)
      if (!std::isdigit(static_cast<unsigned char>(p[k]))) return false;
    return true;
  };
  std::string num = s, den = "1";
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  if (!ok_part(num) || !ok_part(den))
    throw ParseError("malformed rational '" + text + "'", 0, 0);
  if (num[0] == '+') num.erase(0, 1); // mpz_set_str rejects a leading plus
  if (den[0] == '+') den.erase(0, 1);
  Int n(num), d(den);
  if (d == 0) throw ParseError("zero denominator in '" + text + "'", 0, 0);
  Rational r(n, d);
  r.canonicalize();
  return r;
}

Scalar &Scalar::operator+=(const Scalar &o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Scalar &Scalar::operator-=(const Scalar &o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Scalar &Scalar::operator*=(const Scalar &o) {
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = re;
  im_ = im;
  return *this;
}

Scalar &Scalar::operator/=(const Scalar &o) {
  Rational n2 = o.norm2();
  if (n2 == 0) throw ValidationError("division by zero scalar");
  Rational re = (re_ * o.re_ + im_ * o.im_) / n2;
  Rational im = (im_ * o.re_ - re_ * o.im_) / n2;
  re_ = re;
  im_ = im;
  return *this;
}

std::string Scalar::str() const {
  if (im_ == 0) return rational_display(re_);
  std::string out = rational_display(re_);
  if (im_ < 0)
    out += "-" + rational_display(Rational(-im_));
  else
    out += "+" + rational_display(im_);
  out += "i";
  return out;
}

std::string Scalar::str_spaced() const {
  std::string out = rational_str(re_);
  if (im_ < 0)
    out += " - " + rational_str(Rational(-im_));
  else
    out += " + " + rational_str(im_);
  out += " i";
  return out;
}

std::string Scalar::str_compact() const {
  std::string out = rational_str(re_);
  if (im_ < 0)
    out += "-" + rational_str(Rational(-im_));
  else
    out += "+" + rational_str(im_);
  out += "i";
  return out;
}

Scalar parse_scalar(const std::string &text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw ParseError("empty scalar", 0, 0);

  // Split into one or two signed parts at a '+'/'-' that is not leading.
  std::size_t split = std::string::npos;
  for (std::size_t k = 1; k < s.size(); ++k)
    if (s[k] == '+' || s[k] == '-') {
      split = k;
      break;
    }

  auto parse_part = [](const std::string &p, Rational &re, Rational &im) {
    if (p.empty()) throw ParseError("empty scalar part", 0, 0);
    if (p.back() == 'i') {
      std::string body = p.substr(0, p.size() - 1);
      if (body.empty() || body == "+")
        im += 1;
      else if (body == "-")
        im -= 1;
      else
        im += parse_rational(body);
    } else {
      re += parse_rational(p);
    }
  };

  Rational re(0), im(0);
  if (split == std::string::npos) {
    parse_part(s, re, im);
  } else {
    parse_part(s.substr(0, split), re, im);
    std::string second = s.substr(split);
    if (second.size() < 2) throw ParseError("malformed scalar '" + text + "'", 0, 0);
    parse_part(second, re, im);
  }
  return Scalar(re, im);
}

std::ostream &operator<<(std::ostream &os, const Scalar &s) {
  return os << s.str();
}

Rational rational_pow(const Rational &r, unsigned long e) {
  Int num, den;
  mpz_pow_ui(num.get_mpz_t(), r.get_num().get_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), r.get_den().get_mpz_t(), e);
  return Rational(num, den);
}

Scalar scalar_pow(const Scalar &s, unsigned long e) {
  if (s.is_real()) return Scalar(rational_pow(s.re(), e));
  Scalar out(1);
  Scalar base = s;
  while (e > 0) {
    if (e & 1) out *= base;
    base *= base;
    e >>= 1;
  }
  return out;
}

} // namespace workbench
