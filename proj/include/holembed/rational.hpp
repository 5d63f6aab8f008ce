#pragma once

#include <gmpxx.h>

#include <cctype>
#include <iomanip>
#include <sstream>
#include <string>
#include <utility>

#include "holembed/errors.hpp"

namespace holembed {

/// Exact arbitrary-precision rational scalar. GMP keeps values canonical
/// (reduced, positive denominator) under arithmetic.
using Rational = mpq_class;

inline Rational rational_abs(const Rational& q) {
  return q < 0 ? Rational(-q) : q;
}

/// q^e with a non-negative integer exponent, exact.
inline Rational rational_pow(const Rational& q, unsigned long e) {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), q.get_num().get_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), q.get_den().get_mpz_t(), e);
  Rational r(std::move(num), std::move(den));
  r.canonicalize();
  return r;
}

/// n! as an exact rational.
inline Rational factorial(unsigned long n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(std::move(f));
}

/// Canonical "p/q" rendering ("p" when the denominator is 1).
inline std::string format_rational(const Rational& q) { return q.get_str(); }

/// Parses "p", "p/q", optionally with a leading sign on p. The denominator
/// must be a positive digit string. Anything else is InvalidParameter.
inline Rational parse_rational(const std::string& text) {
  const auto bad = [&]() -> InvalidParameter {
    return InvalidParameter("not a rational literal: \"" + text + "\"");
  };
  std::size_t pos = 0;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
  std::size_t digits = 0;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    ++pos;
    ++digits;
  }
  if (digits == 0) throw bad();
  if (pos != text.size()) {
    if (text[pos] != '/') throw bad();
    ++pos;
    digits = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      ++digits;
    }
    if (digits == 0 || pos != text.size()) throw bad();
  }
  Rational q;
  // mpq set_str knows '-' but not a leading '+'
  const std::string normalized = text[0] == '+' ? text.substr(1) : text;
  if (q.set_str(normalized, 10) != 0) throw bad();
  if (q.get_den() == 0) throw InvalidParameter("zero denominator: \"" + text + "\"");
  q.canonicalize();
  return q;
}

/// 17-significant-digit decimal rendering, for report annotations only.
inline std::string decimal17(const Rational& q) {
  mpf_class f(q, 256);
  std::ostringstream out;
  out << std::setprecision(17) << f;
  return out.str();
}

/// Exact complex scalar with rational real and imaginary parts.
///
/// The majorant modulus |c|_1 = |re| + |im| is the exact stand-in for the
/// Euclidean modulus: |c| <= |c|_1 <= sqrt(2)|c|, and |.|_1 is subadditive
/// and submultiplicative, so every inequality stated in that calculus is
/// decidable by rational comparison.
struct ComplexRational {
  Rational re{0};
  Rational im{0};

  ComplexRational() = default;
  ComplexRational(Rational real, Rational imag = Rational(0))
      : re(std::move(real)), im(std::move(imag)) {}
  ComplexRational(long real, long imag) : re(real), im(imag) {}

  bool is_zero() const { return re == 0 && im == 0; }

  Rational majorant_modulus() const { return rational_abs(re) + rational_abs(im); }

  friend ComplexRational operator+(const ComplexRational& a, const ComplexRational& b) {
    return {Rational(a.re + b.re), Rational(a.im + b.im)};
  }
  friend ComplexRational operator-(const ComplexRational& a, const ComplexRational& b) {
    return {Rational(a.re - b.re), Rational(a.im - b.im)};
  }
  friend ComplexRational operator-(const ComplexRational& a) {
    return {Rational(-a.re), Rational(-a.im)};
  }
  friend ComplexRational operator*(const ComplexRational& a, const ComplexRational& b) {
    return {Rational(a.re * b.re - a.im * b.im), Rational(a.re * b.im + a.im * b.re)};
  }
  friend ComplexRational operator*(const ComplexRational& a, const Rational& s) {
    return {Rational(a.re * s), Rational(a.im * s)};
  }
  friend ComplexRational operator*(const Rational& s, const ComplexRational& a) { return a * s; }

  friend ComplexRational operator/(const ComplexRational& a, const ComplexRational& b) {
    Rational norm(b.re * b.re + b.im * b.im);
    if (norm == 0) throw Error("complex division by zero");
    return {Rational((a.re * b.re + a.im * b.im) / norm),
            Rational((a.im * b.re - a.re * b.im) / norm)};
  }
  friend ComplexRational operator/(const ComplexRational& a, const Rational& s) {
    if (s == 0) throw Error("division by zero");
    return {Rational(a.re / s), Rational(a.im / s)};
  }

  ComplexRational& operator+=(const ComplexRational& b) { return *this = *this + b; }
  ComplexRational& operator-=(const ComplexRational& b) { return *this = *this - b; }
  ComplexRational& operator*=(const ComplexRational& b) { return *this = *this * b; }

  friend bool operator==(const ComplexRational& a, const ComplexRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

/// "(re, im)" with canonical rational parts; used in witness messages.
inline std::string format_complex(const ComplexRational& c) {
  return "(" + format_rational(c.re) + ", " + format_rational(c.im) + ")";
}

}  // namespace holembed
