#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>

#include "nsatz/errors.hpp"

namespace nsatz {

/// Exact arbitrary-precision rational scalar. Always kept in canonical form:
/// gcd(numerator, denominator) = 1 and denominator > 0.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // implicit: integers are scalars
  Rational(long num, long den);

  /// Parses "p" or "p/q" with integer p and positive integer q.
  static Rational from_string(const std::string& text);

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const;
  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;  // DivisionByZero
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);

  Rational inverse() const;  // DivisionByZero on zero
  Rational abs() const;
  /// Integer power; negative exponents invert (DivisionByZero on 0^-k).
  Rational pow(long e) const;

  bool operator==(const Rational& o) const { return v_ == o.v_; }
  std::strong_ordering operator<=>(const Rational& o) const {
    int c = cmp(v_, o.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }
  bool is_integer() const { return v_.get_den() == 1; }

  /// "p" when the denominator is 1, "p/q" otherwise.
  std::string str() const;

  const mpq_class& raw() const { return v_; }
  static Rational from_raw(mpq_class v);

private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace nsatz
