#include "nsatz/rational.hpp"

#include <cctype>
#include <ostream>

namespace nsatz {

Rational::Rational(long num, long den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::from_raw(mpq_class v) {
  Rational r;
  v.canonicalize();
  r.v_ = std::move(v);
  return r;
}

Rational Rational::from_string(const std::string& text) {
  // strict "p" or "p/q": optional leading '-', digits, optional "/digits"
  std::size_t i = 0;
  auto digits = [&](std::size_t from) {
    std::size_t j = from;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    return j;
  };
  if (i < text.size() && text[i] == '-') ++i;
  std::size_t num_end = digits(i);
  if (num_end == i) throw SyntaxError("expected integer in rational literal", i);
  std::size_t k = num_end;
  if (k < text.size() && text[k] == '/') {
    std::size_t den_end = digits(k + 1);
    if (den_end == k + 1) throw SyntaxError("expected denominator digits", k + 1);
    k = den_end;
  }
  if (k != text.size()) throw SyntaxError("trailing characters in rational literal", k);
  mpq_class v(text, 10);
  if (v.get_den() == 0) throw DivisionByZero("rational literal with zero denominator");
  v.canonicalize();
  return from_raw(std::move(v));
}

Rational Rational::operator-() const { return from_raw(mpq_class(-v_)); }

Rational Rational::operator+(const Rational& o) const { return from_raw(mpq_class(v_ + o.v_)); }
Rational Rational::operator-(const Rational& o) const { return from_raw(mpq_class(v_ - o.v_)); }
Rational Rational::operator*(const Rational& o) const { return from_raw(mpq_class(v_ * o.v_)); }

Rational Rational::operator/(const Rational& o) const {
  if (o.is_zero()) throw DivisionByZero("division of rationals by zero");
  return from_raw(mpq_class(v_ / o.v_));
}

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}

Rational Rational::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  return from_raw(mpq_class(1 / v_));
}

Rational Rational::abs() const { return from_raw(::abs(v_)); }

Rational Rational::pow(long e) const {
  if (e == 0) return Rational(1);
  if (e < 0) return inverse().pow(-e);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), v_.get_num().get_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), v_.get_den().get_mpz_t(), static_cast<unsigned long>(e));
  return from_raw(mpq_class(num, den));
}

std::string Rational::str() const { return v_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace nsatz
