#include "nsatz/ratfun.hpp"

namespace nsatz {

RationalFunction::RationalFunction(Variable var)
    : var_(std::move(var)), num_(), den_(Unipoly::constant(Rational(1))) {}

RationalFunction::RationalFunction(Variable var, Unipoly num, Unipoly den)
    : var_(std::move(var)), num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = Unipoly::constant(Rational(1));
    return;
  }
  Unipoly g = Unipoly::gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_.divmod(g).first;
    den_ = den_.divmod(g).first;
  }
  Rational lc = den_.leading_coeff();
  if (!lc.is_one()) {
    Rational inv = lc.inverse();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

RationalFunction RationalFunction::constant(Variable var, Rational c) {
  return RationalFunction(std::move(var), Unipoly::constant(std::move(c)),
                          Unipoly::constant(Rational(1)));
}

RationalFunction RationalFunction::variable(Variable var) {
  return RationalFunction(std::move(var), Unipoly::variable(), Unipoly::constant(Rational(1)));
}

void RationalFunction::require_same_var(const RationalFunction& o) const {
  if (!(var_ == o.var_))
    throw InvalidArgument("rational function arithmetic across different variables");
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  require_same_var(o);
  return RationalFunction(var_, num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
  return *this + (-o);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  require_same_var(o);
  return RationalFunction(var_, num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
  return *this * o.inverse();
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of the zero rational function");
  return RationalFunction(var_, den_, num_);
}

RationalFunction RationalFunction::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  RationalFunction r = constant(var_, Rational(1));
  RationalFunction base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return r;
}

}  // namespace nsatz
