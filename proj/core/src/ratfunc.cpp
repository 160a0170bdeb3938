#include "zcat/ratfunc.hpp"

#include <stdexcept>

#include "zcat/errors.hpp"

namespace zcat {

RatFunc::RatFunc(LaurentPoly numerator, LaurentPoly denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (num_.num_vars() != den_.num_vars())
    throw std::logic_error("RatFunc numerator/denominator arity mismatch");
  if (den_.is_zero()) throw std::logic_error("RatFunc with zero denominator");
  normalize();
}

void RatFunc::normalize() {
  const int r = num_.num_vars();
  if (num_.is_zero()) {
    den_ = LaurentPoly::constant(r, 1);
    return;
  }
  if (r == 1) {
    LaurentPoly g = LaurentPoly::gcd_univariate(num_, den_);
    if (g.degree_span() > 0) {
      num_ = num_.divide_exact(g);
      den_ = den_.divide_exact(g);
    }
  }
  // Denominator becomes a true polynomial touching exponent 0 per variable;
  // the unit monomial moves into the numerator.
  LaurentPoly::Exps m = den_.min_exponents();
  LaurentPoly::Exps shift(r);
  for (int i = 0; i < r; ++i) shift[i] = -m[i];
  den_ = den_.mul_monomial(shift, 1);
  num_ = num_.mul_monomial(shift, 1);
  Rat c = num_.content();
  Rat cd = den_.content();
  Rat g(gcd(num(c) * den(cd), num(cd) * den(c)), den(c) * den(cd));
  if (den_.leading_coeff() < 0) g = -g;
  num_ = num_.scaled(Rat(1) / g);
  den_ = den_.scaled(Rat(1) / g);
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
  if (is_zero() || o.is_zero()) return RatFunc(LaurentPoly(num_vars()));
  return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.is_zero()) throw std::logic_error("RatFunc division by zero");
  if (is_zero()) return *this;
  return RatFunc(num_ * o.den_, den_ * o.num_);
}

bool RatFunc::operator==(const RatFunc& o) const {
  return num_ * o.den_ == o.num_ * den_;
}

Rat RatFunc::evaluate(const std::vector<Rat>& x) const {
  Rat d = den_.evaluate(x);
  if (d == 0) throw InputError("evaluation point hits a denominator zero");
  return num_.evaluate(x) / d;
}

std::string RatFunc::to_string() const {
  if (den_ == LaurentPoly::constant(num_vars(), 1)) return num_.to_string();
  return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

}  // namespace zcat
