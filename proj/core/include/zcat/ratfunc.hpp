#pragma once

#include <string>

#include "zcat/laurent.hpp"

namespace zcat {

/**
 * Element of Q(H), the fraction field of the Laurent ring Q[t1^+-,...,tr^+-].
 *
 * Normal form: the denominator is a true polynomial (no negative exponents,
 * each variable touching exponent 0) with positive leading coefficient in the
 * canonical order, the gcd of numerator and denominator contents is removed,
 * and the numerator absorbs the unit monomial.  Numerator/denominator are not
 * required to be coprime for r >= 2 (no multivariate gcd); equality is decided
 * by cross-multiplication.  In one variable the fraction is reduced by the
 * univariate gcd as well.
 */
class RatFunc {
 public:
  RatFunc() = default;  // zero in 0 variables
  explicit RatFunc(const LaurentPoly& numerator)
      : num_(numerator), den_(LaurentPoly::constant(numerator.num_vars(), 1)) {}
  RatFunc(LaurentPoly numerator, LaurentPoly denominator);

  static RatFunc constant(int num_vars, const Rat& c) {
    return RatFunc(LaurentPoly::constant(num_vars, c));
  }

  const LaurentPoly& numerator() const { return num_; }
  const LaurentPoly& denominator() const { return den_; }
  int num_vars() const { return num_.num_vars(); }
  bool is_zero() const { return num_.is_zero(); }

  RatFunc operator-() const;
  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }

  bool operator==(const RatFunc& o) const;
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  Rat evaluate(const std::vector<Rat>& x) const;

  std::string to_string() const;

 private:
  void normalize();

  LaurentPoly num_;
  LaurentPoly den_ = LaurentPoly::constant(0, 1);
};

}  // namespace zcat
