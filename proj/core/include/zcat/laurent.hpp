#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zcat/rational.hpp"

namespace zcat {

/**
 * Multivariate Laurent polynomial over Q in variables t1,...,tr.
 *
 * Terms are kept in a map from exponent vectors (Z^r) to nonzero rational
 * coefficients; the map order is the canonical lexicographic term order.
 * r == 0 degenerates to a rational scalar.
 */
class LaurentPoly {
 public:
  using Exps = std::vector<int>;
  using TermMap = std::map<Exps, Rat>;

  LaurentPoly() = default;  // zero polynomial in 0 variables
  explicit LaurentPoly(int num_vars) : num_vars_(num_vars) {}

  static LaurentPoly constant(int num_vars, const Rat& c);
  static LaurentPoly monomial(int num_vars, Exps e, const Rat& c);
  // t_index, 0-based
  static LaurentPoly variable(int num_vars, int index, int power = 1);

  int num_vars() const { return num_vars_; }
  bool is_zero() const { return terms_.empty(); }
  int term_count() const { return static_cast<int>(terms_.size()); }
  const TermMap& terms() const { return terms_; }

  bool is_constant() const;
  // Single term with any nonzero rational coefficient; these are the units of
  // Q[t1^+-, ..., tr^+-].
  bool is_unit_monomial() const { return terms_.size() == 1; }

  Rat constant_value() const;  // requires is_constant()
  Rat coeff(const Exps& e) const;

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);

  LaurentPoly scaled(const Rat& c) const;
  LaurentPoly mul_monomial(const Exps& e, const Rat& c) const;
  // Multiplicative inverse; requires is_unit_monomial().
  LaurentPoly unit_inverse() const;

  bool operator==(const LaurentPoly& o) const {
    return num_vars_ == o.num_vars_ && terms_ == o.terms_;
  }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  // Substitutes t_i -> x_i; x_i must be nonzero when negative powers occur.
  Rat evaluate(const std::vector<Rat>& x) const;
  // All t_i := 1.
  Rat evaluate_at_one() const;
  // t_i -> t_i^{-1}.
  LaurentPoly involution() const;

  // Positive rational c with (*this)/c having coprime integer coefficients.
  Rat content() const;
  // Componentwise minimum of exponent vectors (0 ... 0 for the zero poly).
  Exps min_exponents() const;
  Exps max_exponents() const;
  // Coefficient of the lexicographically largest term.
  Rat leading_coeff() const;

  // this * t^{-min} * content^{-1}, sign fixed so the leading coefficient is
  // positive: the canonical associate used for matrix normalization.
  LaurentPoly normalized_associate() const;

  // Exact division (throws std::logic_error when the division is not exact).
  LaurentPoly divide_exact(const LaurentPoly& d) const;

  // --- univariate helpers (num_vars == 1) ---
  // Degree span max-min of t-exponents; -1 for zero.
  int degree_span() const;
  // Strips the unit monomial and rescales to a monic polynomial in Q[t].
  LaurentPoly monic_polynomial() const;
  // Polynomial division in Q[t] after unit-stripping both operands:
  // returns (q, r) with this = q*d + r, deg r < deg d.  Requires nonzero d.
  std::pair<LaurentPoly, LaurentPoly> divmod_univariate(const LaurentPoly& d) const;
  static LaurentPoly gcd_univariate(const LaurentPoly& a, const LaurentPoly& b);

  // "c*t1^a*t2^b" terms joined by " + ", ascending lex order, e.g. "-1 + t1^1".
  std::string to_string() const;
  static LaurentPoly parse(const std::string& text, int num_vars);

 private:
  void insert_term(const Exps& e, const Rat& c);

  int num_vars_ = 0;
  TermMap terms_;
};

LaurentPoly operator*(const Rat& c, const LaurentPoly& p);

}  // namespace zcat
