#include "zcat/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "zcat/errors.hpp"

namespace zcat {

namespace {

void check_same_ring(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.num_vars() != b.num_vars())
    throw std::logic_error("Laurent arithmetic across different variable counts");
}

}  // namespace

LaurentPoly LaurentPoly::constant(int num_vars, const Rat& c) {
  LaurentPoly p(num_vars);
  if (c != 0) p.terms_.emplace(Exps(num_vars, 0), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(int num_vars, Exps e, const Rat& c) {
  LaurentPoly p(num_vars);
  if (static_cast<int>(e.size()) != num_vars)
    throw std::logic_error("monomial exponent arity mismatch");
  if (c != 0) p.terms_.emplace(std::move(e), c);
  return p;
}

LaurentPoly LaurentPoly::variable(int num_vars, int index, int power) {
  Exps e(num_vars, 0);
  e.at(index) = power;
  return monomial(num_vars, std::move(e), 1);
}

bool LaurentPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() != 1) return false;
  const Exps& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
}

Rat LaurentPoly::constant_value() const {
  if (terms_.empty()) return Rat(0);
  if (!is_constant()) throw std::logic_error("constant_value on non-constant");
  return terms_.begin()->second;
}

Rat LaurentPoly::coeff(const Exps& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

void LaurentPoly::insert_term(const Exps& e, const Rat& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(num_vars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r += o;
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r -= o;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  check_same_ring(*this, o);
  for (const auto& [e, c] : o.terms_) insert_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  check_same_ring(*this, o);
  for (const auto& [e, c] : o.terms_) insert_term(e, -c);
  return *this;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  check_same_ring(*this, o);
  LaurentPoly r(num_vars_);
  if (is_zero() || o.is_zero()) return r;
  Exps e(num_vars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      for (int i = 0; i < num_vars_; ++i) e[i] = ea[i] + eb[i];
      r.insert_term(e, ca * cb);
    }
  }
  return r;
}

LaurentPoly LaurentPoly::scaled(const Rat& c) const {
  LaurentPoly r(num_vars_);
  if (c == 0) return r;
  for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
  return r;
}

LaurentPoly LaurentPoly::mul_monomial(const Exps& e, const Rat& c) const {
  LaurentPoly r(num_vars_);
  if (c == 0) return r;
  Exps f(num_vars_);
  for (const auto& [ea, ca] : terms_) {
    for (int i = 0; i < num_vars_; ++i) f[i] = ea[i] + e[i];
    r.terms_.emplace(f, ca * c);
  }
  return r;
}

LaurentPoly LaurentPoly::unit_inverse() const {
  if (!is_unit_monomial()) throw std::logic_error("unit_inverse of non-unit");
  const auto& [e, c] = *terms_.begin();
  Exps inv(num_vars_);
  for (int i = 0; i < num_vars_; ++i) inv[i] = -e[i];
  return monomial(num_vars_, std::move(inv), Rat(1) / c);
}

Rat LaurentPoly::evaluate(const std::vector<Rat>& x) const {
  if (static_cast<int>(x.size()) != num_vars_)
    throw std::logic_error("evaluate arity mismatch");
  Rat acc(0);
  for (const auto& [e, c] : terms_) {
    Rat term = c;
    for (int i = 0; i < num_vars_; ++i) {
      if (e[i] == 0) continue;
      if (x[i] == 0) throw InputError("evaluation point has a zero coordinate");
      Int n = num(x[i]), d = den(x[i]);
      int k = e[i];
      if (k < 0) {
        std::swap(n, d);
        k = -k;
      }
      Rat base(n, d);
      for (int j = 0; j < k; ++j) term *= base;
    }
    acc += term;
  }
  return acc;
}

Rat LaurentPoly::evaluate_at_one() const {
  Rat acc(0);
  for (const auto& [e, c] : terms_) acc += c;
  return acc;
}

LaurentPoly LaurentPoly::involution() const {
  LaurentPoly r(num_vars_);
  Exps f(num_vars_);
  for (const auto& [e, c] : terms_) {
    for (int i = 0; i < num_vars_; ++i) f[i] = -e[i];
    r.terms_.emplace(f, c);
  }
  return r;
}

Rat LaurentPoly::content() const {
  if (terms_.empty()) return Rat(0);
  Int g = 0, l = 1;
  for (const auto& [e, c] : terms_) {
    g = gcd(g, num(c));
    l = lcm(l, den(c));
  }
  if (g < 0) g = -g;
  return Rat(g, l);
}

LaurentPoly::Exps LaurentPoly::min_exponents() const {
  Exps m(num_vars_, 0);
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (first) {
      m = e;
      first = false;
    } else {
      for (int i = 0; i < num_vars_; ++i) m[i] = std::min(m[i], e[i]);
    }
  }
  return m;
}

LaurentPoly::Exps LaurentPoly::max_exponents() const {
  Exps m(num_vars_, 0);
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (first) {
      m = e;
      first = false;
    } else {
      for (int i = 0; i < num_vars_; ++i) m[i] = std::max(m[i], e[i]);
    }
  }
  return m;
}

Rat LaurentPoly::leading_coeff() const {
  if (terms_.empty()) return Rat(0);
  return terms_.rbegin()->second;
}

LaurentPoly LaurentPoly::normalized_associate() const {
  if (is_zero()) return *this;
  Exps m = min_exponents();
  for (int& k : m) k = -k;
  Rat c = content();
  if (leading_coeff() < 0) c = -c;
  return mul_monomial(m, Rat(1) / c);
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& d) const {
  check_same_ring(*this, d);
  if (d.is_zero()) throw std::logic_error("division by zero polynomial");
  if (is_zero()) return LaurentPoly(num_vars_);
  if (d.is_unit_monomial()) return *this * d.unit_inverse();

  // Shift both to true polynomials; the quotient picks up the unit difference.
  Exps ma = min_exponents(), md = d.min_exponents();
  LaurentPoly a = *this, b = d;
  {
    Exps sa(num_vars_), sd(num_vars_);
    for (int i = 0; i < num_vars_; ++i) {
      sa[i] = -ma[i];
      sd[i] = -md[i];
    }
    a = a.mul_monomial(sa, 1);
    b = b.mul_monomial(sd, 1);
  }
  LaurentPoly q(num_vars_);
  // Cancel lex-leading terms; terminates because the leading monomial of the
  // remainder strictly decreases and divisibility is assumed.
  while (!a.is_zero()) {
    const auto& [ea, ca] = *a.terms_.rbegin();
    const auto& [eb, cb] = *b.terms_.rbegin();
    Exps diff(num_vars_);
    for (int i = 0; i < num_vars_; ++i) {
      diff[i] = ea[i] - eb[i];
      if (diff[i] < 0) throw std::logic_error("divide_exact: not divisible");
    }
    Rat c = ca / cb;
    q.insert_term(diff, c);
    a -= b.mul_monomial(diff, c);
  }
  Exps shift(num_vars_);
  for (int i = 0; i < num_vars_; ++i) shift[i] = ma[i] - md[i];
  return q.mul_monomial(shift, 1);
}

int LaurentPoly::degree_span() const {
  if (num_vars_ != 1) throw std::logic_error("degree_span needs one variable");
  if (is_zero()) return -1;
  return terms_.rbegin()->first[0] - terms_.begin()->first[0];
}

LaurentPoly LaurentPoly::monic_polynomial() const {
  if (num_vars_ != 1) throw std::logic_error("monic_polynomial needs one variable");
  if (is_zero()) return *this;
  int shift = -terms_.begin()->first[0];
  Rat lead = terms_.rbegin()->second;
  return mul_monomial({shift}, Rat(1) / lead);
}

std::pair<LaurentPoly, LaurentPoly> LaurentPoly::divmod_univariate(const LaurentPoly& d) const {
  if (num_vars_ != 1 || d.num_vars_ != 1)
    throw std::logic_error("divmod_univariate needs one variable");
  if (d.is_zero()) throw std::logic_error("division by zero polynomial");
  LaurentPoly a = *this;
  LaurentPoly q(1);
  int db = d.terms_.rbegin()->first[0];
  Rat lead_b = d.terms_.rbegin()->second;
  while (!a.is_zero() && a.terms_.rbegin()->first[0] >= db) {
    int k = a.terms_.rbegin()->first[0] - db;
    Rat c = a.terms_.rbegin()->second / lead_b;
    q.insert_term({k}, c);
    a -= d.mul_monomial({k}, c);
  }
  return {q, a};
}

LaurentPoly LaurentPoly::gcd_univariate(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly x = a.is_zero() ? a : a.monic_polynomial();
  LaurentPoly y = b.is_zero() ? b : b.monic_polynomial();
  while (!y.is_zero()) {
    LaurentPoly r = x.divmod_univariate(y).second;
    x = y;
    y = r.is_zero() ? r : r.monic_polynomial();
  }
  return x.is_zero() ? x : x.monic_polynomial();
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    bool all_zero = std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
    if (all_zero) {
      out << c;
      continue;
    }
    bool wrote = false;
    if (c == -1) {
      out << "-";
    } else if (c != 1) {
      out << c << "*";
    }
    for (int i = 0; i < num_vars_; ++i) {
      if (e[i] == 0) continue;
      if (wrote) out << "*";
      out << "t" << (i + 1) << "^" << e[i];
      wrote = true;
    }
  }
  return out.str();
}

namespace {

// Parses one factor "t<k>^<e>" or "t^<e>"; returns false if s is not a variable.
bool parse_var_factor(const std::string& s, int num_vars, int* index, int* power) {
  if (s.empty() || s[0] != 't') return false;
  size_t pos = 1;
  int idx = 0;
  if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    idx = std::stoi(s.substr(start, pos - start)) - 1;
  }
  int pw = 1;
  if (pos < s.size()) {
    if (s[pos] != '^') return false;
    pw = std::stoi(s.substr(pos + 1));
  }
  if (idx < 0 || idx >= num_vars) throw InputError("variable index out of range: " + s);
  *index = idx;
  *power = pw;
  return true;
}

}  // namespace

LaurentPoly LaurentPoly::parse(const std::string& text, int num_vars) {
  LaurentPoly p(num_vars);
  std::string compact;
  compact.reserve(text.size());
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) compact.push_back(ch);
  if (compact.empty()) throw InputError("empty polynomial string");
  if (compact == "0") return p;

  // Split on '+' that separates terms (a leading '-' belongs to its term).
  std::vector<std::string> parts;
  size_t start = 0;
  for (size_t i = 0; i < compact.size(); ++i) {
    if (compact[i] == '+') {
      parts.push_back(compact.substr(start, i - start));
      start = i + 1;
    }
  }
  parts.push_back(compact.substr(start));

  for (const std::string& term : parts) {
    if (term.empty()) throw InputError("malformed polynomial: " + text);
    std::vector<std::string> factors;
    size_t s = 0;
    for (size_t i = 0; i < term.size(); ++i) {
      if (term[i] == '*') {
        factors.push_back(term.substr(s, i - s));
        s = i + 1;
      }
    }
    factors.push_back(term.substr(s));
    Rat coeff(1);
    Exps e(num_vars, 0);
    for (std::string f : factors) {
      if (f.empty()) throw InputError("malformed polynomial: " + text);
      bool neg = false;
      if (f[0] == '-' && f.size() > 1 && f[1] == 't') {
        neg = true;
        f = f.substr(1);
      }
      int idx, pw;
      if (parse_var_factor(f, num_vars, &idx, &pw)) {
        e[idx] += pw;
        if (neg) coeff = -coeff;
      } else {
        coeff *= Rat(f);
      }
    }
    p.insert_term(e, coeff);
  }
  return p;
}

LaurentPoly operator*(const Rat& c, const LaurentPoly& p) { return p.scaled(c); }

}  // namespace zcat
