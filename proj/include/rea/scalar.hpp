#pragma once

// Exact arithmetic in Q(q): rational functions in the deformation parameter
// with integer coefficients.
//
// A ScalarQ is stored as num/den with num, den in Z[q], gcd(num, den) = 1 in
// Z[q] (so integer content is cancelled too) and den having positive
// leading coefficient. This makes the representation unique and equality a
// field-by-field comparison.

#include <algorithm>
#include <cstddef>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "rea/errors.hpp"
#include "rea/expr_parser.hpp"

namespace rea {

using Integer = mpz_class;
using Rational = mpq_class;

// Dense polynomial in q over Z, coefficients stored low to high degree with
// no trailing zeros (the zero polynomial is the empty vector).
class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(long c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) c_.emplace_back(c);
  }
  IntPoly(const Integer& c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) c_.push_back(c);
  }
  explicit IntPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

  static IntPoly monomial(const Integer& c, int power) {
    IntPoly p;
    if (c == 0) return p;
    p.c_.assign(static_cast<std::size_t>(power) + 1, Integer(0));
    p.c_.back() = c;
    return p;
  }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Integer& lead() const { return c_.back(); }
  const std::vector<Integer>& coeffs() const { return c_; }
  Integer coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(i)] : Integer(0);
  }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  bool is_constant() const { return c_.size() <= 1; }

  // Lowest power of q with nonzero coefficient (0 for the zero polynomial).
  int valuation() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (c_[i] != 0) return static_cast<int>(i);
    return 0;
  }
  bool is_monomial() const { return !c_.empty() && valuation() == degree(); }

  IntPoly shifted(int k) const {  // multiply by q^k, k may be negative if divisible
    if (is_zero() || k == 0) return *this;
    IntPoly r;
    if (k > 0) {
      r.c_.assign(static_cast<std::size_t>(k), Integer(0));
      r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    } else {
      r.c_.assign(c_.begin() + (-k), c_.end());
    }
    return r;
  }

  Integer content() const {
    Integer g = 0;
    for (const auto& x : c_) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
      if (g == 1) break;
    }
    return g;
  }

  void divexact_inplace(const Integer& d) {
    if (d == 1) return;
    for (auto& x : c_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
  }
  void negate_inplace() {
    for (auto& x : c_) x = -x;
  }

  Integer eval(const Integer& x) const {
    Integer r = 0;
    for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
  }
  Rational eval(const Rational& x) const {
    Rational r = 0;
    for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
  }

  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const IntPoly& a, const IntPoly& b) { return !(a == b); }

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    const IntPoly& big = a.c_.size() >= b.c_.size() ? a : b;
    const IntPoly& small = a.c_.size() >= b.c_.size() ? b : a;
    IntPoly r = big;
    for (std::size_t i = 0; i < small.c_.size(); ++i) r.c_[i] += small.c_[i];
    r.trim();
    return r;
  }
  friend IntPoly operator-(const IntPoly& a) {
    IntPoly r = a;
    r.negate_inplace();
    return r;
  }
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    IntPoly r = a;
    if (r.c_.size() < b.c_.size()) r.c_.resize(b.c_.size(), Integer(0));
    for (std::size_t i = 0; i < b.c_.size(); ++i) r.c_[i] -= b.c_[i];
    r.trim();
    return r;
  }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.c_.size() == 1 && a.c_[0] == 1) return b;
    if (b.c_.size() == 1 && b.c_[0] == 1) return a;
    IntPoly r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        if (b.c_[j] == 0) continue;
        mpz_addmul(r.c_[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
      }
    }
    r.trim();
    return r;
  }

  // Quotient of an exact division in Z[q]. Returns false (leaving *quot
  // unspecified) when b does not divide a.
  static bool try_divide(const IntPoly& a, const IntPoly& b, IntPoly* quot) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (a.is_zero()) {
      *quot = IntPoly();
      return true;
    }
    if (a.degree() < b.degree()) return false;
    std::vector<Integer> rem = a.c_;
    std::vector<Integer> q(static_cast<std::size_t>(a.degree() - b.degree() + 1), Integer(0));
    const Integer& lb = b.lead();
    for (int d = a.degree(); d >= b.degree(); --d) {
      Integer& top = rem[static_cast<std::size_t>(d)];
      if (top == 0) continue;
      if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) return false;
      Integer f;
      mpz_divexact(f.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
      int shift = d - b.degree();
      for (int j = 0; j <= b.degree(); ++j)
        mpz_submul(rem[static_cast<std::size_t>(shift + j)].get_mpz_t(), f.get_mpz_t(),
                   b.c_[static_cast<std::size_t>(j)].get_mpz_t());
      q[static_cast<std::size_t>(shift)] = f;
    }
    for (int d = 0; d < b.degree(); ++d)
      if (rem[static_cast<std::size_t>(d)] != 0) return false;
    *quot = IntPoly(std::move(q));
    return true;
  }

  static IntPoly divexact(const IntPoly& a, const IntPoly& b) {
    if (b.is_one()) return a;
    if (b.is_constant()) {
      IntPoly r = a;
      r.divexact_inplace(b.lead());
      return r;
    }
    IntPoly r;
    if (!try_divide(a, b, &r)) throw Error("IntPoly::divexact: inexact division");
    return r;
  }

  // Pseudo-remainder of a by b (multiplies a by powers of lead(b) as needed).
  static IntPoly prem(IntPoly a, const IntPoly& b) {
    const Integer& lb = b.lead();
    int db = b.degree();
    while (!a.is_zero() && a.degree() >= db) {
      Integer la = a.lead();
      int shift = a.degree() - db;
      Integer g = int_gcd(la, lb);
      Integer fa = lb / g, fb = la / g;
      for (auto& x : a.c_) x *= fa;
      for (int j = 0; j <= db; ++j)
        mpz_submul(a.c_[static_cast<std::size_t>(shift + j)].get_mpz_t(), fb.get_mpz_t(),
                   b.c_[static_cast<std::size_t>(j)].get_mpz_t());
      a.trim();
    }
    return a;
  }

  // Primitive part with positive leading coefficient.
  IntPoly primitive() const {
    IntPoly r = *this;
    if (r.is_zero()) return r;
    Integer c = r.content();
    if (r.lead() < 0) c = -c;
    r.divexact_inplace(c);
    return r;
  }

  // gcd in Z[q], normalized to positive leading coefficient.
  static IntPoly gcd(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero()) return b.primitive_signed_content();
    if (b.is_zero()) return a.primitive_signed_content();
    int v = std::min(a.valuation(), b.valuation());
    IntPoly x = a.shifted(-a.valuation());
    IntPoly y = b.shifted(-b.valuation());
    Integer cg = int_gcd(x.content(), y.content());
    IntPoly core;
    if (x.degree() == 0 || y.degree() == 0) {
      core = IntPoly(1);
    } else {
      x = x.primitive();
      y = y.primitive();
      if (x.degree() < y.degree()) std::swap(x, y);
      while (!y.is_zero()) {
        if (y.degree() == 0) {
          x = IntPoly(1);
          break;
        }
        IntPoly r = prem(std::move(x), y).primitive();
        x = std::move(y);
        y = std::move(r);
      }
      core = x.primitive();
    }
    IntPoly r = core.shifted(v);
    if (cg != 1)
      for (auto& c : r.c_) c *= cg;
    return r;
  }

  std::string to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
      const Integer& c = c_[i];
      if (c == 0) continue;
      Integer a = abs(c);
      if (c < 0)
        os << (first ? "-" : "-");
      else if (!first)
        os << "+";
      first = false;
      if (i == 0) {
        os << a.get_str();
        continue;
      }
      if (a != 1) os << a.get_str() << "*";
      os << "q";
      if (i > 1) os << "^" << i;
    }
    return os.str();
  }

  std::size_t term_count() const {
    return static_cast<std::size_t>(std::count_if(c_.begin(), c_.end(), [](const Integer& x) { return x != 0; }));
  }

 private:
  static Integer int_gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
  }
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  IntPoly primitive_signed_content() const {
    IntPoly r = *this;
    if (!r.is_zero() && r.lead() < 0) r.negate_inplace();
    return r;
  }

  std::vector<Integer> c_;
};

class ScalarQ {
 public:
  ScalarQ() : den_(1) {}
  ScalarQ(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  ScalarQ(const Integer& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  ScalarQ(const Rational& c) : num_(c.get_num()), den_(c.get_den()) {}  // NOLINT
  ScalarQ(IntPoly num, IntPoly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

  static ScalarQ q() { return ScalarQ(IntPoly::monomial(1, 1), IntPoly(1)); }

  // c * q^k for any integer k.
  static ScalarQ q_power(int k, const Integer& c = 1) {
    if (k >= 0) return ScalarQ(IntPoly::monomial(c, k), IntPoly(1));
    return ScalarQ(IntPoly(c), IntPoly::monomial(1, -k));
  }

  // Laurent polynomial sum_k coeffs[k] q^k.
  static ScalarQ laurent(const std::map<int, Integer>& coeffs) {
    if (coeffs.empty()) return {};
    int lo = std::min(0, coeffs.begin()->first);
    std::vector<Integer> c(static_cast<std::size_t>(std::max(0, coeffs.rbegin()->first) - lo + 1), Integer(0));
    for (const auto& [k, v] : coeffs) c[static_cast<std::size_t>(k - lo)] += v;
    return ScalarQ(IntPoly(std::move(c)), IntPoly::monomial(1, -lo));
  }

  const IntPoly& num() const { return num_; }
  const IntPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_rational_constant() const { return num_.is_constant() && den_.is_constant(); }
  Rational to_rational() const {
    if (!is_rational_constant()) throw Error("ScalarQ::to_rational: value depends on q");
    Rational r(num_.coeff(0), den_.coeff(0));
    r.canonicalize();
    return r;
  }

  friend bool operator==(const ScalarQ& a, const ScalarQ& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const ScalarQ& a, const ScalarQ& b) { return !(a == b); }

  friend ScalarQ operator-(const ScalarQ& a) {
    ScalarQ r = a;
    r.num_.negate_inplace();
    return r;
  }

  friend ScalarQ operator+(const ScalarQ& a, const ScalarQ& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) {
      ScalarQ r;
      r.num_ = a.num_ + b.num_;
      r.den_ = a.den_;
      if (!r.den_.is_one()) r.normalize();
      else if (r.num_.is_zero()) r.den_ = IntPoly(1);
      return r;
    }
    // p + n/d with gcd(n, d) = 1 stays reduced
    if (a.den_.is_one()) return from_parts(a.num_ * b.den_ + b.num_, b.den_, false);
    if (b.den_.is_one()) return from_parts(a.num_ + b.num_ * a.den_, a.den_, false);
    IntPoly g = IntPoly::gcd(a.den_, b.den_);
    if (g.is_one()) {
      // num is already coprime to den when the denominators are coprime
      return from_parts(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_, false);
    }
    IntPoly bd = IntPoly::divexact(b.den_, g);
    IntPoly ad = IntPoly::divexact(a.den_, g);
    IntPoly n = a.num_ * bd + b.num_ * ad;
    IntPoly d = a.den_ * bd;
    if (n.is_zero()) return {};
    IntPoly h = IntPoly::gcd(n, g);
    if (!h.is_one()) {
      n = IntPoly::divexact(n, h);
      d = IntPoly::divexact(d, h);
    }
    return from_parts(std::move(n), std::move(d), false);
  }
  friend ScalarQ operator-(const ScalarQ& a, const ScalarQ& b) { return a + (-b); }

  friend ScalarQ operator*(const ScalarQ& a, const ScalarQ& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.is_one()) return b;
    if (b.is_one()) return a;
    if (a.den_.is_one() && b.den_.is_one()) {
      ScalarQ r;
      r.num_ = a.num_ * b.num_;
      return r;
    }
    IntPoly g1 = IntPoly::gcd(a.num_, b.den_);
    IntPoly g2 = IntPoly::gcd(b.num_, a.den_);
    IntPoly n = IntPoly::divexact(a.num_, g1) * IntPoly::divexact(b.num_, g2);
    IntPoly d = IntPoly::divexact(a.den_, g2) * IntPoly::divexact(b.den_, g1);
    return from_parts(std::move(n), std::move(d), false);
  }

  ScalarQ inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero in Q(q)");
    return from_parts(den_, num_, false);
  }
  friend ScalarQ operator/(const ScalarQ& a, const ScalarQ& b) { return a * b.inverse(); }

  ScalarQ& operator+=(const ScalarQ& b) { return *this = *this + b; }
  ScalarQ& operator-=(const ScalarQ& b) { return *this = *this - b; }
  ScalarQ& operator*=(const ScalarQ& b) { return *this = *this * b; }
  ScalarQ& operator/=(const ScalarQ& b) { return *this = *this / b; }

  ScalarQ pow(int k) const {
    ScalarQ base = k < 0 ? inverse() : *this;
    ScalarQ r = 1;
    for (int i = 0; i < std::abs(k); ++i) r *= base;
    return r;
  }

  // Exact value at q = q0.
  Rational eval_at(const Rational& q0) const {
    Rational d = den_.eval(q0);
    if (d == 0) throw PoleAtPoint("denominator vanishes at q = " + q0.get_str());
    Rational r = num_.eval(q0) / d;
    r.canonicalize();
    return r;
  }

  // Value at q = 1. The stored form is reduced, so a vanishing denominator
  // means the singularity is not removable.
  Rational limit_q1() const {
    Rational d = den_.eval(Rational(1));
    if (d == 0) throw PoleAtOne(to_string() + " has a pole at q = 1");
    Rational r = num_.eval(Rational(1)) / d;
    r.canonicalize();
    return r;
  }

  // Canonical text: "P(q)" or "P(q)/Q(q)", parenthesized where needed.
  std::string to_string() const {
    std::string n = num_.to_string();
    if (den_.is_one()) return n;
    std::string d = den_.to_string();
    if (num_.term_count() > 1) n = "(" + n + ")";
    bool bare_den = den_.is_monomial() && den_.lead() == 1;
    if (!bare_den && !(den_.is_constant())) d = "(" + d + ")";
    return n + "/" + d;
  }

  // Text form used when the scalar multiplies something else.
  std::string to_coeff_string() const {
    std::string s = to_string();
    bool simple = den_.is_one() && num_.term_count() <= 1;
    return simple ? s : "(" + s + ")";
  }

  static ScalarQ parse(std::string_view text);

  friend std::ostream& operator<<(std::ostream& os, const ScalarQ& s) { return os << s.to_string(); }

 private:
  static ScalarQ from_parts(IntPoly n, IntPoly d, bool reduce) {
    ScalarQ r;
    r.num_ = std::move(n);
    r.den_ = std::move(d);
    if (reduce)
      r.normalize();
    else
      r.fix_sign();
    return r;
  }
  void fix_sign() {
    if (num_.is_zero()) {
      den_ = IntPoly(1);
      return;
    }
    if (den_.lead() < 0) {
      num_.negate_inplace();
      den_.negate_inplace();
    }
  }
  void normalize() {
    if (den_.is_zero()) throw DivisionByZero("zero denominator in Q(q)");
    if (num_.is_zero()) {
      den_ = IntPoly(1);
      return;
    }
    if (!den_.is_one()) {
      IntPoly g = IntPoly::gcd(num_, den_);
      if (!g.is_one()) {
        num_ = IntPoly::divexact(num_, g);
        den_ = IntPoly::divexact(den_, g);
      }
    }
    fix_sign();
  }

  IntPoly num_;
  IntPoly den_;
};

inline ScalarQ ScalarQ::parse(std::string_view text) {
  ExprGrammar<ScalarQ> g;
  g.integer = [](const Integer& v) { return ScalarQ(v); };
  g.atom = [](std::string_view name, const std::vector<int>&) -> ScalarQ {
    if (name == "q") return ScalarQ::q();
    throw ParseError("unknown symbol '" + std::string(name) + "' in scalar");
  };
  g.divide = [](const ScalarQ& a, const ScalarQ& b) {
    if (b.is_zero()) throw ParseError("division by zero");
    return a / b;
  };
  g.invert = [](const ScalarQ& a) {
    if (a.is_zero()) throw ParseError("negative power of zero");
    return a.inverse();
  };
  return parse_expression(text, g);
}

// q-integer k_q = (q^k - q^-k) / (q - q^-1).
inline ScalarQ qint(int k) {
  if (k == 0) return {};
  if (k < 0) return -qint(-k);
  std::map<int, Integer> c;
  for (int j = -(k - 1); j <= k - 1; j += 2) c[j] += 1;
  return ScalarQ::laurent(c);
}

// q - q^-1, the ubiquitous Hecke parameter.
inline ScalarQ qdiff() { return ScalarQ::laurent({{1, 1}, {-1, -1}}); }

}  // namespace rea
