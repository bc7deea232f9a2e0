#pragma once

// Quantum eigenvalues: commutative polynomials in μ_1..μ_m (and ν_1..ν_n),
// the power-sum parameterizations, the quantum Harish-Chandra morphism and
// characters on V_λ.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rea/charmap.hpp"
#include "rea/errors.hpp"
#include "rea/expr_parser.hpp"
#include "rea/ncalg.hpp"
#include "rea/scalar.hpp"

namespace rea {

// Commutative polynomial over ℚ(q) in a fixed number of variables. Terms are
// keyed by exponent vectors; std::map order on them is lex with x_1 largest,
// which is the monomial order used for division.
class MPoly {
 public:
  using Exponents = std::vector<int>;
  using Terms = std::map<Exponents, ScalarQ>;

  explicit MPoly(int nvars = 0) : nvars_(nvars) {}
  MPoly(int nvars, const ScalarQ& c) : nvars_(nvars) {
    if (!c.is_zero()) terms_[Exponents(static_cast<std::size_t>(nvars), 0)] = c;
  }
  static MPoly var(int nvars, int k) {
    if (k < 0 || k >= nvars) throw IndexOutOfRange("variable index out of range");
    Exponents e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(k)] = 1;
    return monomial(e, 1);
  }
  static MPoly monomial(const Exponents& e, const ScalarQ& c) {
    MPoly p(static_cast<int>(e.size()));
    if (!c.is_zero()) p.terms_[e] = c;
    return p;
  }

  int nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
      int s = 0;
      for (int x : e) s += x;
      d = std::max(d, s);
    }
    return d;
  }
  ScalarQ coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? ScalarQ() : it->second;
  }

  void add_term(const Exponents& e, const ScalarQ& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  friend bool operator==(const MPoly& a, const MPoly& b) { return a.nvars_ == b.nvars_ && a.terms_ == b.terms_; }
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  MPoly& operator+=(const MPoly& b) {
    check(b);
    for (const auto& [e, c] : b.terms_) add_term(e, c);
    return *this;
  }
  MPoly& operator-=(const MPoly& b) {
    check(b);
    for (const auto& [e, c] : b.terms_) add_term(e, -c);
    return *this;
  }
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator-(const MPoly& a) { return ScalarQ(-1) * a; }
  friend MPoly operator*(const ScalarQ& s, const MPoly& a) {
    MPoly r(a.nvars_);
    if (s.is_zero()) return r;
    for (const auto& [e, c] : a.terms_) r.terms_.emplace_hint(r.terms_.end(), e, s * c);
    return r;
  }
  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    a.check(b);
    MPoly r(a.nvars_);
    Exponents e(static_cast<std::size_t>(a.nvars_));
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
        r.add_term(e, ca * cb);
      }
    return r;
  }
  MPoly& operator*=(const MPoly& b) { return *this = *this * b; }

  MPoly pow(int k) const {
    if (k < 0) throw InputError("MPoly: negative power");
    MPoly r(nvars_, 1);
    for (int i = 0; i < k; ++i) r *= *this;
    return r;
  }

  ScalarQ eval(const std::vector<ScalarQ>& x) const {
    if (static_cast<int>(x.size()) != nvars_) throw InputError("MPoly eval: wrong number of values");
    ScalarQ s;
    for (const auto& [e, c] : terms_) {
      ScalarQ t = c;
      for (std::size_t k = 0; k < e.size(); ++k)
        if (e[k]) t *= x[k].pow(e[k]);
      s += t;
    }
    return s;
  }

  // Variable k ↦ images[k]; all images share one variable count.
  MPoly substitute(const std::vector<MPoly>& images) const {
    if (static_cast<int>(images.size()) != nvars_) throw InputError("MPoly substitute: wrong number of images");
    const int target = images.empty() ? 0 : images[0].nvars();
    MPoly r(target);
    for (const auto& [e, c] : terms_) {
      MPoly t(target, c);
      for (std::size_t k = 0; k < e.size(); ++k)
        if (e[k]) t *= images[k].pow(e[k]);
      r += t;
    }
    return r;
  }

  MPoly swap_vars(int a, int b) const {
    MPoly r(nvars_);
    for (const auto& [e0, c] : terms_) {
      Exponents e = e0;
      std::swap(e[static_cast<std::size_t>(a)], e[static_cast<std::size_t>(b)]);
      r.terms_.emplace(std::move(e), c);
    }
    return r;
  }

  template <class F>
  MPoly map_coeffs(F f) const {
    MPoly r(nvars_);
    for (const auto& [e, c] : terms_) r.add_term(e, f(c));
    return r;
  }

  // Exact division; nullopt when g does not divide.
  std::optional<MPoly> divide_exact(const MPoly& g) const {
    check(g);
    if (g.is_zero()) throw DivisionByZero("MPoly: division by zero");
    const auto& [glead, gc] = *g.terms_.rbegin();
    const ScalarQ ginv = gc.inverse();
    MPoly rem = *this, quot(nvars_);
    Exponents e(static_cast<std::size_t>(nvars_));
    while (!rem.is_zero()) {
      const auto [rlead, rc] = *rem.terms_.rbegin();
      for (std::size_t k = 0; k < e.size(); ++k) {
        e[k] = rlead[k] - glead[k];
        if (e[k] < 0) return std::nullopt;
      }
      MPoly t = monomial(e, rc * ginv);
      quot += t;
      rem -= t * g;
    }
    return quot;
  }

  // "coeff * mu1^2 mu2 + ..." with the given variable names, highest term first.
  std::string to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      std::string mono;
      for (std::size_t k = 0; k < e.size(); ++k) {
        if (!e[k]) continue;
        if (!mono.empty()) mono += " ";
        mono += names.at(k);
        if (e[k] > 1) mono += "^" + std::to_string(e[k]);
      }
      std::string term;
      if (mono.empty())
        term = c.to_coeff_string();
      else if (c == ScalarQ(1))
        term = mono;
      else if (c == ScalarQ(-1))
        term = "-" + mono;
      else
        term = c.to_coeff_string() + " * " + mono;
      if (out.empty())
        out = term;
      else if (term[0] == '-')
        out += " - " + term.substr(1);
      else
        out += " + " + term;
    }
    return out;
  }

  static MPoly parse(std::string_view text, const std::vector<std::string>& names) {
    const int n = static_cast<int>(names.size());
    ExprGrammar<MPoly> g;
    g.integer = [n](const Integer& v) { return MPoly(n, ScalarQ(v)); };
    g.atom = [&names, n](std::string_view name, const std::vector<int>&) -> MPoly {
      if (name == "q") return MPoly(n, ScalarQ::q());
      for (int k = 0; k < n; ++k)
        if (names[static_cast<std::size_t>(k)] == name) return var(n, k);
      throw ParseError("unknown variable '" + std::string(name) + "'");
    };
    g.divide = [](const MPoly& a, const MPoly& b) { return b.as_scalar().inverse() * a; };
    g.invert = [n](const MPoly& a) { return MPoly(n, a.as_scalar().inverse()); };
    return parse_expression(text, g);
  }

  ScalarQ as_scalar() const {
    if (terms_.empty()) return {};
    for (int x : terms_.begin()->first)
      if (x) throw ParseError("only scalars can be inverted");
    if (terms_.size() != 1) throw ParseError("only scalars can be inverted");
    return terms_.begin()->second;
  }

 private:
  void check(const MPoly& b) const {
    if (nvars_ != b.nvars_) throw InputError("MPoly: variable count mismatch");
  }

  int nvars_;
  Terms terms_;
};

// Names mu1..mum, nu1..nun (or muhat/nuhat).
inline std::vector<std::string> eigen_names(int m, int n = 0, bool hat = false) {
  std::vector<std::string> v;
  for (int i = 1; i <= m; ++i) v.push_back((hat ? "muhat" : "mu") + std::to_string(i));
  for (int j = 1; j <= n; ++j) v.push_back((hat ? "nuhat" : "nu") + std::to_string(j));
  return v;
}
inline std::vector<std::string> e_names(int m) {
  std::vector<std::string> v;
  for (int k = 1; k <= m; ++k) v.push_back("e" + std::to_string(k));
  return v;
}

// Elementary symmetric polynomial of degree k in variables first..first+count-1.
inline MPoly elementary_symmetric(int k, int nvars, int first = 0, int count = -1) {
  if (count < 0) count = nvars - first;
  std::vector<MPoly> e(static_cast<std::size_t>(k + 1), MPoly(nvars));
  e[0] = MPoly(nvars, 1);
  for (int v = first; v < first + count; ++v)
    for (int j = k; j >= 1; --j)
      e[static_cast<std::size_t>(j)] += e[static_cast<std::size_t>(j - 1)] * MPoly::var(nvars, v);
  return e[static_cast<std::size_t>(k)];
}

// Symmetric under every transposition inside variables first..first+count-1.
inline bool is_symmetric(const MPoly& p, int first, int count) {
  for (int a = first; a + 1 < first + count; ++a)
    if (p.swap_vars(a, a + 1) != p) return false;
  return true;
}

// Numerator over a product of polynomial factors.
struct SymRat {
  MPoly num;
  std::vector<MPoly> den;

  // Divides the numerator by every factor; NotPolynomial unless all exact.
  MPoly to_polynomial() const {
    MPoly p = num;
    for (const auto& f : den) {
      auto d = p.divide_exact(f);
      if (!d) throw NotPolynomial("numerator is not divisible by a denominator factor");
      p = std::move(*d);
    }
    return p;
  }
  ScalarQ eval(const std::vector<ScalarQ>& x) const {
    ScalarQ d = 1;
    for (const auto& f : den) d *= f.eval(x);
    if (d.is_zero()) throw DivisionByZero("SymRat: denominator vanishes at the point");
    return num.eval(x) / d;
  }
};

namespace detail {

// Weight factor data for Σ x_i^k w_i, w_i = c_i ∏_{p≠i}(x_i - a_{ip} x_p - s)/(x_i - x_p).
struct WeightSpec {
  int m = 0, n = 0;
  bool hat = false;
  ScalarQ lead(int i) const { return i < m ? ScalarQ::q_power(-1) : ScalarQ::q_power(1, -1); }
  ScalarQ ratio(int p) const {
    // μ-μ and ν-μ use q^-2, μ-ν and ν-ν use q^2
    return p < m ? ScalarQ::q_power(-2) : ScalarQ::q_power(2);
  }
  ScalarQ shift() const { return hat ? ScalarQ::q_power(-1) : ScalarQ(0); }
};

inline MPoly weight_numerator_factor(const WeightSpec& w, int i, int p) {
  const int nv = w.m + w.n;
  return MPoly::var(nv, i) - w.ratio(p) * MPoly::var(nv, p) - MPoly(nv, w.shift());
}

// Σ_i x_i^k w_i over the common denominator ∏_{a<b}(x_a - x_b).
inline SymRat weighted_powersum(int k, const WeightSpec& w) {
  const int nv = w.m + w.n;
  if (k < 0) throw InputError("power sum degree must be nonnegative");
  if (nv < 1) throw InputError("need at least one eigenvalue variable");
  SymRat r{MPoly(nv), {}};
  for (int a = 0; a < nv; ++a)
    for (int b = a + 1; b < nv; ++b) r.den.push_back(MPoly::var(nv, a) - MPoly::var(nv, b));
  for (int i = 0; i < nv; ++i) {
    MPoly t = MPoly::var(nv, i).pow(k);
    t = (i % 2 ? -w.lead(i) : w.lead(i)) * t;  // (x_i - x_p) = -(x_p - x_i) for p < i
    for (int p = 0; p < nv; ++p)
      if (p != i) t *= weight_numerator_factor(w, i, p);
    for (int a = 0; a < nv; ++a)
      for (int b = a + 1; b < nv; ++b)
        if (a != i && b != i) t *= MPoly::var(nv, a) - MPoly::var(nv, b);
    r.num += t;
  }
  return r;
}

}  // namespace detail

// The weights themselves, as SymRat values (for direct evaluation).
inline SymRat weight_d(int i, int m, int n = 0, bool hat = false) {
  detail::WeightSpec w{m, n, hat};
  const int nv = m + n;
  SymRat r{MPoly(nv, w.lead(i)), {}};
  for (int p = 0; p < nv; ++p)
    if (p != i) {
      r.num *= detail::weight_numerator_factor(w, i, p);
      r.den.push_back(MPoly::var(nv, i) - MPoly::var(nv, p));
    }
  return r;
}

// p_k(L) = Σ μ_i^k d_i.
inline MPoly powersum_sym(int k, int m) { return detail::weighted_powersum(k, {m, 0, false}).to_polynomial(); }
// p_k(L̂) = Σ μ̂_i^k d̂_i.
inline MPoly powersum_hat_sym(int k, int m) { return detail::weighted_powersum(k, {m, 0, true}).to_polynomial(); }
// Σ μ_i^k d_i + Σ ν_j^k f_j with the (m|n) weights.
inline MPoly super_powersum(int k, int m, int n) { return detail::weighted_powersum(k, {m, n, false}).to_polynomial(); }

// e_k ↦ q^-k e_k(μ_1..μ_m).
inline MPoly hc_morphism(const MPoly& p, int m) {
  std::vector<MPoly> images;
  for (int k = 1; k <= p.nvars(); ++k) images.push_back(ScalarQ::q_power(-k) * elementary_symmetric(k, m));
  if (images.empty()) return MPoly(m, p.coeff({}));
  return p.substitute(images);
}

// μ_i = 1 - (q - q^-1) μ̂_i, turning a polynomial in μ into one in μ̂.
inline MPoly zamena(const MPoly& p) {
  std::vector<MPoly> images;
  for (int k = 0; k < p.nvars(); ++k)
    images.push_back(MPoly(p.nvars(), 1) - qdiff() * MPoly::var(p.nvars(), k));
  return p.substitute(images);
}

using Partition = std::vector<int>;

inline void validate_partition(const Partition& lambda, int m) {
  if (static_cast<int>(lambda.size()) != m)
    throw InputError("partition length " + std::to_string(lambda.size()) + " != " + std::to_string(m));
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i] < 0) throw InputError("partition parts must be nonnegative");
    if (i && lambda[i] > lambda[i - 1]) throw InputError("partition must be weakly decreasing");
  }
}

// μ_i(λ) = q^{-2(λ_i + m - i)}.
inline std::vector<ScalarQ> mu_char(const Partition& lambda, int m) {
  validate_partition(lambda, m);
  std::vector<ScalarQ> out;
  for (int i = 1; i <= m; ++i) out.push_back(ScalarQ::q_power(-2 * (lambda[static_cast<std::size_t>(i - 1)] + m - i)));
  return out;
}
// μ̂_i(λ) = q^{-ℓ} ℓ_q, ℓ = λ_i + m - i.
inline std::vector<ScalarQ> muhat_char(const Partition& lambda, int m) {
  validate_partition(lambda, m);
  std::vector<ScalarQ> out;
  for (int i = 1; i <= m; ++i) {
    int ell = lambda[static_cast<std::size_t>(i - 1)] + m - i;
    out.push_back(ScalarQ::q_power(-ell) * qint(ell));
  }
  return out;
}

// Character of a polynomial in μ_1..μ_m (or μ̂ with hat) on V_λ.
inline ScalarQ character(const MPoly& p, const Partition& lambda, bool hat = false) {
  const int m = static_cast<int>(lambda.size());
  if (p.nvars() != m)
    throw InputError("character: polynomial has " + std::to_string(p.nvars()) + " variables, partition has " +
                     std::to_string(m) + " parts (ν characters are not available)");
  return p.eval(hat ? muhat_char(lambda, m) : mu_char(lambda, m));
}

// Exact solve of reduce(z) = Σ c_M reduce(M) over the monomials M in the given
// generators with weighted degree <= max_weight (generator k has weight
// weights[k]). Returns the coefficients as a polynomial in the generators.
inline MPoly express_in_basis(const REAlgebra& alg, const NCPoly& z, const std::vector<NCPoly>& gens,
                              const std::vector<int>& weights, int max_weight) {
  const int g = static_cast<int>(gens.size());
  std::vector<MPoly::Exponents> monos{MPoly::Exponents(static_cast<std::size_t>(g), 0)};
  std::vector<NCPoly> images{NCPoly(1)};
  std::vector<int> mono_weight{0};
  // grow monomials in non-decreasing generator order, so each appears once
  std::vector<int> last_gen{0};
  for (std::size_t idx = 0; idx < monos.size(); ++idx)
    for (int k = last_gen[idx]; k < g; ++k) {
      int w = mono_weight[idx] + weights[static_cast<std::size_t>(k)];
      if (w > max_weight) continue;
      auto e = monos[idx];
      ++e[static_cast<std::size_t>(k)];
      monos.push_back(e);
      images.push_back(images[idx] * gens[static_cast<std::size_t>(k)]);
      mono_weight.push_back(w);
      last_gen.push_back(k);
    }
  for (auto& im : images) im = alg.reduce(im);
  NCPoly target = alg.reduce(z);

  // rows: words; columns: monomials + right-hand side
  std::map<Word, std::size_t> row_of;
  auto row = [&](const Word& w) { return row_of.try_emplace(w, row_of.size()).first->second; };
  for (const auto& im : images)
    for (const auto& [w, c] : im.terms()) row(w);
  for (const auto& [w, c] : target.terms()) row(w);
  const std::size_t rows = row_of.size(), cols = monos.size();
  std::vector<std::vector<ScalarQ>> a(rows, std::vector<ScalarQ>(cols + 1));
  for (std::size_t j = 0; j < cols; ++j)
    for (const auto& [w, c] : images[j].terms()) a[row_of[w]][j] = c;
  for (const auto& [w, c] : target.terms()) a[row_of[w]][cols] = c;

  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t p = r;
    while (p < rows && a[p][col].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    ScalarQ inv = a[r][col].inverse();
    for (std::size_t j = col; j <= cols; ++j) a[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][col].is_zero()) continue;
      ScalarQ f = a[i][col];
      for (std::size_t j = col; j <= cols; ++j)
        if (!a[r][j].is_zero()) a[i][j] -= f * a[r][j];
    }
    pivot_col.push_back(col);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (!a[i][cols].is_zero()) throw NotInSpan("element is not a polynomial in the given generators up to weight " + std::to_string(max_weight));
  MPoly out(g);
  for (std::size_t i = 0; i < r; ++i) out.add_term(monos[pivot_col[i]], a[i][cols]);
  return out;
}

// Generators of the characteristic subalgebra used for the e-basis: e_k(L)
// in the RE algebra; in the modified Hecke case their images under shift_map, so that
// e_k still means the RE elementary polynomial; e_k(L̂) for an involutive R.
inline std::vector<NCPoly> e_basis_generators(const Symmetry& s, Variant v, int m) {
  std::vector<NCPoly> out;
  for (int k = 1; k <= m; ++k) {
    NCPoly e = elementary_expr(s, k);
    out.push_back(v == Variant::modified_re && s.is_hecke() ? shift_map(s, e) : e);
  }
  return out;
}

inline MPoly express_in_e_basis(const REAlgebra& alg, const NCPoly& z, int max_deg) {
  const int m = even_birank(alg.symmetry());
  std::vector<int> weights;
  for (int k = 1; k <= m; ++k) weights.push_back(k);
  return express_in_basis(alg, z, e_basis_generators(alg.symmetry(), alg.variant(), m), weights, max_deg);
}

}  // namespace rea
