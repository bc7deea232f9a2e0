#pragma once

// Free associative algebra on the N^2 generators g(i,j) = l_i^j of an RE
// algebra, matrices over it, and the degree-truncated normal form modulo
// the RE or modified RE relations.
//
// Generator g(i,j) (0-based i, j) is the letter i*N + j. Words are packed
// four bits per letter, first letter most significant, so for N <= 4 and
// length <= 16 comparing (length, bits) is the graded-lexicographic order
// with g(1,1) < g(1,2) < ... < g(N,N).

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rea/errors.hpp"
#include "rea/expr_parser.hpp"
#include "rea/scalar.hpp"
#include "rea/symmetry.hpp"
#include "rea/tensor.hpp"

namespace rea {

constexpr int kMaxWordLength = 16;
constexpr int kMaxGenDim = 4;

struct Word {
  std::uint64_t bits = 0;
  int len = 0;

  static Word letter(int g) { return {static_cast<std::uint64_t>(g), 1}; }
  int at(int k) const { return static_cast<int>((bits >> (4 * (len - 1 - k))) & 0xF); }

  friend Word operator*(const Word& a, const Word& b) {
    if (a.len + b.len > kMaxWordLength)
      throw DegreeBoundExceeded(a.len + b.len, kMaxWordLength);
    return {b.len == 0 ? a.bits : (a.bits << (4 * b.len)) | b.bits, a.len + b.len};
  }
  friend bool operator==(const Word& a, const Word& b) { return a.len == b.len && a.bits == b.bits; }
  friend bool operator<(const Word& a, const Word& b) {
    return a.len != b.len ? a.len < b.len : a.bits < b.bits;
  }
  friend bool operator>(const Word& a, const Word& b) { return b < a; }
};

// All words of length exactly len over an alphabet of size a.
inline std::vector<Word> words_of_length(int a, int len) {
  std::vector<Word> out{Word{}};
  for (int k = 0; k < len; ++k) {
    std::vector<Word> next;
    next.reserve(out.size() * static_cast<std::size_t>(a));
    for (const Word& w : out)
      for (int g = 0; g < a; ++g) next.push_back(w * Word::letter(g));
    out = std::move(next);
  }
  return out;
}

class NCPoly {
 public:
  using Terms = std::map<Word, ScalarQ>;

  NCPoly() = default;
  NCPoly(const ScalarQ& c) {  // NOLINT(google-explicit-constructor)
    if (!c.is_zero()) terms_[Word{}] = c;
  }
  NCPoly(long c) : NCPoly(ScalarQ(c)) {}  // NOLINT(google-explicit-constructor)

  static NCPoly monomial(const Word& w, const ScalarQ& c = 1) {
    NCPoly p;
    if (!c.is_zero()) p.terms_[w] = c;
    return p;
  }
  // l_i^j, 0-based.
  static NCPoly gen(int i, int j, int n) {
    if (n > kMaxGenDim) throw InputError("NCPoly: at most " + std::to_string(kMaxGenDim) + " x " +
                                         std::to_string(kMaxGenDim) + " generators");
    if (i < 0 || j < 0 || i >= n || j >= n) throw IndexOutOfRange("generator index out of range");
    return monomial(Word::letter(i * n + j));
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.len; }
  std::size_t size() const { return terms_.size(); }
  ScalarQ coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? ScalarQ() : it->second;
  }
  // Homogeneous component of degree k.
  NCPoly component(int k) const {
    NCPoly r;
    for (const auto& [w, c] : terms_)
      if (w.len == k) r.terms_.emplace_hint(r.terms_.end(), w, c);
    return r;
  }

  void add_term(const Word& w, const ScalarQ& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  friend bool operator==(const NCPoly& a, const NCPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const NCPoly& a, const NCPoly& b) { return !(a == b); }

  NCPoly& operator+=(const NCPoly& b) {
    for (const auto& [w, c] : b.terms_) add_term(w, c);
    return *this;
  }
  NCPoly& operator-=(const NCPoly& b) {
    for (const auto& [w, c] : b.terms_) add_term(w, -c);
    return *this;
  }
  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator-(const NCPoly& a) {
    NCPoly r = a;
    for (auto& [w, c] : r.terms_) c = -c;
    return r;
  }
  friend NCPoly operator*(const ScalarQ& s, const NCPoly& a) {
    NCPoly r;
    if (s.is_zero()) return r;
    for (const auto& [w, c] : a.terms_) r.terms_.emplace_hint(r.terms_.end(), w, s * c);
    return r;
  }
  friend NCPoly operator*(const NCPoly& a, const NCPoly& b) {
    NCPoly r;
    for (const auto& [u, c] : a.terms_)
      for (const auto& [v, d] : b.terms_) r.add_term(u * v, c * d);
    return r;
  }
  NCPoly& operator*=(const NCPoly& b) { return *this = *this * b; }

  // Substitutes every generator letter; the image of letter g is f(g).
  NCPoly substitute(const std::function<NCPoly(int)>& f) const {
    NCPoly r;
    for (const auto& [w, c] : terms_) {
      NCPoly t(c);
      for (int k = 0; k < w.len; ++k) t *= f(w.at(k));
      r += t;
    }
    return r;
  }

  // "coeff * g(1,2).g(2,1) + ..." with 1-based indices, highest word first.
  std::string to_string(int n) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [w, c] = *it;
      std::string mono;
      for (int k = 0; k < w.len; ++k) {
        int g = w.at(k);
        mono += (k ? ".g(" : "g(") + std::to_string(g / n + 1) + "," + std::to_string(g % n + 1) + ")";
      }
      std::string term;
      if (w.len == 0)
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

  static NCPoly parse(std::string_view text, int n) {
    ExprGrammar<NCPoly> g;
    g.integer = [](const Integer& v) { return NCPoly(ScalarQ(v)); };
    g.indexed = [](std::string_view name) { return name == "g" || name == "l"; };
    g.atom = [n](std::string_view name, const std::vector<int>& idx) -> NCPoly {
      if (name == "q") return NCPoly(ScalarQ::q());
      if (name == "g" || name == "l") {
        if (idx.size() != 2) throw ParseError("generator needs two indices");
        return gen(idx[0] - 1, idx[1] - 1, n);
      }
      throw ParseError("unknown symbol '" + std::string(name) + "' in polynomial");
    };
    g.divide = [](const NCPoly& a, const NCPoly& b) { return b.as_scalar().inverse() * a; };
    g.invert = [](const NCPoly& a) { return NCPoly(a.as_scalar().inverse()); };
    return parse_expression(text, g);
  }

  ScalarQ as_scalar() const {
    if (terms_.empty()) return {};
    if (terms_.size() != 1 || terms_.begin()->first.len != 0)
      throw ParseError("only scalars can be inverted");
    return terms_.begin()->second;
  }

 private:
  Terms terms_;
};

inline NCPoly commutator(const NCPoly& a, const NCPoly& b) { return a * b - b * a; }

// Square matrix with NCPoly entries acting on V^{⊗arity}; same flat index
// encoding as TensorOp.
class NCMatrix {
 public:
  NCMatrix() = default;
  NCMatrix(int dim_v, int arity)
      : dim_v_(dim_v), arity_(arity), size_(ipow(static_cast<std::size_t>(dim_v), arity)), e_(size_ * size_) {}

  static NCMatrix from_scalar(const TensorOp& t) {
    NCMatrix m(t.dim_v(), t.arity());
    for (std::size_t r = 0; r < m.size_; ++r)
      for (std::size_t c = 0; c < m.size_; ++c) m(r, c) = NCPoly(t(r, c));
    return m;
  }
  // The generating matrix L = ‖l_i^j‖ on V.
  static NCMatrix generators(int n) {
    NCMatrix m(n, 1);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = NCPoly::gen(i, j, n);
    return m;
  }

  int dim_v() const { return dim_v_; }
  int arity() const { return arity_; }
  std::size_t size() const { return size_; }
  NCPoly& operator()(std::size_t r, std::size_t c) { return e_[r * size_ + c]; }
  const NCPoly& operator()(std::size_t r, std::size_t c) const { return e_[r * size_ + c]; }
  const std::vector<NCPoly>& entries() const { return e_; }

  bool is_zero() const {
    for (const auto& p : e_)
      if (!p.is_zero()) return false;
    return true;
  }

  friend bool operator==(const NCMatrix& a, const NCMatrix& b) {
    return a.dim_v_ == b.dim_v_ && a.arity_ == b.arity_ && a.e_ == b.e_;
  }
  friend NCMatrix operator+(const NCMatrix& a, const NCMatrix& b) {
    a.check_same(b);
    NCMatrix r = a;
    for (std::size_t k = 0; k < r.e_.size(); ++k) r.e_[k] += b.e_[k];
    return r;
  }
  friend NCMatrix operator-(const NCMatrix& a, const NCMatrix& b) {
    a.check_same(b);
    NCMatrix r = a;
    for (std::size_t k = 0; k < r.e_.size(); ++k) r.e_[k] -= b.e_[k];
    return r;
  }
  // Entries are multiplied on the left, (p M)_r^c = p · M_r^c.
  friend NCMatrix operator*(const NCPoly& p, const NCMatrix& a) {
    NCMatrix r = a;
    for (auto& e : r.e_) e = p * e;
    return r;
  }
  friend NCMatrix operator*(const NCMatrix& a, const NCMatrix& b) {
    a.check_same(b);
    NCMatrix r(a.dim_v_, a.arity_);
    const std::size_t n = a.size_;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t x = 0; x < n; ++x) {
        const NCPoly& ax = a(i, x);
        if (ax.is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j)
          if (!b(x, j).is_zero()) r(i, j) += ax * b(x, j);
      }
    return r;
  }
  friend NCMatrix operator*(const TensorOp& t, const NCMatrix& b) {
    check_dims(t, b);
    NCMatrix r(b.dim_v_, b.arity_);
    const std::size_t n = b.size_;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t x = 0; x < n; ++x) {
        const ScalarQ& s = t(i, x);
        if (s.is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j)
          if (!b(x, j).is_zero()) r(i, j) += s * b(x, j);
      }
    return r;
  }
  friend NCMatrix operator*(const NCMatrix& a, const TensorOp& t) {
    check_dims(t, a);
    NCMatrix r(a.dim_v_, a.arity_);
    const std::size_t n = a.size_;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t x = 0; x < n; ++x) {
        const NCPoly& ax = a(i, x);
        if (ax.is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j)
          if (!t(x, j).is_zero()) r(i, j) += t(x, j) * ax;
      }
    return r;
  }

  // Full trace Σ_r M_r^r.
  NCPoly trace() const {
    NCPoly t;
    for (std::size_t r = 0; r < size_; ++r) t += (*this)(r, r);
    return t;
  }

  // Applies f to every entry.
  NCMatrix map(const std::function<NCPoly(const NCPoly&)>& f) const {
    NCMatrix r = *this;
    for (auto& e : r.e_) e = f(e);
    return r;
  }

 private:
  void check_same(const NCMatrix& b) const {
    if (dim_v_ != b.dim_v_ || arity_ != b.arity_) throw InputError("NCMatrix: shape mismatch");
  }
  static void check_dims(const TensorOp& t, const NCMatrix& m) {
    if (t.dim_v() != m.dim_v_ || t.arity() != m.arity_) throw InputError("NCMatrix: shape mismatch with operator");
  }

  int dim_v_ = 0, arity_ = 0;
  std::size_t size_ = 0;
  std::vector<NCPoly> e_;
};

// X_k = I^{⊗(k-1)} ⊗ X ⊗ I^{⊗(p-k)} for an arity-1 NCMatrix X.
inline NCMatrix embed(const NCMatrix& x, int k, int p) {
  if (x.arity() != 1 || k < 1 || k > p) throw PositionOutOfRange("NCMatrix embed: slot " + std::to_string(k));
  NCMatrix r(x.dim_v(), p);
  const std::size_t n = static_cast<std::size_t>(x.dim_v());
  const std::size_t low = ipow(n, p - k);
  const std::size_t total = r.size();
  for (std::size_t row = 0; row < total; ++row)
    for (std::size_t col = 0; col < total; ++col) {
      // rows and columns must agree outside slot k
      std::size_t rk = (row / low) % n, ck = (col / low) % n;
      if (row - rk * low != col - ck * low) continue;
      r(row, col) = x(rk, ck);
    }
  return r;
}

// M ⊗ I: one more tensor slot on the right.
inline NCMatrix extend_identity(const NCMatrix& m) {
  NCMatrix r(m.dim_v(), m.arity() + 1);
  const std::size_t n = static_cast<std::size_t>(m.dim_v());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      if (!m(i, j).is_zero())
        for (std::size_t t = 0; t < n; ++t) r(i * n + t, j * n + t) = m(i, j);
  return r;
}

// Tr(C^{⊗n} M): the full R-trace of an NCMatrix.
inline NCPoly r_trace(const NCMatrix& m, const TensorOp& c) {
  TensorOp cn = c;
  for (int k = 1; k < m.arity(); ++k) cn = kron(cn, c);
  NCPoly t;
  for (std::size_t x = 0; x < m.size(); ++x)
    for (std::size_t y = 0; y < m.size(); ++y)
      if (!cn(x, y).is_zero() && !m(y, x).is_zero()) t += cn(x, y) * m(y, x);
  return t;
}

// Tr_{(k)}(C_k M): R-trace over slot k, giving an arity-1 smaller matrix.
inline NCMatrix r_partial_trace(const NCMatrix& m, const TensorOp& c, int k) {
  const int p = m.arity();
  if (k < 1 || k > p || p < 2) throw PositionOutOfRange("NCMatrix r_partial_trace: slot " + std::to_string(k));
  const std::size_t n = static_cast<std::size_t>(m.dim_v());
  const std::size_t low = ipow(n, p - k);
  NCMatrix r(m.dim_v(), p - 1);
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < r.size(); ++j) {
      NCPoly acc;
      for (std::size_t t = 0; t < n; ++t)
        for (std::size_t x = 0; x < n; ++x) {
          if (c(t, x).is_zero()) continue;
          const NCPoly& e = m(detail::insert_digit(i, x, n, low), detail::insert_digit(j, t, n, low));
          if (!e.is_zero()) acc += c(t, x) * e;
        }
      r(i, j) = std::move(acc);
    }
  return r;
}

enum class Variant { re, modified_re };

inline std::string to_string(Variant v) { return v == Variant::re ? "re" : "mod"; }

struct RelationSet {
  Variant variant;
  int dim_v;
  // Entry ((i,k),(j,m)) of the defining matrix identity, understood as = 0.
  std::vector<NCPoly> relations;
};

// Entries of L1 R L1 R − R L1 R L1 (RE), plus R L̂1 − L̂1 R in the modified
// variant. For R = P the modified entries read
//   l_i^j l_k^m − l_k^m l_i^j − l_i^m δ_k^j + l_k^j δ_i^m.
inline RelationSet re_relations(const Symmetry& s, Variant v) {
  const int n = s.dim_v();
  NCMatrix l1 = embed(NCMatrix::generators(n), 1, 2);
  NCMatrix lr = l1 * s.R();
  NCMatrix rl = s.R() * l1;
  NCMatrix m = lr * lr - rl * rl;
  if (v == Variant::modified_re) m = m + rl - lr;
  return {v, n, m.entries()};
}

// Echelon table over words: pivot rows keyed by their leading (largest) word,
// each monic. Rows added are first reduced against existing pivots.
class EchelonTable {
 public:
  using Row = std::vector<std::pair<Word, ScalarQ>>;  // descending, lead first

  std::size_t rank() const { return pivots_.size(); }
  bool has_pivot(const Word& w) const { return pivots_.count(w) != 0; }
  const std::map<Word, Row>& pivots() const { return pivots_; }

  // Returns true if the row was independent.
  bool insert(const NCPoly& p) {
    std::map<Word, ScalarQ, std::greater<Word>> row = reduce_impl(p);
    if (row.empty()) return false;
    ScalarQ inv = row.begin()->second.inverse();
    Row stored;
    stored.reserve(row.size());
    for (const auto& [w, c] : row) stored.emplace_back(w, c * inv);
    pivots_.emplace(row.begin()->first, std::move(stored));
    return true;
  }

  NCPoly reduce(const NCPoly& p) const {
    NCPoly r;
    for (const auto& [w, c] : reduce_impl(p)) r.add_term(w, c);
    return r;
  }

 private:
  std::map<Word, ScalarQ, std::greater<Word>> reduce_impl(const NCPoly& p) const {
    std::map<Word, ScalarQ, std::greater<Word>> row(p.terms().begin(), p.terms().end());
    if (pivots_.empty()) return row;
    auto it = row.begin();
    while (it != row.end()) {
      auto pv = pivots_.find(it->first);
      if (pv == pivots_.end()) {
        ++it;
        continue;
      }
      const Word w = it->first;
      const ScalarQ c = it->second;
      row.erase(it);
      for (std::size_t k = 1; k < pv->second.size(); ++k) {
        const auto& [u, d] = pv->second[k];
        ScalarQ delta = -(c * d);
        auto [pos, inserted] = row.try_emplace(u, delta);
        if (!inserted) {
          pos->second += delta;
          if (pos->second.is_zero()) row.erase(pos);
        }
      }
      it = row.upper_bound(w);
    }
    return row;
  }

  std::map<Word, Row> pivots_;
};

// The quotient of the free algebra by an RE relation set, truncated at a
// degree bound: reduce(p) is the canonical representative of p modulo
// span{u·r·v : r relation, deg ≤ bound}. Tables are built lazily and cached.
class REAlgebra {
 public:
  REAlgebra(Symmetry s, Variant v, int degree_bound)
      : s_(std::move(s)), variant_(v), bound_(degree_bound), rels_(re_relations(s_, v)) {
    if (degree_bound < 1) throw InputError("REAlgebra: degree bound must be positive");
    if (s_.dim_v() > kMaxGenDim) throw InputError("REAlgebra: dim V must be at most 4");
    for (const auto& r : rels_.relations) base_.insert(r);
  }

  const Symmetry& symmetry() const { return s_; }
  Variant variant() const { return variant_; }
  int degree_bound() const { return bound_; }
  int dim_v() const { return s_.dim_v(); }
  const RelationSet& relations() const { return rels_; }
  NCPoly gen(int i, int j) const { return NCPoly::gen(i, j, dim_v()); }
  NCMatrix generator_matrix() const { return NCMatrix::generators(dim_v()); }

  NCPoly reduce(const NCPoly& p) const {
    const int deg = p.degree();
    if (deg > bound_) throw DegreeBoundExceeded(deg, bound_);
    if (variant_ == Variant::modified_re) return bound_ < 2 ? p : table(bound_).reduce(p);
    if (deg < 2) return p;
    NCPoly r;
    for (int k = 0; k <= deg; ++k) {
      NCPoly c = p.component(k);
      if (c.is_zero()) continue;
      r += k < 2 ? c : table(k).reduce(c);
    }
    return r;
  }

  bool equivalent(const NCPoly& a, const NCPoly& b) const { return reduce(a - b).is_zero(); }

  NCMatrix reduce(const NCMatrix& m) const {
    return m.map([this](const NCPoly& p) { return reduce(p); });
  }

  bool is_central(const NCPoly& z) const {
    if (z.degree() + 1 > bound_) throw DegreeBoundExceeded(z.degree() + 1, bound_);
    for (int i = 0; i < dim_v(); ++i)
      for (int j = 0; j < dim_v(); ++j)
        if (!reduce(commutator(z, gen(i, j))).is_zero()) return false;
    return true;
  }

  // Dimension of the reduced component of degree exactly k (RE) or of the
  // filtered piece of degree <= k (modified); k <= bound.
  std::size_t quotient_dimension(int k) const {
    if (k > bound_) throw DegreeBoundExceeded(k, bound_);
    const int a = dim_v() * dim_v();
    if (variant_ == Variant::re) {
      std::size_t total = ipow(static_cast<std::size_t>(a), k);
      return k < 2 ? total : total - table(k).rank();
    }
    std::size_t total = 0;
    std::size_t pivots_up_to_k = 0;
    for (int j = 0; j <= k; ++j) total += ipow(static_cast<std::size_t>(a), j);
    if (k >= 2)
      for (const auto& [w, row] : table(bound_).pivots())
        if (w.len <= k) ++pivots_up_to_k;
    return total - pivots_up_to_k;
  }

 private:
  // RE: the homogeneous component of degree d. Modified: everything of
  // degree <= d.
  const EchelonTable& table(int d) const {
    auto it = tables_.find(d);
    if (it != tables_.end()) return *it->second;
    auto t = std::make_unique<EchelonTable>();
    const int a = dim_v() * dim_v();
    std::vector<NCPoly> base;
    for (const auto& [w, row] : base_.pivots()) {
      NCPoly p;
      for (const auto& [u, c] : row) p.add_term(u, c);
      base.push_back(std::move(p));
    }
    for (int extra = variant_ == Variant::re ? d - 2 : 0; extra <= d - 2; ++extra)
      for (int left = 0; left <= extra; ++left) {
        auto us = words_of_length(a, left);
        auto vs = words_of_length(a, extra - left);
        for (const Word& u : us)
          for (const Word& v : vs)
            for (const NCPoly& b : base) t->insert(NCPoly::monomial(u) * b * NCPoly::monomial(v));
      }
    return *tables_.emplace(d, std::move(t)).first->second;
  }

  Symmetry s_;
  Variant variant_;
  int bound_;
  RelationSet rels_;
  EchelonTable base_;
  mutable std::map<int, std::unique_ptr<EchelonTable>> tables_;
};

// l_i^j ↦ δ_i^j − (q − q^-1) l̂_i^j.
inline NCPoly shift_map(const Symmetry& s, const NCPoly& p) {
  if (!s.is_hecke()) throw InvolutiveUnsupported("shift map needs q != ±1");
  const int n = s.dim_v();
  const ScalarQ d = qdiff();
  return p.substitute([&](int g) {
    int i = g / n, j = g % n;
    return NCPoly(i == j ? 1 : 0) - d * NCPoly::gen(i, j, n);
  });
}

}  // namespace rea
