#pragma once

// The Hecke algebra H_n(q) on the basis T_w, w in S_n, and its R-matrix
// representation τ_i ↦ R_i on V^{⊗n}.
//
// Permutations are one-line arrays over {0..n-1}; composition is
// (u∘v)(x) = u(v(x)) and s_i (1-based, 1 <= i <= n-1) swaps i-1 and i, so
// s_i∘w exchanges the values i-1 and i in the one-line array of w.

#include <algorithm>
#include <map>
#include <numeric>
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

using Permutation = std::vector<int>;

inline Permutation identity_permutation(int n) {
  Permutation p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

inline Permutation compose(const Permutation& u, const Permutation& v) {
  Permutation r(v.size());
  for (std::size_t x = 0; x < v.size(); ++x) r[x] = u[static_cast<std::size_t>(v[x])];
  return r;
}

inline Permutation inverse(const Permutation& w) {
  Permutation r(w.size());
  for (std::size_t x = 0; x < w.size(); ++x) r[static_cast<std::size_t>(w[x])] = static_cast<int>(x);
  return r;
}

inline int length(const Permutation& w) {
  int inv = 0;
  for (std::size_t a = 0; a < w.size(); ++a)
    for (std::size_t b = a + 1; b < w.size(); ++b)
      if (w[a] > w[b]) ++inv;
  return inv;
}

// s_i ∘ w.
inline Permutation left_mul_simple(int i, const Permutation& w) {
  Permutation r = w;
  for (auto& x : r) {
    if (x == i - 1)
      x = i;
    else if (x == i)
      x = i - 1;
  }
  return r;
}

// Does ℓ(s_i ∘ w) = ℓ(w) + 1? True iff value i-1 sits left of value i.
inline bool left_ascent(int i, const Permutation& w) {
  auto pos = [&](int v) { return std::find(w.begin(), w.end(), v) - w.begin(); };
  return pos(i - 1) < pos(i);
}

// Reduced word w = s_{i1} s_{i2} ... s_{ik}, peeling the smallest left
// descent at every step.
inline std::vector<int> reduced_word(Permutation w) {
  std::vector<int> word;
  const int n = static_cast<int>(w.size());
  for (;;) {
    int i = 1;
    while (i < n && left_ascent(i, w)) ++i;
    if (i == n) break;
    word.push_back(i);
    w = left_mul_simple(i, w);
  }
  return word;
}

inline Permutation permutation_from_word(int n, const std::vector<int>& word) {
  Permutation w = identity_permutation(n);
  for (auto it = word.rbegin(); it != word.rend(); ++it) w = left_mul_simple(*it, w);
  return w;
}

inline std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  Permutation p = identity_permutation(n);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

class HeckeElement {
 public:
  using Terms = std::map<Permutation, ScalarQ>;

  explicit HeckeElement(int n = 1) : n_(n) {
    if (n < 1) throw InputError("HeckeElement: strand count must be positive");
  }

  static HeckeElement unit(int n) { return basis(identity_permutation(n)); }
  static HeckeElement basis(const Permutation& w, const ScalarQ& c = 1) {
    HeckeElement h(static_cast<int>(w.size()));
    if (!c.is_zero()) h.terms_[w] = c;
    return h;
  }
  static HeckeElement gen(int i, int n) {
    if (i < 1 || i > n - 1)
      throw IndexOutOfRange("generator t" + std::to_string(i) + " in H_" + std::to_string(n));
    return basis(left_mul_simple(i, identity_permutation(n)));
  }
  // T_w for the word s_{i1} ... s_{ik} (need not be reduced: evaluated as a product).
  static HeckeElement word(const std::vector<int>& gens, int n) {
    HeckeElement r = unit(n);
    for (int g : gens) r = r * gen(g, n);
    return r;
  }

  int strands() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  ScalarQ coeff(const Permutation& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? ScalarQ() : it->second;
  }

  friend bool operator==(const HeckeElement& a, const HeckeElement& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const HeckeElement& a, const HeckeElement& b) { return !(a == b); }

  HeckeElement& operator+=(const HeckeElement& b) {
    check(b);
    for (const auto& [w, c] : b.terms_) add_term(w, c);
    return *this;
  }
  friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
  friend HeckeElement operator-(const HeckeElement& a) {
    HeckeElement r = a;
    for (auto& [w, c] : r.terms_) c = -c;
    return r;
  }
  friend HeckeElement operator-(const HeckeElement& a, const HeckeElement& b) { return a + (-b); }
  friend HeckeElement operator*(const ScalarQ& s, const HeckeElement& a) {
    HeckeElement r(a.n_);
    if (s.is_zero()) return r;
    for (const auto& [w, c] : a.terms_) r.terms_[w] = s * c;
    return r;
  }

  // Product in the T_w basis: T_w = T_{i1} ... T_{ik} along a reduced word,
  // applied to b from the right end using
  //   T_i T_v = T_{s_i v}                        if ℓ(s_i v) > ℓ(v),
  //   T_i T_v = (q - q^-1) T_v + T_{s_i v}       otherwise.
  friend HeckeElement operator*(const HeckeElement& a, const HeckeElement& b) {
    a.check(b);
    HeckeElement r(a.n_);
    for (const auto& [w, c] : a.terms_) {
      HeckeElement cur = b;
      std::vector<int> word = reduced_word(w);
      for (auto it = word.rbegin(); it != word.rend(); ++it) cur = cur.left_mul_gen(*it);
      r += c * cur;
    }
    return r;
  }

  // Structure constants specialized at q = 1.
  HeckeElement at_q1() const {
    HeckeElement r(n_);
    for (const auto& [w, c] : terms_) r.add_term(w, ScalarQ(c.limit_q1()));
    return r;
  }

  // "coeff * t1.t2 + ..." with the unit written as e.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Permutation, ScalarQ>> sorted(terms_.begin(), terms_.end());
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const auto& x, const auto& y) { return length(x.first) < length(y.first); });
    std::string out;
    for (const auto& [w, c] : sorted) {
      std::vector<int> word = reduced_word(w);
      std::string mono = "e";
      if (!word.empty()) {
        mono.clear();
        for (std::size_t k = 0; k < word.size(); ++k) mono += (k ? ".t" : "t") + std::to_string(word[k]);
      }
      std::string term;
      if (c == ScalarQ(1))
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

  static HeckeElement parse(std::string_view text, int n) {
    ExprGrammar<HeckeElement> g;
    g.integer = [n](const Integer& v) { return ScalarQ(v) * unit(n); };
    g.atom = [n](std::string_view name, const std::vector<int>&) -> HeckeElement {
      if (name == "e") return unit(n);
      if (name == "q") return ScalarQ::q() * unit(n);
      if (name.size() > 1 && name[0] == 't' && std::all_of(name.begin() + 1, name.end(), ::isdigit))
        return gen(std::stoi(std::string(name.substr(1))), n);
      throw ParseError("unknown symbol '" + std::string(name) + "' in Hecke element");
    };
    g.divide = [](const HeckeElement& a, const HeckeElement& b) { return b.as_scalar().inverse() * a; };
    g.invert = [n](const HeckeElement& a) { return a.as_scalar().inverse() * unit(n); };
    return parse_expression(text, g);
  }

 private:
  ScalarQ as_scalar() const {
    if (terms_.empty()) return {};
    if (terms_.size() != 1 || terms_.begin()->first != identity_permutation(n_))
      throw ParseError("only scalars can be inverted in the Hecke algebra");
    return terms_.begin()->second;
  }

  void check(const HeckeElement& b) const {
    if (n_ != b.n_)
      throw StrandMismatch("H_" + std::to_string(n_) + " vs H_" + std::to_string(b.n_));
  }

  void add_term(const Permutation& w, const ScalarQ& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  HeckeElement left_mul_gen(int i) const {
    HeckeElement r(n_);
    const ScalarQ d = qdiff();
    for (const auto& [v, c] : terms_) {
      Permutation sv = left_mul_simple(i, v);
      if (left_ascent(i, v)) {
        r.add_term(sv, c);
      } else {
        r.add_term(v, d * c);
        r.add_term(sv, c);
      }
    }
    return r;
  }

  int n_;
  Terms terms_;
};

// z_k = τ_{k-1} τ_{k-2} ... τ_1 in H_n.
inline HeckeElement zk(int k, int n) {
  if (k < 2 || k > n) throw IndexOutOfRange("zk: need 2 <= k <= n");
  std::vector<int> word;
  for (int i = k - 1; i >= 1; --i) word.push_back(i);
  return HeckeElement::basis(permutation_from_word(n, word));
}

// ρ_R(T_w) = R_{i1} ... R_{ik} along the reduced word of w.
inline TensorOp rho_basis(const Symmetry& s, const Permutation& w) {
  const int n = static_cast<int>(w.size());
  TensorOp m = TensorOp::identity(s.dim_v(), n);
  for (int i : reduced_word(w)) m = m * embed(s.R(), i, n);
  return m;
}

// An involutive R represents H_n(1) = Q[S_n], so coefficients are taken at q = 1.
inline TensorOp rho(const Symmetry& s, const HeckeElement& h, int n) {
  if (h.strands() != n) throw StrandMismatch("rho: element lives in H_" + std::to_string(h.strands()));
  TensorOp m(s.dim_v(), n);
  for (const auto& [w, c] : h.terms()) {
    ScalarQ coeff = s.is_hecke() ? c : ScalarQ(c.limit_q1());
    if (!coeff.is_zero()) m = m + coeff * rho_basis(s, w);
  }
  return m;
}

}  // namespace rea
