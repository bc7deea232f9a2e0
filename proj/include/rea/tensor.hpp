#pragma once

// Dense exact matrices acting on V^{⊗n}, dim V = N.
//
// Rows and columns are indexed by multi-indices (i_1, ..., i_n), i_k in
// {0..N-1}, flattened row-major: flat = sum_k i_k * N^(n-k). Slot 1 is the
// most significant digit, so X_k = I^{⊗(k-1)} ⊗ X ⊗ I^{⊗(p-k)} is an
// ordinary Kronecker product.
//
// Entry (r, c) is the component X_r^c: lower (row) index first.
// Products are the usual (XY)_r^c = sum_x X_r^x Y_x^c.

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "rea/errors.hpp"
#include "rea/scalar.hpp"

namespace rea {

inline std::size_t ipow(std::size_t base, int exp) {
  std::size_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

class TensorOp {
 public:
  TensorOp() = default;
  TensorOp(int dim_v, int arity)
      : dim_v_(dim_v), arity_(arity), size_(ipow(static_cast<std::size_t>(dim_v), arity)), e_(size_ * size_) {
    if (dim_v < 1 || arity < 1) throw InputError("TensorOp: dim_v and arity must be positive");
  }

  static TensorOp identity(int dim_v, int arity) {
    TensorOp r(dim_v, arity);
    for (std::size_t i = 0; i < r.size_; ++i) r(i, i) = 1;
    return r;
  }

  static TensorOp from_function(int dim_v, int arity,
                                const std::function<ScalarQ(const std::vector<int>&, const std::vector<int>&)>& f) {
    TensorOp r(dim_v, arity);
    for (std::size_t i = 0; i < r.size_; ++i)
      for (std::size_t j = 0; j < r.size_; ++j) r(i, j) = f(r.digits(i), r.digits(j));
    return r;
  }

  int dim_v() const { return dim_v_; }
  int arity() const { return arity_; }
  std::size_t size() const { return size_; }

  ScalarQ& operator()(std::size_t r, std::size_t c) { return e_[r * size_ + c]; }
  const ScalarQ& operator()(std::size_t r, std::size_t c) const { return e_[r * size_ + c]; }

  // Multi-index <-> flat conversions.
  std::vector<int> digits(std::size_t flat) const {
    std::vector<int> d(static_cast<std::size_t>(arity_));
    for (int k = arity_ - 1; k >= 0; --k) {
      d[static_cast<std::size_t>(k)] = static_cast<int>(flat % static_cast<std::size_t>(dim_v_));
      flat /= static_cast<std::size_t>(dim_v_);
    }
    return d;
  }
  std::size_t flat(const std::vector<int>& d) const {
    std::size_t f = 0;
    for (int x : d) f = f * static_cast<std::size_t>(dim_v_) + static_cast<std::size_t>(x);
    return f;
  }

  bool is_zero() const {
    for (const auto& x : e_)
      if (!x.is_zero()) return false;
    return true;
  }
  bool is_identity() const { return *this == identity(dim_v_, arity_); }

  ScalarQ trace() const {
    ScalarQ t;
    for (std::size_t i = 0; i < size_; ++i) t += (*this)(i, i);
    return t;
  }

  TensorOp transposed() const {
    TensorOp r(dim_v_, arity_);
    for (std::size_t i = 0; i < size_; ++i)
      for (std::size_t j = 0; j < size_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  // Entrywise map, e.g. specialization of q.
  template <class F>
  TensorOp map(F f) const {
    TensorOp r(dim_v_, arity_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = f(e_[i]);
    return r;
  }

  friend bool operator==(const TensorOp& a, const TensorOp& b) {
    return a.dim_v_ == b.dim_v_ && a.arity_ == b.arity_ && a.e_ == b.e_;
  }
  friend bool operator!=(const TensorOp& a, const TensorOp& b) { return !(a == b); }

  friend TensorOp operator+(const TensorOp& a, const TensorOp& b) {
    a.check_same(b);
    TensorOp r = a;
    for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] += b.e_[i];
    return r;
  }
  friend TensorOp operator-(const TensorOp& a, const TensorOp& b) {
    a.check_same(b);
    TensorOp r = a;
    for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] -= b.e_[i];
    return r;
  }
  friend TensorOp operator*(const ScalarQ& s, const TensorOp& a) {
    TensorOp r = a;
    for (auto& x : r.e_) x = s * x;
    return r;
  }
  friend TensorOp operator*(const TensorOp& a, const TensorOp& b) {
    a.check_same(b);
    const std::size_t n = a.size_;
    std::vector<std::vector<std::size_t>> bnz(n);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j)
        if (!b(k, j).is_zero()) bnz[k].push_back(j);
    TensorOp r(a.dim_v_, a.arity_);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        const ScalarQ& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j : bnz[k]) r(i, j) += aik * b(k, j);
      }
    return r;
  }

  std::size_t nonzero_count() const {
    std::size_t c = 0;
    for (const auto& x : e_) c += x.is_zero() ? 0 : 1;
    return c;
  }

 private:
  void check_same(const TensorOp& b) const {
    if (dim_v_ != b.dim_v_ || arity_ != b.arity_) throw InputError("TensorOp: shape mismatch");
  }

  int dim_v_ = 1;
  int arity_ = 1;
  std::size_t size_ = 1;
  std::vector<ScalarQ> e_;
};

inline TensorOp kron(const TensorOp& a, const TensorOp& b) {
  if (a.dim_v() != b.dim_v()) throw InputError("kron: dim_v mismatch");
  TensorOp r(a.dim_v(), a.arity() + b.arity());
  const std::size_t nb = b.size();
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) {
      const ScalarQ& x = a(i, j);
      if (x.is_zero()) continue;
      for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t l = 0; l < nb; ++l)
          if (!b(k, l).is_zero()) r(i * nb + k, j * nb + l) = x * b(k, l);
    }
  return r;
}

// I^{⊗(k-1)} ⊗ X ⊗ I^{⊗(p-k-a+1)} on V^{⊗p}, where a = arity of X.
inline TensorOp embed(const TensorOp& x, int k, int p) {
  const int a = x.arity();
  if (k < 1 || k + a - 1 > p)
    throw PositionOutOfRange("embed: slot " + std::to_string(k) + " for arity " + std::to_string(a) +
                             " in V^" + std::to_string(p));
  const std::size_t n = static_cast<std::size_t>(x.dim_v());
  const std::size_t high = ipow(n, k - 1), low = ipow(n, p - k - a + 1), mid = x.size();
  TensorOp r(x.dim_v(), p);
  for (std::size_t h = 0; h < high; ++h)
    for (std::size_t i = 0; i < mid; ++i)
      for (std::size_t j = 0; j < mid; ++j) {
        const ScalarQ& v = x(i, j);
        if (v.is_zero()) continue;
        for (std::size_t l = 0; l < low; ++l) r((h * mid + i) * low + l, (h * mid + j) * low + l) = v;
      }
  return r;
}

namespace detail {
// Flat index in arity p of a multi-index of arity p-1 with digit t inserted at slot k.
inline std::size_t insert_digit(std::size_t reduced, std::size_t t, std::size_t n, std::size_t low) {
  return ((reduced / low) * n + t) * low + reduced % low;
}
}  // namespace detail

// Contraction of row and column index at slot k.
inline TensorOp partial_trace(const TensorOp& m, int k) {
  const int p = m.arity();
  if (k < 1 || k > p) throw PositionOutOfRange("partial_trace: slot " + std::to_string(k));
  if (p == 1) throw PositionOutOfRange("partial_trace: arity-1 operator has no partial trace");
  const std::size_t n = static_cast<std::size_t>(m.dim_v());
  const std::size_t low = ipow(n, p - k);
  TensorOp r(m.dim_v(), p - 1);
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < r.size(); ++j) {
      ScalarQ s;
      for (std::size_t t = 0; t < n; ++t)
        s += m(detail::insert_digit(i, t, n, low), detail::insert_digit(j, t, n, low));
      r(i, j) = s;
    }
  return r;
}

// R-trace in slot k: Tr_{(k)}(C_k M).
inline TensorOp r_partial_trace(const TensorOp& m, const TensorOp& c, int k) {
  const int p = m.arity();
  if (c.arity() != 1 || c.dim_v() != m.dim_v()) throw InputError("r_partial_trace: C must be N x N");
  if (k < 1 || k > p) throw PositionOutOfRange("r_partial_trace: slot " + std::to_string(k));
  if (p == 1) throw PositionOutOfRange("r_partial_trace: use r_trace for arity 1");
  const std::size_t n = static_cast<std::size_t>(m.dim_v());
  const std::size_t low = ipow(n, p - k);
  TensorOp r(m.dim_v(), p - 1);
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < r.size(); ++j) {
      ScalarQ s;
      for (std::size_t t = 0; t < n; ++t)
        for (std::size_t x = 0; x < n; ++x) {
          const ScalarQ& ctx = c(t, x);
          if (ctx.is_zero()) continue;
          const ScalarQ& v = m(detail::insert_digit(i, x, n, low), detail::insert_digit(j, t, n, low));
          if (!v.is_zero()) s += ctx * v;
        }
      r(i, j) = s;
    }
  return r;
}

// Full R-trace Tr_{R(1..n)} M = Tr(C^{⊗n} M), folded slot by slot.
inline ScalarQ r_trace(const TensorOp& m, const TensorOp& c) {
  TensorOp cur = m;
  while (cur.arity() > 1) cur = r_partial_trace(cur, c, cur.arity());
  return (c * cur).trace();
}

// Rank over Q(q). Rows are cleared of denominators and reduced with
// fraction-free (Bareiss) elimination, pivoting on the first nonzero entry.
inline std::size_t rank(const TensorOp& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<IntPoly>> a;
  a.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    IntPoly l = 1;
    bool nonzero = false;
    for (std::size_t j = 0; j < n; ++j) {
      const ScalarQ& x = m(i, j);
      if (x.is_zero()) continue;
      nonzero = true;
      if (!x.den().is_one()) {
        IntPoly g = IntPoly::gcd(l, x.den());
        l = IntPoly::divexact(l, g) * x.den();
      }
    }
    if (!nonzero) continue;
    std::vector<IntPoly> row(n);
    for (std::size_t j = 0; j < n; ++j) {
      const ScalarQ& x = m(i, j);
      if (!x.is_zero()) row[j] = x.num() * IntPoly::divexact(l, x.den());
    }
    a.push_back(std::move(row));
  }
  std::size_t r = 0;
  IntPoly prev = 1;
  for (std::size_t col = 0; col < n && r < a.size(); ++col) {
    std::size_t piv = r;
    while (piv < a.size() && a[piv][col].is_zero()) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[r]);
    const IntPoly& p = a[r][col];
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      IntPoly f = a[i][col];
      for (std::size_t j = col + 1; j < n; ++j) {
        IntPoly v = p * a[i][j];
        if (!f.is_zero() && !a[r][j].is_zero()) v = v - f * a[r][j];
        a[i][j] = IntPoly::divexact(v, prev);
      }
      a[i][col] = IntPoly();
    }
    prev = a[r][col];
    ++r;
  }
  return r;
}

}  // namespace rea
