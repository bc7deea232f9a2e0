#pragma once

// Hecke and involutive symmetries on V ⊗ V together with their derived data
// (skew-inverse Ψ, the matrices C and B, skew-symmetrizers).
//
// Every Symmetry is validated on construction: braid relation, Hecke or
// involutivity condition, and the skew-invertibility system are checked
// exactly. An object that exists is an object that passed.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rea/errors.hpp"
#include "rea/scalar.hpp"
#include "rea/tensor.hpp"

namespace rea {

enum class SymmetryKind { hecke, involutive };

inline std::string to_string(SymmetryKind k) { return k == SymmetryKind::hecke ? "hecke" : "involutive"; }

// The flip P on V ⊗ V: P_{i1 i2}^{j1 j2} = δ_{i1}^{j2} δ_{i2}^{j1}.
inline TensorOp flip_operator(int n) {
  return TensorOp::from_function(n, 2, [](const std::vector<int>& r, const std::vector<int>& c) {
    return ScalarQ(r[0] == c[1] && r[1] == c[0] ? 1 : 0);
  });
}

inline bool check_braid(const TensorOp& r) {
  if (r.arity() != 2) throw InputError("check_braid: R must have arity 2");
  TensorOp r1 = embed(r, 1, 3), r2 = embed(r, 2, 3);
  return r1 * r2 * r1 == r2 * r1 * r2;
}

// (qI - R)(q^-1 I + R) = 0.
inline bool check_hecke(const TensorOp& r) {
  if (r.arity() != 2) throw InputError("check_hecke: R must have arity 2");
  TensorOp id = TensorOp::identity(r.dim_v(), 2);
  return ((ScalarQ::q() * id - r) * (ScalarQ::q_power(-1) * id + r)).is_zero();
}

inline bool check_involutive(const TensorOp& r) {
  if (r.arity() != 2) throw InputError("check_involutive: R must have arity 2");
  return (r * r).is_identity();
}

// Solves sum_{a,b} R_{ib}^{ja} Ψ_{ak}^{bn} = δ_i^n δ_k^j. For each fixed
// (k, n) this is the same N²×N² system M X = e with M_{(i,j),(a,b)} =
// R_{ib}^{ja}, so the N⁴ unknowns are found by one Gauss-Jordan pass with
// N² right-hand sides.
inline TensorOp skew_inverse(const TensorOp& r) {
  if (r.arity() != 2) throw InputError("skew_inverse: R must have arity 2");
  const int n = r.dim_v();
  const std::size_t n2 = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  auto pair = [n](int x, int y) { return static_cast<std::size_t>(x * n + y); };
  // augmented [M | RHS], RHS column (k, n') holds δ_i^{n'} δ_k^j in row (i, j)
  std::vector<std::vector<ScalarQ>> a(n2, std::vector<ScalarQ>(2 * n2));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto& row = a[pair(i, j)];
      for (int x = 0; x < n; ++x)
        for (int b = 0; b < n; ++b) row[pair(x, b)] = r(pair(i, b), pair(j, x));
      for (int k = 0; k < n; ++k)
        for (int m = 0; m < n; ++m)
          if (i == m && k == j) row[n2 + pair(k, m)] = 1;
    }
  for (std::size_t col = 0; col < n2; ++col) {
    std::size_t piv = col;
    while (piv < n2 && a[piv][col].is_zero()) ++piv;
    if (piv == n2) throw NotSkewInvertible("the skew-invertibility system is singular over Q(q)");
    std::swap(a[piv], a[col]);
    ScalarQ inv = a[col][col].inverse();
    for (auto& x : a[col]) x = x * inv;
    for (std::size_t i = 0; i < n2; ++i) {
      if (i == col || a[i][col].is_zero()) continue;
      ScalarQ f = a[i][col];
      for (std::size_t j = col; j < 2 * n2; ++j)
        if (!a[col][j].is_zero()) a[i][j] -= f * a[col][j];
    }
  }
  TensorOp psi(n, 2);
  for (int x = 0; x < n; ++x)
    for (int b = 0; b < n; ++b)
      for (int k = 0; k < n; ++k)
        for (int m = 0; m < n; ++m) psi(pair(x, k), pair(b, m)) = a[pair(x, b)][n2 + pair(k, m)];
  return psi;
}

// Residual of the component system; zero iff psi is the skew-inverse of r.
inline bool skew_inverse_residual_zero(const TensorOp& r, const TensorOp& psi) {
  const int n = r.dim_v();
  auto pair = [n](int x, int y) { return static_cast<std::size_t>(x * n + y); };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int m = 0; m < n; ++m) {
          ScalarQ s;
          for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) s += r(pair(i, b), pair(j, a)) * psi(pair(a, k), pair(b, m));
          if (s != ScalarQ((i == m && k == j) ? 1 : 0)) return false;
        }
  return true;
}

// Tr_(2) R_12 Ψ_23 = P_13.
inline bool skew_inverse_operator_form(const TensorOp& r, const TensorOp& psi) {
  return partial_trace(embed(r, 1, 3) * embed(psi, 2, 3), 2) == flip_operator(r.dim_v());
}

class Symmetry {
 public:
  // Validates the axioms and computes Ψ, C, B. Throws AxiomViolation or
  // NotSkewInvertible.
  Symmetry(SymmetryKind kind, TensorOp r, std::string label = "custom")
      : kind_(kind), r_(std::move(r)), label_(std::move(label)) {
    if (r_.arity() != 2) throw InputError("Symmetry: R must act on V ⊗ V");
    if (!check_braid(r_)) throw AxiomViolation(label_ + ": braid relation fails");
    if (kind_ == SymmetryKind::hecke ? !check_hecke(r_) : !check_involutive(r_))
      throw AxiomViolation(label_ + (kind_ == SymmetryKind::hecke ? ": Hecke condition fails" : ": R^2 != I"));
    psi_ = skew_inverse(r_);
    if (!skew_inverse_residual_zero(r_, psi_) || !skew_inverse_operator_form(r_, psi_))
      throw NotSkewInvertible(label_ + ": skew-inverse postcondition fails");
    c_ = partial_trace(psi_, 2);  // C_i^j = sum_k Ψ_{ik}^{jk}
    b_ = partial_trace(psi_, 1);  // B_i^j = sum_k Ψ_{ki}^{kj}
  }

  SymmetryKind kind() const { return kind_; }
  bool is_hecke() const { return kind_ == SymmetryKind::hecke; }
  int dim_v() const { return r_.dim_v(); }
  const std::string& label() const { return label_; }
  const TensorOp& R() const { return r_; }
  const TensorOp& psi() const { return psi_; }
  const TensorOp& C() const { return c_; }
  const TensorOp& B() const { return b_; }

  // R^{-1}: from the Hecke condition R^{-1} = R - (q - q^-1) I; R for R^2 = I.
  TensorOp R_inverse() const {
    if (!is_hecke()) return r_;
    return r_ - qdiff() * TensorOp::identity(dim_v(), 2);
  }

  // q-dependent constants, degenerated at q = 1 for involutive symmetries.
  ScalarQ q_power(int k) const { return is_hecke() ? ScalarQ::q_power(k) : ScalarQ(1); }
  ScalarQ q_int(int k) const { return is_hecke() ? qint(k) : ScalarQ(k); }
  ScalarQ q_diff() const { return is_hecke() ? qdiff() : ScalarQ(0); }

  // Tr_R I = Tr C.
  ScalarQ r_trace_identity() const { return c_.trace(); }

 private:
  SymmetryKind kind_;
  TensorOp r_;
  std::string label_;
  TensorOp psi_, c_, b_;
};

// Drinfeld-Jimbo Hecke symmetry in braid form:
//   R(x_i ⊗ x_i) = q x_i ⊗ x_i,
//   R(x_i ⊗ x_j) = x_j ⊗ x_i + (q - q^-1) [i<j] x_i ⊗ x_j   (i != j),
// with row (i, j) of the matrix holding the image of x_i ⊗ x_j.
inline Symmetry dj_symmetry(int n) {
  if (n < 1) throw InputError("dj_symmetry: N must be positive");
  TensorOp r = TensorOp::from_function(n, 2, [](const std::vector<int>& row, const std::vector<int>& col) {
    int i = row[0], j = row[1];
    if (i == j) return (col[0] == i && col[1] == i) ? ScalarQ::q() : ScalarQ(0);
    if (col[0] == j && col[1] == i) return ScalarQ(1);
    if (col[0] == i && col[1] == j && i < j) return qdiff();
    return ScalarQ(0);
  });
  return Symmetry(SymmetryKind::hecke, std::move(r), "dj(" + std::to_string(n) + ")");
}

// Graded flip: R(x_i ⊗ x_j) = (-1)^{p(i)p(j)} x_j ⊗ x_i, parity 0 on the
// first m basis vectors and 1 on the last n.
inline Symmetry superflip(int m, int n) {
  if (m < 0 || n < 0 || m + n < 1) throw InputError("superflip: need m, n >= 0 and m + n >= 1");
  TensorOp r = TensorOp::from_function(m + n, 2, [m](const std::vector<int>& row, const std::vector<int>& col) {
    if (!(row[0] == col[1] && row[1] == col[0])) return ScalarQ(0);
    bool odd = row[0] >= m && row[1] >= m;
    return ScalarQ(odd ? -1 : 1);
  });
  std::string label = n == 0 ? "flip(" + std::to_string(m) + ")"
                             : "superflip(" + std::to_string(m) + "|" + std::to_string(n) + ")";
  return Symmetry(SymmetryKind::involutive, std::move(r), label);
}

inline Symmetry flip(int n) {
  if (n < 1) throw InputError("flip: N must be positive");
  return superflip(n, 0);
}

// A^(1) = I, A^(k) = (1/k_q) A^(k-1) (q^{k-1} I - (k-1)_q R_{k-1}) A^(k-1),
// with A^(k-1) acting on the first k-1 slots. Involutive symmetries use the
// q = 1 form. The idempotence postcondition is checked.
inline TensorOp skew_symmetrizer(const Symmetry& s, int k) {
  if (k < 1) throw InputError("skew_symmetrizer: k must be >= 1");
  const int n = s.dim_v();
  TensorOp a = TensorOp::identity(n, 1);
  for (int j = 2; j <= k; ++j) {
    TensorOp prev = embed(a, 1, j);
    TensorOp mid = s.q_power(j - 1) * TensorOp::identity(n, j) - s.q_int(j - 1) * embed(s.R(), j - 1, j);
    a = s.q_int(j).inverse() * (prev * mid * prev);
  }
  if (a * a != a) throw VerificationError("skew_symmetrizer: A^(" + std::to_string(k) + ") is not idempotent");
  return a;
}

// [rank A^(1), ..., rank A^(kmax)]: dimensions of the homogeneous components
// of the R-skew-symmetric algebra.
inline std::vector<std::size_t> hilbert_dims(const Symmetry& s, int kmax) {
  if (kmax < 1) throw InputError("hilbert_dims: kmax must be >= 1");
  std::vector<std::size_t> dims;
  for (int k = 1; k <= kmax; ++k) {
    std::size_t r = rank(skew_symmetrizer(s, k));
    dims.push_back(r);
    if (r == 0) {
      // once a component vanishes, all higher ones do (A^(k+1) factors through A^(k))
      dims.resize(static_cast<std::size_t>(kmax), 0);
      break;
    }
  }
  return dims;
}

// Degree m of the Hilbert-Poincaré polynomial when the rank sequence
// terminates within kmax; nullopt otherwise (rational series or kmax too small).
inline std::optional<int> birank_degree(const std::vector<std::size_t>& dims) {
  for (std::size_t k = 0; k < dims.size(); ++k)
    if (dims[k] == 0) return static_cast<int>(k);
  return std::nullopt;
}

inline std::optional<int> birank_degree(const Symmetry& s, int kmax) { return birank_degree(hilbert_dims(s, kmax)); }

// Even bi-rank degree m, searched up to dim V + 1 (m <= N for even symmetries).
inline int even_birank(const Symmetry& s) {
  auto m = birank_degree(s, s.dim_v() + 1);
  if (!m) throw InputError(s.label() + ": Hilbert series does not terminate; symmetry is not of even type");
  return *m;
}

}  // namespace rea
