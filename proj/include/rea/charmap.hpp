#pragma once

// The characteristic map H_n(q) -> Z(L(R)) and the elements it produces:
// power sums, elementary symmetric polynomials, weight systems, plus the
// Cayley-Hamilton identities they satisfy.

#include <string>
#include <utility>
#include <vector>

#include "rea/errors.hpp"
#include "rea/hecke.hpp"
#include "rea/ncalg.hpp"
#include "rea/symmetry.hpp"
#include "rea/tensor.hpp"

namespace rea {

struct CentralElement {
  NCPoly expr;
  Variant variant;
  std::string provenance;
};

// L_{1̄} = L_1, L_{k̄} = R_{k-1} L_{k-1 bar} R_{k-1}^{-1}, all on V^{⊗n}.
inline std::vector<NCMatrix> l_bars(const Symmetry& s, int n) {
  if (n < 1) throw InputError("l_bars: n must be positive");
  std::vector<NCMatrix> out{embed(NCMatrix::generators(s.dim_v()), 1, n)};
  const TensorOp rinv = s.R_inverse();
  for (int k = 2; k <= n; ++k) out.push_back(embed(s.R(), k - 1, n) * out.back() * embed(rinv, k - 1, n));
  return out;
}

// L_{1̄→n} = L_{1̄} L_{2̄} ... L_{n̄}.
inline NCMatrix l_chain(const Symmetry& s, int n) {
  auto bars = l_bars(s, n);
  NCMatrix m = bars[0];
  for (std::size_t k = 1; k < bars.size(); ++k) m = m * bars[k];
  return m;
}

inline NCMatrix matrix_power(const NCMatrix& l, int k) {
  NCMatrix m = NCMatrix::from_scalar(TensorOp::identity(l.dim_v(), l.arity()));
  for (int i = 0; i < k; ++i) m = m * l;
  return m;
}

// Tr_{R(1..n)}(ρ_R(z) L_{1̄→n}).
inline NCPoly ch_expr(const Symmetry& s, const HeckeElement& z) {
  const int n = z.strands();
  return r_trace(rho(s, z, n) * l_chain(s, n), s.C());
}

// Tr_{R(1..n)}(L_{1̄→n} ρ_R(z)): the weight-system order.
inline NCPoly weight_expr(const Symmetry& s, const HeckeElement& z) {
  const int n = z.strands();
  return r_trace(l_chain(s, n) * rho(s, z, n), s.C());
}

// p_k = Tr_R L^k.
inline NCPoly power_sum_expr(const Symmetry& s, int k) {
  if (k < 1) throw InputError("power_sum: k must be positive");
  return r_trace(matrix_power(NCMatrix::generators(s.dim_v()), k), s.C());
}

// e_k = Tr_{R(1..k)}(A^(k) L_{1̄→k}).
inline NCPoly elementary_expr(const Symmetry& s, int k) {
  if (k < 1) throw InputError("elementary: k must be positive");
  TensorOp a = skew_symmetrizer(s, k);
  if (a.is_zero()) throw ZeroSymmetrizer("A^(" + std::to_string(k) + ") vanishes for " + s.label());
  return r_trace(a * l_chain(s, k), s.C());
}

inline CentralElement certify_central(const REAlgebra& alg, NCPoly expr, std::string provenance) {
  if (!alg.is_central(expr)) throw NotCentral(provenance + " is not central at degree " + std::to_string(alg.degree_bound()));
  return {std::move(expr), alg.variant(), std::move(provenance)};
}

inline CentralElement ch(const REAlgebra& alg, const HeckeElement& z) {
  return certify_central(alg, ch_expr(alg.symmetry(), z), "ch(" + z.to_string() + ")");
}
inline CentralElement weight_system(const REAlgebra& alg, const HeckeElement& z) {
  return certify_central(alg, weight_expr(alg.symmetry(), z), "w(" + z.to_string() + ")");
}
inline CentralElement power_sum(const REAlgebra& alg, int k) {
  return certify_central(alg, power_sum_expr(alg.symmetry(), k), "p" + std::to_string(k));
}
inline CentralElement elementary(const REAlgebra& alg, int k) {
  return certify_central(alg, elementary_expr(alg.symmetry(), k), "e" + std::to_string(k));
}

// Σ_{k=0}^m (-q)^k e_k(L) L^{m-k}, e_0 = 1.
inline NCMatrix cayley_hamilton_matrix(const Symmetry& s, int m) {
  NCMatrix l = NCMatrix::generators(s.dim_v());
  NCMatrix total = matrix_power(l, m);
  for (int k = 1; k <= m; ++k) {
    ScalarQ sign = k % 2 ? ScalarQ(-1) : ScalarQ(1);
    total = total + (NCPoly(sign * s.q_power(k)) * elementary_expr(s, k)) * matrix_power(l, m - k);
  }
  return total;
}

// Coefficients Q_0..Q_m of
//   Q(t) = Tr_{R(1..m)}(A^(m) ∏_{k=1}^m (q^{2(k-1)}(t - q^{-k+1}(k-1)_q) I - L̂_{k̄})).
inline std::vector<NCPoly> ch_poly_modified(const Symmetry& s, int m) {
  if (m < 1) throw InputError("ch_poly_modified: m must be positive");
  TensorOp a = skew_symmetrizer(s, m);
  if (a.is_zero()) throw ZeroSymmetrizer("A^(" + std::to_string(m) + ") vanishes for " + s.label());
  auto bars = l_bars(s, m);
  const NCMatrix id = NCMatrix::from_scalar(TensorOp::identity(s.dim_v(), m));
  std::vector<NCMatrix> poly{id};  // coefficient of t^j at index j
  for (int k = 1; k <= m; ++k) {
    ScalarQ alpha = s.q_power(2 * (k - 1));
    ScalarQ beta = -(s.q_power(k - 1) * s.q_int(k - 1));
    std::vector<NCMatrix> next(poly.size() + 1, NCMatrix(s.dim_v(), m));
    for (std::size_t j = 0; j < poly.size(); ++j) {
      next[j + 1] = next[j + 1] + NCPoly(alpha) * poly[j];
      next[j] = next[j] + NCPoly(beta) * poly[j] - poly[j] * bars[static_cast<std::size_t>(k - 1)];
    }
    poly = std::move(next);
  }
  std::vector<NCPoly> coeffs;
  for (const auto& c : poly) coeffs.push_back(r_trace(a * c, s.C()));
  return coeffs;
}

// Σ_j Q_j L̂^j with coefficients on the left.
inline NCMatrix substitute_generator_matrix(const std::vector<NCPoly>& coeffs, int dim_v) {
  NCMatrix l = NCMatrix::generators(dim_v);
  NCMatrix total(dim_v, 1), power = matrix_power(l, 0);
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (j) power = power * l;
    total = total + coeffs[j] * power;
  }
  return total;
}

struct CayleyHamiltonReport {
  bool pass = true;
  std::vector<NCPoly> residuals;  // reduced entries, row-major
};

// RE variant: the quantum Cayley-Hamilton identity. Modified variant: Q(L̂) = 0, the identity the modified
// generating matrix actually satisfies (for the flip this is the classical
// gl(N) identity with shifted roots).
inline CayleyHamiltonReport cayley_hamilton_check(const REAlgebra& alg, int m) {
  const Symmetry& s = alg.symmetry();
  NCMatrix lhs = alg.variant() == Variant::re ? cayley_hamilton_matrix(s, m)
                                              : substitute_generator_matrix(ch_poly_modified(s, m), s.dim_v());
  CayleyHamiltonReport rep;
  for (const auto& e : lhs.entries()) {
    rep.residuals.push_back(alg.reduce(e));
    if (!rep.residuals.back().is_zero()) rep.pass = false;
  }
  return rep;
}

// Σ_{i_1..i_n} l_{i_1}^{i_σ(1)} ... l_{i_n}^{i_σ(n)}, σ 0-based one-line.
inline NCPoly classical_weight_index_form(const Permutation& sigma, int dim_v) {
  const int n = static_cast<int>(sigma.size());
  NCPoly out;
  std::vector<int> idx(static_cast<std::size_t>(n), 0);
  for (std::size_t t = 0; t < ipow(static_cast<std::size_t>(dim_v), n); ++t) {
    std::size_t rest = t;
    for (int x = n - 1; x >= 0; --x) {
      idx[static_cast<std::size_t>(x)] = static_cast<int>(rest % static_cast<std::size_t>(dim_v));
      rest /= static_cast<std::size_t>(dim_v);
    }
    NCPoly m(1);
    for (int x = 0; x < n; ++x)
      m *= NCPoly::gen(idx[static_cast<std::size_t>(x)], idx[static_cast<std::size_t>(sigma[static_cast<std::size_t>(x)])], dim_v);
    out += m;
  }
  return out;
}

// P_σ moves tensor factor k to position σ(k) (left action on positions);
// in the ρ conventions used here that operator is ρ_P(T_{σ^-1}).
inline TensorOp position_permutation_operator(const Permutation& sigma, int dim_v) {
  return rho(flip(dim_v), HeckeElement::basis(inverse(sigma)), static_cast<int>(sigma.size()));
}

// Tr_{(1..n)} L̂_1 ... L̂_n P_σ.
inline NCPoly classical_weight_trace_form(const Permutation& sigma, int dim_v) {
  const int n = static_cast<int>(sigma.size());
  return (l_chain(flip(dim_v), n) * position_permutation_operator(sigma, dim_v)).trace();
}

// Both forms, required to coincide as free polynomials.
inline NCPoly classical_weight(const Permutation& sigma, int dim_v) {
  NCPoly a = classical_weight_index_form(sigma, dim_v);
  NCPoly b = classical_weight_trace_form(sigma, dim_v);
  if (a != b) throw FormMismatch("classical weight: index form and trace form differ");
  return a;
}

}  // namespace rea
