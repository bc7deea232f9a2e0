#pragma once

// The modified RE algebra acting on V itself: l̂_i^j ▷ x_k = B_k^j x_i.
// Central elements act by scalars, which are compared with the spectral
// prediction at λ = (1, 0, ..., 0).

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "rea/charmap.hpp"
#include "rea/errors.hpp"
#include "rea/ncalg.hpp"
#include "rea/spectral.hpp"
#include "rea/symmetry.hpp"
#include "rea/tensor.hpp"

namespace rea {

class RepOnV {
 public:
  // Builds the N^2 images and checks every modified relation maps to zero.
  explicit RepOnV(Symmetry s) : s_(std::move(s)) {
    const int n = s_.dim_v();
    const TensorOp& b = s_.B();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        // column k is the image of x_k
        TensorOp m(n, 1);
        for (int k = 0; k < n; ++k) m(static_cast<std::size_t>(i), static_cast<std::size_t>(k)) = b(k, j);
        images_.push_back(std::move(m));
      }
    const auto rels = re_relations(s_, Variant::modified_re).relations;
    for (std::size_t r = 0; r < rels.size(); ++r)
      if (!evaluate(rels[r]).is_zero())
        throw RepresentationCheckFailed(s_.label() + ": relation " + std::to_string(r) + " does not vanish on V");
  }

  const Symmetry& symmetry() const { return s_; }
  int dim_v() const { return s_.dim_v(); }
  const std::vector<TensorOp>& images() const { return images_; }
  // 0-based (i, j)
  const TensorOp& image(int i, int j) const { return images_.at(static_cast<std::size_t>(i * dim_v() + j)); }

  // Word g1 g2 ... gk acts as M(g1) M(g2) ... M(gk).
  TensorOp evaluate(const NCPoly& p) const {
    const int n = dim_v();
    TensorOp out(n, 1);
    for (const auto& [w, c] : p.terms()) {
      TensorOp t = TensorOp::identity(n, 1);
      for (int k = 0; k < w.len; ++k) {
        int g = w.at(k);
        if (g >= n * n) throw IndexOutOfRange("evaluate: letter outside the generator alphabet");
        t = t * images_[static_cast<std::size_t>(g)];
      }
      out = out + c * t;
    }
    return out;
  }

 private:
  Symmetry s_;
  std::vector<TensorOp> images_;
};

inline RepOnV rep_on_v(const Symmetry& s) { return RepOnV(s); }

// c with evaluate(p) = c I; NotScalar otherwise.
inline ScalarQ scalar_value(const RepOnV& rep, const NCPoly& p) {
  TensorOp m = rep.evaluate(p);
  const ScalarQ c = m(0, 0);
  if (m != c * TensorOp::identity(rep.dim_v(), 1))
    throw NotScalar("element does not act on V by a scalar");
  return c;
}

inline Partition defining_partition(int m) {
  Partition lambda(static_cast<std::size_t>(m), 0);
  if (m > 0) lambda[0] = 1;
  return lambda;
}

// Spectral value of a central element of the modified algebra on V_λ.
// Hecke: e-basis, then φ_q, then μ = 1 - (q - q^-1) μ̂, at μ̂(λ).
// Involutive: power-sum basis with the q = 1 limits of p_k(μ̂).
inline ScalarQ predicted_character(const REAlgebra& alg, const NCPoly& z, const Partition& lambda) {
  if (alg.variant() != Variant::modified_re) throw InputError("predicted_character: needs the modified RE algebra");
  const Symmetry& s = alg.symmetry();
  const int m = even_birank(s);
  const int deg = std::max(z.degree(), 0);
  if (s.is_hecke()) {
    MPoly p = express_in_e_basis(alg, z, deg);
    return character(zamena(hc_morphism(p, m)), lambda, true);
  }
  std::vector<NCPoly> gens;
  std::vector<int> weights;
  std::vector<ScalarQ> values;
  for (int k = 1; k <= m; ++k) {
    gens.push_back(power_sum_expr(s, k));
    weights.push_back(k);
    values.emplace_back(character(powersum_hat_sym(k, m), lambda, true).limit_q1());
  }
  return express_in_basis(alg, z, gens, weights, deg).eval(values);
}

// Only the defining module λ = (1, 0, ..., 0) is available.
inline bool character_check(const REAlgebra& alg, const CentralElement& z) {
  if (z.variant != Variant::modified_re) throw InputError("character_check: element must come from the modified algebra");
  RepOnV rep(alg.symmetry());
  ScalarQ c = scalar_value(rep, z.expr);
  ScalarQ predicted = predicted_character(alg, z.expr, defining_partition(even_birank(alg.symmetry())));
  if (c != predicted)
    throw CharacterMismatch("scalar " + c.to_string() + " != predicted " + predicted.to_string());
  return true;
}

}  // namespace rea
