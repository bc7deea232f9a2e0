#include <gtest/gtest.h>

#include "rea/charmap.hpp"
#include "test_util.hpp"

using namespace rea;

namespace {

HeckeElement H(const char* s, int n) { return HeckeElement::parse(s, n); }
NCPoly l(int i, int j, int n) { return NCPoly::gen(i - 1, j - 1, n); }

TEST(CharMap, ChainForFlipIsPlainProduct) {
  const int n = 2;
  NCMatrix L = NCMatrix::generators(n);
  EXPECT_EQ(l_chain(flip(n), 1), L);
  EXPECT_EQ(l_chain(flip(n), 3), embed(L, 1, 3) * embed(L, 2, 3) * embed(L, 3, 3));
}

TEST(CharMap, ChainEntriesForDJ) {
  Symmetry s = dj_symmetry(2);
  auto bars = l_bars(s, 2);
  NCMatrix expect = s.R() * embed(NCMatrix::generators(2), 1, 2) * s.R_inverse();
  EXPECT_EQ(bars[1], expect);
  for (const auto& e : bars[1].entries()) EXPECT_LE(e.degree(), 1);
  EXPECT_NE(bars[1], embed(NCMatrix::generators(2), 2, 2));
}

TEST(CharMap, TraceIdentitiesHoldWithoutRelations) {
  // Tr_{R(k+1)} R_k = I and Tr_{R(k+1)} L_{k+1 bar} = Tr_{R(k)} L_{k̄} ⊗ I
  for (const Symmetry& s : {dj_symmetry(2), flip(2), dj_symmetry(1)}) {
    for (int k = 1; k <= 2; ++k) EXPECT_TRUE(r_partial_trace(embed(s.R(), k, k + 1), s.C(), k + 1).is_identity());
    auto bars2 = l_bars(s, 2), bars3 = l_bars(s, 3);
    NCPoly tr = r_trace(NCMatrix::generators(s.dim_v()), s.C());
    EXPECT_EQ(r_partial_trace(bars2[1], s.C(), 2), tr * NCMatrix::from_scalar(TensorOp::identity(s.dim_v(), 1)));
    EXPECT_EQ(r_partial_trace(bars3[2], s.C(), 3), extend_identity(r_partial_trace(bars2[1], s.C(), 2)));
  }
}

TEST(CharMap, PowerSums) {
  Symmetry s1 = dj_symmetry(1);
  for (int k = 1; k <= 3; ++k) {
    NCPoly lk(1);
    for (int i = 0; i < k; ++i) lk *= l(1, 1, 1);
    EXPECT_EQ(power_sum_expr(s1, k), ScalarQ::q_power(-1) * lk);
  }
  Symmetry s = dj_symmetry(2);
  // p_1 = Σ C_j^i l_i^j
  NCPoly p1;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) p1 += s.C()(static_cast<std::size_t>(j), static_cast<std::size_t>(i)) * NCPoly::gen(i, j, 2);
  EXPECT_EQ(power_sum_expr(s, 1), p1);
  EXPECT_EQ(ch_expr(s, HeckeElement::unit(1)), p1);
  EXPECT_THROW(power_sum_expr(s, 0), InputError);
}

TEST(CharMap, ChOfZkIsPowerSum) {
  Symmetry s = dj_symmetry(2);
  for (Variant v : {Variant::re, Variant::modified_re}) {
    REAlgebra alg(s, v, 4);
    for (int n = 2; n <= 3; ++n) EXPECT_TRUE(alg.equivalent(ch(alg, zk(n, n)).expr, power_sum_expr(s, n))) << n;
    EXPECT_TRUE(alg.equivalent(ch_expr(s, H("t1.t2", 3)), weight_expr(s, H("t1.t2", 3))));
  }
}

TEST(CharMap, WorkedIdentities) {
  Symmetry s = dj_symmetry(2);
  auto p = [&](int k) { return power_sum_expr(s, k); };
  REAlgebra re(s, Variant::re, 4), mod(s, Variant::modified_re, 4);
  EXPECT_TRUE(re.equivalent(weight_system(re, H("t1.t2", 3)).expr, p(3)));
  EXPECT_TRUE(re.equivalent(weight_expr(s, H("t1.t2", 3)), weight_expr(s, H("t2.t1", 3))));
  EXPECT_FALSE(mod.equivalent(weight_expr(s, H("t1.t2", 3)), weight_expr(s, H("t2.t1", 3))));
  NCPoly w = weight_system(mod, H("t1.t2", 3)).expr;
  EXPECT_TRUE(mod.equivalent(w, p(3) + p(1) * p(1) - NCPoly(s.r_trace_identity()) * p(2)));
  EXPECT_FALSE(mod.equivalent(w, p(3) + p(1) * p(1) - p(2)));
  for (const REAlgebra* alg : {&re, &mod})
    EXPECT_TRUE(alg->equivalent(weight_expr(s, H("t1.t2.t1", 3)), p(1) * p(2) + qdiff() * p(3)));
}

TEST(CharMap, ChIsLinear) {
  Symmetry s = dj_symmetry(2);
  prop::ScalarGen gen(12);
  HeckeElement a = H("t1.t2", 3), b = H("t2 + q*e", 3);
  for (int t = 0; t < 3; ++t) {
    ScalarQ x = gen.scalar(), y = gen.scalar();
    EXPECT_EQ(ch_expr(s, x * a + y * b), x * ch_expr(s, a) + y * ch_expr(s, b));
  }
}

TEST(CharMap, ElementarySymmetric) {
  Symmetry s = dj_symmetry(2);
  EXPECT_EQ(elementary_expr(s, 1), power_sum_expr(s, 1));
  REAlgebra alg(s, Variant::re, 3);
  CentralElement e2 = elementary(alg, 2);
  EXPECT_EQ(e2.expr.degree(), 2);
  EXPECT_THROW(elementary_expr(s, 3), ZeroSymmetrizer);
  // flip(2): e_2 = (Σ l_i^i l_j^j − Σ l_i^j l_j^i) / 2
  NCPoly classical;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      classical += NCPoly::gen(i, i, 2) * NCPoly::gen(j, j, 2) - NCPoly::gen(i, j, 2) * NCPoly::gen(j, i, 2);
  EXPECT_EQ(elementary_expr(flip(2), 2), Rational(1, 2) * classical);
}

TEST(CharMap, CentralityOfConstructedElements) {
  Symmetry s = dj_symmetry(2);
  for (Variant v : {Variant::re, Variant::modified_re}) {
    REAlgebra alg(s, v, 4);
    for (int k = 1; k <= 3; ++k) EXPECT_TRUE(alg.is_central(power_sum_expr(s, k)));
    for (int k = 1; k <= 2; ++k) EXPECT_TRUE(alg.is_central(elementary_expr(s, k)));
    EXPECT_TRUE(alg.is_central(weight_expr(s, H("t1.t2", 3))));
  }
  REAlgebra alg(s, Variant::re, 3);
  EXPECT_THROW(certify_central(alg, l(1, 2, 2), "l12"), NotCentral);
}

TEST(CharMap, CayleyHamilton) {
  REAlgebra one(dj_symmetry(1), Variant::re, 2);
  EXPECT_TRUE(cayley_hamilton_matrix(dj_symmetry(1), 1).is_zero());
  EXPECT_TRUE(cayley_hamilton_check(one, 1).pass);
  for (Variant v : {Variant::re, Variant::modified_re}) {
    REAlgebra alg(dj_symmetry(2), v, 4);
    auto rep = cayley_hamilton_check(alg, 2);
    EXPECT_TRUE(rep.pass) << to_string(v);
    EXPECT_EQ(rep.residuals.size(), 4u);
  }
  // the RE identity does not hold in the modified algebra
  REAlgebra mod(dj_symmetry(2), Variant::modified_re, 4);
  EXPECT_FALSE(mod.reduce(cayley_hamilton_matrix(dj_symmetry(2), 2)).is_zero());
  REAlgebra gl2(flip(2), Variant::modified_re, 4);
  EXPECT_TRUE(cayley_hamilton_check(gl2, 2).pass);
}

TEST(CharMap, ModifiedCayleyHamiltonPolynomial) {
  // N = 1: Q(t) = q^-1 (t − l̂)
  auto q1 = ch_poly_modified(dj_symmetry(1), 1);
  ASSERT_EQ(q1.size(), 2u);
  EXPECT_EQ(q1[0], -(ScalarQ::q_power(-1) * l(1, 1, 1)));
  EXPECT_EQ(q1[1], NCPoly(ScalarQ::q_power(-1)));
  // flip(2): the classical gl(2) polynomial with shifted roots, constant term the
  // symmetrized Capelli-type determinant
  auto qf = ch_poly_modified(flip(2), 2);
  ASSERT_EQ(qf.size(), 3u);
  EXPECT_EQ(qf[2], NCPoly(1));
  EXPECT_EQ(qf[1], -(l(1, 1, 2) + l(2, 2, 2) + NCPoly(1)));
  NCPoly cdet = Rational(1, 2) * (l(1, 1, 2) * l(2, 2, 2) + l(2, 2, 2) * l(1, 1, 2) - l(1, 2, 2) * l(2, 1, 2) -
                                  l(2, 1, 2) * l(1, 2, 2) + l(1, 1, 2) + l(2, 2, 2));
  EXPECT_EQ(qf[0], cdet);
}

TEST(CharMap, ClassicalWeights) {
  EXPECT_EQ(classical_weight({0}, 2), l(1, 1, 2) + l(2, 2, 2));
  NCPoly s1;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) s1 += NCPoly::gen(i, j, 2) * NCPoly::gen(j, i, 2);
  EXPECT_EQ(classical_weight({1, 0}, 2), s1);
  REAlgebra gl2(flip(2), Variant::modified_re, 4);
  for (const auto& w : all_permutations(3)) {
    EXPECT_EQ(classical_weight_index_form(w, 2), classical_weight_trace_form(w, 2));
    EXPECT_TRUE(gl2.is_central(classical_weight(w, 2)));
  }
  // the 3-cycle gives Tr L̂^3
  NCMatrix L = NCMatrix::generators(2);
  EXPECT_EQ(classical_weight({1, 2, 0}, 2), (L * L * L).trace());
}

}  // namespace
