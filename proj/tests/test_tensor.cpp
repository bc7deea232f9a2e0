#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "rea/symmetry.hpp"
#include "rea/tensor.hpp"
#include "test_util.hpp"

using namespace rea;

namespace {

TensorOp random_op(prop::ScalarGen& gen, int n, int arity, int density_percent = 60) {
  TensorOp m(n, arity);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      if (gen.uniform(0, 99) < density_percent) m(i, j) = gen.scalar();
  return m;
}

TEST(Tensor, MultiIndexEncodingIsRowMajor) {
  TensorOp m(3, 3);
  EXPECT_EQ(m.flat({1, 2, 0}), 1u * 9 + 2 * 3 + 0);
  EXPECT_EQ(m.digits(17), (std::vector<int>{1, 2, 2}));
  for (std::size_t f = 0; f < m.size(); ++f) EXPECT_EQ(m.flat(m.digits(f)), f);
}

TEST(Tensor, EmbedIdentityAndPositions) {
  for (int p = 1; p <= 3; ++p)
    for (int k = 1; k <= p; ++k) EXPECT_TRUE(embed(TensorOp::identity(2, 1), k, p).is_identity());
  Symmetry s = dj_symmetry(2);
  EXPECT_EQ(embed(s.R(), 1, 2), s.R());
  EXPECT_EQ(embed(s.R(), 2, 3), kron(TensorOp::identity(2, 1), s.R()));
  EXPECT_EQ(embed(s.R(), 1, 3), kron(s.R(), TensorOp::identity(2, 1)));
  EXPECT_THROW(embed(s.R(), 3, 3), PositionOutOfRange);
  EXPECT_THROW(embed(s.R(), 0, 3), PositionOutOfRange);
}

TEST(Tensor, EmbedMatchesComponentFormula) {
  // X_2 on V^⊗3: (X_2)_{abc}^{def} = δ_a^d X_b^e δ_c^f
  prop::ScalarGen gen(5);
  TensorOp x = random_op(gen, 2, 1, 100);
  TensorOp e = embed(x, 2, 3);
  for (std::size_t r = 0; r < e.size(); ++r)
    for (std::size_t c = 0; c < e.size(); ++c) {
      auto rd = e.digits(r), cd = e.digits(c);
      ScalarQ expect = (rd[0] == cd[0] && rd[2] == cd[2]) ? x(rd[1], cd[1]) : ScalarQ(0);
      EXPECT_EQ(e(r, c), expect);
    }
}

TEST(Tensor, PartialTraces) {
  EXPECT_EQ(partial_trace(TensorOp::identity(3, 2), 2), ScalarQ(3) * TensorOp::identity(3, 1));
  EXPECT_TRUE(partial_trace(flip_operator(3), 1).is_identity());
  EXPECT_TRUE(partial_trace(flip_operator(3), 2).is_identity());
  EXPECT_THROW(partial_trace(TensorOp::identity(2, 2), 3), PositionOutOfRange);
  EXPECT_THROW(r_partial_trace(TensorOp::identity(2, 2), TensorOp::identity(2, 1), 0), PositionOutOfRange);

  prop::ScalarGen gen(17);
  for (int trial = 0; trial < 5; ++trial) {
    TensorOp a = random_op(gen, 2, 1, 100), b = random_op(gen, 2, 1, 100);
    EXPECT_EQ(partial_trace(kron(a, b), 2), b.trace() * a);
    EXPECT_EQ(partial_trace(kron(a, b), 1), a.trace() * b);
    TensorOp m = random_op(gen, 2, 3);
    EXPECT_EQ(r_partial_trace(m, TensorOp::identity(2, 1), 2), partial_trace(m, 2));
  }
}

TEST(Tensor, RTraceOfHeckeEmbeddingIsIdentity) {
  for (int n : {1, 2, 3}) {
    Symmetry s = dj_symmetry(n);
    for (int k = 1; k <= 2; ++k) {
      TensorOp rk = embed(s.R(), k, k + 1);
      EXPECT_TRUE(r_partial_trace(rk, s.C(), k + 1).is_identity()) << n << " " << k;
    }
  }
  Symmetry s1 = dj_symmetry(1);
  EXPECT_EQ(r_trace(TensorOp::identity(1, 1), s1.C()), ScalarQ::q_power(-1));
}

TEST(Tensor, SkewInverseOperatorFormForDJ2) {
  Symmetry s = dj_symmetry(2);
  TensorOp lhs = partial_trace(embed(s.R(), 1, 3) * embed(s.psi(), 2, 3), 2);
  EXPECT_EQ(lhs, flip_operator(2));
}

TEST(Tensor, RTraceCyclicityForCommutingOperators) {
  Symmetry s = dj_symmetry(2);
  TensorOp cc = kron(s.C(), s.C());
  ASSERT_EQ(cc * s.R(), s.R() * cc);
  TensorOp c3 = kron(cc, s.C());
  TensorOp r1 = embed(s.R(), 1, 3), r2 = embed(s.R(), 2, 3);
  TensorOp m = r1 * r2 + ScalarQ(2) * r2, n = r2 * r1 * r1 - r1;
  ASSERT_EQ(c3 * m, m * c3);
  ASSERT_EQ(c3 * n, n * c3);
  EXPECT_EQ(r_trace(m * n, s.C()), r_trace(n * m, s.C()));
}

TEST(Tensor, RankInvariantUnderPermutationAndBoundedBySpecialization) {
  prop::ScalarGen gen(99);
  for (int trial = 0; trial < 6; ++trial) {
    // low-rank product plus noise-free structure: rank <= 2
    TensorOp u(2, 2), v(2, 2);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 2; ++j) {
        u(i, j) = gen.scalar();
        v(j, i) = gen.scalar();
      }
    TensorOp m = u * v;
    std::size_t r = rank(m);
    EXPECT_LE(r, 2u);
    std::vector<std::size_t> perm(4);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), gen.engine());
    TensorOp pm(2, 2);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) pm(i, j) = m(perm[i], perm[3 - j]);
    EXPECT_EQ(rank(pm), r);
    // specialization at a random q0 can only drop the rank
    try {
      TensorOp at = m.map([](const ScalarQ& x) { return ScalarQ(x.eval_at(Rational(5, 3))); });
      EXPECT_LE(rank(at), r);
    } catch (const PoleAtPoint&) {
    }
  }
  EXPECT_EQ(rank(TensorOp::identity(2, 3)), 8u);
  EXPECT_EQ(rank(TensorOp(2, 2)), 0u);
}

}  // namespace
