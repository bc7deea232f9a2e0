#include <gtest/gtest.h>

#include "rea/scalar.hpp"
#include "test_util.hpp"

using namespace rea;

namespace {

ScalarQ S(const char* s) { return ScalarQ::parse(s); }

TEST(Scalar, QIntegers) {
  EXPECT_EQ(qint(1), ScalarQ(1));
  EXPECT_EQ(qint(0), ScalarQ(0));
  EXPECT_EQ(qint(2).to_string(), "(q^2+1)/q");
  EXPECT_EQ(qint(3), S("(q^4+q^2+1)/q^2"));
  // defining formula, evaluated directly
  ScalarQ q = ScalarQ::q();
  for (int k = -5; k <= 5; ++k) {
    EXPECT_EQ(qint(k), (q.pow(k) - q.pow(-k)) / (q - q.pow(-1))) << k;
    EXPECT_EQ(qint(-k), -qint(k));
  }
}

TEST(Scalar, QIntegerAdditionIdentity) {
  ScalarQ q = ScalarQ::q();
  for (int a = -6; a <= 6; ++a)
    for (int b = -6; b <= 6; ++b) EXPECT_EQ(qint(a + b), q.pow(b) * qint(a) + q.pow(-a) * qint(b)) << a << "," << b;
}

TEST(Scalar, EvalAndLimit) {
  EXPECT_EQ(qint(2).eval_at(Rational(2)), Rational(5, 2));
  EXPECT_EQ(ScalarQ(1).eval_at(Rational(7, 3)), Rational(1));
  EXPECT_EQ(qint(3).eval_at(Rational(1)), Rational(3));
  for (int k = 1; k <= 5; ++k) EXPECT_EQ(qint(k).limit_q1(), Rational(k));
  EXPECT_EQ((qdiff() / qdiff()).limit_q1(), Rational(1));
  EXPECT_EQ(qdiff().limit_q1(), Rational(0));
  EXPECT_THROW(qdiff().inverse().limit_q1(), PoleAtOne);
  EXPECT_THROW(S("1/(q-2)").eval_at(Rational(2)), PoleAtPoint);
}

TEST(Scalar, CanonicalForm) {
  EXPECT_EQ(S("2/4"), S("1/2"));
  EXPECT_EQ(S("(q^2-1)/(q-1)"), S("q+1"));
  EXPECT_EQ(S("(-q)/(-2*q^2+2)").to_string(), "q/(2*q^2-2)");
  EXPECT_EQ(S("q^-1 + q"), qint(2));
  ScalarQ x = S("(6*q^3-6*q)/(4*q^2+4*q)");
  EXPECT_EQ(x.to_string(), "(3*q-3)/2");
  EXPECT_TRUE(S("(q-q^-1)*(q+q^-1) - q^2 + q^-2").is_zero());
}

TEST(Scalar, TextRoundTrip) {
  prop::ScalarGen gen(11);
  for (int i = 0; i < 200; ++i) {
    ScalarQ a = gen.scalar();
    EXPECT_EQ(ScalarQ::parse(a.to_string()), a) << a;
  }
  EXPECT_THROW(S("q + x"), ParseError);
  EXPECT_THROW(S("1/0"), ParseError);
}

TEST(Scalar, FieldAxiomsRandomized) {
  prop::ScalarGen gen(2024);
  for (int i = 0; i < 300; ++i) {
    ScalarQ a = gen.scalar(), b = gen.scalar(), c = gen.scalar();
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_TRUE((a - a).is_zero());
    if (!a.is_zero()) {
      EXPECT_EQ(a * a.inverse(), ScalarQ(1));
    }
  }
}

TEST(Scalar, EvaluationIsHomomorphism) {
  prop::ScalarGen gen(7);
  const Rational q0(3, 7);
  for (int i = 0; i < 200; ++i) {
    ScalarQ a = gen.scalar(), b = gen.scalar();
    Rational va, vb;
    try {
      va = a.eval_at(q0);
      vb = b.eval_at(q0);
    } catch (const PoleAtPoint&) {
      continue;
    }
    EXPECT_EQ((a + b).eval_at(q0), va + vb);
    EXPECT_EQ((a * b).eval_at(q0), va * vb);
    if (vb != 0) {
      EXPECT_EQ((a / b).eval_at(q0), va / vb);
    }
  }
}

}  // namespace
