#include <gtest/gtest.h>

#include "skewlab/presentations/presentations.hpp"

using namespace skewlab;

namespace {

Field param(std::uint64_t ch) {
  FieldSpec s;
  s.characteristic = ch;
  s.parameter = true;
  return make_field(s);
}

Presentation g_param(std::uint64_t ch) { return algebra_make(g_case(param(ch).parameter())); }

}  // namespace

TEST(SkewMul, XTimesY) {
  const Presentation p = g_param(0);
  EXPECT_EQ(p.x * p.y, p.y * p.x + p.y);
}

TEST(SkewMul, XSquaredTimesY) {
  const Presentation p = g_param(0);
  const SkewPoly two = p.scalar(p.field().from_int(2));
  EXPECT_EQ(skew_pow(p.x, 2) * p.y, p.y * skew_pow(p.x, 2) + two * p.y * p.x + p.y);
}

TEST(SkewMul, XTimesTInQ) {
  const Presentation p = algebra_make(q_case(rationals()));
  EXPECT_EQ(p.x * p.t, p.t * p.x + p.one());
}

TEST(SkewMul, DerivationMismatch) {
  const Presentation a = g_param(0), b = algebra_make(q_case(param(0)));
  EXPECT_THROW(a.x * b.x, DerivationMismatch);
  EXPECT_THROW(commutator(a.y, b.y), DerivationMismatch);
}

TEST(SkewMul, DegreeAdditivity) {
  const Presentation p = g_param(3);
  const SkewPoly f = skew_pow(p.x, 3) + p.y * p.x, g = p.z * skew_pow(p.x, 2) + p.one();
  EXPECT_EQ((f * g).degree(), 5);
}

TEST(Commutator, Examples) {
  const Presentation p = g_param(0);
  EXPECT_EQ(commutator(p.x, p.z), p.scalar(p.cs.alpha) * p.z);
  EXPECT_TRUE(commutator(p.y, p.z).is_zero());
  for (std::uint64_t ell : {2u, 3u, 5u}) {
    const Presentation pl = g_param(ell);
    EXPECT_TRUE(commutator(skew_pow(pl.x, static_cast<unsigned>(ell)) - pl.x, pl.y).is_zero()) << ell;
  }
}

TEST(SkewPow, Examples) {
  const Presentation p = g_param(0);
  const SkewPoly x3 = skew_pow(p.x, 3);
  EXPECT_EQ(x3.coeffs().size(), 1u);
  EXPECT_EQ(x3.degree(), 3);
  EXPECT_TRUE(skew_pow(p.y, 0) == p.one());
  const Presentation p3 = g_param(3);
  EXPECT_TRUE(commutator(skew_pow(p3.x, 3) - p3.x, p3.y).is_zero());
  const Presentation q = algebra_make(q_case(rationals()));
  for (unsigned i = 1; i <= 5; ++i)
    EXPECT_EQ(commutator(skew_pow(q.x, i), q.t), q.scalar(q.field().from_int(i)) * skew_pow(q.x, i - 1)) << i;
}

TEST(Valuation, Examples) {
  const Presentation p = g_param(0);
  EXPECT_EQ(valuation_v(p.x), Valuation::of(-1));
  EXPECT_EQ(valuation_v(p.coeff(RatFunc2::monomial(p.field().one(), 5, -2))), Valuation::of(0));
  EXPECT_EQ(valuation_v(SkewPoly(p.d)), Valuation::inf());
}

TEST(Central, Examples) {
  const Presentation p2 = g_param(2);
  const FieldElem a = p2.cs.alpha;
  const SkewPoly s = skew_pow(p2.x, 2) - p2.x;
  const SkewPoly c = s * s - p2.scalar(a * a - a) * s;
  EXPECT_TRUE(is_central_against(c, p2.generators()));
  const Presentation p3 = g_param(3);
  const SkewPoly t = skew_pow(p3.x, 3) - p3.x;
  EXPECT_TRUE(is_central_against(t, {p3.x, p3.y}));
  EXPECT_FALSE(is_central_against(t, p3.generators()));
  EXPECT_TRUE(is_central_against(p3.y, {p3.y, p3.z}));
}

TEST(Printing, LeftNormalForm) {
  const Presentation p = algebra_make(g_case(rationals().from_int(1)));
  EXPECT_EQ(p.show(p.x * p.y), "y*x+y");
}
