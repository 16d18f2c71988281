#include <gtest/gtest.h>

#include "skewlab/pdo/pdo.hpp"
#include "skewlab/presentations/presentations.hpp"

using namespace skewlab;

namespace {

Field param(std::uint64_t ch) {
  FieldSpec s;
  s.characteristic = ch;
  s.parameter = true;
  return make_field(s);
}

constexpr int N = 8;

struct Fixture {
  Presentation p = algebra_make(g_case(param(0).parameter()));
  DerivationPtr delta = pdo_from_skew(p.x, N).delta_ptr();
  PdoSeries u = PdoSeries::u(delta, N);
  PdoSeries c(const RatFunc2& f) const { return PdoSeries::coefficient(delta, f, N); }
};

}  // namespace

TEST(PdoMul, UTimesY) {
  Fixture F;
  const RatFunc2 y = F.p.y_rf();
  // delta = -D_alpha, delta^j(y) = (-1)^j y, so u y = sum_{j>=0} (-1)^j y u^(j+1).
  PdoSeries expected(F.delta, N);
  for (int j = 0; j + 1 <= N; ++j)
    expected = expected + PdoSeries::monomial(F.delta, j % 2 ? -y : y, j + 1, N);
  const PdoSeries got = F.u * F.c(y);
  EXPECT_TRUE(equal_to_precision(got, expected)) << got.to_string();
  EXPECT_GE(got.precision(), N);
}

TEST(PdoMul, Trivial) {
  Fixture F;
  const PdoSeries uinv = PdoSeries::monomial(F.delta, RatFunc2::constant(F.p.field().one()), -1, N);
  EXPECT_TRUE(equal_to_precision(uinv * F.u, F.c(RatFunc2::constant(F.p.field().one()))));
  EXPECT_TRUE(equal_to_precision(F.u * F.c(RatFunc2::constant(F.p.field().one())), F.u));
}

TEST(PdoFromSkew, Examples) {
  Fixture F;
  const PdoSeries x = pdo_from_skew(F.p.x, N);
  EXPECT_EQ(x.terms().size(), 1u);
  EXPECT_EQ(x.valuation(), Valuation::of(-1));
  EXPECT_TRUE(x.coeff(-1).is_one());
  const PdoSeries y = pdo_from_skew(F.p.y, N);
  EXPECT_EQ(y.terms().size(), 1u);
  EXPECT_EQ(y.coeff(0), F.p.y_rf());
  const SkewPoly rel = F.p.x * F.p.y - F.p.y * F.p.x - F.p.y;
  EXPECT_TRUE(pdo_from_skew(rel, N).is_zero_to_precision());
  // The image relation also holds when computed inside the series ring.
  const PdoSeries X = pdo_from_skew(F.p.x, N), Y = pdo_from_skew(F.p.y, N);
  EXPECT_TRUE((X * Y - Y * X - Y).is_zero_to_precision());
}

TEST(PdoInv, ScaledU) {
  Fixture F;
  const Field f = F.p.field();
  const FieldElem gamma = f.from_int(2) * F.p.cs.alpha + f.from_int(3);
  const PdoSeries a = F.c(RatFunc2::constant(gamma)) * F.u;
  const PdoSeries inv = pdo_inv(a);
  const PdoSeries expected = PdoSeries::monomial(F.delta, RatFunc2::constant(gamma.inverse()), -1, N);
  EXPECT_TRUE(equal_to_precision(inv, expected)) << inv.to_string();
  EXPECT_EQ(pdo_valuation(inv), Valuation::of(-1));
}

TEST(PdoInv, GeometricSeries) {
  Fixture F;
  const RatFunc2 one = RatFunc2::constant(F.p.field().one());
  const PdoSeries a = F.c(one) - F.u;
  const PdoSeries inv = pdo_inv(a);
  for (int n = 0; n <= inv.precision(); ++n) EXPECT_TRUE(inv.coeff(n).is_one()) << n;
  EXPECT_GE(inv.precision(), N);
}

TEST(PdoInv, DoubleInverse) {
  Fixture F;
  const PdoSeries a = F.c(F.p.y_rf()) * F.u + F.c(F.p.z_rf()) * F.u * F.u;
  const PdoSeries back = pdo_inv(pdo_inv(a));
  EXPECT_TRUE(equal_to_precision(back, a));
  EXPECT_GT(back.precision(), 0);
}

TEST(PdoInv, Errors) {
  Fixture F;
  EXPECT_THROW(pdo_inv(PdoSeries(F.delta, N)), std::domain_error);
  EXPECT_THROW(F.u.coeff(N + 1), InsufficientPrecision);
}

TEST(PdoValuation, Examples) {
  Fixture F;
  EXPECT_EQ(pdo_valuation(F.u), Valuation::of(1));
  EXPECT_EQ(pdo_valuation(F.c(RatFunc2::monomial(F.p.field().one(), -3, 1))), Valuation::of(0));
  const PdoSeries s = PdoSeries::monomial(F.delta, RatFunc2::constant(F.p.field().one()), -1, N) +
                      F.c(RatFunc2::constant(F.p.field().from_int(5))) * F.u;
  EXPECT_EQ(pdo_valuation(s), Valuation::of(-1));
  EXPECT_EQ(pdo_valuation(PdoSeries(F.delta, N)), Valuation::inf());
}

TEST(PdoMul, DerivationMismatch) {
  Fixture F;
  const Presentation q = algebra_make(q_case(param(0)));
  EXPECT_THROW(F.u * pdo_from_skew(q.x, N), DerivationMismatch);
}

TEST(LeadingConstraint, PhiImagesPass) {
  Fixture F;
  const Mat2Z M(2, 1, 1, 1);
  const Morphism phi = phi_morphism(M, F.p);
  const PdoSeries Xinv = pdo_inv(pdo_from_skew(phi.x_image, N));
  const PdoSeries Y = pdo_from_skew(phi.y_image, N), Z = pdo_from_skew(phi.z_image, N);
  const LeadingConstraintReport r = leading_constraint_check(Xinv, Y, Z, phi.beta, *F.p.d);
  ASSERT_TRUE(r.passed()) << r.precondition_failure;
  const FieldElem gamma = F.p.cs.alpha + F.p.field().one();  // m alpha + r
  EXPECT_EQ(*r.c1, RatFunc2::constant(gamma));
  EXPECT_EQ(*r.y0, RatFunc2::monomial(F.p.field().one(), 1, 1));  // y^r z^m
  // D(y0)/y0 computed independently.
  EXPECT_EQ(log_derivative(*F.p.d, *r.y0), *r.c1);
}

TEST(LeadingConstraint, ConstantYRejected) {
  Fixture F;
  const Morphism phi = phi_morphism(Mat2Z::identity(), F.p);
  const PdoSeries Xinv = pdo_inv(pdo_from_skew(phi.x_image, N));
  const LeadingConstraintReport r = leading_constraint_check(Xinv, pdo_from_skew(F.p.one(), N),
                                                             pdo_from_skew(phi.z_image, N), phi.beta, *F.p.d);
  EXPECT_FALSE(r.passed());
  EXPECT_EQ(r.precondition_failure, "y0 in k");
}

TEST(LeadingConstraint, PerturbedZRejected) {
  Fixture F;
  const Morphism phi = phi_morphism(Mat2Z::identity(), F.p);
  const PdoSeries Xinv = pdo_inv(pdo_from_skew(phi.x_image, N));
  const PdoSeries Z = pdo_from_skew(phi.z_image, N) + F.c(F.p.y_rf()) * F.u;
  const LeadingConstraintReport r =
      leading_constraint_check(Xinv, pdo_from_skew(phi.y_image, N), Z, phi.beta, *F.p.d);
  EXPECT_FALSE(r.passed());
  EXPECT_FALSE(r.relations_hold);
}

TEST(Printing, SeriesEndsWithOrderMarker) {
  Fixture F;
  const std::string s = (F.c(RatFunc2::constant(F.p.field().one())) - F.u).truncated(3).to_string();
  EXPECT_NE(s.find("O(u^4)"), std::string::npos) << s;
}
