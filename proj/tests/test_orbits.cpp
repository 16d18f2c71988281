#include <gtest/gtest.h>

#include <algorithm>

#include "skewlab/orbits/orbits.hpp"

using namespace skewlab;

namespace {

Field quad(long d) {
  FieldSpec s;
  s.extension = ExtensionKind::quadratic;
  s.radicand = d;
  return make_field(s);
}

FieldElem qv(long d, mpq_class a, mpq_class b) { return quad(d).from_quadratic(a, b); }

std::vector<mpz_class> zs(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

bool no_failures(const std::vector<CheckRecord>& r) {
  return std::none_of(r.begin(), r.end(), [](const CheckRecord& c) { return c.status == Status::fail; });
}

}  // namespace

TEST(Homographic, Examples) {
  const FieldElem r2 = qv(2, 0, 1);
  EXPECT_EQ(homographic(Mat2Z(1, 1, 0, 1), r2), r2 + quad(2).one());
  EXPECT_EQ(homographic(Mat2Z(0, 1, 1, 0), r2), qv(2, 0, mpq_class(1, 2)));
  EXPECT_TRUE(det_vanishes_in(Mat2Z(1, 2, 1, 2), prime_field(3)));
  EXPECT_FALSE(det_vanishes_in(Mat2Z(1, 1, 0, 1), prime_field(3)));
  EXPECT_THROW(homographic(Mat2Z(1, 0, 1, -1), rationals().one()), std::domain_error);
}

TEST(Mat2Z, ParseAndInverse) {
  const Mat2Z M = parse_matrix("2, 1, 1,1");
  EXPECT_EQ(M, Mat2Z(2, 1, 1, 1));
  EXPECT_EQ(M * M.inverse(), Mat2Z::identity());
  EXPECT_THROW(Mat2Z(2, 0, 0, 1).inverse(), std::domain_error);
  EXPECT_THROW(parse_matrix("1,2,3"), std::invalid_argument);
  EXPECT_THROW(parse_matrix("1,x,3,4"), std::invalid_argument);
}

TEST(CfExpand, Examples) {
  const ContFrac a = cf_expand(QuadIrr::from_field(qv(2, 0, 1)));
  EXPECT_EQ(a.preperiod, zs({1}));
  EXPECT_EQ(a.period, zs({2}));
  const ContFrac g = cf_expand(QuadIrr::from_field(qv(5, mpq_class(1, 2), mpq_class(1, 2))));
  EXPECT_EQ(g.preperiod, zs({1}));
  EXPECT_EQ(g.period, zs({1}));
  const ContFrac b = cf_expand(QuadIrr::from_field(qv(2, 1, 1)));
  EXPECT_EQ(b.preperiod, zs({2}));
  EXPECT_EQ(b.period, zs({2}));
  EXPECT_EQ(a.to_string(), "[1; (2)]");
}

TEST(CfExpand, Errors) {
  EXPECT_THROW(QuadIrr::make(0, 1, 4), std::invalid_argument);
  EXPECT_THROW(QuadIrr::make(0, 0, 2), std::invalid_argument);
  EXPECT_THROW(cf_expand(QuadIrr::make(0, 1, 1000003), 3), PeriodNotFound);
  EXPECT_THROW(QuadIrr::from_field(quad(2).one()), std::invalid_argument);
}

TEST(TailEquivalent, Examples) {
  const FieldElem a = qv(2, 0, 1), b = qv(2, 1, 1), c = qv(3, 0, 1);
  const ContFrac ca = cf_expand(QuadIrr::from_field(a)), cb = cf_expand(QuadIrr::from_field(b));
  const auto w = tail_equivalent(ca, cb, a, b);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(homographic(*w, a), b);
  EXPECT_TRUE(w->unimodular());
  EXPECT_FALSE(gl2z_equivalent(a, c).equivalent);
  const auto self = tail_equivalent(ca, ca, a, a);
  ASSERT_TRUE(self.has_value());
  EXPECT_EQ(homographic(*self, a), a);
}

TEST(FundamentalDomain, Examples) {
  const Field f = quad(-3);
  const FieldElem rho = f.from_quadratic(mpq_class(1, 2), mpq_class(1, 2));
  const Reduction r1 = fundamental_domain_reduce(ImagQuadPoint::make(rho + f.from_int(5)));
  EXPECT_EQ(r1.reduced.value, rho);
  EXPECT_EQ(r1.M, Mat2Z::translation(-5));
  const Field g = quad(-1);
  const Reduction r2 = fundamental_domain_reduce(ImagQuadPoint::make(g.from_quadratic(0, mpq_class(1, 2))));
  EXPECT_EQ(r2.reduced.value, g.from_quadratic(0, 2));
  EXPECT_EQ(homographic(r2.M, g.from_quadratic(0, mpq_class(1, 2))), r2.reduced.value);
  EXPECT_EQ(r2.M.det(), 1);
  const Reduction r3 = fundamental_domain_reduce(ImagQuadPoint::make(g.generator()));
  EXPECT_EQ(r3.M, Mat2Z::identity());
  EXPECT_THROW(ImagQuadPoint::make(g.from_quadratic(0, -1)), std::invalid_argument);
  EXPECT_THROW(ImagQuadPoint::make(quad(2).generator()), std::invalid_argument);
}

TEST(Gl2zEquivalent, Examples) {
  const auto v1 = gl2z_equivalent(qv(2, 0, 1), qv(2, 1, 1));
  EXPECT_TRUE(v1.equivalent);
  const FieldElem i = qv(-1, 0, 1);
  const auto v2 = gl2z_equivalent(i, i + quad(-1).one());
  ASSERT_TRUE(v2.equivalent);
  EXPECT_EQ(homographic(*v2.witness, i), i + quad(-1).one());
  EXPECT_FALSE(gl2z_equivalent(i, qv(-1, 0, 2)).equivalent);
  // z -> -z has determinant -1 and swaps the half planes.
  const auto v3 = gl2z_equivalent(qv(-7, mpq_class(1, 3), 1), qv(-7, mpq_class(-1, 3), -1));
  ASSERT_TRUE(v3.equivalent);
  EXPECT_EQ(v3.witness->det(), -1);
}

TEST(Gl2zEquivalent, Errors) {
  EXPECT_THROW(gl2z_equivalent(quad(2).one(), qv(2, 0, 1)), std::invalid_argument);
  EXPECT_THROW(gl2z_equivalent(qv(2, 0, 1), qv(-1, 0, 1)), std::invalid_argument);
}

TEST(FiniteOrbits, Examples) {
  const FiniteOrbitResult a = finite_orbits(3, 2, GroupKind::SL);
  ASSERT_EQ(a.orbits.size(), 1u);
  EXPECT_EQ(a.orbits[0].points.size(), 6u);
  EXPECT_EQ(a.orbits[0].stabilizer_order, 4);
  const FiniteOrbitResult b = finite_orbits(2, 3, GroupKind::SL);
  ASSERT_EQ(b.orbits.size(), 1u);
  EXPECT_EQ(b.orbits[0].points.size(), 6u);
  EXPECT_TRUE(no_failures(char2_table_checks()));
  const FiniteOrbitResult c = finite_orbits(3, 3, GroupKind::SLpm);
  ASSERT_EQ(c.orbits.size(), 1u);
  EXPECT_EQ(c.orbits[0].points.size(), 24u);
  EXPECT_EQ(c.orbits[0].stabilizer_order, 2);
}

TEST(FiniteOrbits, Errors) {
  EXPECT_THROW(finite_orbits(3, 4, GroupKind::SL), std::invalid_argument);
  EXPECT_THROW(finite_orbits(17, 2, GroupKind::SL), std::invalid_argument);
}

TEST(FiniteOrbits, BookkeepingOutsideClaimedCases) {
  const FiniteOrbitResult r = finite_orbits(5, 3, GroupKind::SL);
  EXPECT_TRUE(r.partition_ok);
  EXPECT_TRUE(r.orbit_stabilizer_ok);
}

TEST(TransitivityReport, Examples) {
  EXPECT_TRUE(no_failures(transitivity_report(3)));
  const auto r5 = transitivity_report(5);
  EXPECT_TRUE(no_failures(r5));
  EXPECT_TRUE(std::any_of(r5.begin(), r5.end(), [](const CheckRecord& c) { return c.status == Status::out_of_scope; }));
  EXPECT_TRUE(no_failures(transitivity_report(2)));
}

TEST(Classify, Examples) {
  const CaseSpec a = g_case(qv(2, 0, 1)), b = g_case(qv(2, 1, 1));
  const ClassifyVerdict v = valued_iso_classify(a, b);
  EXPECT_EQ(v.verdict, "valued-isomorphic");
  ASSERT_TRUE(v.morphism.has_value());
  EXPECT_TRUE(v.morphism->relations_hold());
  EXPECT_TRUE(no_failures(v.checks));
  const ClassifyVerdict w = valued_iso_classify(a, q_case(rationals()));
  EXPECT_FALSE(w.morphism.has_value());
  EXPECT_EQ(w.verdict, "not-valued-isomorphic");
  const ClassifyVerdict gk = valued_iso_classify(g_case(rationals().from_rational(mpq_class(2, 3))),
                                                 g_case(rationals().from_int(5)));
  EXPECT_EQ(gk.verdict, "isomorphic");
}
