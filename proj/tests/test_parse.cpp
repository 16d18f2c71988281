#include <gtest/gtest.h>

#include "skewlab/parse/literals.hpp"

using namespace skewlab;

TEST(ParseElement, Rat) {
  const FieldElem a = parse_element("rat:2/3", 0);
  EXPECT_EQ(a, rationals().from_rational(mpq_class(2, 3)));
  EXPECT_EQ(parse_element("rat:-5/4", 0), rationals().from_rational(mpq_class(-5, 4)));
  EXPECT_EQ(parse_element("rat:2", 5), prime_field(5).from_int(2));
  EXPECT_EQ(parse_element("rat:1/2", 3), prime_field(3).from_int(2));
  EXPECT_THROW(parse_element("rat:1/0", 0), ParseError);
  EXPECT_THROW(parse_element("rat:1/3", 3), ParseError);
  EXPECT_THROW(parse_element("rat:x", 0), ParseError);
}

TEST(ParseElement, Quad) {
  const FieldElem a = parse_element("quad:(0+1*sqrt(2))/1", 0);
  EXPECT_EQ(a.rational_part(), 0);
  EXPECT_EQ(a.sqrt_part(), 1);
  EXPECT_EQ(a.field().radicand(), 2);
  const FieldElem g = parse_element("quad:(1+1*sqrt(5))/2", 0);
  EXPECT_EQ(g * g, g + g.field().one());
  EXPECT_THROW(parse_element("quad:(0+1*sqrt(8))/2", 0), ParseError);
  EXPECT_THROW(parse_element("quad:(0+1*sqrt(2))/1", 3), ParseError);
  EXPECT_THROW(parse_element("quad:(1+sqrt(2))", 0), ParseError);
  EXPECT_THROW(parse_element("quad:(0+1*sqrt(4))/1", 0), ParseError);
}

TEST(ParseElement, ParamAndFf) {
  const FieldElem a = parse_element("param", 2);
  EXPECT_TRUE(a.field().has_parameter());
  EXPECT_EQ(a, a.field().parameter());
  const FieldElem b = parse_element("param:(a^2+1)/(a-1)", 0);
  const FieldElem p = b.field().parameter();
  EXPECT_EQ(b, (p * p + b.field().one()) / (p - b.field().one()));
  const FieldElem t = parse_element("ff:3^2:0,1", 3);
  EXPECT_EQ(t.coordinates(), (std::vector<std::int64_t>{0, 1}));
  EXPECT_THROW(parse_element("ff:3^2:0,1", 5), ParseError);
  EXPECT_THROW(parse_element("nonsense", 0), ParseError);
}

TEST(ParseRatfunc, Infix) {
  const Field q = rationals();
  const RatFunc2 r = parse_ratfunc("(y^2 - z^2)/(2*(y+z))", q);
  EXPECT_EQ(r, (RatFunc2::y(q) - RatFunc2::z(q)).scaled(q.from_rational(mpq_class(1, 2))));
  EXPECT_EQ(parse_ratfunc("y^-1*z", q), RatFunc2::monomial(q.one(), -1, 1));
  EXPECT_THROW(parse_ratfunc("y/(z-z)", q), ParseError);
  EXPECT_THROW(parse_ratfunc("y+", q), ParseError);
  EXPECT_THROW(parse_ratfunc("a*y", q), ParseError);
}

TEST(ParseSkew, InsidePresentation) {
  const Presentation p = algebra_make(g_case(parse_element("param", 0)));
  EXPECT_EQ(parse_skew("x*y - y*x", p), p.y);
  EXPECT_EQ(parse_skew("x^2", p), skew_pow(p.x, 2));
  EXPECT_EQ(parse_skew("a*z", p), p.scalar(p.cs.alpha) * p.z);
  EXPECT_THROW(parse_skew("1/x", p), ParseError);
  const Presentation q = algebra_make(q_case(rationals()));
  EXPECT_EQ(parse_skew("x*t - t*x", q), q.one());
}

TEST(ParseCase, Literals) {
  const CaseSpec g = parse_case("g:rat:2/3", 0);
  EXPECT_EQ(g.algebra, AlgebraKind::g_alpha);
  EXPECT_EQ(g.classification(), CaseClass::char0_rational);
  EXPECT_EQ(parse_case("q", 3).classification(), CaseClass::q_charl);
  EXPECT_EQ(parse_case("g:param", 3).classification(), CaseClass::charl_generic);
  EXPECT_THROW(parse_case("h", 0), ParseError);
}
