#include <gtest/gtest.h>

#include "skewlab/parse/literals.hpp"
#include "skewlab/ratfunc/ratfunc.hpp"

using namespace skewlab;

namespace {

Field param(std::uint64_t ch) {
  FieldSpec s;
  s.characteristic = ch;
  s.parameter = true;
  return make_field(s);
}

RatFunc2 mono(const Field& f, int i, int j) { return RatFunc2::monomial(f.one(), i, j); }

}  // namespace

TEST(Poly2, GrlexNormalFormAndGcd) {
  const Field q = rationals();
  const Poly2 y = Poly2::monomial(q.one(), 1, 0), z = Poly2::monomial(q.one(), 0, 1);
  const Poly2 p = (y + z) * (y - z);
  EXPECT_EQ(p.lead().ey, 2);
  EXPECT_EQ(Poly2::gcd(p, (y + z) * (y + z)), y + z);
  EXPECT_TRUE(Poly2::gcd(y + Poly2::constant(q.one()), z).is_constant());
  EXPECT_EQ(Poly2::exact_div(p, y - z), y + z);
  EXPECT_THROW(Poly2::exact_div(p, y), std::domain_error);
  EXPECT_FALSE(Poly2::try_div(y, z).has_value());
}

TEST(Poly2, GcdOverParameterField) {
  const Field f = param(0);
  const FieldElem a = f.parameter();
  const Poly2 y = Poly2::monomial(f.one(), 1, 0), z = Poly2::monomial(f.one(), 0, 1);
  const Poly2 common = y * z + Poly2::constant(a);
  const Poly2 g = Poly2::gcd(common * (y + z), common * (z.scaled(a) + Poly2::constant(f.one())));
  EXPECT_EQ(g, common);
}

TEST(RatFunc2, ReducedAndNormalized) {
  const Field q = rationals();
  const RatFunc2 y = RatFunc2::y(q), z = RatFunc2::z(q);
  const RatFunc2 r = (y * y - z * z) / ((y + z).scaled(q.from_int(2)));
  EXPECT_EQ(r, (y - z).scaled(q.from_rational(mpq_class(1, 2))));
  EXPECT_TRUE(r.denominator().is_constant());
  EXPECT_THROW(RatFunc2::fraction(y.numerator(), Poly2(q)), std::domain_error);
  EXPECT_THROW(RatFunc2(q).inverse(), std::domain_error);
}

TEST(DerivationApply, EulerOnMonomial) {
  const Field f = param(0);
  const FieldElem a = f.parameter();
  const Derivation D = Derivation::euler(a);
  const RatFunc2 m = mono(f, 2, 3);
  EXPECT_EQ(D.apply(m), m.scaled(f.from_int(2) + f.from_int(3) * a));
}

TEST(DerivationApply, DeltaOnT) {
  const Field q = rationals();
  const Derivation Delta = Derivation::delta_yz(q);
  EXPECT_TRUE(Delta.apply(mono(q, -1, 1)).is_one());
}

TEST(DerivationApply, RationalAlphaKillsCentralMonomial) {
  const Field q = rationals();
  const Derivation D = Derivation::euler(q.from_rational(mpq_class(2, 3)));
  EXPECT_TRUE(D.apply(mono(q, 2, -3)).is_zero());
}

TEST(DerivationApply, QuotientRuleOnNonMonomialDenominator) {
  const Field f = param(3);
  const Derivation D = Derivation::euler(f.parameter());
  const RatFunc2 y = RatFunc2::y(f), z = RatFunc2::z(f);
  const RatFunc2 num = y * z + z, den = y + z * z + RatFunc2::constant(f.one());
  const RatFunc2 lhs = D.apply(num / den) * den * den;
  EXPECT_EQ(lhs, D.apply(num) * den - num * D.apply(den));
}

TEST(LogDerivative, Examples) {
  const Field f = param(0);
  const FieldElem a = f.parameter();
  const Derivation D = Derivation::euler(a);
  EXPECT_EQ(log_derivative(D, mono(f, 2, 3)), RatFunc2::constant(f.from_int(2) + f.from_int(3) * a));
  EXPECT_TRUE(log_derivative(D, RatFunc2::constant(a)).is_zero());
  const RatFunc2 g = RatFunc2::y(f) + RatFunc2::z(f), h = RatFunc2::y(f) * RatFunc2::z(f) + RatFunc2::constant(f.one());
  EXPECT_EQ(log_derivative(D, g * h), log_derivative(D, g) + log_derivative(D, h));
  EXPECT_THROW(log_derivative(D, RatFunc2(f)), std::domain_error);
}

TEST(FrobeniusSubfield, Examples) {
  const Field f = prime_field(3);
  const RatFunc2 r = mono(f, 3, 0) / (mono(f, 0, 3) + RatFunc2::constant(f.one()));
  EXPECT_TRUE(in_frobenius_subfield(r));
  EXPECT_FALSE(in_frobenius_subfield(RatFunc2::y(f)));
  const RatFunc2 g = parse_ratfunc("(y+2*z^2)/(1+y*z)", f);
  EXPECT_TRUE(in_frobenius_subfield(g.pow(3)));
  EXPECT_THROW(in_frobenius_subfield(RatFunc2::y(rationals())), FieldError);
}

TEST(Substitute, YtCoordinates) {
  const Field q = rationals();
  const RatFunc2 y = RatFunc2::y(q), z = RatFunc2::z(q);
  // z/y with z -> y t gives t.
  EXPECT_EQ(substitute(z / y, y, y * z), z);
  EXPECT_THROW(substitute(y.inverse(), RatFunc2(q), z), std::domain_error);
}
