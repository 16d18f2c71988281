#include <gtest/gtest.h>

#include <set>

#include "skewlab/coeff/field.hpp"

using namespace skewlab;

namespace {

Field f9() {
  FieldSpec s;
  s.characteristic = 3;
  s.extension = ExtensionKind::finite;
  s.degree = 2;
  s.modulus = {1, 0, 1};  // T^2 + 1
  return make_field(s);
}

Field quad(long d) {
  FieldSpec s;
  s.extension = ExtensionKind::quadratic;
  s.radicand = d;
  return make_field(s);
}

Field param(std::uint64_t ch) {
  FieldSpec s;
  s.characteristic = ch;
  s.parameter = true;
  return make_field(s);
}

// Root-free check by evaluating at every residue; enough for degree <= 3.
bool has_root_mod(const std::vector<std::int64_t>& c, std::int64_t p) {
  for (std::int64_t x = 0; x < p; ++x) {
    std::int64_t v = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) v = (v * x + *it) % p;
    if (v == 0) return true;
  }
  return false;
}

}  // namespace

TEST(MakeField, F9FromIrreducibleModulus) {
  ASSERT_FALSE(has_root_mod({1, 0, 1}, 3));
  const Field f = f9();
  EXPECT_EQ(f.order(), 9);
  EXPECT_EQ(f.characteristic(), 3u);
}

TEST(MakeField, RationalsAndParameterFields) {
  EXPECT_EQ(rationals().characteristic(), 0u);
  EXPECT_FALSE(rationals().has_parameter());
  const Field f = param(2);
  EXPECT_TRUE(f.has_parameter());
  EXPECT_EQ(f.characteristic(), 2u);
  EXPECT_EQ(f, param(2));  // interned
}

TEST(MakeField, Errors) {
  FieldSpec s;
  s.characteristic = 4;
  EXPECT_THROW(make_field(s), FieldError);
  s.characteristic = 3;
  s.extension = ExtensionKind::finite;
  s.degree = 2;
  s.modulus = {2, 0, 1};  // T^2 + 2 = (T-1)(T+1)
  EXPECT_THROW(make_field(s), FieldError);
  FieldSpec q;
  q.extension = ExtensionKind::quadratic;
  q.radicand = 8;
  EXPECT_THROW(make_field(q), FieldError);
  q.radicand = 1;
  EXPECT_THROW(make_field(q), FieldError);
}

TEST(MakeField, DefaultModulusIsIrreducible) {
  for (std::int64_t p : {2, 3, 5, 7})
    for (int k : {2, 3}) {
      FieldSpec s;
      s.characteristic = static_cast<std::uint64_t>(p);
      s.extension = ExtensionKind::finite;
      s.degree = k;
      const Field f = make_field(s);
      EXPECT_FALSE(has_root_mod(f.modulus(), p)) << p << "^" << k;
      mpz_class q;
      mpz_ui_pow_ui(q.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(k));
      EXPECT_EQ(f.order(), q);
    }
}

TEST(Arith, ThetaSquaredInF9) {
  const Field f = f9();
  const FieldElem th = f.generator();
  EXPECT_EQ(th * th, -f.one());
}

TEST(Arith, NormIdentityInQSqrt2) {
  const Field f = quad(2);
  const FieldElem r = f.generator();
  EXPECT_EQ((f.one() + r) * (f.one() - r), -f.one());
}

TEST(Arith, ParameterQuotient) {
  const Field f = param(2);
  const FieldElem a = f.parameter();
  EXPECT_TRUE((a / a).is_one());
}

TEST(Arith, Errors) {
  EXPECT_THROW(rationals().one() / rationals().zero(), std::domain_error);
  EXPECT_THROW(rationals().one() + prime_field(3).one(), FieldError);
  EXPECT_THROW(param(5).zero().inverse(), std::domain_error);
}

TEST(Arith, CanonicalRationals) {
  EXPECT_EQ(rationals().from_rational(mpq_class(4, 2)), rationals().from_int(2));
  EXPECT_EQ(quad(2).from_quadratic(mpq_class(2, 4), 0).to_string(), quad(2).from_rational(mpq_class(1, 2)).to_string());
}

TEST(PrimeSubfield, Examples) {
  EXPECT_FALSE(param(5).parameter().in_prime_subfield());
  EXPECT_TRUE(quad(2).from_rational(mpq_class(3, 4)).in_prime_subfield());
  const Field f = f9();
  const FieldElem th = f.generator();
  for (long c = 0; c < 3; ++c) EXPECT_FALSE(th == f.from_int(c));
  EXPECT_FALSE(th.in_prime_subfield());
  EXPECT_TRUE(f.from_int(2).in_prime_subfield());
}

TEST(Frobenius, Examples) {
  const Field f = f9();
  const FieldElem th = f.generator();
  // th^3 by repeated multiplication.
  const FieldElem cube = th * th * th;
  EXPECT_EQ(frobenius(th), cube);
  EXPECT_EQ(frobenius(th), -th);
  const Field g = param(2);
  EXPECT_EQ(frobenius(g.parameter()), g.parameter() * g.parameter());
  EXPECT_TRUE(frobenius(g.one()).is_one());
  EXPECT_THROW(frobenius(rationals().one()), FieldError);
}

TEST(Norm, Examples) {
  const Field f = f9();
  const FieldElem th = f.generator();
  EXPECT_EQ(norm_to_prime(th), th.pow(4));
  EXPECT_TRUE(norm_to_prime(th).is_one());
  EXPECT_TRUE(norm_to_prime(f.one()).is_one());
  EXPECT_THROW(norm_to_prime(rationals().one()), FieldError);
}

TEST(Norm, KernelSizeInF9) {
  const Field f = f9();
  int kernel = 0;
  for (std::int64_t a = 0; a < 3; ++a)
    for (std::int64_t b = 0; b < 3; ++b) {
      const FieldElem e = f.from_coordinates({a, b});
      if (!e.is_zero() && norm_to_prime(e).is_one()) ++kernel;
    }
  EXPECT_EQ(kernel, 4);  // l + 1
}

TEST(Printing, ParameterElements) {
  const Field f = param(0);
  const FieldElem a = f.parameter();
  EXPECT_EQ((a * a + f.from_int(1)).to_string(), "a^2+1");
  EXPECT_EQ(((a - f.one()) / (a + f.one())).to_string(), "(a-1)/(a+1)");
}

TEST(Binomial, MapsIntoField) {
  EXPECT_TRUE(binomial_in(prime_field(3), 3, 1).is_zero());
  EXPECT_EQ(binomial_in(rationals(), 6, 2), rationals().from_int(15));
}
