#include <gtest/gtest.h>

#include <algorithm>

#include "skewlab/presentations/presentations.hpp"

using namespace skewlab;

namespace {

Field param(std::uint64_t ch) {
  FieldSpec s;
  s.characteristic = ch;
  s.parameter = true;
  return make_field(s);
}

Field quad(long d) {
  FieldSpec s;
  s.extension = ExtensionKind::quadratic;
  s.radicand = d;
  return make_field(s);
}

Presentation g_param(std::uint64_t ch) { return algebra_make(g_case(param(ch).parameter())); }

bool contains(const std::vector<NamedElement>& gens, const SkewPoly& v) {
  return std::any_of(gens.begin(), gens.end(), [&](const NamedElement& g) { return g.value == v; });
}

SkewPoly lm(const Presentation& p, int i, int j) { return p.coeff(RatFunc2::monomial(p.field().one(), i, j)); }

SkewPoly xl_minus(const Presentation& p, const FieldElem& c) {
  return skew_pow(p.x, p.ell()) - p.scalar(c) * p.x;
}

}  // namespace

TEST(AlgebraMake, Brackets) {
  const Presentation g = algebra_make(g_case(quad(2).generator()));
  EXPECT_TRUE(all_pass(g.relation_checks));
  EXPECT_EQ(commutator(g.x, g.z), g.scalar(quad(2).generator()) * g.z);
  const Presentation q = algebra_make(q_case(prime_field(3)));
  EXPECT_TRUE(all_pass(q.relation_checks));
  EXPECT_EQ(commutator(q.x, q.z), q.y + q.z);
  const Presentation one = algebra_make(g_case(rationals().one()));
  EXPECT_EQ(commutator(one.x, one.z), one.z);
  EXPECT_THROW(g_case(rationals().zero()), std::invalid_argument);
}

TEST(AlgebraMake, BothCoordinateSystemsForQ) {
  const Presentation yz = algebra_make(q_case(rationals(), false));
  EXPECT_TRUE(all_pass(yz.relation_checks));
  EXPECT_EQ(commutator(yz.x, yz.t), yz.one());
  const RatFunc2 f = yz.z_rf() * yz.z_rf() / (yz.y_rf() + RatFunc2::constant(yz.field().one()));
  EXPECT_EQ(yt_to_yz(yz_to_yt(f)), f);
}

TEST(ClaimedCenter, Char0Rational) {
  const Presentation p = algebra_make(g_case(rationals().from_rational(mpq_class(2, 3))));
  const CenterResult c = claimed_center(p);
  EXPECT_TRUE(contains(c.generators, lm(p, 2, -3)));
  EXPECT_TRUE(all_pass(c.checks));
}

TEST(ClaimedCenter, Char0IrrationalIsConstants) {
  const Presentation p = algebra_make(g_case(quad(2).generator()));
  EXPECT_TRUE(claimed_center(p).generators.empty());
}

TEST(ClaimedCenter, Char5PrimeSubfield) {
  const Presentation p = algebra_make(g_case(prime_field(5).from_int(2)));
  const CenterResult c = claimed_center(p);
  EXPECT_TRUE(contains(c.generators, xl_minus(p, p.field().one())));
  EXPECT_TRUE(contains(c.generators, lm(p, 5, 0)));
  EXPECT_TRUE(contains(c.generators, lm(p, -2, 1)));
  EXPECT_TRUE(all_pass(c.checks));
}

TEST(ClaimedCenter, QChar3) {
  const Presentation p = algebra_make(q_case(prime_field(3)));
  const CenterResult c = claimed_center(p);
  const SkewPoly s = xl_minus(p, p.field().one());
  EXPECT_TRUE(contains(c.generators, skew_pow(s, 3)));
  for (const auto& g : c.generators)
    for (const auto& h : p.generators()) EXPECT_TRUE(commutator(g.value, h).is_zero()) << g.name;
}

TEST(CentralElementC, Char2Coefficients) {
  const Field f = param(2);
  const FieldElem a = f.parameter();
  const CentralC c = central_element_c(a);
  EXPECT_EQ(c.mu, a * a + a);
  EXPECT_EQ(c.lambda, a * a + a + f.one());
  EXPECT_TRUE(all_pass(c.checks));
}

TEST(CentralElementC, ClosedFormsAgree) {
  for (std::uint64_t ell : {2u, 3u}) {
    const Presentation p = g_param(ell);
    const CentralC c = central_element_c(p.cs.alpha);
    const SkewPoly s = xl_minus(p, p.field().one());
    EXPECT_EQ(c.c, skew_pow(s, static_cast<unsigned>(ell)) - p.scalar(c.mu) * s) << ell;
    EXPECT_TRUE(is_central_against(c.c, p.generators())) << ell;
  }
}

TEST(CentralElementC, Errors) {
  EXPECT_THROW(central_element_c(prime_field(3).from_int(2)), std::invalid_argument);
  EXPECT_THROW(central_element_c(param(0).parameter()), std::invalid_argument);
}

TEST(TranslationInvariant, Examples) {
  const TranslationInvariant t = translation_invariant_t(prime_field(3).one());
  EXPECT_TRUE(all_pass(t.checks));
  EXPECT_EQ(t.t.degree(), 3);
  const std::vector<CheckRecord> r = translation_remark_checks(param(2).parameter());
  EXPECT_TRUE(std::none_of(r.begin(), r.end(), [](const CheckRecord& c) { return c.status == Status::fail; }));
  EXPECT_THROW(translation_invariant_t(prime_field(3).zero()), std::invalid_argument);
}

TEST(TranslationInvariant, SigmaAlphaExpansion) {
  // sigma_alpha(x) = x - alpha; t_1 = x^2 - x in char 2.
  const Presentation p = g_param(2);
  const FieldElem a = p.cs.alpha;
  const SkewPoly xs = p.x - p.scalar(a);
  const SkewPoly sigma_t1 = xs * xs - xs;
  const SkewPoly t1 = xl_minus(p, p.field().one());
  EXPECT_EQ(sigma_t1, t1 - p.scalar(a * a - a));
}

TEST(WeylTriple, Char5PrimeSubfield) {
  const Presentation p = algebra_make(g_case(prime_field(5).from_int(2)));
  const WeylTriple w = weyl_triple(p);
  EXPECT_EQ(w.P, p.x * lm(p, -1, 0));
  EXPECT_EQ(w.Q, p.y);
  EXPECT_EQ(commutator(w.P, w.Q), p.one());
  EXPECT_TRUE(all_pass(w.checks));
}

TEST(WeylTriple, Char0RationalWithBothBezoutPairs) {
  const Field q = rationals();
  const Presentation p = algebra_make(g_case(q.from_rational(mpq_class(2, 3))));
  EXPECT_EQ(canonical_bezout(2, 3), BezoutPair(2, -1));
  const WeylTriple w = weyl_triple(p, WeylSide::L, BezoutPair(-1, 1));
  // y' = y z^-1, lambda = v + alpha u = 1/3.
  EXPECT_EQ(w.Q, lm(p, 1, -1));
  EXPECT_EQ(w.P, p.coeff(RatFunc2::monomial(q.from_int(3), -1, 1)) * p.x);
  EXPECT_EQ(commutator(w.P, w.Q), p.one());
  EXPECT_TRUE(all_pass(weyl_triple(p).checks));
  EXPECT_THROW(weyl_triple(p, WeylSide::L, BezoutPair(1, 1)), std::invalid_argument);
}

TEST(WeylTriple, Char3GenericLSide) {
  const Presentation p = g_param(3);
  const FieldElem a = p.cs.alpha;
  const WeylTriple w = weyl_triple(p, WeylSide::L);
  const SkewPoly expected = xl_minus(p, p.field().one()) * p.coeff(p.z_rf().inverse().scaled((a.pow(3) - a).inverse()));
  EXPECT_EQ(w.P, expected);
  EXPECT_EQ(commutator(w.P, p.z), p.one());
  EXPECT_TRUE(all_pass(weyl_triple(p, WeylSide::Lprime).checks));
}

TEST(WeylTriple, Errors) {
  EXPECT_THROW(weyl_triple(algebra_make(g_case(quad(2).generator()))), std::invalid_argument);
  EXPECT_THROW(weyl_triple(algebra_make(q_case(rationals()))), std::invalid_argument);
}

TEST(PhiMorphism, Examples) {
  const Presentation p = g_param(0);
  const Morphism id = phi_morphism(Mat2Z::identity(), p);
  EXPECT_EQ(id.x_image, p.x);
  EXPECT_EQ(id.y_image, p.y);
  EXPECT_EQ(id.z_image, p.z);
  const Morphism anti = phi_morphism(Mat2Z(0, 1, 1, 0), p);
  EXPECT_EQ(anti.beta, p.cs.alpha.inverse());
  EXPECT_EQ(commutator(anti.x_image, anti.y_image), anti.y_image);
  EXPECT_EQ(commutator(anti.x_image, anti.z_image), p.scalar(anti.beta) * anti.z_image);
  EXPECT_TRUE(anti.invertible);
  const Morphism diag = phi_morphism(Mat2Z(2, 0, 0, 1), p);
  EXPECT_EQ(diag.beta, p.field().from_int(2) * p.cs.alpha);
  EXPECT_TRUE(diag.relations_hold());
  EXPECT_FALSE(diag.invertible);
}

TEST(PhiMorphism, Errors) {
  const Presentation p = g_param(3);
  EXPECT_THROW(phi_morphism(Mat2Z(1, 2, 1, 2), p), MorphismError);
  EXPECT_THROW(phi_morphism(Mat2Z(3, 0, 0, 1), p), MorphismError);  // det = 3 = 0 in F_3
  const Presentation one = algebra_make(g_case(rationals().one()));
  EXPECT_THROW(phi_morphism(Mat2Z(1, 0, 1, -1), one), MorphismError);  // m alpha + r = 0
}

TEST(PhiMorphism, CompositionConvention) {
  // M1 = diag(2,1), M2 = antidiagonal(1,1): phi_M1 o phi_M2 = phi_(M2 M1).
  const Presentation p = g_param(0);
  const Mat2Z M1(2, 0, 0, 1), M2(0, 1, 1, 0);
  const Morphism f1 = phi_morphism(M1, p);
  const Morphism f2 = phi_morphism(M2, algebra_make(g_case(f1.beta)));
  const Morphism c = compose(f1, f2);
  const Morphism d = phi_morphism(M2 * M1, p);
  EXPECT_EQ(c.beta, d.beta);
  EXPECT_EQ(c.x_image, d.x_image);
  EXPECT_EQ(c.y_image, d.y_image);
  EXPECT_EQ(c.z_image, d.z_image);
}

TEST(PsiMorphism, Examples) {
  const Presentation p = g_param(2);
  const FieldElem a = p.cs.alpha;
  EXPECT_EQ(psi_morphism(p, a).x_image, p.x);
  const Morphism sq = psi_morphism(p, a * a);
  EXPECT_EQ(sq.x_image, skew_pow(p.x, 2));
  EXPECT_EQ(commutator(skew_pow(p.x, 2), p.y), p.y);
  EXPECT_EQ(commutator(skew_pow(p.x, 2), p.z), p.scalar(a * a) * p.z);
  const Presentation p3 = g_param(3);
  EXPECT_TRUE(psi_morphism(p3, p3.field().from_int(2)).relations_hold());
}

TEST(PsiMorphism, Errors) {
  EXPECT_THROW(psi_morphism(g_param(0), param(0).parameter()), MorphismError);
  const Presentation prime = algebra_make(g_case(prime_field(3).from_int(2)));
  EXPECT_THROW(psi_morphism(prime, prime.field().one()), MorphismError);
  EXPECT_THROW(psi_morphism(g_param(3), param(3).zero()), MorphismError);
}

TEST(CentralizerPair, GAlphaChar2) {
  const Presentation p = g_param(2);
  const std::vector<CheckRecord> r = centralizer_pair_check(p);
  EXPECT_TRUE(std::none_of(r.begin(), r.end(), [](const CheckRecord& c) { return c.status == Status::fail; }));
  const FieldElem a = p.cs.alpha;
  EXPECT_EQ(commutator(xl_minus(p, p.field().one()), p.z), p.scalar(a * a - a) * p.z);
  EXPECT_EQ(commutator(xl_minus(p, a), p.y), p.scalar(p.field().one() - a) * p.y);
  EXPECT_TRUE(commutator(xl_minus(p, p.field().one()), xl_minus(p, a)).is_zero());
}

TEST(CentralizerPair, QChar3) {
  const Presentation p = algebra_make(q_case(prime_field(3)));
  const std::vector<CheckRecord> r = centralizer_pair_check(p);
  EXPECT_TRUE(std::none_of(r.begin(), r.end(), [](const CheckRecord& c) { return c.status == Status::fail; }));
  EXPECT_TRUE(commutator(skew_pow(p.x, 3), p.t).is_zero());
}

TEST(GkClassify, Examples) {
  EXPECT_FALSE(gk_classify(g_case(quad(2).generator())).gk);
  const GkVerdict v = gk_classify(g_case(prime_field(5).from_int(2)));
  EXPECT_TRUE(v.gk);
  ASSERT_TRUE(v.triple.has_value());
  EXPECT_TRUE(all_pass(v.triple->checks));
  EXPECT_FALSE(gk_classify(q_case(rationals())).gk);
  EXPECT_FALSE(gk_classify(g_case(param(3).parameter())).gk);
  EXPECT_TRUE(gk_classify(g_case(rationals().from_rational(mpq_class(2, 3)))).gk);
}

TEST(ApplyMorphism, MapsRelations) {
  const Presentation p = g_param(0);
  const Morphism phi = phi_morphism(Mat2Z(1, 1, 0, 1), p);
  const Presentation src = algebra_make(g_case(phi.beta));
  const SkewPoly rel = src.x * src.y - src.y * src.x - src.y;
  EXPECT_TRUE(rel.is_zero());
  EXPECT_EQ(apply_morphism(phi, src.x * src.y), phi.x_image * phi.y_image);
}
