#include "skewlab/presentations/presentations.hpp"

namespace skewlab {

std::vector<CheckRecord> verify_relations(const FieldElem& beta, const SkewPoly& X, const SkewPoly& Y,
                                          const SkewPoly& Z, const std::string& case_desc) {
  const VarNames& n = kYZ;
  std::vector<CheckRecord> out;
  const SkewPoly xy = commutator(X, Y);
  out.push_back(make_check("[X,Y]=Y", "embedmonomial", case_desc, xy == Y, xy == Y ? "" : xy.to_string(n)));
  const SkewPoly xz = commutator(X, Z);
  const SkewPoly bz = Z.left_scaled(RatFunc2::constant(beta));
  out.push_back(make_check("[X,Z]=beta*Z", "embedmonomial", case_desc, xz == bz, xz == bz ? "" : xz.to_string(n)));
  const SkewPoly yz = commutator(Y, Z);
  out.push_back(make_check("[Y,Z]=0", "embedmonomial", case_desc, yz.is_zero(), yz.is_zero() ? "" : yz.to_string(n)));
  return out;
}

Morphism make_morphism(MorphismKind kind, std::string provenance, const FieldElem& beta, SkewPoly X, SkewPoly Y,
                       SkewPoly Z) {
  Morphism m{kind, std::move(provenance), beta, std::move(X), std::move(Y), std::move(Z), false, std::nullopt, {}};
  m.checks = verify_relations(beta, m.x_image, m.y_image, m.z_image, m.provenance);
  return m;
}

Morphism phi_morphism(const Mat2Z& M, const Presentation& target) {
  if (target.cs.algebra != AlgebraKind::g_alpha) throw MorphismError("phi_M targets K(g_alpha)");
  const Field& k = target.field();
  const FieldElem& alpha = target.cs.alpha;
  if (det_vanishes_in(M, k)) throw MorphismError("det M = " + M.det().get_str() + " vanishes in " + k.name());
  const FieldElem gamma = k.from_mpz(M.m) * alpha + k.from_mpz(M.r);
  if (gamma.is_zero()) throw MorphismError("m*alpha + r = 0");
  const FieldElem beta = homographic(M, alpha);
  const int n = static_cast<int>(M.n.get_si()), q = static_cast<int>(M.q.get_si());
  const int m = static_cast<int>(M.m.get_si()), r = static_cast<int>(M.r.get_si());
  const RatFunc2 y = target.y_rf(), z = target.z_rf();
  Morphism out = make_morphism(MorphismKind::phi, "phi_M, M=" + M.to_string() + ", " + target.cs.describe(), beta,
                               target.x.left_scaled(RatFunc2::constant(gamma.inverse())),
                               target.coeff(y.pow(r) * z.pow(m)), target.coeff(y.pow(q) * z.pow(n)));
  out.matrix = M;
  out.invertible = M.unimodular();
  out.checks.push_back(make_check("deg X = 1, deg Y = deg Z = 0", "embedmonomial", out.provenance,
                                  out.x_image.degree() == 1 && out.y_image.degree() == 0 && out.z_image.degree() == 0));
  if (!out.relations_hold()) throw std::logic_error("phi_M images violate the relations of g_beta");
  return out;
}

Morphism psi_morphism(const Presentation& target, const FieldElem& beta) {
  if (target.cs.algebra != AlgebraKind::g_alpha) throw MorphismError("psi targets K(g_alpha)");
  const Field& k = target.field();
  const FieldElem& alpha = target.cs.alpha;
  if (k.characteristic() == 0) throw MorphismError("psi needs positive characteristic");
  if (alpha.in_prime_subfield()) throw MorphismError("psi needs alpha outside F_l (alpha^l - alpha = 0)");
  if (!beta.valid() || beta.is_zero()) throw MorphismError("psi needs beta != 0");
  const long ell = static_cast<long>(k.characteristic());
  const FieldElem al = alpha.pow(ell);
  const FieldElem den = (al - alpha).inverse();
  const SkewPoly X = SkewPoly::monomial(target.d, RatFunc2::constant((beta - alpha) * den), static_cast<int>(ell)) +
                     target.x.left_scaled(RatFunc2::constant((al - beta) * den));
  Morphism out = make_morphism(MorphismKind::psi, "psi, beta=" + beta.to_string() + ", " + target.cs.describe(), beta, X,
                               target.y, target.z);
  const bool deg_ok = (out.x_image.degree() == ell || beta == alpha) && out.y_image.degree() == 0;
  out.checks.push_back(make_check("deg X = l (or X = x when beta = alpha)", "embedmonomial", out.provenance, deg_ok));
  if (!out.relations_hold()) throw std::logic_error("psi images violate the relations of g_beta");
  return out;
}

SkewPoly apply_morphism(const Morphism& phi, const SkewPoly& f) {
  if (phi.y_image.degree() > 0 || phi.z_image.degree() > 0)
    throw std::invalid_argument("apply_morphism needs y', z' images free of x");
  const RatFunc2 Y = phi.y_image.coeff(0), Z = phi.z_image.coeff(0);
  const DerivationPtr& d = phi.x_image.derivation_ptr();
  SkewPoly out(d);
  SkewPoly xp = SkewPoly::constant(d, Y.field().one());
  for (int i = 0; i <= f.degree(); ++i) {
    const RatFunc2 c = f.coeff(i);
    if (!c.is_zero()) out = out + SkewPoly::coefficient(d, substitute(c, Y, Z)) * xp;
    if (i < f.degree()) xp = xp * phi.x_image;
  }
  return out;
}

Morphism compose(const Morphism& outer, const Morphism& inner) {
  Morphism out = make_morphism(MorphismKind::custom, "(" + outer.provenance + ") o (" + inner.provenance + ")", inner.beta,
                               apply_morphism(outer, inner.x_image), apply_morphism(outer, inner.y_image),
                               apply_morphism(outer, inner.z_image));
  if (outer.matrix && inner.matrix) out.matrix = *inner.matrix * *outer.matrix;
  out.invertible = outer.invertible && inner.invertible;
  return out;
}

}  // namespace skewlab
