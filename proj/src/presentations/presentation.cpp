#include "skewlab/presentations/presentations.hpp"

namespace skewlab {

const char* case_class_name(CaseClass c) {
  switch (c) {
    case CaseClass::char0_rational: return "char0-rational";
    case CaseClass::char0_irrational: return "char0-irrational";
    case CaseClass::charl_prime_subfield: return "charl-prime-subfield";
    case CaseClass::charl_generic: return "charl-generic";
    case CaseClass::q_char0: return "char0";
    case CaseClass::q_charl: return "charl";
  }
  return "?";
}

CaseClass CaseSpec::classification() const {
  const bool char0 = field.characteristic() == 0;
  if (algebra == AlgebraKind::q) return char0 ? CaseClass::q_char0 : CaseClass::q_charl;
  const bool prime = alpha.in_prime_subfield();
  if (char0) return prime ? CaseClass::char0_rational : CaseClass::char0_irrational;
  return prime ? CaseClass::charl_prime_subfield : CaseClass::charl_generic;
}

std::string CaseSpec::describe() const {
  std::string s = algebra == AlgebraKind::q ? "q" : "g_alpha";
  s += " over " + field.name();
  if (algebra == AlgebraKind::g_alpha) s += ", alpha=" + alpha.to_string();
  s += std::string(" [") + case_class_name(classification()) + "]";
  return s;
}

CaseSpec g_case(const FieldElem& alpha) {
  if (!alpha.valid() || alpha.is_zero()) throw std::invalid_argument("g_alpha needs a nonzero alpha");
  CaseSpec cs;
  cs.algebra = AlgebraKind::g_alpha;
  cs.field = alpha.field();
  cs.alpha = alpha;
  return cs;
}

CaseSpec q_case(const Field& f, bool yt_coordinates) {
  CaseSpec cs;
  cs.algebra = AlgebraKind::q;
  cs.field = f;
  cs.yt_coordinates = yt_coordinates;
  return cs;
}

RatFunc2 Presentation::y_rf() const { return RatFunc2::y(field()); }

RatFunc2 Presentation::z_rf() const {
  if (cs.algebra == AlgebraKind::q && cs.yt_coordinates) return RatFunc2::monomial(field().one(), 1, 1);
  return RatFunc2::z(field());
}

RatFunc2 Presentation::t_rf() const {
  if (cs.algebra == AlgebraKind::q && cs.yt_coordinates) return RatFunc2::z(field());
  return RatFunc2::monomial(field().one(), -1, 1);
}

RatFunc2 yz_to_yt(const RatFunc2& f) {
  const Field& k = f.field();
  return substitute(f, RatFunc2::y(k), RatFunc2::monomial(k.one(), 1, 1));
}

RatFunc2 yt_to_yz(const RatFunc2& f) {
  const Field& k = f.field();
  return substitute(f, RatFunc2::y(k), RatFunc2::monomial(k.one(), -1, 1));
}

Presentation algebra_make(const CaseSpec& cs) {
  const Field& k = cs.field;
  DerivationPtr d;
  VarNames names = kYZ;
  if (cs.algebra == AlgebraKind::g_alpha) {
    if (!cs.alpha.valid() || cs.alpha.is_zero()) throw std::invalid_argument("g_alpha needs a nonzero alpha");
    d = share(Derivation::euler(cs.alpha));
  } else if (cs.yt_coordinates) {
    d = share(Derivation::delta_yt(k));
    names = {"y", "t"};
  } else {
    d = share(Derivation::delta_yz(k));
  }
  const SkewPoly x = SkewPoly::x(d);
  Presentation p{cs, d, names, x, x, x, x, {}};
  p.y = p.coeff(p.y_rf());
  p.z = p.coeff(p.z_rf());
  p.t = p.coeff(p.t_rf());

  const std::string desc = cs.describe();
  auto& out = p.relation_checks;
  if (cs.algebra == AlgebraKind::g_alpha) {
    out.push_back(make_check("[x,y]=y", "brakg", desc, commutator(p.x, p.y) == p.y));
    out.push_back(make_check("[x,z]=alpha*z", "brakg", desc, commutator(p.x, p.z) == p.z.left_scaled(RatFunc2::constant(cs.alpha))));
    out.push_back(make_check("[y,z]=0", "brakg", desc, commutator(p.y, p.z).is_zero()));
    const RatFunc2 probe = RatFunc2::monomial(k.from_int(3), 2, -1) + p.y_rf();
    out.push_back(make_check("x*f=f*x+D_alpha(f)", "UgOre2", desc,
                             p.x * p.coeff(probe) == p.coeff(probe) * p.x + p.coeff(d->apply(probe))));
  } else {
    out.push_back(make_check("[x,y]=y", "brakq", desc, commutator(p.x, p.y) == p.y));
    out.push_back(make_check("[x,z]=y+z", "brakq", desc, commutator(p.x, p.z) == p.y + p.z));
    out.push_back(make_check("[y,z]=0", "brakq", desc, commutator(p.y, p.z).is_zero()));
    out.push_back(make_check("[x,t]=1", "Vqrel", desc, commutator(p.x, p.t) == p.one()));
    out.push_back(make_check("[y,t]=0", "Vqrel", desc, commutator(p.y, p.t).is_zero()));
    const Derivation other = cs.yt_coordinates ? Derivation::delta_yz(k) : Derivation::delta_yt(k);
    const RatFunc2 t_other = cs.yt_coordinates ? RatFunc2::monomial(k.one(), -1, 1) : RatFunc2::z(k);
    out.push_back(make_check("Delta(y^-1*z)=1 in the other coordinates", "kyt", desc, other.apply(t_other).is_one()));
  }
  return p;
}

SkewPoly substitute_x(const SkewPoly& p, const SkewPoly& image) {
  SkewPoly out(image.derivation_ptr());
  for (int i = p.degree(); i >= 0; --i) {
    const RatFunc2 c = p.coeff(i);
    if (!c.is_constant()) throw std::invalid_argument("substitute_x needs constant coefficients");
    out = out * image + SkewPoly::coefficient(image.derivation_ptr(), c);
  }
  return out;
}

}  // namespace skewlab
