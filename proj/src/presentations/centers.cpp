#include "skewlab/presentations/presentations.hpp"

namespace skewlab {

namespace {

SkewPoly xpow(const Presentation& p, int n) { return SkewPoly::monomial(p.d, RatFunc2::constant(p.field().one()), n); }

// x^l - c x with c a scalar.
SkewPoly x_ell_minus(const Presentation& p, const FieldElem& c) {
  return xpow(p, static_cast<int>(p.ell())) - p.x.left_scaled(RatFunc2::constant(c));
}

// All commutators of f with the listed elements vanish; the witness names the
// first that does not.
CheckRecord commute_check(const Presentation& p, const std::string& label, const SkewPoly& f,
                          const std::vector<NamedElement>& with, const std::string& ref) {
  std::string bad;
  for (const auto& g : with) {
    const SkewPoly c = commutator(f, g.value);
    if (!c.is_zero()) {
      bad = "[" + label + "," + g.name + "]=" + p.show(c);
      break;
    }
  }
  std::string names;
  for (const auto& g : with) names += (names.empty() ? "" : ",") + g.name;
  return make_check("[" + label + ", {" + names + "}]=0", ref, p.cs.describe(), bad.empty(), bad);
}

std::vector<NamedElement> xyz(const Presentation& p) { return {{"x", p.x}, {"y", p.y}, {"z", p.z}}; }

std::string pow_name(const std::string& v, long e) { return e == 1 ? v : v + "^" + std::to_string(e); }

// y^i z^j as a coefficient, named.
NamedElement laurent(const Presentation& p, int i, int j) {
  std::string name;
  if (i != 0) name = pow_name("y", i);
  if (j != 0) name += (name.empty() ? "" : "*") + pow_name("z", j);
  if (name.empty()) name = "1";
  return {name, p.coeff(p.y_rf().pow(i) * p.z_rf().pow(j))};
}

long require_residue(const FieldElem& a) { return a.to_residue(); }

}  // namespace

CenterResult claimed_center(const Presentation& p) {
  CenterResult out;
  const std::string desc = p.cs.describe();
  const long ell = static_cast<long>(p.ell());
  std::string ref;
  switch (p.cs.classification()) {
    case CaseClass::char0_rational: {
      const mpq_class a = p.cs.alpha.to_rational();
      const int num = static_cast<int>(a.get_num().get_si());
      const int den = static_cast<int>(a.get_den().get_si());
      out.generators.push_back(laurent(p, num, -den));
      out.description = "k(" + out.generators.back().name + ")";
      ref = "zc";
      break;
    }
    case CaseClass::char0_irrational:
      out.description = "k";
      out.checks.push_back(
          {"center is k (no generator beyond constants)", "zc", desc, Status::out_of_scope, "maximality is proof-level"});
      return out;
    case CaseClass::charl_prime_subfield: {
      const long a = require_residue(p.cs.alpha);
      out.generators.push_back({"x^" + std::to_string(ell) + "-x", x_ell_minus(p, p.field().one())});
      out.generators.push_back(laurent(p, static_cast<int>(ell), 0));
      NamedElement zp = laurent(p, static_cast<int>(-a), 1);
      zp.name = "z'=" + zp.name;
      out.generators.push_back(zp);
      out.description = "k(x^l-x, y^l, z'), z'=y^-a*z, a=" + std::to_string(a);
      ref = "GKl";
      break;
    }
    case CaseClass::charl_generic: {
      out.generators.push_back(laurent(p, static_cast<int>(ell), 0));
      out.generators.push_back(laurent(p, 0, static_cast<int>(ell)));
      out.generators.push_back({"c", central_element_c(p.cs.alpha).c});
      out.description = "k(y^l, z^l, c)";
      ref = "GKlbis";
      break;
    }
    case CaseClass::q_char0:
      out.description = "k";
      out.checks.push_back(
          {"center is k (no generator beyond constants)", "GKqzero", desc, Status::out_of_scope, "maximality is proof-level"});
      return out;
    case CaseClass::q_charl: {
      out.generators.push_back(laurent(p, static_cast<int>(ell), 0));
      out.generators.push_back(laurent(p, 0, static_cast<int>(ell)));
      out.generators.push_back({"(x^" + std::to_string(ell) + "-x)^" + std::to_string(ell),
                                skew_pow(x_ell_minus(p, p.field().one()), p.ell())});
      out.description = "k(y^l, z^l, (x^l-x)^l)";
      ref = "GKql";
      break;
    }
  }
  for (const auto& g : out.generators) out.checks.push_back(commute_check(p, g.name, g.value, xyz(p), ref));
  if (ell > 0)
    out.checks.push_back({"dimension over the center", ref, desc, Status::out_of_scope,
                          p.cs.classification() == CaseClass::charl_prime_subfield ? "claimed l^2" : "claimed l^4"});
  return out;
}

CentralC central_element_c(const FieldElem& alpha) {
  const Field k = alpha.field();
  if (k.characteristic() == 0) throw std::invalid_argument("central element c needs positive characteristic");
  if (alpha.in_prime_subfield()) throw std::invalid_argument("central element c needs alpha outside F_l");
  const Presentation p = algebra_make(g_case(alpha));
  const unsigned ell = p.ell();
  const FieldElem mu = (alpha.pow(static_cast<long>(ell)) - alpha).pow(static_cast<long>(ell) - 1);
  const FieldElem lambda = -mu - k.one();
  const SkewPoly c = xpow(p, static_cast<int>(ell * ell)) + xpow(p, static_cast<int>(ell)).left_scaled(RatFunc2::constant(lambda)) +
                     p.x.left_scaled(RatFunc2::constant(mu));
  const SkewPoly t1 = x_ell_minus(p, k.one());
  const SkewPoly c2 = skew_pow(t1, ell) - t1.left_scaled(RatFunc2::constant(mu));
  CentralC out{mu, lambda, c, {}};
  const std::string desc = p.cs.describe();
  out.checks.push_back(make_check("x^(l^2)+lambda*x^l+mu*x = (x^l-x)^l-mu*(x^l-x)", "ccentral", desc, c == c2,
                                  "mu=" + mu.to_string() + ", lambda=" + lambda.to_string()));
  out.checks.push_back(commute_check(p, "c", c, xyz(p), "ccentral"));
  return out;
}

TranslationInvariant translation_invariant_t(const FieldElem& gamma) {
  if (!gamma.valid() || gamma.is_zero()) throw std::invalid_argument("translation invariant needs gamma != 0");
  const Field k = gamma.field();
  if (k.characteristic() == 0) throw std::invalid_argument("translation invariant needs positive characteristic");
  const Presentation p = algebra_make(g_case(gamma));
  const unsigned ell = p.ell();
  const SkewPoly t = x_ell_minus(p, gamma.pow(static_cast<long>(ell) - 1));
  const SkewPoly shift = p.x - p.scalar(gamma);
  SkewPoly prod = p.one();
  for (unsigned i = 0; i < ell; ++i) prod = prod * (p.x - p.scalar(k.from_int(i) * gamma));
  const std::string desc = "l=" + std::to_string(ell) + ", gamma=" + gamma.to_string();
  TranslationInvariant out{t, {}};
  out.checks.push_back(make_check("sigma_gamma(t_gamma)=t_gamma", "ccentral-remark", desc, substitute_x(t, shift) == t));
  out.checks.push_back(make_check("prod_i sigma^i(x) = x^l-gamma^(l-1)*x", "ccentral-remark", desc, prod == t, p.show(prod)));
  return out;
}

std::vector<CheckRecord> translation_remark_checks(const FieldElem& alpha) {
  const CentralC cc = central_element_c(alpha);
  const Presentation p = algebra_make(g_case(alpha));
  const Field k = alpha.field();
  const unsigned ell = p.ell();
  const FieldElem d = alpha.pow(static_cast<long>(ell)) - alpha;
  const SkewPoly t1 = x_ell_minus(p, k.one());
  const SkewPoly shift = p.x - p.scalar(alpha);
  const SkewPoly image = substitute_x(t1, shift);
  const std::string desc = p.cs.describe();
  std::vector<CheckRecord> out;
  out.push_back(make_check("sigma_alpha(t_1) = t_1-(alpha^l-alpha)", "ccentral-remark", desc, image == t1 - p.scalar(d),
                           p.show(image)));
  const SkewPoly printed = t1 - p.scalar(d.pow(static_cast<long>(ell) - 1));
  CheckRecord printed_rec{"sigma_alpha(t_1) = t_1-(alpha^l-alpha)^(l-1) as printed", "ccentral-remark", desc,
                          image == printed ? Status::pass : Status::open_in_paper,
                          image == printed ? "agrees for l=2" : "printed form differs from the expansion"};
  out.push_back(printed_rec);
  const SkewPoly c = skew_pow(t1, ell) - t1.left_scaled(RatFunc2::constant(d.pow(static_cast<long>(ell) - 1)));
  out.push_back(make_check("t_1^l-(alpha^l-alpha)^(l-1)*t_1 = c", "ccentral-remark", desc, c == cc.c));
  out.push_back(make_check("sigma_alpha(c)=c", "ccentral-remark", desc, substitute_x(c, shift) == c));
  return out;
}

BezoutPair canonical_bezout(const mpz_class& p, const mpz_class& q) {
  mpz_class g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  if (abs(g) != 1) throw std::invalid_argument("Bezout pair needs coprime p, q");
  const mpz_class aq = abs(q);
  // p s + q t = g; normalize to g = 1 then shift u into [0, |q|).
  if (g < 0) {
    s = -s;
    t = -t;
  }
  mpz_class u = s % aq;
  if (u < 0) u += aq;
  const mpz_class v = (1 - p * u) / q;
  return {u, v};
}

WeylTriple weyl_triple(const Presentation& p, WeylSide side, std::optional<BezoutPair> bezout) {
  const Field& k = p.field();
  const int ell = static_cast<int>(p.ell());
  WeylTriple out{"", p.x, p.y, {}, {}};
  std::string ref;
  switch (p.cs.classification()) {
    case CaseClass::char0_rational: {
      const mpq_class a = p.cs.alpha.to_rational();
      const mpz_class pn = a.get_num(), qd = a.get_den();
      const BezoutPair uv = bezout ? *bezout : canonical_bezout(pn, qd);
      if (pn * uv.first + qd * uv.second != 1) throw std::invalid_argument("Bezout pair does not satisfy p*u+q*v=1");
      const int u = static_cast<int>(uv.first.get_si()), v = static_cast<int>(uv.second.get_si());
      const RatFunc2 yprime = p.y_rf().pow(v) * p.z_rf().pow(u);
      const FieldElem lam = k.from_int(v) + p.cs.alpha * k.from_int(u);
      out.recipe = "y'=" + laurent(p, v, u).name + ", lambda=" + lam.to_string() +
                   ", P=lambda^-1*y'^-1*x, Q=y'";
      out.P = p.coeff(yprime.inverse().scaled(lam.inverse())) * p.x;
      out.Q = p.coeff(yprime);
      out.central.push_back(laurent(p, static_cast<int>(pn.get_si()), static_cast<int>(-qd.get_si())));
      ref = "isoaq";
      break;
    }
    case CaseClass::charl_prime_subfield: {
      const long a = require_residue(p.cs.alpha);
      out.recipe = "P=x*y^-1, Q=y, z'=y^-a*z";
      out.P = p.x * p.coeff(p.y_rf().inverse());
      out.Q = p.y;
      out.central.push_back(laurent(p, static_cast<int>(-a), 1));
      ref = "GKl";
      break;
    }
    case CaseClass::charl_generic: {
      const FieldElem& al = p.cs.alpha;
      if (side == WeylSide::L) {
        const FieldElem d = al.pow(static_cast<long>(ell)) - al;
        out.recipe = "P=(x^l-x)*(alpha^l-alpha)^-1*z^-1, Q=z";
        out.P = x_ell_minus(p, k.one()) * p.coeff(p.z_rf().inverse().scaled(d.inverse()));
        out.Q = p.z;
        out.central.push_back(laurent(p, ell, 0));
      } else {
        const FieldElem a1 = al.pow(static_cast<long>(ell) - 1);
        out.recipe = "P=(x^l-alpha^(l-1)*x)*(1-alpha^(l-1))^-1*y^-1, Q=y";
        out.P = x_ell_minus(p, a1) * p.coeff(p.y_rf().inverse().scaled((k.one() - a1).inverse()));
        out.Q = p.y;
        out.central.push_back(laurent(p, 0, ell));
      }
      ref = "struc1";
      break;
    }
    case CaseClass::q_charl: {
      if (side == WeylSide::L) {
        out.recipe = "P=t, Q=x^l-x";
        out.P = p.t;
        out.Q = x_ell_minus(p, k.one());
        out.central.push_back(laurent(p, ell, 0));
      } else {
        out.recipe = "P=x^l*y^-1, Q=y";
        out.P = xpow(p, ell) * p.coeff(p.y_rf().inverse());
        out.Q = p.y;
        out.central.push_back({pow_name("t", ell), p.coeff(p.t_rf().pow(ell))});
      }
      ref = "strucq";
      break;
    }
    case CaseClass::char0_irrational:
      throw std::invalid_argument("no Weyl triple: alpha is not rational in characteristic 0");
    case CaseClass::q_char0:
      throw std::invalid_argument("no Weyl triple for q in characteristic 0");
  }
  const std::string desc = p.cs.describe() + (side == WeylSide::Lprime ? " L'" : "");
  const SkewPoly pq = commutator(out.P, out.Q);
  out.checks.push_back(make_check("[P,Q]=1", ref, desc, pq == p.one(), pq == p.one() ? out.recipe : p.show(pq)));
  for (const auto& c : out.central) {
    out.checks.push_back(commute_check(p, "P", out.P, {c}, ref));
    out.checks.push_back(commute_check(p, "Q", out.Q, {c}, ref));
  }
  return out;
}

std::vector<CheckRecord> centralizer_pair_check(const Presentation& p) {
  const Field& k = p.field();
  const int ell = static_cast<int>(p.ell());
  const std::string desc = p.cs.describe();
  std::vector<NamedElement> L, Lp;
  std::vector<CheckRecord> out;
  const std::string ls = std::to_string(ell);
  if (p.cs.classification() == CaseClass::charl_generic) {
    const FieldElem& al = p.cs.alpha;
    const FieldElem a1 = al.pow(static_cast<long>(ell) - 1);
    const SkewPoly t1 = x_ell_minus(p, k.one());
    const SkewPoly ta = x_ell_minus(p, a1);
    L = {{"z", p.z}, laurent(p, ell, 0), {"x^" + ls + "-x", t1}};
    Lp = {{"y", p.y}, laurent(p, 0, ell), {"x^" + ls + "-alpha^" + std::to_string(ell - 1) + "*x", ta}};
    const SkewPoly w1 = commutator(t1, p.z);
    const SkewPoly e1 = p.z.left_scaled(RatFunc2::constant(al.pow(static_cast<long>(ell)) - al));
    out.push_back(make_check("[x^l-x,z]=(alpha^l-alpha)*z != 0", "struc1", desc, w1 == e1 && !w1.is_zero(), p.show(w1)));
    const SkewPoly w2 = commutator(ta, p.y);
    const SkewPoly e2 = p.y.left_scaled(RatFunc2::constant(k.one() - a1));
    out.push_back(make_check("[x^l-alpha^(l-1)*x,y]=(1-alpha^(l-1))*y != 0", "struc1", desc, w2 == e2 && !w2.is_zero(),
                             p.show(w2)));
  } else if (p.cs.classification() == CaseClass::q_charl) {
    const SkewPoly t1 = x_ell_minus(p, k.one());
    L = {{"t", p.t}, laurent(p, ell, 0), {"x^" + ls + "-x", t1}};
    Lp = {{"y", p.y}, {pow_name("t", ell), p.coeff(p.t_rf().pow(ell))}, {"x^" + ls, xpow(p, ell)}};
    const SkewPoly w1 = commutator(t1, p.t);
    out.push_back(make_check("[x^l-x,t]=-1 != 0", "strucq", desc, w1 == -p.one(), p.show(w1)));
    const SkewPoly w2 = commutator(xpow(p, ell), p.y);
    out.push_back(make_check("[x^l,y]=y != 0", "strucq", desc, w2 == p.y, p.show(w2)));
  } else {
    throw std::invalid_argument("mutual centralizers apply to g_alpha with alpha outside F_l, or q, in char l");
  }
  const std::string ref = p.cs.algebra == AlgebraKind::q ? "strucq" : "struc1";
  for (const auto& a : L) out.push_back(commute_check(p, a.name, a.value, Lp, ref));
  out.push_back({"L is isomorphic to a Weyl skewfield; K = L (x)_C L'", ref, desc, Status::out_of_scope,
                 "double centralizer argument is proof-level"});
  return out;
}

GkVerdict gk_classify(const CaseSpec& cs) {
  GkVerdict v;
  switch (cs.classification()) {
    case CaseClass::char0_rational: {
      const mpq_class a = cs.alpha.to_rational();
      v.gk = true;
      v.center = "k(y^" + a.get_num().get_str() + "*z^-" + a.get_den().get_str() + ")";
      v.citations = {"isoaq", "zc"};
      break;
    }
    case CaseClass::char0_irrational:
      v.center = "k";
      v.citations = {"isoaq", "zc"};
      break;
    case CaseClass::charl_prime_subfield:
      v.gk = true;
      v.center = "k(x^l-x, y^l, y^-a*z)";
      v.dimension_claim = "l^2 over the center";
      v.citations = {"GKl"};
      break;
    case CaseClass::charl_generic:
      v.center = "k(y^l, z^l, c)";
      v.dimension_claim = "l^4 over the center";
      v.citations = {"GKlbis", "ccentral"};
      break;
    case CaseClass::q_char0:
      v.center = "k";
      v.citations = {"GKqzero"};
      break;
    case CaseClass::q_charl:
      v.center = "k(y^l, z^l, (x^l-x)^l)";
      v.dimension_claim = "l^4 over the center";
      v.citations = {"GKql"};
      break;
  }
  if (v.gk) v.triple = weyl_triple(algebra_make(cs));
  return v;
}

}  // namespace skewlab
