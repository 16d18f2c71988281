#include "skewlab/suites/suites.hpp"

#include <functional>

#include "skewlab/parse/literals.hpp"
#include "skewlab/suites/random.hpp"

namespace skewlab {

namespace {

using Checks = std::vector<CheckRecord>;

// Runs `body`, turning an exception into a failing record.
void guarded(Checks& out, const std::string& name, const std::string& ref, const std::string& desc,
             const std::function<void(Checks&)>& body) {
  try {
    body(out);
  } catch (const std::exception& e) {
    out.push_back(make_check(name, ref, desc, false, std::string("error: ") + e.what()));
  }
}

std::string istr(long i) { return std::to_string(i); }

Checks presentations_suite(const Presentation& p) {
  Checks out = p.relation_checks;
  const std::string desc = p.cs.describe();
  const long ell = p.ell();
  const SkewPoly one = p.one();
  SkewPoly xi = one;
  if (p.cs.algebra == AlgebraKind::g_alpha) {
    const SkewPoly x1 = p.x + one, xa = p.x + p.scalar(p.cs.alpha);
    for (unsigned i = 1; i <= 6; ++i) {
      xi = xi * p.x;
      out.push_back(make_check("x^" + istr(i) + "*y = y*(x+1)^" + istr(i), "relx", desc, xi * p.y == p.y * skew_pow(x1, i)));
      out.push_back(make_check("x^" + istr(i) + "*z = z*(x+alpha)^" + istr(i), "relx", desc, xi * p.z == p.z * skew_pow(xa, i)));
    }
    if (ell > 0) {
      const SkewPoly xl = skew_pow(p.x, static_cast<unsigned>(ell));
      const SkewPoly t1 = xl - p.x;
      const SkewPoly ta = xl - p.x.left_scaled(RatFunc2::constant(p.cs.alpha.pow(ell - 1)));
      out.push_back(make_check("(x^l-x)*y = y*(x^l-x)", "deg l", desc, t1 * p.y == p.y * t1));
      out.push_back(make_check("(x^l-alpha^(l-1)*x)*z = z*(x^l-alpha^(l-1)*x)", "deg l", desc, ta * p.z == p.z * ta));
    }
    return out;
  }
  const SkewPoly x1 = p.x + one;
  SkewPoly yi = one;
  for (unsigned i = 1; i <= 6; ++i) {
    xi = xi * p.x;
    yi = yi * p.y;
    const SkewPoly xim1 = skew_pow(p.x, i - 1);
    out.push_back(make_check("x*y^" + istr(i) + " = y^" + istr(i) + "*(x+" + istr(i) + ")", "comreli", desc,
                             p.x * yi == yi * (p.x + p.scalar(p.field().from_int(i)))));
    out.push_back(make_check("x^" + istr(i) + "*y = y*(x+1)^" + istr(i), "comreli", desc, xi * p.y == p.y * skew_pow(x1, i)));
    out.push_back(make_check("x^" + istr(i) + "*t - t*x^" + istr(i) + " = " + istr(i) + "*x^" + istr(i - 1), "comreli", desc,
                             commutator(xi, p.t) == xim1.left_scaled(RatFunc2::constant(p.field().from_int(i)))));
  }
  if (ell > 0) {
    const SkewPoly t1 = skew_pow(p.x, static_cast<unsigned>(ell)) - p.x;
    out.push_back(make_check("(x^l-x)*y = y*(x^l-x)", "comrell", desc, t1 * p.y == p.y * t1));
    out.push_back(make_check("(x^l-x)*t = t*(x^l-x) - 1", "comrell", desc, t1 * p.t == p.t * t1 - one));
  }
  return out;
}

Checks centers_suite(const Presentation& p) {
  Checks out;
  const std::string desc = p.cs.describe();
  const CaseClass cls = p.cs.classification();
  guarded(out, "claimed center", "zc", desc, [&](Checks& o) {
    const CenterResult c = claimed_center(p);
    o.insert(o.end(), c.checks.begin(), c.checks.end());
  });
  if (cls == CaseClass::charl_generic) {
    guarded(out, "central element c", "ccentral", desc, [&](Checks& o) {
      const CentralC c = central_element_c(p.cs.alpha);
      o.insert(o.end(), c.checks.begin(), c.checks.end());
      const Checks r = translation_remark_checks(p.cs.alpha);
      o.insert(o.end(), r.begin(), r.end());
      for (const FieldElem& g : {p.field().one(), p.cs.alpha}) {
        const TranslationInvariant t = translation_invariant_t(g);
        o.insert(o.end(), t.checks.begin(), t.checks.end());
      }
    });
  }
  if (cls != CaseClass::char0_irrational && cls != CaseClass::q_char0) {
    const bool two_sided = cls == CaseClass::charl_generic || cls == CaseClass::q_charl;
    for (WeylSide side : {WeylSide::L, WeylSide::Lprime}) {
      if (side == WeylSide::Lprime && !two_sided) break;
      guarded(out, "Weyl triple", "isoaq", desc, [&](Checks& o) {
        const WeylTriple w = weyl_triple(p, side);
        o.insert(o.end(), w.checks.begin(), w.checks.end());
      });
    }
    if (two_sided)
      guarded(out, "mutual centralizers", "struc1", desc, [&](Checks& o) {
        const Checks c = centralizer_pair_check(p);
        o.insert(o.end(), c.begin(), c.end());
      });
  }
  const GkVerdict gk = gk_classify(p.cs);
  std::string w = std::string("GK=") + (gk.gk ? "yes" : "no") + ", center " + gk.center;
  if (!gk.dimension_claim.empty()) w += ", " + gk.dimension_claim;
  out.push_back({"Gelfand-Kirillov verdict", gk.citations.empty() ? "plumbing" : gk.citations.front(), desc,
                 Status::out_of_scope, w + " (cited)"});
  return out;
}

bool same_images(const Morphism& a, const Morphism& b) {
  return a.beta == b.beta && a.x_image == b.x_image && a.y_image == b.y_image && a.z_image == b.z_image;
}

Checks morphisms_suite(const Presentation& p, const SuiteConfig& cfg, Rng& rng) {
  Checks out;
  const std::string desc = p.cs.describe();
  if (p.cs.algebra != AlgebraKind::g_alpha) {
    out.push_back({"phi_M and psi", "embedmonomial", desc, Status::out_of_scope, "defined for g_alpha only"});
    return out;
  }
  const FieldElem& alpha = p.cs.alpha;
  auto add_phi = [&](const Mat2Z& M) {
    guarded(out, "phi_M, M=" + M.to_string(), "embedmonomial", desc, [&](Checks& o) {
      const Morphism phi = phi_morphism(M, p);
      o.insert(o.end(), phi.checks.begin(), phi.checks.end());
      if (!M.unimodular()) return;
      // phi_M o phi_{M^-1} is the identity of K(g_alpha).
      const Presentation pb = algebra_make(g_case(phi.beta));
      const Morphism back = phi_morphism(M.inverse(), pb);
      const Morphism id = compose(phi, back);
      const bool ok = id.x_image == p.x && id.y_image == p.y && id.z_image == p.z;
      o.push_back(make_check("phi_M o phi_M^-1 = id", "embedmonomial", phi.provenance, ok));
    });
  };
  if (cfg.matrix) {
    add_phi(*cfg.matrix);
  } else {
    for (int s = 0; s < cfg.samples; ++s) add_phi(gen::matrix_for(alpha, rng));
    if (!(alpha + p.field().one()).is_zero())
      add_phi(Mat2Z::translation(1));
    else
      out.push_back({"phi_M, M=" + Mat2Z::translation(1).to_string(), "embedmonomial", desc, Status::out_of_scope,
                     "alpha+1 = 0, so M.alpha is not a valid parameter"});
  }
  guarded(out, "composition convention", "embedmonomial", desc, [&](Checks& o) {
    const Mat2Z M1 = gen::matrix_for(alpha, rng);
    const Morphism f1 = phi_morphism(M1, p);
    const Presentation p1 = algebra_make(g_case(f1.beta));
    const Mat2Z M2 = gen::matrix_for(f1.beta, rng);
    const Morphism f2 = phi_morphism(M2, p1);
    const Morphism comp = compose(f1, f2);
    const Morphism direct = phi_morphism(M2 * M1, p);
    const bool ok = same_images(comp, direct) && comp.matrix && *comp.matrix == M2 * M1 && comp.relations_hold();
    o.push_back(make_check("phi_M1 o phi_M2 = phi_(M2*M1)", "embedmonomial", desc, ok,
                           "M1=" + M1.to_string() + ", M2=" + M2.to_string()));
  });
  if (p.cs.classification() == CaseClass::charl_generic) {
    std::vector<FieldElem> betas;
    if (cfg.beta) {
      betas.push_back(parse_element(*cfg.beta, cfg.characteristic));
    } else {
      for (int s = 0; s < cfg.samples; ++s) betas.push_back(gen::nonzero_scalar(p.field(), rng));
      betas.push_back(alpha);
    }
    for (const FieldElem& beta : betas)
      guarded(out, "psi, beta=" + beta.to_string(), "embedmonomial", desc, [&](Checks& o) {
        if (!(beta.field() == p.field())) throw std::invalid_argument("beta lives in " + beta.field().name());
        const Morphism psi = psi_morphism(p, beta);
        o.insert(o.end(), psi.checks.begin(), psi.checks.end());
      });
  }
  return out;
}

Checks pdo_suite(const Presentation& p, const SuiteConfig& cfg, Rng& rng) {
  Checks out;
  const std::string desc = p.cs.describe();
  const int N = cfg.precision;
  const PdoSeries xs = pdo_from_skew(p.x, N);
  const PdoSeries u = pdo_inv(xs);
  out.push_back(make_check("v(u) = 1", "pdo", desc, pdo_valuation(u) == Valuation::of(1), pdo_valuation(u).to_string()));
  out.push_back(make_check("u = x^-1 exactly", "UgPDObis", desc,
                           equal_to_precision(u, PdoSeries::u(xs.delta_ptr(), N)) && u.precision() >= N, u.to_string(p.names)));
  out.push_back(make_check("v(x) = -1, v(y) = v(z) = 0", "pdo", desc,
                           pdo_valuation(xs) == Valuation::of(-1) &&
                               pdo_valuation(pdo_from_skew(p.y, N)) == Valuation::of(0) &&
                               pdo_valuation(pdo_from_skew(p.z, N)) == Valuation::of(0)));
  for (int s = 0; s < cfg.samples; ++s) {
    // Parameter-free scalars keep a-fractions from swelling; a still enters
    // through the derivation.
    const SkewPoly f = gen::skew(p, rng, 2, true), g = gen::skew(p, rng, 2, true);
    const PdoSeries pf = pdo_from_skew(f, N), pg = pdo_from_skew(g, N);
    out.push_back(make_check("embedding is multiplicative, sample " + istr(s), "pdo", desc,
                             equal_to_precision(pdo_from_skew(f * g, N), pf * pg)));
    // Inverse coefficients carry powers of the leading coefficient in their
    // denominators, so round trips run at a capped precision.
    const int Ni = std::min(N, kRoundTripPrecision);
    const PdoSeries pfi = pdo_from_skew(f, Ni);
    if (pfi.is_zero_to_precision()) continue;
    const PdoSeries inv = pdo_inv(pfi);
    const PdoSeries one = pdo_from_skew(p.one(), Ni);
    out.push_back(make_check("a*inv(a) = inv(a)*a = 1, sample " + istr(s), "pdo", desc,
                             equal_to_precision(pfi * inv, one) && equal_to_precision(inv * pfi, one),
                             "to O(u^" + istr(inv.precision() + 1) + ")"));
  }
  if (p.cs.algebra != AlgebraKind::g_alpha) return out;
  // Images of phi_M satisfy the leading constraints; mutations are rejected.
  for (int s = 0; s < cfg.samples; ++s) {
    const Mat2Z M = cfg.matrix && s == 0 ? *cfg.matrix : gen::matrix_for(p.cs.alpha, rng);
    guarded(out, "leading constraints for phi_M", "equadiff", desc, [&](Checks& o) {
      const Morphism phi = phi_morphism(M, p);
      const PdoSeries Xinv = pdo_inv(pdo_from_skew(phi.x_image, N));
      const PdoSeries Y = pdo_from_skew(phi.y_image, N), Z = pdo_from_skew(phi.z_image, N);
      const LeadingConstraintReport r = leading_constraint_check(Xinv, Y, Z, phi.beta, *p.d);
      const FieldElem gamma = p.field().from_mpz(M.m) * p.cs.alpha + p.field().from_mpz(M.r);
      const bool c1_ok = r.c1 && *r.c1 == RatFunc2::constant(gamma);
      o.push_back(make_check("c1 = m*alpha+r = D(y0)/y0, M=" + M.to_string(), "equadiff", desc, r.passed() && c1_ok,
                             r.c1 ? "c1=" + r.c1->to_string(p.names) : r.precondition_failure));
      const LeadingConstraintReport bad_y = leading_constraint_check(Xinv, pdo_from_skew(p.one(), N), Z,
                                                                     phi.beta, *p.d);
      o.push_back(make_check("constant Y rejected, M=" + M.to_string(), "equadiff", desc,
                             !bad_y.passed() && bad_y.precondition_failure == "y0 in k", bad_y.precondition_failure));
      const PdoSeries Zbad = Z + PdoSeries::monomial(Z.delta_ptr(), RatFunc2::monomial(p.field().one(), 1, 1), 1, N);
      const LeadingConstraintReport bad_z = leading_constraint_check(Xinv, Y, Zbad, phi.beta, *p.d);
      o.push_back(make_check("perturbed Z rejected, M=" + M.to_string(), "relations", desc,
                             !bad_z.passed() && !bad_z.relations_hold, bad_z.failed_relations.empty() ? "" : bad_z.failed_relations.front()));
    });
  }
  return out;
}

Checks orbits_suite(const Presentation& p, const SuiteConfig& cfg) {
  Checks out;
  const std::string desc = p.cs.describe();
  const Field& k = p.field();
  if (k.characteristic() != 0) {
    const unsigned ell = p.ell();
    if (ell > cfg.ell_bound) {
      out.push_back({"finite orbit enumeration", "SL", desc, Status::out_of_scope,
                     "l=" + istr(ell) + " above the enumeration bound " + istr(cfg.ell_bound)});
      return out;
    }
    return transitivity_report(ell, cfg.ell_bound);
  }
  if (p.cs.algebra != AlgebraKind::g_alpha) {
    guarded(out, "classification g vs q", "qq", desc, [&](Checks& o) {
      FieldSpec r2;
      r2.extension = ExtensionKind::quadratic;
      r2.radicand = 2;
      const ClassifyVerdict v = valued_iso_classify(g_case(make_field(r2).generator()), p.cs);
      o.insert(o.end(), v.checks.begin(), v.checks.end());
    });
    return out;
  }
  const FieldElem& alpha = p.cs.alpha;
  const bool quad = k.extension() == ExtensionKind::quadratic && !k.has_parameter() && !alpha.in_prime_subfield();
  if (!quad) {
    out.push_back({"orbit of alpha", "CS", desc, Status::out_of_scope,
                   alpha.in_prime_subfield() ? "alpha rational: Gelfand-Kirillov case" : "no decision procedure for this parameter"});
    return out;
  }
  const FieldElem shifted = homographic(Mat2Z::translation(1), alpha);
  guarded(out, "orbit machinery", "ell", desc, [&](Checks& o) {
    if (k.radicand() > 0) {
      const ContFrac cf = cf_expand(QuadIrr::from_field(alpha));
      bool conv_ok = true;
      for (std::size_t i = 1; i <= cf.preperiod.size() + cf.period.size(); ++i)
        conv_ok = conv_ok && cf.prefix_matrix(i).unimodular();
      o.push_back(make_check("continued fraction is eventually periodic", "ell", desc, !cf.period.empty(), cf.to_string()));
      o.push_back(make_check("convergent matrices are unimodular", "ell", desc, conv_ok));
    } else {
      const Reduction r = fundamental_domain_reduce(ImagQuadPoint::make(alpha.sqrt_part() > 0 ? alpha : -alpha));
      const Reduction again = fundamental_domain_reduce(r.reduced);
      o.push_back(make_check("reduced point lies in the fundamental domain", "ell", desc, in_fundamental_domain(r.reduced),
                             r.reduced.value.to_string()));
      o.push_back(make_check("reduction is idempotent", "ell", desc,
                             again.reduced.value == r.reduced.value && again.M == Mat2Z::identity()));
    }
    const EquivalenceVerdict e = gl2z_equivalent(alpha, shifted);
    o.push_back(make_check("alpha ~ alpha+1 with verified witness", "CS", desc,
                           e.equivalent && e.witness && homographic(*e.witness, alpha) == shifted,
                           e.witness ? e.witness->to_string() : e.detail));
    const ClassifyVerdict v = valued_iso_classify(p.cs, g_case(shifted));
    o.push_back(make_check("g_alpha and g_(alpha+1) valued-isomorphic", "mainthm", desc, v.verdict == "valued-isomorphic",
                           v.verdict));
    o.insert(o.end(), v.checks.begin(), v.checks.end());
  });
  return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"presentations", "centers", "morphisms", "pdo", "orbits", "all"};
  return names;
}

CaseSpec config_case(const SuiteConfig& cfg) {
  if (cfg.algebra == "q") return parse_case("q", cfg.characteristic);
  if (cfg.algebra != "g") throw ParseError("algebra must be g or q, got '" + cfg.algebra + "'");
  return parse_case("g:" + cfg.alpha, cfg.characteristic);
}

Report run_suite(const std::string& name, const SuiteConfig& cfg) {
  bool known = false;
  for (const auto& n : suite_names()) known = known || n == name;
  if (!known) throw std::invalid_argument("unknown suite '" + name + "'");
  const CaseSpec cs = config_case(cfg);
  Report rep;
  rep.command = "verify " + name;
  rep.case_desc = cs.describe();
  const Presentation p = algebra_make(cs);
  Rng rng(cfg.seed);
  const bool all = name == "all";
  if (all || name == "presentations") rep.add_all(presentations_suite(p));
  if (all || name == "centers") rep.add_all(centers_suite(p));
  if (all || name == "morphisms") rep.add_all(morphisms_suite(p, cfg, rng));
  if (all || name == "pdo") rep.add_all(pdo_suite(p, cfg, rng));
  if (all || name == "orbits") rep.add_all(orbits_suite(p, cfg));
  return rep;
}

}  // namespace skewlab
