// skewlab: command-line driver for the verification suites and the orbit and
// classification procedures.

#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "skewlab/parse/literals.hpp"
#include "skewlab/suites/suites.hpp"

using namespace skewlab;
using json = nlohmann::ordered_json;

namespace {

struct Common {
  std::uint64_t characteristic = 0;
  std::string format = "json";
};

void extra(Report& r, const std::string& key, const json& value) { r.extras.emplace_back(key, value.dump()); }

json matrix_json(const std::optional<Mat2Z>& m) { return m ? json(m->to_string()) : json(nullptr); }

Report orbits_finite(unsigned ell, int ext, const std::string& group, unsigned bound) {
  if (group != "sl" && group != "slpm") throw ParseError("--group must be sl or slpm");
  const GroupKind g = group == "sl" ? GroupKind::SL : GroupKind::SLpm;
  prime_field(ell);  // rejects composite l
  const FiniteOrbitResult res = finite_orbits(ell, ext, g, bound);
  Report r;
  r.command = "orbits finite";
  r.case_desc = res.field.name() + " minus F_" + std::to_string(ell) + ", " + (g == GroupKind::SL ? "SL2" : "SL2^pm") + "(F_" +
                std::to_string(ell) + ")";
  json orbits = json::array();
  for (const auto& o : res.orbits) {
    json oj;
    oj["size"] = o.points.size();
    oj["stabilizer"] = o.stabilizer_order;
    oj["representative"] = o.points.front().to_string();
    orbits.push_back(oj);
  }
  extra(r, "verdict", res.orbits.size() == 1 ? "transitive" : "not-transitive");
  extra(r, "group_order", res.group_order);
  extra(r, "points", res.num_points);
  extra(r, "orbits", orbits);
  r.add(make_check("orbits partition F_{l^k} minus F_l", "SL", r.case_desc, res.partition_ok));
  r.add(make_check("|orbit|*|stab| = |G| for every point", "SL", r.case_desc, res.orbit_stabilizer_ok));
  if (ell == 2 && ext == 3) r.add_all(char2_table_checks());
  return r;
}

Report orbits_cf(const std::string& alpha_lit) {
  const FieldElem a = parse_element(alpha_lit, 0);
  const QuadIrr qi = QuadIrr::from_field(a);
  const ContFrac cf = cf_expand(qi);
  Report r;
  r.command = "orbits cf";
  r.case_desc = "alpha=" + a.to_string();
  json pre = json::array(), per = json::array();
  for (const auto& t : cf.preperiod) pre.push_back(t.get_str());
  for (const auto& t : cf.period) per.push_back(t.get_str());
  extra(r, "verdict", cf.to_string());
  extra(r, "quadirr", qi.to_string());
  extra(r, "preperiod", pre);
  extra(r, "period", per);
  bool unimodular = true;
  for (std::size_t i = 1; i <= cf.preperiod.size() + cf.period.size(); ++i)
    unimodular = unimodular && cf.prefix_matrix(i).unimodular();
  r.add(make_check("period detected", "ell", r.case_desc, !cf.period.empty(), cf.to_string()));
  r.add(make_check("convergent matrices are unimodular", "ell", r.case_desc, unimodular));
  return r;
}

Report orbits_equiv(const std::string& alpha_lit, const std::string& beta_lit, long brute) {
  const FieldElem a = parse_element(alpha_lit, 0), b = parse_element(beta_lit, 0);
  const EquivalenceVerdict v = gl2z_equivalent(a, b);
  Report r;
  r.command = "orbits equiv";
  r.case_desc = "alpha=" + a.to_string() + ", beta=" + b.to_string();
  extra(r, "verdict", v.equivalent ? "equivalent" : "not-equivalent");
  extra(r, "witness", matrix_json(v.witness));
  extra(r, "method", v.method);
  if (v.witness)
    r.add(make_check("witness W.alpha = beta", "CS", r.case_desc, homographic(*v.witness, a) == b, v.witness->to_string()));
  else
    r.add(make_check("decision", "CS", r.case_desc, true, v.detail));
  if (brute > 0 && a.field() == b.field()) {
    const auto w = brute_force_witness(a, b, brute);
    // A bounded search can only refute a negative verdict.
    const bool agrees = v.equivalent || !w;
    r.add(make_check("brute-force search with entries <= " + std::to_string(brute), "plumbing", r.case_desc, agrees,
                     w ? w->to_string() : "no witness"));
  }
  return r;
}

Report classify(const std::string& ca, const std::string& cb, std::uint64_t ch, const std::optional<Mat2Z>& m) {
  const CaseSpec a = parse_case(ca, ch), b = parse_case(cb, ch);
  const ClassifyVerdict v = valued_iso_classify(a, b, m);
  Report r;
  r.command = "classify";
  r.case_desc = a.describe() + " vs " + b.describe();
  extra(r, "verdict", v.verdict);
  extra(r, "one_sided", v.one_sided);
  extra(r, "witness", matrix_json(v.witness));
  extra(r, "citations", v.citations);
  if (v.morphism) {
    json mj;
    mj["x'"] = v.morphism->x_image.to_string();
    mj["y'"] = v.morphism->y_image.to_string();
    mj["z'"] = v.morphism->z_image.to_string();
    mj["invertible"] = v.morphism->invertible;
    extra(r, "morphism", mj);
  }
  r.add_all(v.checks);
  return r;
}

Report pdo_cmd(const SuiteConfig& cfg, const std::string& expr, bool inverse) {
  const CaseSpec cs = config_case(cfg);
  const Presentation p = algebra_make(cs);
  const SkewPoly f = parse_skew(expr, p);
  const PdoSeries s = pdo_from_skew(f, cfg.precision);
  Report r;
  r.command = "pdo";
  r.case_desc = cs.describe();
  extra(r, "element", p.show(f));
  extra(r, "series", s.to_string(p.names));
  extra(r, "valuation", pdo_valuation(s).to_string());
  r.add(make_check("v(image) = -deg", "pdo", r.case_desc, pdo_valuation(s) == valuation_v(f)));
  if (inverse) {
    const PdoSeries inv = pdo_inv(s);
    extra(r, "inverse", inv.to_string(p.names));
    const PdoSeries one = pdo_from_skew(p.one(), cfg.precision);
    r.add(make_check("a*inv(a) = inv(a)*a = 1", "pdo", r.case_desc,
                     equal_to_precision(s * inv, one) && equal_to_precision(inv * s, one), "to O(u^" + std::to_string(inv.precision() + 1) + ")"));
  }
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification kernel for the enveloping skewfields of g_alpha and q"};
  app.require_subcommand(1);
  Common common;
  SuiteConfig cfg;
  std::string matrix_text, beta_text;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--char", common.characteristic, "Characteristic: 0 or a prime");
    sub->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  };
  auto add_case = [&](CLI::App* sub) {
    sub->add_option("--algebra", cfg.algebra, "g (g_alpha) or q")->check(CLI::IsMember({"g", "q"}));
    sub->add_option("--alpha", cfg.alpha, "Element literal for alpha");
    sub->add_option("--precision", cfg.precision, "PDO working precision")->check(CLI::Range(1, 200));
  };

  std::string suite;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
  add_common(verify);
  add_case(verify);
  verify->add_option("--beta", beta_text, "Element literal for beta (psi)");
  verify->add_option("--matrix", matrix_text, "Matrix n,q,m,r for phi_M");
  verify->add_option("--seed", cfg.seed, "PRNG seed");
  verify->add_option("--samples", cfg.samples, "Random samples per property")->check(CLI::Range(0, 1000));
  verify->add_option("--ell-bound", cfg.ell_bound, "Largest l for finite enumeration");

  auto* orbits = app.add_subcommand("orbits", "GL2(Z) and finite-field orbit procedures");
  orbits->require_subcommand(1);
  unsigned ell = 3, bound = kFiniteBound;
  int ext = 2;
  std::string group = "sl", alpha_lit, beta_lit;
  long brute = 0;
  auto* finite = orbits->add_subcommand("finite", "Orbits of SL2(F_l) or SL2^pm(F_l) on F_{l^k} minus F_l");
  finite->add_option("--ell", ell, "Prime l")->required();
  finite->add_option("--ext", ext, "Extension degree k (2 or 3)");
  finite->add_option("--group", group, "sl or slpm");
  finite->add_option("--ell-bound", bound, "Largest l allowed");
  add_common(finite);
  auto* cf = orbits->add_subcommand("cf", "Continued fraction of a real quadratic irrational");
  cf->add_option("--alpha", alpha_lit, "quad literal")->required();
  add_common(cf);
  auto* equiv = orbits->add_subcommand("equiv", "GL2(Z)-equivalence of two quadratic irrationals");
  equiv->add_option("--alpha", alpha_lit, "quad literal")->required();
  equiv->add_option("--beta", beta_lit, "quad literal")->required();
  equiv->add_option("--brute-force", brute, "Also search matrices with entries up to this bound");
  add_common(equiv);

  std::string case_a, case_b;
  auto* cls = app.add_subcommand("classify", "Valued-isomorphism classification of two cases");
  cls->add_option("--caseA", case_a, "g:<literal> or q")->required();
  cls->add_option("--caseB", case_b, "g:<literal> or q")->required();
  cls->add_option("--matrix", matrix_text, "Explicit witness n,q,m,r");
  add_common(cls);

  std::string expr;
  bool inverse = false;
  auto* pdo = app.add_subcommand("pdo", "Image of a skew polynomial in the pseudodifferential operators");
  pdo->add_option("--expr", expr, "Expression in x, y, z, t")->required();
  pdo->add_flag("--inverse", inverse, "Also invert the series");
  add_common(pdo);
  add_case(pdo);

  CLI11_PARSE(app, argc, argv);

  try {
    cfg.characteristic = common.characteristic;
    std::optional<Mat2Z> matrix;
    if (!matrix_text.empty()) matrix = parse_matrix(matrix_text);
    Report report;
    if (*verify) {
      cfg.matrix = matrix;
      if (!beta_text.empty()) cfg.beta = beta_text;
      report = run_suite(suite, cfg);
    } else if (*finite) {
      report = orbits_finite(ell, ext, group, bound);
    } else if (*cf) {
      report = orbits_cf(alpha_lit);
    } else if (*equiv) {
      report = orbits_equiv(alpha_lit, beta_lit, brute);
    } else if (*cls) {
      report = classify(case_a, case_b, common.characteristic, matrix);
    } else if (*pdo) {
      report = pdo_cmd(cfg, expr, inverse);
    }
    std::cout << emit(report, common.format == "text" ? Format::text : Format::json);
    return report.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
