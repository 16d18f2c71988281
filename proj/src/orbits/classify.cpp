#include "skewlab/orbits/orbits.hpp"

namespace skewlab {

namespace {

bool is_quadratic_point(const FieldElem& a) {
  const Field f = a.field();
  return f.characteristic() == 0 && f.extension() == ExtensionKind::quadratic && !f.has_parameter() &&
         !a.in_prime_subfield();
}

std::string pair_desc(const CaseSpec& a, const CaseSpec& b) { return a.describe() + " vs " + b.describe(); }

// Searches SL2^pm(F_l) for W with W.a = b; a, b outside F_l in a common finite field.
std::optional<Mat2Z> finite_field_witness(const FieldElem& a, const FieldElem& b) {
  const Field f = a.field();
  const long L = static_cast<long>(f.characteristic());
  for (long n = 0; n < L; ++n)
    for (long q = 0; q < L; ++q)
      for (long m = 0; m < L; ++m)
        for (long r = 0; r < L; ++r) {
          const long det = ((n * r - q * m) % L + L) % L;
          if (det != 1 && det != L - 1) continue;
          const FieldElem lhs = f.from_int(n) * a + f.from_int(q);
          const FieldElem rhs = b * (f.from_int(m) * a + f.from_int(r));
          if (lhs == rhs) return Mat2Z(n, q, m, r);
        }
  return std::nullopt;
}

void attach_phi(ClassifyVerdict& v, const Mat2Z& W, const CaseSpec& a) {
  const Presentation pa = algebra_make(a);
  Morphism phi = phi_morphism(W, pa);
  v.checks.insert(v.checks.end(), phi.checks.begin(), phi.checks.end());
  v.witness = W;
  v.morphism = std::move(phi);
}

ClassifyVerdict g_vs_q(const CaseSpec& g, const CaseSpec& q) {
  ClassifyVerdict v;
  const std::string desc = pair_desc(g, q);
  const FieldElem& alpha = g.alpha;
  if (alpha.in_prime_subfield()) {
    v.verdict = "not-isomorphic";
    v.citations = {"sepqga"};
    v.checks.push_back(make_check("alpha in prime subfield: K(g_alpha) and K(q) not isomorphic", "sepqga", desc, true));
    return v;
  }
  if (g.field.characteristic() == 0) {
    v.verdict = "not-valued-isomorphic";
    v.citations = {"qq"};
    v.checks.push_back(make_check("char 0, alpha not rational: not isomorphic as valued skewfields", "qq", desc, true));
    v.checks.push_back({"unvalued isomorphism K(g_alpha) vs K(q)", "qq", desc, Status::open_in_paper,
                        "only the valued statement is proved"});
    return v;
  }
  v.verdict = "unknown";
  v.one_sided = true;
  v.checks.push_back({"K(g_alpha) vs K(q), char l, alpha outside F_l", "sepqga", desc, Status::out_of_scope,
                      "no separation result in this case"});
  return v;
}

ClassifyVerdict g_vs_g_char0(const CaseSpec& a, const CaseSpec& b) {
  ClassifyVerdict v;
  const std::string desc = pair_desc(a, b);
  const bool ra = a.alpha.in_prime_subfield(), rb = b.alpha.in_prime_subfield();
  if (ra && rb) {
    v.verdict = "isomorphic";
    v.citations = {"isoaq"};
    v.checks.push_back(make_check("alpha, beta rational: both isomorphic to D_{1,1}(k)", "isoaq", desc, true));
    return v;
  }
  if (ra != rb) {
    v.verdict = "not-isomorphic";
    v.citations = {"isoaq"};
    v.checks.push_back(make_check("exactly one parameter rational: Gelfand-Kirillov property separates", "isoaq", desc, true));
    return v;
  }
  v.citations = {"mainthm"};
  if (is_quadratic_point(a.alpha) && is_quadratic_point(b.alpha)) {
    if ((a.field.radicand() > 0) != (b.field.radicand() > 0)) {
      // GL2(Z) preserves R and C \ R.
      v.verdict = "not-valued-isomorphic";
      v.checks.push_back(make_check("real vs imaginary: different GL2(Z)-orbits", "ell", desc, true));
    } else {
      const EquivalenceVerdict e = gl2z_equivalent(a.alpha, b.alpha);
      v.checks.push_back(make_check("GL2(Z)-orbit decision (" + e.method + ")", "mainthm", desc, true, e.detail));
      if (e.equivalent) {
        v.verdict = "valued-isomorphic";
        attach_phi(v, *e.witness, a);
        return v;
      }
      v.verdict = "not-valued-isomorphic";
    }
    v.checks.push_back({"unvalued isomorphism outside a common orbit", "mainthm", desc, Status::open_in_paper,
                        "necessity of the orbit condition is not known"});
    return v;
  }
  // Transcendental or higher-degree parameters: no decision procedure, explicit witness only.
  return v;
}

}  // namespace

ClassifyVerdict valued_iso_classify(const CaseSpec& a, const CaseSpec& b, const std::optional<Mat2Z>& matrix) {
  if (a.field.characteristic() != b.field.characteristic())
    throw std::invalid_argument("cases live over fields of different characteristic");
  const std::string desc = pair_desc(a, b);
  if (a.algebra == AlgebraKind::q && b.algebra == AlgebraKind::q) {
    ClassifyVerdict v;
    v.verdict = "isomorphic";
    v.checks.push_back(make_check("same algebra", "plumbing", desc, true));
    return v;
  }
  if (a.algebra == AlgebraKind::q) return g_vs_q(b, a);
  if (b.algebra == AlgebraKind::q) return g_vs_q(a, b);

  ClassifyVerdict v;
  const bool char0 = a.field.characteristic() == 0;
  if (char0) {
    v = g_vs_g_char0(a, b);
    if (!v.verdict.empty()) return v;
  } else {
    const bool pa = a.alpha.in_prime_subfield(), pb = b.alpha.in_prime_subfield();
    if (pa && pb) {
      v.verdict = "isomorphic";
      v.citations = {"GKl"};
      v.checks.push_back(make_check("alpha, beta in F_l: both isomorphic to D_{1,1}(k)", "GKl", desc, true));
      return v;
    }
    if (pa != pb) {
      v.verdict = "not-isomorphic";
      v.citations = {"GKl", "GKlbis"};
      v.checks.push_back(make_check("exactly one parameter in F_l: Gelfand-Kirillov property separates", "GKlbis", desc, true));
      return v;
    }
    v.one_sided = true;
    v.citations = {"CS"};
    if (a.field == b.field && a.field.is_finite()) {
      const auto W = finite_field_witness(a.alpha, b.alpha);
      if (W) {
        v.verdict = "isomorphic";
        v.witness = W;
        v.checks.push_back(make_check("SL2^pm(F_l) witness W.alpha = beta", "CS", desc,
                                      homographic(*W, a.alpha) == b.alpha, W->to_string()));
        return v;
      }
      v.verdict = "unknown";
      v.checks.push_back({"no SL2^pm(F_l) witness", "CS", desc, Status::out_of_scope,
                          "the orbit condition is only sufficient in characteristic l"});
      return v;
    }
  }

  // Explicit-matrix sufficiency.
  v.one_sided = !char0;
  if (v.citations.empty()) v.citations = {"CS"};
  if (matrix) {
    const bool hits = matrix->unimodular() && homographic(*matrix, a.alpha) == b.alpha;
    v.checks.push_back(make_check("explicit matrix: unimodular and M.alpha = beta", "CS", desc, hits, matrix->to_string()));
    if (hits) {
      v.verdict = char0 ? "valued-isomorphic" : "isomorphic";
      attach_phi(v, *matrix, a);
      return v;
    }
  }
  v.verdict = "unknown";
  v.checks.push_back({"equivalence decision for this parameter", "CS", desc, Status::out_of_scope,
                      "no decision procedure; supply --matrix for the sufficient condition"});
  return v;
}

}  // namespace skewlab
