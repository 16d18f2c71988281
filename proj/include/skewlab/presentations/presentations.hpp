#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skewlab/orbits/mat2z.hpp"
#include "skewlab/report/report.hpp"
#include "skewlab/skewpoly/skewpoly.hpp"

namespace skewlab {

enum class AlgebraKind { g_alpha, q };

enum class CaseClass { char0_rational, char0_irrational, charl_prime_subfield, charl_generic, q_char0, q_charl };

const char* case_class_name(CaseClass c);

struct CaseSpec {
  AlgebraKind algebra = AlgebraKind::g_alpha;
  Field field;
  FieldElem alpha;              // g_alpha only
  bool yt_coordinates = true;   // q only: work in (y, t), t = z/y

  CaseClass classification() const;
  std::string describe() const;
};

/// Throws std::invalid_argument for alpha = 0.
CaseSpec g_case(const FieldElem& alpha);
CaseSpec q_case(const Field& f, bool yt_coordinates = true);

/// Generators of K(g_alpha) = k(y,z)(x; D_alpha) or of K(q) = k(y,z)(x; Delta).
struct Presentation {
  CaseSpec cs;
  DerivationPtr d;
  VarNames names;
  SkewPoly x, y, z, t;  // t = y^{-1} z
  std::vector<CheckRecord> relation_checks;

  const Field& field() const { return cs.field; }
  unsigned ell() const { return static_cast<unsigned>(cs.field.characteristic()); }
  SkewPoly coeff(const RatFunc2& f) const { return SkewPoly::coefficient(d, f); }
  SkewPoly scalar(const FieldElem& c) const { return SkewPoly::constant(d, c); }
  SkewPoly one() const { return scalar(field().one()); }
  RatFunc2 y_rf() const;
  RatFunc2 z_rf() const;
  RatFunc2 t_rf() const;
  std::vector<SkewPoly> generators() const { return {x, y, z}; }
  std::string show(const SkewPoly& f) const { return f.to_string(names); }
};

/// Builds the presentation and checks its defining brackets exactly.
Presentation algebra_make(const CaseSpec& cs);

/// (y, z) -> (y, t) coordinates for q: z = y t, and back.
RatFunc2 yz_to_yt(const RatFunc2& f);
RatFunc2 yt_to_yz(const RatFunc2& f);

/// p(image) for p a polynomial in x with constant coefficients.
SkewPoly substitute_x(const SkewPoly& p, const SkewPoly& image);

struct NamedElement {
  std::string name;
  SkewPoly value;
};

struct CenterResult {
  std::string description;
  std::vector<NamedElement> generators;
  std::vector<CheckRecord> checks;
};

/// Generators of the center claimed by the source, each checked to commute
/// with x, y, z. Maximality is not certified.
CenterResult claimed_center(const Presentation& p);

struct CentralC {
  FieldElem mu, lambda;
  SkewPoly c;
  std::vector<CheckRecord> checks;
};

/// c = x^(l^2) + lambda x^l + mu x, mu = (alpha^l - alpha)^(l-1), lambda = -mu-1.
/// Throws std::invalid_argument when alpha lies in F_l or char is 0.
CentralC central_element_c(const FieldElem& alpha);

struct TranslationInvariant {
  SkewPoly t;
  std::vector<CheckRecord> checks;
};

/// t_gamma = x^l - gamma^(l-1) x, checked against sigma_gamma(x) = x - gamma
/// and against the product of the translates. Throws for gamma = 0.
TranslationInvariant translation_invariant_t(const FieldElem& gamma);

/// sigma_alpha(t_1) in expanded form, and c = t_1^l - (alpha^l-alpha)^(l-1) t_1.
std::vector<CheckRecord> translation_remark_checks(const FieldElem& alpha);

enum class WeylSide { L, Lprime };

struct WeylTriple {
  std::string recipe;
  SkewPoly P, Q;
  std::vector<NamedElement> central;
  std::vector<CheckRecord> checks;
};

using BezoutPair = std::pair<mpz_class, mpz_class>;  // (u, v) with p u + q v = 1

/// Canonical (u, v): p u + q v = 1 with 0 <= u < |q|.
BezoutPair canonical_bezout(const mpz_class& p, const mpz_class& q);

/// Throws std::invalid_argument for cases without a Weyl structure.
WeylTriple weyl_triple(const Presentation& p, WeylSide side = WeylSide::L,
                       std::optional<BezoutPair> bezout = std::nullopt);

std::vector<CheckRecord> centralizer_pair_check(const Presentation& p);

struct GkVerdict {
  bool gk = false;
  std::string center;
  std::string dimension_claim;
  std::vector<std::string> citations;
  std::optional<WeylTriple> triple;
};

GkVerdict gk_classify(const CaseSpec& cs);

class MorphismError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class MorphismKind { phi, psi, char0_rational_reparametrization, custom };

/// Images of the generators x', y', z' of g_beta inside the target skewfield.
struct Morphism {
  MorphismKind kind = MorphismKind::custom;
  std::string provenance;
  FieldElem beta;
  SkewPoly x_image, y_image, z_image;
  bool invertible = false;
  std::optional<Mat2Z> matrix;
  std::vector<CheckRecord> checks;

  bool relations_hold() const { return all_pass(checks); }
};

/// [X,Y] = Y, [X,Z] = beta Z, [Y,Z] = 0.
std::vector<CheckRecord> verify_relations(const FieldElem& beta, const SkewPoly& X, const SkewPoly& Y,
                                          const SkewPoly& Z, const std::string& case_desc);

/// Unchecked assembly; the relation checks are recorded, never thrown.
Morphism make_morphism(MorphismKind kind, std::string provenance, const FieldElem& beta, SkewPoly X, SkewPoly Y,
                       SkewPoly Z);

/// x' -> (m alpha + r)^{-1} x, y' -> y^r z^m, z' -> y^q z^n; beta = M.alpha.
/// Throws MorphismError if det M = 0 in k or m alpha + r = 0.
Morphism phi_morphism(const Mat2Z& M, const Presentation& target);

/// x' -> (beta-alpha)/(alpha^l-alpha) x^l + (alpha^l-beta)/(alpha^l-alpha) x.
/// Throws MorphismError unless char l > 0, alpha not in F_l, beta != 0.
Morphism psi_morphism(const Presentation& target, const FieldElem& beta);

/// Image of a source element given in left normal form over the source
/// derivation.
SkewPoly apply_morphism(const Morphism& phi, const SkewPoly& f);

/// outer o inner, where inner lands in the source skewfield of outer.
Morphism compose(const Morphism& outer, const Morphism& inner);

}  // namespace skewlab
