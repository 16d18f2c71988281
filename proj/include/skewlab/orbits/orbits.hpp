#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "skewlab/orbits/mat2z.hpp"
#include "skewlab/presentations/presentations.hpp"
#include "skewlab/report/report.hpp"

namespace skewlab {

// ---------------------------------------------------------------------------
// Real quadratic irrationals and continued fractions.

/// (P + sqrt(D)) / Q with D > 0 not a square, Q != 0 and Q | D - P^2.
struct QuadIrr {
  mpz_class P, Q, D;

  /// From an element a + b sqrt(d) of Q(sqrt d), d > 0, b != 0.
  static QuadIrr from_field(const FieldElem& a);
  /// Throws std::invalid_argument when the invariants fail.
  static QuadIrr make(mpz_class P, mpz_class Q, mpz_class D);
  /// The value as an element of `f` = Q(sqrt d) with D = d k^2.
  FieldElem value_in(const Field& f) const;
  std::string to_string() const;
};

struct ContFrac {
  std::vector<mpz_class> preperiod;
  std::vector<mpz_class> period;
  /// Convergents p_i / q_i for every computed partial quotient.
  std::vector<mpz_class> p, q;

  /// Partial quotient a_i (cycling through the period).
  const mpz_class& term(std::size_t i) const;
  /// (p_{k-1} p_{k-2}; q_{k-1} q_{k-2}): alpha = M . (k-th complete quotient).
  Mat2Z prefix_matrix(std::size_t k) const;
  std::string to_string() const;
};

class PeriodNotFound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Throws PeriodNotFound when no period shows up within max_terms.
ContFrac cf_expand(const QuadIrr& a, std::size_t max_terms = 10000);

/// W with b = W . a when the expansions share a tail; `av`, `bv` are the
/// values used for the post-hoc check.
std::optional<Mat2Z> tail_equivalent(const ContFrac& a, const ContFrac& b, const FieldElem& av, const FieldElem& bv);

// ---------------------------------------------------------------------------
// Imaginary quadratic points.

/// Point of the upper half plane, an element a + b sqrt(d) of Q(sqrt d) with
/// d < 0 and b > 0.
struct ImagQuadPoint {
  FieldElem value;

  /// Throws std::invalid_argument unless Im > 0.
  static ImagQuadPoint make(const FieldElem& v);
  mpq_class real() const { return value.rational_part(); }
  mpq_class norm() const;  // |tau|^2
};

struct Reduction {
  ImagQuadPoint reduced;
  Mat2Z M;  // reduced = M . tau, det M = 1
};

/// T/S reduction into the standard fundamental domain: |Re| <= 1/2, |tau| >= 1,
/// Re >= 0 on the unit circle, Re = -1/2 excluded.
Reduction fundamental_domain_reduce(const ImagQuadPoint& tau);

bool in_fundamental_domain(const ImagQuadPoint& tau);

struct EquivalenceVerdict {
  bool equivalent = false;
  std::optional<Mat2Z> witness;  // beta = W . alpha, verified
  std::string method;
  std::string detail;
};

/// GL2(Z)-equivalence of two quadratic irrationals of Q(sqrt d).
/// Throws std::invalid_argument for rational inputs or mixed real/imaginary.
EquivalenceVerdict gl2z_equivalent(const FieldElem& a, const FieldElem& b);

/// Exhaustive search for W in GL2(Z) with entries in [-bound, bound] and
/// W . a = b. Test oracle for the decision procedures.
std::optional<Mat2Z> brute_force_witness(const FieldElem& a, const FieldElem& b, long bound);

// ---------------------------------------------------------------------------
// Finite fields.

enum class GroupKind { SL, SLpm };

struct FiniteOrbit {
  std::vector<FieldElem> points;
  long stabilizer_order = 0;
};

struct FiniteOrbitResult {
  unsigned ell = 0;
  int k = 0;
  GroupKind group = GroupKind::SL;
  Field field;
  long group_order = 0;
  long num_points = 0;
  std::vector<FiniteOrbit> orbits;
  bool partition_ok = false;
  bool orbit_stabilizer_ok = false;
};

inline constexpr unsigned kFiniteBound = 13;

/// Orbits of SL2(F_l) or SL2^pm(F_l) acting homographically on F_{l^k} \ F_l.
/// Throws std::invalid_argument for k outside {2,3} or l above `bound`.
FiniteOrbitResult finite_orbits(unsigned ell, int k, GroupKind group, unsigned bound = kFiniteBound);

/// The char-2 table: M_i . omega in F_8 (omega^3 = omega + 1) and M_1 . omega in F_4.
std::vector<CheckRecord> char2_table_checks();

std::vector<CheckRecord> transitivity_report(unsigned ell, unsigned bound = kFiniteBound);

// ---------------------------------------------------------------------------
// Valued-isomorphism classification.

struct ClassifyVerdict {
  std::string verdict;
  bool one_sided = false;
  std::optional<Mat2Z> witness;
  std::optional<Morphism> morphism;
  std::vector<std::string> citations;
  std::vector<CheckRecord> checks;
};

/// `matrix`, when given, is tried as an explicit witness (used for
/// transcendental parameters where no decision procedure exists).
ClassifyVerdict valued_iso_classify(const CaseSpec& a, const CaseSpec& b,
                                    const std::optional<Mat2Z>& matrix = std::nullopt);

}  // namespace skewlab
