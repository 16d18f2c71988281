#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "skewlab/skewpoly/skewpoly.hpp"

namespace skewlab {

inline constexpr int kDefaultPrecision = 8;

class InsufficientPrecision : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Truncated element sum a_n u^n of k(y,z)((u; delta)). Coefficients are
/// exact for every exponent <= precision; nothing is known above it.
class PdoSeries {
 public:
  PdoSeries(DerivationPtr delta, int precision);

  static PdoSeries monomial(DerivationPtr delta, const RatFunc2& f, int n, int precision);
  static PdoSeries coefficient(DerivationPtr delta, const RatFunc2& f, int precision) {
    return monomial(std::move(delta), f, 0, precision);
  }
  static PdoSeries u(DerivationPtr delta, int precision);

  const Derivation& delta() const { return *delta_; }
  const DerivationPtr& delta_ptr() const { return delta_; }
  const Field& field() const { return delta_->field(); }
  int precision() const { return precision_; }
  const std::map<int, RatFunc2>& terms() const { return terms_; }
  RatFunc2 coeff(int n) const;

  /// True when no coefficient is known to be nonzero.
  bool is_zero_to_precision() const { return terms_.empty(); }
  /// Least exponent with a nonzero coefficient, +inf when none is known.
  Valuation valuation() const;

  PdoSeries truncated(int precision) const;

  PdoSeries operator-() const;
  friend PdoSeries operator+(const PdoSeries& a, const PdoSeries& b);
  friend PdoSeries operator-(const PdoSeries& a, const PdoSeries& b);
  friend PdoSeries operator*(const PdoSeries& a, const PdoSeries& b);

  /// Prints lowest exponent first, ending with O(u^(N+1)).
  std::string to_string(const VarNames& names = kYZ) const;

 private:
  void check_same(const PdoSeries& other) const;
  void put(int n, RatFunc2 f);
  // Valuation used for precision bookkeeping: precision + 1 for a series
  // known only to vanish.
  int working_valuation() const;

  DerivationPtr delta_;
  std::map<int, RatFunc2> terms_;
  int precision_;
};

PdoSeries pdo_mul(const PdoSeries& a, const PdoSeries& b);
/// x^i -> u^(-i); the series derivation is -D.
PdoSeries pdo_from_skew(const SkewPoly& f, int precision = kDefaultPrecision);
/// Throws std::domain_error when no nonzero coefficient is known.
PdoSeries pdo_inv(const PdoSeries& a);
Valuation pdo_valuation(const PdoSeries& a);
/// a == b at every exponent known for both.
bool equal_to_precision(const PdoSeries& a, const PdoSeries& b);

struct LeadingConstraintReport {
  bool preconditions_ok = false;
  std::string precondition_failure;
  std::optional<RatFunc2> c1, y0, z0;
  bool c1_matches_y0 = false;  // c1 = D(y0)/y0
  bool c1_matches_z0 = false;  // beta*c1 = D(z0)/z0
  bool relations_hold = false;
  int relation_precision = 0;
  std::vector<std::string> failed_relations;

  bool passed() const { return preconditions_ok && c1_matches_y0 && c1_matches_z0 && relations_hold; }
};

/// Checks images X^{-1}, Y, Z of u, y, z of the beta-algebra inside the PDO
/// skewfield over D: valuations, the leading-coefficient constraints, and
/// the relations
///   Y X^{-1} - X^{-1} Y = X^{-1} Y X^{-1},
///   Z X^{-1} - X^{-1} Z = beta X^{-1} Z X^{-1},
///   Y Z = Z Y
/// to the available precision.
LeadingConstraintReport leading_constraint_check(const PdoSeries& xinv, const PdoSeries& y, const PdoSeries& z,
                                                 const FieldElem& beta, const Derivation& d);

}  // namespace skewlab
