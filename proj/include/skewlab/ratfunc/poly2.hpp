#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "skewlab/coeff/field.hpp"

namespace skewlab {

/// Names used when printing the two variables, e.g. {"y", "z"} or {"y", "t"}.
using VarNames = std::array<std::string, 2>;

inline const VarNames kYZ{"y", "z"};

struct Term2 {
  int ey = 0;
  int ez = 0;
  FieldElem c;
};

/// Sparse polynomial in two variables over a coefficient field.
///
/// Terms are kept sorted by graded lexicographic order with y > z, largest
/// first, and never store a zero coefficient.
class Poly2 {
 public:
  Poly2() = default;
  explicit Poly2(Field f) : field_(f) {}

  static Poly2 constant(const FieldElem& c);
  /// c * y^ey * z^ez with ey, ez >= 0.
  static Poly2 monomial(const FieldElem& c, int ey, int ez);

  const Field& field() const { return field_; }
  const std::vector<Term2>& terms() const { return terms_; }
  const Term2& lead() const { return terms_.front(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].ey == 0 && terms_[0].ez == 0); }
  bool is_monomial() const { return terms_.size() == 1; }
  /// Constant term value (zero when absent).
  FieldElem constant_value() const;

  int degree_y() const;
  int degree_z() const;
  int min_y() const;
  int min_z() const;

  Poly2 operator-() const;
  friend Poly2 operator+(const Poly2& a, const Poly2& b);
  friend Poly2 operator-(const Poly2& a, const Poly2& b);
  friend Poly2 operator*(const Poly2& a, const Poly2& b);
  friend bool operator==(const Poly2& a, const Poly2& b);

  Poly2 scaled(const FieldElem& s) const;
  /// Multiplies by y^dy z^dz (dy, dz >= 0), or divides when negative and exact.
  Poly2 shifted(int dy, int dz) const;
  Poly2 pow(unsigned n) const;

  Poly2 partial_y() const;
  Poly2 partial_z() const;

  /// Quotient of an exact division; throws std::domain_error otherwise.
  static Poly2 exact_div(const Poly2& a, const Poly2& b);
  /// Quotient when `b` divides `a`, nullopt otherwise.
  static std::optional<Poly2> try_div(const Poly2& a, const Poly2& b);
  /// Greatest common divisor, normalized to leading coefficient 1.
  static Poly2 gcd(const Poly2& a, const Poly2& b);

  /// Divides by the leading coefficient.
  Poly2 normalized() const;

  std::string to_string(const VarNames& names = kYZ) const;

 private:
  static Poly2 from_unsorted(Field f, std::vector<Term2> terms);

  Field field_;
  std::vector<Term2> terms_;
};

/// Graded lexicographic comparison, y > z. Returns true if (ay, az) > (by, bz).
inline bool grlex_greater(int ay, int az, int by, int bz) {
  const int da = ay + az, db = by + bz;
  if (da != db) return da > db;
  return ay > by;
}

}  // namespace skewlab
