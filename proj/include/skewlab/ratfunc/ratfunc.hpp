#pragma once

#include <string>
#include <vector>

#include "skewlab/ratfunc/poly2.hpp"

namespace skewlab {

/// Element of k(y,z): a reduced fraction whose denominator has leading
/// coefficient 1 in grlex order (y > z). Equality is structural.
class RatFunc2 {
 public:
  RatFunc2() = default;
  explicit RatFunc2(Field f) : num_(f), den_(Poly2::constant(f.one())) {}

  static RatFunc2 constant(const FieldElem& c);
  static RatFunc2 from_poly(const Poly2& p);
  /// Reduces num/den; throws std::domain_error when den is zero.
  static RatFunc2 fraction(const Poly2& num, const Poly2& den);
  /// num/den for a pair already known to be coprime; only normalizes.
  static RatFunc2 fraction_reduced(const Poly2& num, const Poly2& den);
  /// c * y^i * z^j, exponents of any sign.
  static RatFunc2 monomial(const FieldElem& c, int i, int j);
  static RatFunc2 y(const Field& f) { return monomial(f.one(), 1, 0); }
  static RatFunc2 z(const Field& f) { return monomial(f.one(), 0, 1); }

  const Field& field() const { return num_.field(); }
  const Poly2& numerator() const { return num_; }
  const Poly2& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool is_polynomial() const { return den_.is_constant(); }
  /// Value of a constant; throws std::logic_error otherwise.
  FieldElem constant_value() const;
  RatFunc2 zero_like() const { return RatFunc2(field()); }
  RatFunc2 one_like() const { return constant(field().one()); }

  RatFunc2 operator-() const;
  friend RatFunc2 operator+(const RatFunc2& a, const RatFunc2& b);
  friend RatFunc2 operator-(const RatFunc2& a, const RatFunc2& b);
  friend RatFunc2 operator*(const RatFunc2& a, const RatFunc2& b);
  friend RatFunc2 operator/(const RatFunc2& a, const RatFunc2& b);
  RatFunc2& operator+=(const RatFunc2& b) { return *this = *this + b; }
  RatFunc2& operator-=(const RatFunc2& b) { return *this = *this - b; }
  RatFunc2& operator*=(const RatFunc2& b) { return *this = *this * b; }
  friend bool operator==(const RatFunc2& a, const RatFunc2& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  RatFunc2 scaled(const FieldElem& c) const;
  /// Throws std::domain_error for zero.
  RatFunc2 inverse() const;
  RatFunc2 pow(long n) const;

  RatFunc2 partial_y() const;
  RatFunc2 partial_z() const;

  std::string to_string(const VarNames& names = kYZ) const;

 private:
  Poly2 num_, den_;
};

/// Sum of many terms with a single reduction of the final fraction.
RatFunc2 sum(const Field& f, const std::vector<RatFunc2>& terms);

/// f(Y, Z): rational functions substituted for y and z.
/// Throws std::domain_error if the denominator of f vanishes after substitution.
RatFunc2 substitute(const RatFunc2& f, const RatFunc2& Y, const RatFunc2& Z);

/// A k-derivation of k(y,z), determined by the images of y and z.
class Derivation {
 public:
  Derivation(RatFunc2 image_of_y, RatFunc2 image_of_z);

  const RatFunc2& image_of_y() const { return dy_; }
  const RatFunc2& image_of_z() const { return dz_; }
  const Field& field() const { return dy_.field(); }

  RatFunc2 apply(const RatFunc2& f) const;
  Derivation negated() const { return Derivation(-dy_, -dz_); }

  /// D_alpha = y d/dy + alpha z d/dz.
  static Derivation euler(const FieldElem& alpha);
  /// y d/dy + (y + z) d/dz on k(y,z).
  static Derivation delta_yz(const Field& f);
  /// The same derivation in coordinates (y, t), t = z/y: y d/dy + d/dt.
  static Derivation delta_yt(const Field& f);

  friend bool operator==(const Derivation& a, const Derivation& b) { return a.dy_ == b.dy_ && a.dz_ == b.dz_; }

 private:
  RatFunc2 dy_, dz_;
};

RatFunc2 derivation_apply(const Derivation& d, const RatFunc2& f);

/// D(f)/f; throws std::domain_error for f = 0.
RatFunc2 log_derivative(const Derivation& d, const RatFunc2& f);

/// True iff f lies in k(y^l, z^l), decided by both partials vanishing.
/// Throws FieldError in characteristic 0.
bool in_frobenius_subfield(const RatFunc2& f);

}  // namespace skewlab
