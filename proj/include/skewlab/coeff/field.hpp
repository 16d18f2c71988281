#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "skewlab/coeff/dense_poly.hpp"

namespace skewlab {

// Coefficient fields: Q, F_l, F_{l^n}, Q(sqrt d), and any of these with a
// transcendental parameter `a` adjoined as rational functions.

class FieldError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ExtensionKind { none, finite, quadratic };

struct FieldSpec {
  std::uint64_t characteristic = 0;
  ExtensionKind extension = ExtensionKind::none;
  int degree = 1;
  // Monic defining polynomial of a finite extension, lowest degree first.
  // Left empty, the lexicographically least monic irreducible is used.
  std::vector<std::int64_t> modulus;
  mpz_class radicand = 0;
  bool parameter = false;
};

namespace detail {
struct FieldCtx;
}

class FieldElem;

/// Handle to an interned, immutable field. Two handles compare equal iff
/// they denote the same field.
class Field {
 public:
  Field() = default;

  std::uint64_t characteristic() const;
  ExtensionKind extension() const;
  int degree() const;
  const std::vector<std::int64_t>& modulus() const;
  const mpz_class& radicand() const;
  bool has_parameter() const;
  /// Number of elements when the field is finite (no parameter), else 0.
  mpz_class order() const;
  bool is_finite() const { return characteristic() != 0 && !has_parameter(); }
  std::string name() const;

  FieldElem zero() const;
  FieldElem one() const;
  FieldElem from_int(long n) const;
  FieldElem from_mpz(const mpz_class& n) const;
  FieldElem from_rational(const mpq_class& q) const;
  /// theta for F_{l^n} (the class of T), sqrt(d) for Q(sqrt d).
  FieldElem generator() const;
  /// The transcendental parameter `a` of a parameter field.
  FieldElem parameter() const;
  /// Finite-extension element from its coordinates on 1, theta, theta^2, ...
  FieldElem from_coordinates(const std::vector<std::int64_t>& coords) const;
  /// Q(sqrt d) element a + b*sqrt(d).
  FieldElem from_quadratic(const mpq_class& a, const mpq_class& b) const;

  /// Same field without the parameter.
  Field base() const;

  const detail::FieldCtx* ctx() const { return ctx_; }
  bool valid() const { return ctx_ != nullptr; }

  friend bool operator==(const Field& a, const Field& b) { return a.ctx_ == b.ctx_; }

 private:
  explicit Field(const detail::FieldCtx* c) : ctx_(c) {}
  friend Field make_field(const FieldSpec& spec);
  friend class FieldElem;
  const detail::FieldCtx* ctx_ = nullptr;
};

/// Validates `spec` and returns the interned field.
/// Throws FieldError for a composite characteristic, a reducible modulus,
/// or a radicand that is not square-free (or equal to 0 or 1).
Field make_field(const FieldSpec& spec);

Field rationals();
Field prime_field(std::uint64_t ell);

namespace detail {

struct QuadVal {
  mpq_class a, b;  // a + b*sqrt(d)
  friend bool operator==(const QuadVal& x, const QuadVal& y) { return x.a == y.a && x.b == y.b; }
};

using BaseVal = std::variant<mpq_class, QuadVal, std::int64_t, std::vector<std::int64_t>>;

/// A value of the parameter-free base field, bundled with its context so it
/// can serve as a DensePoly coefficient.
struct BaseElem {
  const FieldCtx* ctx = nullptr;
  BaseVal v;

  bool is_zero() const;
  BaseElem zero_like() const;
  BaseElem inverse() const;
  BaseElem operator-() const;
  friend BaseElem operator+(const BaseElem& a, const BaseElem& b);
  friend BaseElem operator-(const BaseElem& a, const BaseElem& b);
  friend BaseElem operator*(const BaseElem& a, const BaseElem& b);
  friend bool operator==(const BaseElem& a, const BaseElem& b) { return a.v == b.v; }
};

using ParamPoly = DensePoly<BaseElem>;

}  // namespace detail

/// Field element in canonical normal form. Equality is structural.
class FieldElem {
 public:
  FieldElem() = default;

  Field field() const { return Field(ctx_); }
  bool valid() const { return ctx_ != nullptr; }

  bool is_zero() const;
  bool is_one() const;
  FieldElem zero_like() const { return field().zero(); }
  FieldElem one_like() const { return field().one(); }

  FieldElem operator-() const;
  friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
  /// Throws std::domain_error on division by zero.
  friend FieldElem operator/(const FieldElem& a, const FieldElem& b);
  FieldElem& operator+=(const FieldElem& b) { return *this = *this + b; }
  FieldElem& operator-=(const FieldElem& b) { return *this = *this - b; }
  FieldElem& operator*=(const FieldElem& b) { return *this = *this * b; }
  friend bool operator==(const FieldElem& a, const FieldElem& b);

  FieldElem inverse() const;
  FieldElem pow(long n) const;
  FieldElem pow(const mpz_class& n) const;

  /// True iff the element lies in Q (char 0) or F_l (char l); for parameter
  /// fields the element must also be free of the parameter.
  bool in_prime_subfield() const;
  /// True iff the element does not involve the parameter.
  bool is_parameter_free() const;

  /// Value of a prime-subfield element as a rational (char 0) or a residue
  /// in [0, l) (char l). Throws when the element is not in the prime subfield.
  mpq_class to_rational() const;
  std::int64_t to_residue() const;

  /// Quadratic-field accessors: value = rational_part + sqrt_part*sqrt(d).
  mpq_class rational_part() const;
  mpq_class sqrt_part() const;
  /// Coordinates on 1, theta, ... for a finite extension (or a residue for F_l).
  std::vector<std::int64_t> coordinates() const;

  /// Numerator and denominator in the parameter (parameter fields only);
  /// coefficients are parameter-free elements of the same field.
  std::vector<FieldElem> param_numerator() const;
  std::vector<FieldElem> param_denominator() const;
  /// The same two coefficient lists, as elements of field().base().
  std::vector<FieldElem> base_numerator() const;
  std::vector<FieldElem> base_denominator() const;
  /// num(a)/den(a) in the parameter field `f`; coefficients lie in f.base().
  static FieldElem from_base_polys(const Field& f, const std::vector<FieldElem>& num, const std::vector<FieldElem>& den);

  std::string to_string() const;

 private:
  friend class Field;
  const detail::FieldCtx* ctx_ = nullptr;
  detail::BaseVal c_{};          // parameter-free fields
  detail::ParamPoly num_, den_;  // parameter fields: reduced, den monic

  static FieldElem make_base(const detail::FieldCtx* ctx, detail::BaseVal v);
  static FieldElem make_param(const detail::FieldCtx* ctx, detail::ParamPoly num, detail::ParamPoly den);
};

/// a^l in characteristic l; throws FieldError in characteristic 0.
FieldElem frobenius(const FieldElem& a);

/// Norm from F_{l^k} to F_l: a * a^l * ... * a^{l^(k-1)}.
/// Throws FieldError unless the field is finite.
FieldElem norm_to_prime(const FieldElem& a);

/// Binomial coefficient mapped into the field.
FieldElem binomial_in(const Field& f, long n, long k);

}  // namespace skewlab
