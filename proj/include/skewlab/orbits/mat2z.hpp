#pragma once

#include <gmpxx.h>

#include <string>

#include "skewlab/coeff/field.hpp"

namespace skewlab {

/// Integer matrix (n q; m r) acting by alpha -> (n alpha + q)/(m alpha + r).
struct Mat2Z {
  mpz_class n = 1, q = 0, m = 0, r = 1;

  Mat2Z() = default;
  Mat2Z(mpz_class n_, mpz_class q_, mpz_class m_, mpz_class r_)
      : n(std::move(n_)), q(std::move(q_)), m(std::move(m_)), r(std::move(r_)) {}

  static Mat2Z identity() { return {}; }
  static Mat2Z translation(const mpz_class& k) { return {1, k, 0, 1}; }
  /// S = (0 -1; 1 0).
  static Mat2Z inversion() { return {0, -1, 1, 0}; }

  mpz_class det() const { return n * r - q * m; }
  bool unimodular() const {
    const mpz_class d = det();
    return d == 1 || d == -1;
  }
  /// Inverse over Z; throws std::domain_error unless unimodular.
  Mat2Z inverse() const;
  /// (n q m r) entries printed as "n,q,m,r".
  std::string to_string() const;

  friend Mat2Z operator*(const Mat2Z& a, const Mat2Z& b) {
    return {a.n * b.n + a.q * b.m, a.n * b.q + a.q * b.r, a.m * b.n + a.r * b.m, a.m * b.q + a.r * b.r};
  }
  friend bool operator==(const Mat2Z& a, const Mat2Z& b) {
    return a.n == b.n && a.q == b.q && a.m == b.m && a.r == b.r;
  }
};

/// Parses "n,q,m,r"; throws std::invalid_argument on malformed input.
Mat2Z parse_matrix(const std::string& text);

/// (n alpha + q)/(m alpha + r) in the field of alpha.
/// Throws std::domain_error when the denominator vanishes.
FieldElem homographic(const Mat2Z& M, const FieldElem& alpha);

/// True when det M maps to zero in the field (M unusable for morphisms).
bool det_vanishes_in(const Mat2Z& M, const Field& f);

}  // namespace skewlab
