#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

namespace skewlab {

/// Dense univariate polynomial, coefficients stored lowest degree first.
///
/// `T` must be a field-like value type providing `is_zero()`, `zero_like()`,
/// `inverse()`, unary and binary `+ - *` and `==`. The zero polynomial has an
/// empty coefficient vector, so every stored polynomial has a nonzero leading
/// coefficient.
template <class T>
class DensePoly {
 public:
  DensePoly() = default;
  explicit DensePoly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
  explicit DensePoly(T constant) {
    if (!constant.is_zero()) c_.push_back(std::move(constant));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  std::size_t size() const { return c_.size(); }
  const T& operator[](std::size_t i) const { return c_[i]; }
  const T& lead() const { return c_.back(); }
  const std::vector<T>& coeffs() const { return c_; }

  /// Multiplies every coefficient by `s`.
  DensePoly scaled(const T& s) const {
    if (s.is_zero()) return {};
    std::vector<T> out;
    out.reserve(c_.size());
    for (const auto& c : c_) out.push_back(c * s);
    return DensePoly(std::move(out));
  }

  /// Multiplies by the monomial t^k.
  DensePoly shifted(std::size_t k, const T& zero) const {
    if (is_zero()) return {};
    std::vector<T> out(k, zero);
    out.insert(out.end(), c_.begin(), c_.end());
    return DensePoly(std::move(out));
  }

  DensePoly monic() const {
    if (is_zero()) return {};
    const T inv = lead().inverse();
    return scaled(inv);
  }

  friend DensePoly operator+(const DensePoly& a, const DensePoly& b) {
    const DensePoly& longer = a.c_.size() >= b.c_.size() ? a : b;
    const DensePoly& shorter = a.c_.size() >= b.c_.size() ? b : a;
    std::vector<T> out = longer.c_;
    for (std::size_t i = 0; i < shorter.c_.size(); ++i) out[i] = out[i] + shorter.c_[i];
    return DensePoly(std::move(out));
  }

  DensePoly operator-() const {
    std::vector<T> out;
    out.reserve(c_.size());
    for (const auto& c : c_) out.push_back(-c);
    return DensePoly(std::move(out));
  }

  friend DensePoly operator-(const DensePoly& a, const DensePoly& b) { return a + (-b); }

  friend DensePoly operator*(const DensePoly& a, const DensePoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> out(a.c_.size() + b.c_.size() - 1, a.c_[0].zero_like());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] = out[i + j] + a.c_[i] * b.c_[j];
    }
    return DensePoly(std::move(out));
  }

  friend bool operator==(const DensePoly& a, const DensePoly& b) { return a.c_ == b.c_; }

  /// Euclidean division over a field: a = q*b + r with deg r < deg b.
  static std::pair<DensePoly, DensePoly> divmod(const DensePoly& a, const DensePoly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree()) return {DensePoly{}, a};
    const T zero = a.c_[0].zero_like();
    std::vector<T> rem = a.c_;
    std::vector<T> quo(a.c_.size() - b.c_.size() + 1, zero);
    const T inv_lead = b.lead().inverse();
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
      const T& top = rem[k + b.degree()];
      if (top.is_zero()) continue;
      T coef = top * inv_lead;
      for (int j = 0; j <= b.degree(); ++j) rem[k + j] = rem[k + j] - coef * b.c_[j];
      quo[k] = std::move(coef);
    }
    rem.resize(b.c_.size() - 1, zero);
    return {DensePoly(std::move(quo)), DensePoly(std::move(rem))};
  }

  /// Exact quotient; throws when `b` does not divide `a`.
  static DensePoly exact_div(const DensePoly& a, const DensePoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::domain_error("polynomial division is not exact");
    return q;
  }

  /// Monic gcd (zero only when both inputs are zero).
  static DensePoly gcd(DensePoly a, DensePoly b) {
    while (!b.is_zero()) {
      auto r = divmod(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<T> c_;
};

}  // namespace skewlab
