#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "skewlab/ratfunc/ratfunc.hpp"

namespace skewlab {

class DerivationMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Integer valuation with +infinity for zero.
struct Valuation {
  bool infinite = false;
  long value = 0;

  static Valuation inf() { return {true, 0}; }
  static Valuation of(long v) { return {false, v}; }
  friend bool operator==(const Valuation& a, const Valuation& b) {
    return a.infinite == b.infinite && (a.infinite || a.value == b.value);
  }
  friend Valuation operator+(const Valuation& a, const Valuation& b) {
    if (a.infinite || b.infinite) return inf();
    return of(a.value + b.value);
  }
  std::string to_string() const { return infinite ? "+inf" : std::to_string(value); }
};

using DerivationPtr = std::shared_ptr<const Derivation>;

inline DerivationPtr share(Derivation d) { return std::make_shared<const Derivation>(std::move(d)); }

/// Element sum f_i x^i of k(y,z)[x; D], coefficients on the left.
class SkewPoly {
 public:
  explicit SkewPoly(DerivationPtr d);

  static SkewPoly coefficient(DerivationPtr d, const RatFunc2& f);
  static SkewPoly monomial(DerivationPtr d, const RatFunc2& f, int n);
  static SkewPoly x(DerivationPtr d);
  static SkewPoly constant(DerivationPtr d, const FieldElem& c);

  const Derivation& derivation() const { return *d_; }
  const DerivationPtr& derivation_ptr() const { return d_; }
  const Field& field() const { return d_->field(); }
  const std::map<int, RatFunc2>& coeffs() const { return c_; }

  bool is_zero() const { return c_.empty(); }
  /// -1 for zero.
  int degree() const { return c_.empty() ? -1 : c_.rbegin()->first; }
  RatFunc2 coeff(int i) const;

  SkewPoly operator-() const;
  friend SkewPoly operator+(const SkewPoly& a, const SkewPoly& b);
  friend SkewPoly operator-(const SkewPoly& a, const SkewPoly& b);
  friend SkewPoly operator*(const SkewPoly& a, const SkewPoly& b);
  friend bool operator==(const SkewPoly& a, const SkewPoly& b);

  /// Left multiplication by a coefficient.
  SkewPoly left_scaled(const RatFunc2& f) const;

  std::string to_string(const VarNames& names = kYZ, const std::string& x_name = "x") const;

 private:
  void check_same(const SkewPoly& other) const;
  void put(int i, RatFunc2 f);

  DerivationPtr d_;
  std::map<int, RatFunc2> c_;
};

SkewPoly skew_mul(const SkewPoly& f, const SkewPoly& g);
SkewPoly commutator(const SkewPoly& f, const SkewPoly& g);
SkewPoly skew_pow(const SkewPoly& f, unsigned n);
/// -deg in x, +inf for zero.
Valuation valuation_v(const SkewPoly& f);
bool is_central_against(const SkewPoly& f, const std::vector<SkewPoly>& gens);

}  // namespace skewlab
