#include "skewlab/ratfunc/ratfunc.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace skewlab {

RatFunc2 RatFunc2::constant(const FieldElem& c) {
  RatFunc2 out(c.field());
  out.num_ = Poly2::constant(c);
  return out;
}

RatFunc2 RatFunc2::from_poly(const Poly2& p) {
  RatFunc2 out(p.field());
  out.num_ = p;
  return out;
}

RatFunc2 RatFunc2::fraction(const Poly2& num, const Poly2& den) {
  if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
  RatFunc2 out(den.field());
  if (num.is_zero()) return out;
  if (den.is_constant()) {
    out.num_ = num.scaled(den.constant_value().inverse());
    return out;
  }
  const Poly2 g = Poly2::gcd(num, den);
  Poly2 n = g.is_constant() ? num : Poly2::exact_div(num, g);
  Poly2 d = g.is_constant() ? den : Poly2::exact_div(den, g);
  const FieldElem inv = d.lead().c.inverse();
  out.num_ = n.scaled(inv);
  out.den_ = d.scaled(inv);
  return out;
}

RatFunc2 RatFunc2::fraction_reduced(const Poly2& num, const Poly2& den) {
  RatFunc2 out(den.field());
  if (num.is_zero()) return out;
  const FieldElem inv = den.lead().c.inverse();
  out.num_ = num.scaled(inv);
  out.den_ = den.scaled(inv);
  return out;
}

RatFunc2 RatFunc2::monomial(const FieldElem& c, int i, int j) {
  const Field f = c.field();
  const Poly2 num = Poly2::monomial(c, i > 0 ? i : 0, j > 0 ? j : 0);
  if (i >= 0 && j >= 0) return from_poly(num);
  RatFunc2 out(f);
  if (c.is_zero()) return out;
  out.num_ = num;
  out.den_ = Poly2::monomial(f.one(), i < 0 ? -i : 0, j < 0 ? -j : 0);
  return out;
}

bool RatFunc2::is_one() const { return den_.is_constant() && num_.is_constant() && !num_.is_zero() && num_.lead().c.is_one(); }

FieldElem RatFunc2::constant_value() const {
  if (!is_constant()) throw std::logic_error("rational function is not constant");
  return num_.is_zero() ? field().zero() : num_.lead().c;
}

RatFunc2 RatFunc2::operator-() const {
  RatFunc2 out = *this;
  out.num_ = -num_;
  return out;
}

RatFunc2 operator+(const RatFunc2& a, const RatFunc2& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) {
    if (a.den_.is_constant()) return RatFunc2::from_poly(a.num_ + b.num_);
    return RatFunc2::fraction(a.num_ + b.num_, a.den_);
  }
  if (a.den_.is_constant()) return RatFunc2::fraction(a.num_ * b.den_ + b.num_, b.den_);
  if (b.den_.is_constant()) return RatFunc2::fraction(a.num_ + b.num_ * a.den_, a.den_);
  const Poly2 g = Poly2::gcd(a.den_, b.den_);
  const Poly2 ra = Poly2::exact_div(a.den_, g);
  const Poly2 rb = Poly2::exact_div(b.den_, g);
  return RatFunc2::fraction(a.num_ * rb + b.num_ * ra, a.den_ * rb);
}

RatFunc2 operator-(const RatFunc2& a, const RatFunc2& b) { return a + (-b); }

RatFunc2 sum(const Field& f, const std::vector<RatFunc2>& terms) {
  // Terms sharing a denominator are added first; the rest go over the lcm.
  std::vector<std::pair<Poly2, Poly2>> groups;  // (den, num)
  for (const auto& t : terms) {
    if (t.is_zero()) continue;
    auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& g) { return g.first == t.denominator(); });
    if (it == groups.end())
      groups.emplace_back(t.denominator(), t.numerator());
    else
      it->second = it->second + t.numerator();
  }
  if (groups.empty()) return RatFunc2(f);
  if (groups.size() == 1) return RatFunc2::fraction(groups[0].second, groups[0].first);
  Poly2 den = groups[0].first, num = groups[0].second;
  for (std::size_t i = 1; i < groups.size(); ++i) {
    const auto& [d, n] = groups[i];
    const Poly2 g = Poly2::gcd(den, d);
    const Poly2 rd = g.is_constant() ? d : Poly2::exact_div(d, g);
    const Poly2 rden = g.is_constant() ? den : Poly2::exact_div(den, g);
    num = num * rd + n * rden;
    den = den * rd;
  }
  return RatFunc2::fraction(num, den);
}

RatFunc2 operator*(const RatFunc2& a, const RatFunc2& b) {
  if (a.is_zero()) return a;
  if (b.is_zero()) return b;
  if (a.den_.is_constant() && b.den_.is_constant()) return RatFunc2::from_poly(a.num_ * b.num_);
  // Cross-cancel so the product is already reduced.
  const Poly2 g1 = Poly2::gcd(a.num_, b.den_);
  const Poly2 g2 = Poly2::gcd(b.num_, a.den_);
  const Poly2 n1 = g1.is_constant() ? a.num_ : Poly2::exact_div(a.num_, g1);
  const Poly2 d2 = g1.is_constant() ? b.den_ : Poly2::exact_div(b.den_, g1);
  const Poly2 n2 = g2.is_constant() ? b.num_ : Poly2::exact_div(b.num_, g2);
  const Poly2 d1 = g2.is_constant() ? a.den_ : Poly2::exact_div(a.den_, g2);
  Poly2 num = n1 * n2;
  Poly2 den = d1 * d2;
  RatFunc2 out(a.field());
  const FieldElem inv = den.lead().c.inverse();
  out.num_ = num.scaled(inv);
  out.den_ = den.scaled(inv);
  return out;
}

RatFunc2 operator/(const RatFunc2& a, const RatFunc2& b) { return a * b.inverse(); }

RatFunc2 RatFunc2::scaled(const FieldElem& c) const {
  if (c.is_zero()) return zero_like();
  RatFunc2 out = *this;
  out.num_ = num_.scaled(c);
  return out;
}

RatFunc2 RatFunc2::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero rational function");
  RatFunc2 out(field());
  const FieldElem inv = num_.lead().c.inverse();
  out.num_ = den_.scaled(inv);
  out.den_ = num_.scaled(inv);
  return out;
}

RatFunc2 RatFunc2::pow(long n) const {
  if (n < 0) return inverse().pow(-n);
  RatFunc2 out(field());
  out.num_ = num_.pow(static_cast<unsigned>(n));
  out.den_ = den_.pow(static_cast<unsigned>(n));
  return out;
}

RatFunc2 RatFunc2::partial_y() const {
  if (den_.is_constant()) return from_poly(num_.partial_y());
  return fraction(num_.partial_y() * den_ - num_ * den_.partial_y(), den_ * den_);
}

RatFunc2 RatFunc2::partial_z() const {
  if (den_.is_constant()) return from_poly(num_.partial_z());
  return fraction(num_.partial_z() * den_ - num_ * den_.partial_z(), den_ * den_);
}

std::string RatFunc2::to_string(const VarNames& names) const {
  if (den_.is_constant()) return num_.to_string(names);
  std::string n = num_.to_string(names);
  if (!num_.is_monomial()) n = "(" + n + ")";
  std::string d = den_.to_string(names);
  if (!den_.is_monomial() || (den_.lead().ey != 0 && den_.lead().ez != 0)) d = "(" + d + ")";
  return n + "/" + d;
}

namespace {

RatFunc2 eval_poly(const Poly2& p, const RatFunc2& Y, const RatFunc2& Z, std::vector<RatFunc2>& ypow,
                   std::vector<RatFunc2>& zpow) {
  auto power = [](std::vector<RatFunc2>& cache, const RatFunc2& base, int e) -> const RatFunc2& {
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * base);
    return cache[e];
  };
  RatFunc2 out = Y.zero_like();
  for (const auto& t : p.terms()) out += (power(ypow, Y, t.ey) * power(zpow, Z, t.ez)).scaled(t.c);
  return out;
}

}  // namespace

RatFunc2 substitute(const RatFunc2& f, const RatFunc2& Y, const RatFunc2& Z) {
  std::vector<RatFunc2> ypow{Y.one_like()}, zpow{Z.one_like()};
  const RatFunc2 num = eval_poly(f.numerator(), Y, Z, ypow, zpow);
  if (f.is_polynomial()) return num;
  return num / eval_poly(f.denominator(), Y, Z, ypow, zpow);
}

Derivation::Derivation(RatFunc2 image_of_y, RatFunc2 image_of_z) : dy_(std::move(image_of_y)), dz_(std::move(image_of_z)) {
  if (!(dy_.field() == dz_.field())) throw std::invalid_argument("derivation images over different fields");
}

RatFunc2 Derivation::apply(const RatFunc2& f) const {
  if (!(f.field() == field())) throw std::invalid_argument("derivation applied across coefficient fields");
  if (f.is_constant()) return f.zero_like();
  auto on_poly = [this](const Poly2& p) {
    RatFunc2 r(p.field());
    const Poly2 py = p.partial_y();
    const Poly2 pz = p.partial_z();
    if (!py.is_zero()) r += RatFunc2::from_poly(py) * dy_;
    if (!pz.is_zero()) r += RatFunc2::from_poly(pz) * dz_;
    return r;
  };
  const RatFunc2 dn = on_poly(f.numerator());
  if (f.is_polynomial()) return dn;
  if (dy_.is_polynomial() && dz_.is_polynomial()) {
    // With g = gcd(d, D d) the quotient (D n (d/g) - n (D d/g)) / (d (d/g))
    // is usually already reduced; a gcd against d confirms it.
    const Poly2& n = f.numerator();
    const Poly2& d = f.denominator();
    const Poly2 dd = on_poly(d).numerator();
    const Poly2 g = Poly2::gcd(d, dd);
    const Poly2 dg = Poly2::exact_div(d, g);
    const Poly2 num = dn.numerator() * dg - n * Poly2::exact_div(dd, g);
    const Poly2 den = d * dg;
    if (num.is_zero()) return f.zero_like();
    if (Poly2::gcd(num, d).is_constant()) return RatFunc2::fraction_reduced(num, den);
    return RatFunc2::fraction(num, den);
  }
  const RatFunc2 dd = on_poly(f.denominator());
  const RatFunc2 den = RatFunc2::from_poly(f.denominator());
  const RatFunc2 num = RatFunc2::from_poly(f.numerator());
  return (dn * den - num * dd) / (den * den);
}

Derivation Derivation::euler(const FieldElem& alpha) {
  const Field f = alpha.field();
  return Derivation(RatFunc2::y(f), RatFunc2::z(f).scaled(alpha));
}

Derivation Derivation::delta_yz(const Field& f) { return Derivation(RatFunc2::y(f), RatFunc2::y(f) + RatFunc2::z(f)); }

Derivation Derivation::delta_yt(const Field& f) { return Derivation(RatFunc2::y(f), RatFunc2::constant(f.one())); }

RatFunc2 derivation_apply(const Derivation& d, const RatFunc2& f) { return d.apply(f); }

RatFunc2 log_derivative(const Derivation& d, const RatFunc2& f) {
  if (f.is_zero()) throw std::domain_error("logarithmic derivative of zero");
  return d.apply(f) / f;
}

bool in_frobenius_subfield(const RatFunc2& f) {
  if (f.field().characteristic() == 0) throw FieldError("Frobenius subfield test needs positive characteristic");
  return f.partial_y().is_zero() && f.partial_z().is_zero();
}

}  // namespace skewlab
