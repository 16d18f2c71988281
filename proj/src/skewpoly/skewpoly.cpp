#include "skewlab/skewpoly/skewpoly.hpp"

#include <sstream>

namespace skewlab {

SkewPoly::SkewPoly(DerivationPtr d) : d_(std::move(d)) {
  if (!d_) throw std::invalid_argument("skew polynomial without a derivation");
}

SkewPoly SkewPoly::coefficient(DerivationPtr d, const RatFunc2& f) { return monomial(std::move(d), f, 0); }

SkewPoly SkewPoly::monomial(DerivationPtr d, const RatFunc2& f, int n) {
  if (n < 0) throw std::invalid_argument("negative power of x in a skew polynomial");
  SkewPoly out(std::move(d));
  out.put(n, f);
  return out;
}

SkewPoly SkewPoly::x(DerivationPtr d) {
  const Field f = d->field();
  return monomial(std::move(d), RatFunc2::constant(f.one()), 1);
}

SkewPoly SkewPoly::constant(DerivationPtr d, const FieldElem& c) { return coefficient(std::move(d), RatFunc2::constant(c)); }

RatFunc2 SkewPoly::coeff(int i) const {
  auto it = c_.find(i);
  return it == c_.end() ? RatFunc2(field()) : it->second;
}

void SkewPoly::put(int i, RatFunc2 f) {
  if (f.is_zero()) {
    c_.erase(i);
    return;
  }
  c_[i] = std::move(f);
}

void SkewPoly::check_same(const SkewPoly& other) const {
  if (d_ != other.d_ && !(*d_ == *other.d_)) throw DerivationMismatch("skew polynomials over different derivations");
}

SkewPoly SkewPoly::operator-() const {
  SkewPoly out = *this;
  for (auto& [i, f] : out.c_) f = -f;
  return out;
}

SkewPoly operator+(const SkewPoly& a, const SkewPoly& b) {
  a.check_same(b);
  SkewPoly out = a;
  for (const auto& [i, f] : b.c_) out.put(i, out.coeff(i) + f);
  return out;
}

SkewPoly operator-(const SkewPoly& a, const SkewPoly& b) { return a + (-b); }

SkewPoly operator*(const SkewPoly& a, const SkewPoly& b) {
  a.check_same(b);
  SkewPoly out(a.d_);
  if (a.is_zero() || b.is_zero()) return out;
  const Field& k = a.field();
  const int da = a.degree();
  std::map<int, RatFunc2> acc;
  for (const auto& [m, g] : b.c_) {
    // D^j(g) for j = 0..deg a.
    std::vector<RatFunc2> iter{g};
    for (int j = 1; j <= da; ++j) {
      if (iter.back().is_zero()) break;
      iter.push_back(a.d_->apply(iter.back()));
    }
    for (const auto& [n, f] : a.c_) {
      // x^n g = sum_j C(n,j) D^j(g) x^(n-j)
      for (int j = 0; j <= n && j < static_cast<int>(iter.size()); ++j) {
        if (iter[j].is_zero()) continue;
        const FieldElem c = binomial_in(k, n, j);
        if (c.is_zero()) continue;
        RatFunc2 term = f * iter[j].scaled(c);
        const int e = n - j + m;
        auto it = acc.find(e);
        if (it == acc.end()) acc.emplace(e, std::move(term));
        else it->second += term;
      }
    }
  }
  for (auto& [e, f] : acc) out.put(e, std::move(f));
  return out;
}

bool operator==(const SkewPoly& a, const SkewPoly& b) {
  if (a.d_ != b.d_ && !(*a.d_ == *b.d_)) return false;
  return a.c_ == b.c_;
}

SkewPoly SkewPoly::left_scaled(const RatFunc2& f) const {
  SkewPoly out(d_);
  for (const auto& [i, g] : c_) out.put(i, f * g);
  return out;
}

std::string SkewPoly::to_string(const VarNames& names, const std::string& x_name) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    const int i = it->first;
    std::string cs = it->second.to_string(names);
    const bool compound = cs.find_first_of("+-/", 1) != std::string::npos;
    std::string body;
    if (i == 0) {
      body = cs;
    } else {
      const std::string xp = i == 1 ? x_name : x_name + "^" + std::to_string(i);
      if (cs == "1") body = xp;
      else if (cs == "-1") body = "-" + xp;
      else body = (compound ? "(" + cs + ")" : cs) + "*" + xp;
    }
    if (!first && body[0] != '-') os << "+";
    os << body;
    first = false;
  }
  return os.str();
}

SkewPoly skew_mul(const SkewPoly& f, const SkewPoly& g) { return f * g; }

SkewPoly commutator(const SkewPoly& f, const SkewPoly& g) { return f * g - g * f; }

SkewPoly skew_pow(const SkewPoly& f, unsigned n) {
  SkewPoly out = SkewPoly::constant(f.derivation_ptr(), f.field().one());
  for (unsigned i = 0; i < n; ++i) out = out * f;
  return out;
}

Valuation valuation_v(const SkewPoly& f) {
  if (f.is_zero()) return Valuation::inf();
  return Valuation::of(-f.degree());
}

bool is_central_against(const SkewPoly& f, const std::vector<SkewPoly>& gens) {
  for (const auto& g : gens)
    if (!commutator(f, g).is_zero()) return false;
  return true;
}

}  // namespace skewlab
