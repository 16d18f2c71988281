#include "skewlab/pdo/pdo.hpp"

#include <algorithm>
#include <sstream>

namespace skewlab {

PdoSeries::PdoSeries(DerivationPtr delta, int precision) : delta_(std::move(delta)), precision_(precision) {
  if (!delta_) throw std::invalid_argument("series without a derivation");
}

PdoSeries PdoSeries::monomial(DerivationPtr delta, const RatFunc2& f, int n, int precision) {
  PdoSeries out(std::move(delta), precision);
  if (n <= precision) out.put(n, f);
  return out;
}

PdoSeries PdoSeries::u(DerivationPtr delta, int precision) {
  const Field f = delta->field();
  return monomial(std::move(delta), RatFunc2::constant(f.one()), 1, precision);
}

RatFunc2 PdoSeries::coeff(int n) const {
  if (n > precision_) throw InsufficientPrecision("coefficient above series precision");
  auto it = terms_.find(n);
  return it == terms_.end() ? RatFunc2(field()) : it->second;
}

void PdoSeries::put(int n, RatFunc2 f) {
  if (f.is_zero()) {
    terms_.erase(n);
    return;
  }
  terms_[n] = std::move(f);
}

Valuation PdoSeries::valuation() const {
  if (terms_.empty()) return Valuation::inf();
  return Valuation::of(terms_.begin()->first);
}

int PdoSeries::working_valuation() const { return terms_.empty() ? precision_ + 1 : terms_.begin()->first; }

void PdoSeries::check_same(const PdoSeries& other) const {
  if (delta_ != other.delta_ && !(*delta_ == *other.delta_)) throw DerivationMismatch("series over different derivations");
}

PdoSeries PdoSeries::truncated(int precision) const {
  PdoSeries out(delta_, std::min(precision, precision_));
  for (const auto& [n, f] : terms_)
    if (n <= out.precision_) out.terms_.emplace(n, f);
  return out;
}

PdoSeries PdoSeries::operator-() const {
  PdoSeries out = *this;
  for (auto& [n, f] : out.terms_) f = -f;
  return out;
}

PdoSeries operator+(const PdoSeries& a, const PdoSeries& b) {
  a.check_same(b);
  PdoSeries out = a.truncated(b.precision_);
  for (const auto& [n, f] : b.terms_)
    if (n <= out.precision_) out.put(n, out.coeff(n) + f);
  return out;
}

PdoSeries operator-(const PdoSeries& a, const PdoSeries& b) { return a + (-b); }

namespace {

// Coefficient of delta^j(f) u^(n+j) in u^n f.
FieldElem commutation_coeff(const Field& k, int n, int j) {
  if (n >= 1) return binomial_in(k, n + j - 1, j);
  if (j > -n) return k.zero();
  const FieldElem c = binomial_in(k, -n, j);
  return j % 2 == 0 ? c : -c;
}

}  // namespace

PdoSeries operator*(const PdoSeries& a, const PdoSeries& b) {
  a.check_same(b);
  const int va = a.working_valuation();
  const int vb = b.working_valuation();
  const int prec = std::min(a.precision_ + vb, va + b.precision_);
  PdoSeries out(a.delta_, prec);
  const Field& k = a.field();
  std::map<int, std::vector<RatFunc2>> acc;
  for (const auto& [m, g] : b.terms_) {
    std::vector<RatFunc2> iter{g};
    for (const auto& [n, f] : a.terms_) {
      for (int j = 0; n + m + j <= prec; ++j) {
        if (n <= 0 && j > -n) break;
        while (static_cast<int>(iter.size()) <= j) iter.push_back(a.delta_->apply(iter.back()));
        if (iter[j].is_zero()) break;
        const FieldElem c = commutation_coeff(k, n, j);
        if (c.is_zero()) continue;
        acc[n + m + j].push_back(f * iter[j].scaled(c));
      }
    }
  }
  for (auto& [e, parts] : acc) out.put(e, sum(k, parts));
  return out;
}

std::string PdoSeries::to_string(const VarNames& names) const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [n, f] : terms_) {
    std::string cs = f.to_string(names);
    const bool compound = cs.find_first_of("+-/", 1) != std::string::npos;
    std::string body;
    if (n == 0) {
      body = cs;
    } else {
      const std::string up = n == 1 ? "u" : "u^" + std::to_string(n);
      if (cs == "1") body = up;
      else if (cs == "-1") body = "-" + up;
      else body = (compound ? "(" + cs + ")" : cs) + "*" + up;
    }
    if (!first && body[0] != '-') os << "+";
    os << body;
    first = false;
  }
  if (!first) os << "+";
  os << "O(u^" << precision_ + 1 << ")";
  return os.str();
}

PdoSeries pdo_mul(const PdoSeries& a, const PdoSeries& b) { return a * b; }

PdoSeries pdo_from_skew(const SkewPoly& f, int precision) {
  PdoSeries out(share(f.derivation().negated()), precision);
  for (const auto& [i, c] : f.coeffs())
    if (-i <= precision) out = out + PdoSeries::monomial(out.delta_ptr(), c, -i, precision);
  return out;
}

PdoSeries pdo_inv(const PdoSeries& a) {
  if (a.is_zero_to_precision()) throw std::domain_error("inverse of a series with no known nonzero coefficient");
  const int v = a.valuation().value;
  const int prec = a.precision() - 2 * v;
  const Field& k = a.field();
  const RatFunc2 lead_inv = a.coeff(v).inverse();
  const auto& delta = a.delta_ptr();
  // Solve b*a = 1 term by term. Only the coefficients of a get differentiated,
  // so their iterated derivatives are computed once.
  std::map<int, std::vector<RatFunc2>> iters;
  for (const auto& [m, g] : a.terms()) iters[m].push_back(g);
  auto iterate = [&](int m, int j) -> const RatFunc2& {
    auto& it = iters[m];
    while (static_cast<int>(it.size()) <= j) it.push_back(delta->apply(it.back()));
    return it[j];
  };
  std::map<int, RatFunc2> b;
  for (int n = -v; n <= prec; ++n) {
    // Coefficient of u^(n+v) in (b so far)*a.
    const int e = n + v;
    std::vector<RatFunc2> parts;
    for (const auto& [bn, f] : b)
      for (const auto& [m, g] : a.terms()) {
        const int j = e - bn - m;
        if (j < 0) continue;
        if (bn <= 0 && j > -bn) continue;
        const FieldElem c = commutation_coeff(k, bn, j);
        if (c.is_zero()) continue;
        const RatFunc2& dj = iterate(m, j);
        if (!dj.is_zero()) parts.push_back(f * dj.scaled(c));
      }
    const RatFunc2 got = sum(k, parts);
    const RatFunc2 target = e == 0 ? RatFunc2::constant(k.one()) : RatFunc2(k);
    RatFunc2 c = (target - got) * lead_inv;
    if (!c.is_zero()) b.emplace(n, std::move(c));
  }
  PdoSeries out(delta, prec);
  for (auto& [n, f] : b) out = out + PdoSeries::monomial(delta, f, n, prec);
  return out;
}

Valuation pdo_valuation(const PdoSeries& a) { return a.valuation(); }

bool equal_to_precision(const PdoSeries& a, const PdoSeries& b) { return (a - b).is_zero_to_precision(); }

LeadingConstraintReport leading_constraint_check(const PdoSeries& xinv, const PdoSeries& y, const PdoSeries& z,
                                                 const FieldElem& beta, const Derivation& d) {
  LeadingConstraintReport rep;
  auto fail = [&rep](std::string why) {
    rep.precondition_failure = std::move(why);
    return rep;
  };
  if (!(xinv.valuation() == Valuation::of(1))) return fail("v(X^-1) != 1");
  if (!(y.valuation() == Valuation::of(0))) return fail("v(Y) != 0");
  if (!(z.valuation() == Valuation::of(0))) return fail("v(Z) != 0");
  rep.c1 = xinv.coeff(1);
  rep.y0 = y.coeff(0);
  rep.z0 = z.coeff(0);
  if (rep.y0->is_constant()) return fail("y0 in k");
  if (rep.z0->is_constant()) return fail("z0 in k");
  rep.preconditions_ok = true;
  rep.c1_matches_y0 = *rep.c1 == log_derivative(d, *rep.y0);
  rep.c1_matches_z0 = rep.c1->scaled(beta) == log_derivative(d, *rep.z0);

  const PdoSeries r1 = y * xinv - xinv * y - xinv * y * xinv;
  const PdoSeries bz = PdoSeries::coefficient(z.delta_ptr(), RatFunc2::constant(beta), z.precision());
  const PdoSeries r2 = z * xinv - xinv * z - bz * xinv * z * xinv;
  const PdoSeries r3 = y * z - z * y;
  rep.relation_precision = std::min({r1.precision(), r2.precision(), r3.precision()});
  if (!r1.is_zero_to_precision()) rep.failed_relations.push_back("YX^-1-X^-1Y=X^-1YX^-1 at u^" + std::to_string(r1.valuation().value));
  if (!r2.is_zero_to_precision()) rep.failed_relations.push_back("ZX^-1-X^-1Z=beta*X^-1ZX^-1 at u^" + std::to_string(r2.valuation().value));
  if (!r3.is_zero_to_precision()) rep.failed_relations.push_back("YZ=ZY at u^" + std::to_string(r3.valuation().value));
  rep.relations_hold = rep.failed_relations.empty();
  return rep;
}

}  // namespace skewlab
