#include "skewlab/ratfunc/poly2.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace skewlab {

namespace {

bool term_order(const Term2& a, const Term2& b) { return grlex_greater(a.ey, a.ez, b.ey, b.ez); }

using ZPoly = DensePoly<FieldElem>;
// K[z][y]: index is the y-degree.
using RecPoly = std::vector<ZPoly>;

void rec_trim(RecPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

RecPoly to_rec(const Poly2& p) {
  RecPoly out(p.degree_y() + 1);
  const FieldElem zero = p.field().zero();
  std::vector<std::vector<FieldElem>> dense(out.size());
  for (const auto& t : p.terms()) {
    auto& row = dense[t.ey];
    if (static_cast<int>(row.size()) <= t.ez) row.resize(t.ez + 1, zero);
    row[t.ez] = t.c;
  }
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = ZPoly(std::move(dense[i]));
  rec_trim(out);
  return out;
}

Poly2 from_rec(const Field& f, const RecPoly& r) {
  Poly2 out(f);
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < r[i].size(); ++j)
      if (!r[i][j].is_zero()) out = out + Poly2::monomial(r[i][j], static_cast<int>(i), static_cast<int>(j));
  return out;
}

ZPoly field_gcd(const ZPoly& a, const ZPoly& b);

ZPoly rec_content(const RecPoly& p) {
  for (const auto& c : p)
    if (c.degree() == 0) return ZPoly(c[0].field().one());
  ZPoly g;
  for (const auto& c : p) {
    if (c.is_zero()) continue;
    g = field_gcd(g, c);
    if (g.degree() == 0) break;
  }
  return g;
}

RecPoly rec_div_content(const RecPoly& p, const ZPoly& c) {
  if (c.degree() <= 0) {
    if (c.is_zero()) return p;
    RecPoly out;
    const FieldElem inv = c.lead().inverse();
    for (const auto& x : p) out.push_back(x.scaled(inv));
    return out;
  }
  RecPoly out;
  for (const auto& x : p) out.push_back(ZPoly::exact_div(x, c));
  return out;
}

RecPoly rec_primitive(const RecPoly& p) { return rec_div_content(p, rec_content(p)); }

// Pseudo-remainder of a by b in K[z][y].
RecPoly rec_prem(RecPoly a, const RecPoly& b) {
  const int n = static_cast<int>(b.size()) - 1;
  const ZPoly& lc = b.back();
  rec_trim(a);
  while (static_cast<int>(a.size()) - 1 >= n && !a.empty()) {
    const int shift = static_cast<int>(a.size()) - 1 - n;
    const ZPoly top = a.back();
    for (auto& c : a) c = c * lc;
    for (int j = 0; j <= n; ++j) a[shift + j] = a[shift + j] - top * b[j];
    rec_trim(a);
  }
  return a;
}

// The i-th evaluation point for z, or nullopt once a finite field runs out.
std::optional<FieldElem> nth_point(const Field& f, long i) {
  const long ell = static_cast<long>(f.characteristic());
  if (ell == 0) return f.from_int(i % 2 == 0 ? i / 2 + 1 : -(i / 2 + 1));
  if (!f.has_parameter() && mpz_class(i) >= f.order()) return std::nullopt;
  const FieldElem w = f.has_parameter() ? f.parameter() : f.extension() == ExtensionKind::none ? f.one() : f.generator();
  FieldElem out = f.zero(), pw = f.one();
  for (long r = i; r > 0; r /= ell) {
    out += f.from_int(r % ell) * pw;
    pw *= w;
  }
  return out;
}

ZPoly eval_rec(const RecPoly& p, const FieldElem& z0) {
  std::vector<FieldElem> out;
  out.reserve(p.size());
  for (const auto& c : p) {
    FieldElem v = z0.field().zero();
    for (std::size_t j = c.size(); j-- > 0;) v = v * z0 + c[j];
    out.push_back(std::move(v));
  }
  return ZPoly(std::move(out));
}

// Newton interpolation through (xs[i], ys[i]).
ZPoly interpolate(const std::vector<FieldElem>& xs, std::vector<FieldElem> ys) {
  const std::size_t n = xs.size();
  for (std::size_t k = 1; k < n; ++k)
    for (std::size_t i = n - 1; i >= k; --i) ys[i] = (ys[i] - ys[i - 1]) / (xs[i] - xs[i - k]);
  const FieldElem one = xs[0].field().one();
  ZPoly out(ys[n - 1]);
  for (std::size_t i = n - 1; i-- > 0;) out = out * ZPoly(std::vector<FieldElem>{-xs[i], one}) + ZPoly(ys[i]);
  return out;
}

int max_z_degree(const RecPoly& p) {
  int d = 0;
  for (const auto& c : p) d = std::max(d, c.degree());
  return d;
}

// Gcd of two primitive polynomials in K[z][y] by evaluating z and
// interpolating, normalized so its leading coefficient divides
// gcd(lc a, lc b). Candidates are checked by division; nullopt means the
// caller should fall back to the remainder sequence.
std::optional<RecPoly> interpolation_gcd(const Field& f, const RecPoly& a, const RecPoly& b) {
  const ZPoly gamma = field_gcd(a.back(), b.back());
  const int bound = gamma.degree() + std::min(max_z_degree(a), max_z_degree(b));
  constexpr long kMaxPoints = 400;
  int best = static_cast<int>(std::min(a.size(), b.size()));
  std::vector<FieldElem> xs;
  std::vector<ZPoly> images;
  for (long i = 0; i < kMaxPoints; ++i) {
    const auto z0 = nth_point(f, i);
    if (!z0) return std::nullopt;
    const FieldElem g0 = eval_rec(RecPoly{gamma}, *z0)[0];
    if (g0.is_zero()) continue;
    const ZPoly sa = eval_rec(a, *z0), sb = eval_rec(b, *z0);
    if (sa.degree() + 1 != static_cast<int>(a.size()) || sb.degree() + 1 != static_cast<int>(b.size())) continue;
    const ZPoly h = field_gcd(sa, sb);
    if (h.degree() == 0) return RecPoly{ZPoly(f.one())};
    if (h.degree() > best) continue;
    if (h.degree() < best) {
      best = h.degree();
      xs.clear();
      images.clear();
    }
    xs.push_back(*z0);
    images.push_back(h.scaled(g0));
    if (static_cast<int>(xs.size()) < bound + 1) continue;
    RecPoly cand;
    for (int k = 0; k <= best; ++k) {
      std::vector<FieldElem> ys;
      for (const auto& im : images) ys.push_back(im[k]);
      cand.push_back(interpolate(xs, std::move(ys)));
    }
    rec_trim(cand);
    cand = rec_primitive(cand);
    const Poly2 cp = from_rec(f, cand);
    if (Poly2::try_div(from_rec(f, a), cp) && Poly2::try_div(from_rec(f, b), cp)) return cand;
    return std::nullopt;
  }
  return std::nullopt;
}

// Primitive remainder sequence; inputs primitive, result primitive.
RecPoly prs_gcd(const Field& f, RecPoly pa, RecPoly pb) {
  if (pa.size() < pb.size()) std::swap(pa, pb);
  while (!pb.empty()) {
    if (pb.size() == 1) return RecPoly{ZPoly(f.one())};  // a primitive constant in y is a unit
    RecPoly r = rec_prem(pa, pb);
    pa = std::move(pb);
    pb = r.empty() ? RecPoly{} : rec_primitive(r);
  }
  return rec_primitive(pa);
}

RecPoly primitive_gcd(const Field& f, const RecPoly& pa, const RecPoly& pb) {
  if (auto g = interpolation_gcd(f, pa, pb)) return *g;
  return prs_gcd(f, pa, pb);
}

// Monic gcd in K[z]. Over K = F(a) the coefficients are cleared into F[a]
// and the gcd is taken in F[a][z], which avoids the swell of Euclid over F(a).
ZPoly field_gcd(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  const Field f = a.lead().field();
  if (!f.has_parameter() || a.degree() == 0 || b.degree() == 0) return ZPoly::gcd(a, b);
  const Field base = f.base();
  auto as_poly = [](std::vector<FieldElem> cs) { return ZPoly(std::move(cs)); };
  auto cleared = [&](const ZPoly& p) {
    ZPoly l(base.one());
    for (const auto& c : p.coeffs()) {
      if (c.is_zero()) continue;
      const ZPoly d = as_poly(c.base_denominator());
      l = ZPoly::exact_div(l * d, ZPoly::gcd(l, d));
    }
    RecPoly out;
    for (const auto& c : p.coeffs()) {
      if (c.is_zero()) {
        out.emplace_back();
        continue;
      }
      out.push_back(as_poly(c.base_numerator()) * ZPoly::exact_div(l, as_poly(c.base_denominator())));
    }
    return rec_primitive(out);
  };
  const RecPoly g = primitive_gcd(base, cleared(a), cleared(b));
  std::vector<FieldElem> out;
  for (const auto& c : g) out.push_back(FieldElem::from_base_polys(f, c.coeffs().empty() ? std::vector<FieldElem>{base.zero()} : c.coeffs(), {base.one()}));
  return ZPoly(std::move(out)).monic();
}

}  // namespace

std::optional<Poly2> Poly2::try_div(const Poly2& a, const Poly2& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  const Term2& lb = b.lead();
  const FieldElem inv = lb.c.inverse();
  Poly2 rem = a;
  std::vector<Term2> quo;
  while (!rem.is_zero()) {
    const Term2& lr = rem.lead();
    if (lr.ey < lb.ey || lr.ez < lb.ez) return std::nullopt;
    Term2 q{lr.ey - lb.ey, lr.ez - lb.ez, lr.c * inv};
    rem = rem - monomial(q.c, q.ey, q.ez) * b;
    quo.push_back(std::move(q));
  }
  return from_unsorted(a.field_, std::move(quo));
}

Poly2 Poly2::from_unsorted(Field f, std::vector<Term2> terms) {
  std::sort(terms.begin(), terms.end(), term_order);
  Poly2 out(f);
  for (auto& t : terms) {
    if (!out.terms_.empty() && out.terms_.back().ey == t.ey && out.terms_.back().ez == t.ez) {
      out.terms_.back().c = out.terms_.back().c + t.c;
      if (out.terms_.back().c.is_zero()) out.terms_.pop_back();
    } else if (!t.c.is_zero()) {
      out.terms_.push_back(std::move(t));
    }
  }
  return out;
}

Poly2 Poly2::constant(const FieldElem& c) { return monomial(c, 0, 0); }

Poly2 Poly2::monomial(const FieldElem& c, int ey, int ez) {
  if (ey < 0 || ez < 0) throw std::invalid_argument("negative exponent in polynomial monomial");
  Poly2 out(c.field());
  if (!c.is_zero()) out.terms_.push_back({ey, ez, c});
  return out;
}

FieldElem Poly2::constant_value() const {
  if (!terms_.empty() && terms_.back().ey == 0 && terms_.back().ez == 0) return terms_.back().c;
  return field_.zero();
}

int Poly2::degree_y() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.ey);
  return d;
}

int Poly2::degree_z() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.ez);
  return d;
}

int Poly2::min_y() const {
  if (terms_.empty()) return 0;
  int d = terms_[0].ey;
  for (const auto& t : terms_) d = std::min(d, t.ey);
  return d;
}

int Poly2::min_z() const {
  if (terms_.empty()) return 0;
  int d = terms_[0].ez;
  for (const auto& t : terms_) d = std::min(d, t.ez);
  return d;
}

Poly2 Poly2::operator-() const {
  Poly2 out = *this;
  for (auto& t : out.terms_) t.c = -t.c;
  return out;
}

Poly2 operator+(const Poly2& a, const Poly2& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  Poly2 out(a.field_);
  out.terms_.reserve(a.terms_.size() + b.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms_.size() || j < b.terms_.size()) {
    if (j == b.terms_.size() || (i < a.terms_.size() && term_order(a.terms_[i], b.terms_[j]))) {
      out.terms_.push_back(a.terms_[i++]);
    } else if (i == a.terms_.size() || term_order(b.terms_[j], a.terms_[i])) {
      out.terms_.push_back(b.terms_[j++]);
    } else {
      FieldElem c = a.terms_[i].c + b.terms_[j].c;
      if (!c.is_zero()) out.terms_.push_back({a.terms_[i].ey, a.terms_[i].ez, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

Poly2 operator-(const Poly2& a, const Poly2& b) { return a + (-b); }

Poly2 operator*(const Poly2& a, const Poly2& b) {
  if (a.is_zero() || b.is_zero()) return Poly2(a.field_.valid() ? a.field_ : b.field_);
  if (b.is_monomial()) {
    Poly2 out(a.field_);
    const auto& m = b.terms_[0];
    for (const auto& t : a.terms_) out.terms_.push_back({t.ey + m.ey, t.ez + m.ez, t.c * m.c});
    return out;
  }
  if (a.is_monomial()) return b * a;
  std::vector<Term2> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) prod.push_back({s.ey + t.ey, s.ez + t.ez, s.c * t.c});
  return Poly2::from_unsorted(a.field_, std::move(prod));
}

bool operator==(const Poly2& a, const Poly2& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    const auto& s = a.terms_[i];
    const auto& t = b.terms_[i];
    if (s.ey != t.ey || s.ez != t.ez || !(s.c == t.c)) return false;
  }
  return true;
}

Poly2 Poly2::scaled(const FieldElem& s) const {
  if (s.is_zero()) return Poly2(field_);
  Poly2 out = *this;
  for (auto& t : out.terms_) t.c = t.c * s;
  return out;
}

Poly2 Poly2::shifted(int dy, int dz) const {
  Poly2 out = *this;
  for (auto& t : out.terms_) {
    t.ey += dy;
    t.ez += dz;
    if (t.ey < 0 || t.ez < 0) throw std::domain_error("monomial shift leaves the polynomial ring");
  }
  return out;
}

Poly2 Poly2::pow(unsigned n) const {
  Poly2 result = constant(field_.one());
  Poly2 base = *this;
  while (n > 0) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n > 0) base = base * base;
  }
  return result;
}

Poly2 Poly2::partial_y() const {
  std::vector<Term2> out;
  for (const auto& t : terms_) {
    if (t.ey == 0) continue;
    FieldElem c = t.c * field_.from_int(t.ey);
    if (!c.is_zero()) out.push_back({t.ey - 1, t.ez, std::move(c)});
  }
  return from_unsorted(field_, std::move(out));
}

Poly2 Poly2::partial_z() const {
  std::vector<Term2> out;
  for (const auto& t : terms_) {
    if (t.ez == 0) continue;
    FieldElem c = t.c * field_.from_int(t.ez);
    if (!c.is_zero()) out.push_back({t.ey, t.ez - 1, std::move(c)});
  }
  return from_unsorted(field_, std::move(out));
}

Poly2 Poly2::exact_div(const Poly2& a, const Poly2& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (b.is_monomial()) {
    const auto& m = b.terms_[0];
    return a.shifted(-m.ey, -m.ez).scaled(m.c.inverse());
  }
  const Term2& lb = b.lead();
  const FieldElem inv = lb.c.inverse();
  Poly2 rem = a;
  std::vector<Term2> quo;
  while (!rem.is_zero()) {
    const Term2& lr = rem.lead();
    if (lr.ey < lb.ey || lr.ez < lb.ez) throw std::domain_error("polynomial division is not exact");
    Term2 q{lr.ey - lb.ey, lr.ez - lb.ez, lr.c * inv};
    Poly2 qm = monomial(q.c, q.ey, q.ez);
    rem = rem - qm * b;
    quo.push_back(std::move(q));
  }
  return from_unsorted(a.field_, std::move(quo));
}

Poly2 Poly2::normalized() const {
  if (is_zero()) return *this;
  return scaled(lead().c.inverse());
}

Poly2 Poly2::gcd(const Poly2& a, const Poly2& b) {
  if (a.is_zero()) return b.normalized();
  if (b.is_zero()) return a.normalized();
  const Field f = a.field();
  const int my = std::min(a.min_y(), b.min_y());
  const int mz = std::min(a.min_z(), b.min_z());
  const Poly2 mono = monomial(f.one(), my, mz);
  const Poly2 ra = a.shifted(-a.min_y(), -a.min_z());
  const Poly2 rb = b.shifted(-b.min_y(), -b.min_z());
  if (ra.is_constant() || rb.is_constant()) return mono;
  if (ra.normalized() == rb.normalized()) return (mono * ra).normalized();
  if (ra.terms_.size() >= rb.terms_.size() && try_div(ra, rb)) return (mono * rb).normalized();
  if (rb.terms_.size() >= ra.terms_.size() && try_div(rb, ra)) return (mono * ra).normalized();

  RecPoly pa = to_rec(ra);
  RecPoly pb = to_rec(rb);
  const ZPoly ca = rec_content(pa);
  const ZPoly cb = rec_content(pb);
  const ZPoly content = field_gcd(ca, cb);
  RecPoly g = primitive_gcd(f, rec_div_content(pa, ca), rec_div_content(pb, cb));
  for (auto& c : g) c = c * content;
  return (mono * from_rec(f, g)).normalized();
}

std::string Poly2::to_string(const VarNames& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    std::string cs = t.c.to_string();
    const bool unit = cs == "1";
    const bool neg_unit = cs == "-1";
    const bool compound = cs.find_first_of("+-/", 1) != std::string::npos;
    const bool mono = t.ey != 0 || t.ez != 0;
    if (!first) os << (cs[0] == '-' && !compound ? "" : "+");
    first = false;
    if (!mono) {
      os << (compound ? "(" + cs + ")" : cs);
      continue;
    }
    if (neg_unit) os << "-";
    else if (!unit) os << (compound ? "(" + cs + ")" : cs) << "*";
    bool need_star = false;
    if (t.ey != 0) {
      os << names[0];
      if (t.ey != 1) os << "^" << t.ey;
      need_star = true;
    }
    if (t.ez != 0) {
      if (need_star) os << "*";
      os << names[1];
      if (t.ez != 1) os << "^" << t.ez;
    }
  }
  return os.str();
}

}  // namespace skewlab
