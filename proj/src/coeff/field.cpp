#include "skewlab/coeff/field.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace skewlab {

namespace detail {

enum class BaseKind { rational, quadratic, prime, extension };

struct FieldCtx {
  FieldSpec spec;
  BaseKind kind = BaseKind::rational;
  std::int64_t p = 0;  // characteristic as a machine integer
  std::string name;
  const FieldCtx* base = nullptr;  // parameter-free counterpart (self when no parameter)
};

}  // namespace detail

using detail::BaseElem;
using detail::BaseKind;
using detail::BaseVal;
using detail::FieldCtx;
using detail::ParamPoly;
using detail::QuadVal;

namespace {

// ---------------------------------------------------------------------------
// F_l helpers

std::int64_t mod(std::int64_t a, std::int64_t p) {
  a %= p;
  return a < 0 ? a + p : a;
}

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t p) {
  return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % p);
}

std::int64_t invmod(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, nt = 1, r = p, nr = mod(a, p);
  if (nr == 0) throw std::domain_error("division by zero");
  while (nr != 0) {
    const std::int64_t q = r / nr;
    t = t - q * nt;
    std::swap(t, nt);
    r = r - q * nr;
    std::swap(r, nr);
  }
  return mod(t, p);
}

std::int64_t residue_of(const mpz_class& n, std::int64_t p) {
  mpz_class r = n % p;
  if (r < 0) r += p;
  return r.get_si();
}

// Polynomials over F_l as coefficient vectors, lowest degree first.
using FpPoly = std::vector<std::int64_t>;

void fp_trim(FpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  FpPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = mod(out[i + j] + mulmod(a[i], b[j], p), p);
  fp_trim(out);
  return out;
}

FpPoly fp_rem(FpPoly a, const FpPoly& m, std::int64_t p) {
  fp_trim(a);
  const int dm = static_cast<int>(m.size()) - 1;
  const std::int64_t inv = invmod(m.back(), p);
  while (static_cast<int>(a.size()) - 1 >= dm && !a.empty()) {
    const int shift = static_cast<int>(a.size()) - 1 - dm;
    const std::int64_t c = mulmod(a.back(), inv, p);
    for (int j = 0; j <= dm; ++j) a[shift + j] = mod(a[shift + j] - mulmod(c, m[j], p), p);
    fp_trim(a);
  }
  return a;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, std::int64_t p) {
  fp_trim(a);
  fp_trim(b);
  while (!b.empty()) {
    FpPoly r = fp_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

FpPoly fp_powmod(FpPoly base, mpz_class e, const FpPoly& m, std::int64_t p) {
  FpPoly result{1};
  base = fp_rem(base, m, p);
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) result = fp_rem(fp_mul(result, base, p), m, p);
    base = fp_rem(fp_mul(base, base, p), m, p);
    e >>= 1;
  }
  return result;
}

// Ben-Or: f of degree n is irreducible iff gcd(X^{l^i} - X, f) = 1 for i <= n/2.
bool fp_irreducible(const FpPoly& f, std::int64_t p) {
  const int n = static_cast<int>(f.size()) - 1;
  if (n < 1) return false;
  if (n == 1) return true;
  FpPoly h{0, 1};
  for (int i = 1; i <= n / 2; ++i) {
    h = fp_powmod(h, mpz_class(p), f, p);
    FpPoly diff = h;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = mod(diff[1] - 1, p);
    fp_trim(diff);
    if (diff.empty()) return false;
    if (fp_gcd(f, diff, p).size() > 1) return false;
  }
  return true;
}

FpPoly lex_least_irreducible(int n, std::int64_t p) {
  mpz_class count;
  mpz_ui_pow_ui(count.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(n));
  for (mpz_class v = 0; v < count; ++v) {
    FpPoly f(n + 1, 0);
    mpz_class w = v;
    for (int i = 0; i < n; ++i) {
      f[i] = mpz_class(w % p).get_si();
      w /= p;
    }
    f[n] = 1;
    if (f[0] == 0) continue;
    if (fp_irreducible(f, p)) return f;
  }
  throw FieldError("no irreducible polynomial found");
}

bool is_square_free(const mpz_class& d) {
  mpz_class a = abs(d);
  if (a > mpz_class("1000000000000")) throw FieldError("radicand too large for square-free check");
  for (mpz_class q = 2; q * q <= a; ++q) {
    if (a % (q * q) == 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Base-field arithmetic

BaseVal base_zero(const FieldCtx* c) {
  switch (c->kind) {
    case BaseKind::rational: return mpq_class(0);
    case BaseKind::quadratic: return QuadVal{0, 0};
    case BaseKind::prime: return std::int64_t{0};
    case BaseKind::extension: return std::vector<std::int64_t>(c->spec.degree, 0);
  }
  return {};
}

BaseVal base_from_mpz(const FieldCtx* c, const mpz_class& n) {
  switch (c->kind) {
    case BaseKind::rational: return mpq_class(n);
    case BaseKind::quadratic: return QuadVal{mpq_class(n), 0};
    case BaseKind::prime: return residue_of(n, c->p);
    case BaseKind::extension: {
      std::vector<std::int64_t> v(c->spec.degree, 0);
      v[0] = residue_of(n, c->p);
      return v;
    }
  }
  return {};
}

BaseVal base_from_rational(const FieldCtx* c, const mpq_class& q) {
  mpq_class cq = q;
  cq.canonicalize();
  if (c->kind == BaseKind::rational) return cq;
  if (c->kind == BaseKind::quadratic) return QuadVal{cq, 0};
  const std::int64_t den = residue_of(cq.get_den(), c->p);
  if (den == 0) throw std::domain_error("denominator vanishes in characteristic " + std::to_string(c->p));
  const std::int64_t val = mulmod(residue_of(cq.get_num(), c->p), invmod(den, c->p), c->p);
  if (c->kind == BaseKind::prime) return val;
  std::vector<std::int64_t> v(c->spec.degree, 0);
  v[0] = val;
  return v;
}

bool base_is_zero(const BaseVal& v) {
  if (auto q = std::get_if<mpq_class>(&v)) return sgn(*q) == 0;
  if (auto q = std::get_if<QuadVal>(&v)) return sgn(q->a) == 0 && sgn(q->b) == 0;
  if (auto q = std::get_if<std::int64_t>(&v)) return *q == 0;
  for (auto x : std::get<std::vector<std::int64_t>>(v))
    if (x != 0) return false;
  return true;
}

BaseVal base_add(const FieldCtx* c, const BaseVal& x, const BaseVal& y, bool subtract) {
  switch (c->kind) {
    case BaseKind::rational: {
      const auto& a = std::get<mpq_class>(x);
      const auto& b = std::get<mpq_class>(y);
      return subtract ? mpq_class(a - b) : mpq_class(a + b);
    }
    case BaseKind::quadratic: {
      const auto& a = std::get<QuadVal>(x);
      const auto& b = std::get<QuadVal>(y);
      if (subtract) return QuadVal{a.a - b.a, a.b - b.b};
      return QuadVal{a.a + b.a, a.b + b.b};
    }
    case BaseKind::prime: {
      const auto a = std::get<std::int64_t>(x);
      const auto b = std::get<std::int64_t>(y);
      return mod(subtract ? a - b : a + b, c->p);
    }
    case BaseKind::extension: {
      auto a = std::get<std::vector<std::int64_t>>(x);
      const auto& b = std::get<std::vector<std::int64_t>>(y);
      for (std::size_t i = 0; i < a.size(); ++i) a[i] = mod(subtract ? a[i] - b[i] : a[i] + b[i], c->p);
      return a;
    }
  }
  return {};
}

BaseVal base_neg(const FieldCtx* c, const BaseVal& x) { return base_add(c, base_zero(c), x, true); }

BaseVal base_mul(const FieldCtx* c, const BaseVal& x, const BaseVal& y) {
  switch (c->kind) {
    case BaseKind::rational: return mpq_class(std::get<mpq_class>(x) * std::get<mpq_class>(y));
    case BaseKind::quadratic: {
      const auto& a = std::get<QuadVal>(x);
      const auto& b = std::get<QuadVal>(y);
      const mpq_class d(c->spec.radicand);
      return QuadVal{a.a * b.a + a.b * b.b * d, a.a * b.b + a.b * b.a};
    }
    case BaseKind::prime: return mulmod(std::get<std::int64_t>(x), std::get<std::int64_t>(y), c->p);
    case BaseKind::extension: {
      FpPoly prod = fp_mul(std::get<std::vector<std::int64_t>>(x), std::get<std::vector<std::int64_t>>(y), c->p);
      FpPoly r = fp_rem(prod, c->spec.modulus, c->p);
      r.resize(c->spec.degree, 0);
      return r;
    }
  }
  return {};
}

BaseVal base_inv(const FieldCtx* c, const BaseVal& x) {
  if (base_is_zero(x)) throw std::domain_error("division by zero");
  switch (c->kind) {
    case BaseKind::rational: return mpq_class(1 / std::get<mpq_class>(x));
    case BaseKind::quadratic: {
      const auto& a = std::get<QuadVal>(x);
      const mpq_class n = a.a * a.a - a.b * a.b * mpq_class(c->spec.radicand);
      return QuadVal{a.a / n, -a.b / n};
    }
    case BaseKind::prime: return invmod(std::get<std::int64_t>(x), c->p);
    case BaseKind::extension: {
      // x^(q-2) with q = l^n
      mpz_class q;
      mpz_ui_pow_ui(q.get_mpz_t(), static_cast<unsigned long>(c->p), static_cast<unsigned long>(c->spec.degree));
      FpPoly r = fp_powmod(std::get<std::vector<std::int64_t>>(x), q - 2, c->spec.modulus, c->p);
      r.resize(c->spec.degree, 0);
      return r;
    }
  }
  return {};
}

bool base_in_prime(const BaseVal& v) {
  if (auto q = std::get_if<QuadVal>(&v)) return sgn(q->b) == 0;
  if (auto f = std::get_if<std::vector<std::int64_t>>(&v)) {
    for (std::size_t i = 1; i < f->size(); ++i)
      if ((*f)[i] != 0) return false;
  }
  return true;
}

std::string rat_str(const mpq_class& q) { return q.get_str(); }

// Renders a + b*s for a symbol s; `needs_parens` reports whether the result
// is a compound sum.
std::string base_str(const FieldCtx* c, const BaseVal& v, bool* compound = nullptr) {
  std::ostringstream os;
  int terms = 0;
  switch (c->kind) {
    case BaseKind::rational: {
      os << rat_str(std::get<mpq_class>(v));
      terms = 1;
      break;
    }
    case BaseKind::prime: {
      os << std::get<std::int64_t>(v);
      terms = 1;
      break;
    }
    case BaseKind::quadratic: {
      const auto& q = std::get<QuadVal>(v);
      const std::string root = "sqrt(" + c->spec.radicand.get_str() + ")";
      if (sgn(q.a) != 0) {
        os << rat_str(q.a);
        ++terms;
      }
      if (sgn(q.b) != 0) {
        mpq_class b = q.b;
        if (terms > 0) os << (sgn(b) < 0 ? "-" : "+");
        else if (sgn(b) < 0) os << "-";
        b = abs(b);
        if (b != 1) os << rat_str(b) << "*";
        os << root;
        ++terms;
      }
      if (terms == 0) {
        os << "0";
        terms = 1;
      }
      break;
    }
    case BaseKind::extension: {
      const auto& f = std::get<std::vector<std::int64_t>>(v);
      for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i) {
        if (f[i] == 0) continue;
        if (terms > 0) os << "+";
        if (i == 0) os << f[i];
        else {
          if (f[i] != 1) os << f[i] << "*";
          os << "th";
          if (i > 1) os << "^" << i;
        }
        ++terms;
      }
      if (terms == 0) {
        os << "0";
        terms = 1;
      }
      break;
    }
  }
  if (compound) *compound = terms > 1 || (c->kind == BaseKind::rational && std::get<mpq_class>(v).get_den() != 1);
  return os.str();
}

std::string param_poly_str(const FieldCtx* c, const ParamPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const auto& coef = p[i];
    if (coef.is_zero()) continue;
    bool compound = false;
    std::string cs = base_str(c, coef.v, &compound);
    const bool sum = cs.find_first_of("+-", 1) != std::string::npos;
    if (i == 0) {
      if (!first && (sum || cs[0] != '-')) os << "+";
      os << (sum && !first ? "(" + cs + ")" : cs);
      continue;
    }
    if (!first && (compound || cs[0] != '-')) os << "+";
    first = false;
    const bool unit = !compound && cs == "1";
    if (!unit) os << (compound ? "(" + cs + ")" : cs) << "*";
    os << "a";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Interning

std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}

std::map<std::string, std::unique_ptr<FieldCtx>>& registry() {
  static std::map<std::string, std::unique_ptr<FieldCtx>> r;
  return r;
}

std::string canonical_key(const FieldSpec& s) {
  std::ostringstream os;
  os << s.characteristic << "|" << static_cast<int>(s.extension) << "|";
  if (s.extension == ExtensionKind::finite) {
    for (auto c : s.modulus) os << c << ",";
  }
  if (s.extension == ExtensionKind::quadratic) os << s.radicand.get_str();
  os << "|" << s.parameter;
  return os.str();
}

std::string display_name(const FieldSpec& s) {
  std::ostringstream os;
  if (s.characteristic == 0) os << "Q";
  else os << "F_" << s.characteristic;
  if (s.extension == ExtensionKind::finite) {
    os << "^" << s.degree << "[th]/(";
    bool first = true;
    for (int i = static_cast<int>(s.modulus.size()) - 1; i >= 0; --i) {
      if (s.modulus[i] == 0) continue;
      if (!first) os << "+";
      first = false;
      if (i == 0) os << s.modulus[i];
      else {
        if (s.modulus[i] != 1) os << s.modulus[i] << "*";
        os << "th";
        if (i > 1) os << "^" << i;
      }
    }
    os << ")";
  }
  if (s.extension == ExtensionKind::quadratic) os << "(sqrt(" << s.radicand.get_str() << "))";
  if (s.parameter) os << "(a)";
  return os.str();
}

const FieldCtx* intern(const FieldSpec& s, const FieldCtx* base) {
  std::lock_guard<std::mutex> lock(registry_mutex());
  auto& reg = registry();
  const std::string key = canonical_key(s);
  auto it = reg.find(key);
  if (it != reg.end()) return it->second.get();
  auto ctx = std::make_unique<FieldCtx>();
  ctx->spec = s;
  ctx->p = static_cast<std::int64_t>(s.characteristic);
  if (s.characteristic == 0) ctx->kind = s.extension == ExtensionKind::quadratic ? BaseKind::quadratic : BaseKind::rational;
  else ctx->kind = s.extension == ExtensionKind::finite ? BaseKind::extension : BaseKind::prime;
  ctx->name = display_name(s);
  ctx->base = base ? base : ctx.get();
  const FieldCtx* out = ctx.get();
  reg.emplace(key, std::move(ctx));
  return out;
}

// ---------------------------------------------------------------------------
// Parameter fields

ParamPoly param_const(const FieldCtx* base, BaseVal v) { return ParamPoly(BaseElem{base, std::move(v)}); }

}  // namespace

// ---------------------------------------------------------------------------
// BaseElem

namespace detail {

bool BaseElem::is_zero() const { return base_is_zero(v); }
BaseElem BaseElem::zero_like() const { return {ctx, base_zero(ctx)}; }
BaseElem BaseElem::inverse() const { return {ctx, base_inv(ctx, v)}; }
BaseElem BaseElem::operator-() const { return {ctx, base_neg(ctx, v)}; }
BaseElem operator+(const BaseElem& a, const BaseElem& b) { return {a.ctx, base_add(a.ctx, a.v, b.v, false)}; }
BaseElem operator-(const BaseElem& a, const BaseElem& b) { return {a.ctx, base_add(a.ctx, a.v, b.v, true)}; }
BaseElem operator*(const BaseElem& a, const BaseElem& b) { return {a.ctx, base_mul(a.ctx, a.v, b.v)}; }

}  // namespace detail

// ---------------------------------------------------------------------------
// Field

Field make_field(const FieldSpec& in) {
  FieldSpec s = in;
  if (s.characteristic != 0) {
    if (s.characteristic > (1ULL << 31)) throw FieldError("characteristic too large");
    mpz_class c(static_cast<unsigned long>(s.characteristic));
    if (s.characteristic < 2 || mpz_probab_prime_p(c.get_mpz_t(), 30) == 0)
      throw FieldError("characteristic " + std::to_string(s.characteristic) + " is not prime");
  }
  const auto p = static_cast<std::int64_t>(s.characteristic);
  if (s.extension == ExtensionKind::finite) {
    if (s.characteristic == 0) throw FieldError("finite extension requires a prime characteristic");
    if (s.degree < 1) throw FieldError("extension degree must be positive");
    if (s.degree == 1) {
      s.extension = ExtensionKind::none;
      s.modulus.clear();
    } else if (s.modulus.empty()) {
      s.modulus = lex_least_irreducible(s.degree, p);
    } else {
      if (static_cast<int>(s.modulus.size()) != s.degree + 1) throw FieldError("modulus degree mismatch");
      for (auto& c : s.modulus) c = mod(c, p);
      if (s.modulus.back() != 1) throw FieldError("modulus must be monic");
      if (!fp_irreducible(s.modulus, p)) throw FieldError("defining polynomial is reducible");
    }
  } else {
    s.degree = 1;
    s.modulus.clear();
  }
  if (s.extension == ExtensionKind::quadratic) {
    if (s.characteristic != 0) throw FieldError("quadratic extension requires characteristic 0");
    if (s.radicand == 0 || s.radicand == 1) throw FieldError("radicand must differ from 0 and 1");
    if (!is_square_free(s.radicand)) throw FieldError("radicand " + s.radicand.get_str() + " is not square-free");
  } else {
    s.radicand = 0;
  }
  const FieldCtx* base = nullptr;
  if (s.parameter) {
    FieldSpec b = s;
    b.parameter = false;
    base = intern(b, nullptr);
  }
  return Field(intern(s, base));
}

Field rationals() { return make_field(FieldSpec{}); }

Field prime_field(std::uint64_t ell) {
  FieldSpec s;
  s.characteristic = ell;
  return make_field(s);
}

std::uint64_t Field::characteristic() const { return ctx_->spec.characteristic; }
ExtensionKind Field::extension() const { return ctx_->spec.extension; }
int Field::degree() const { return ctx_->spec.degree; }
const std::vector<std::int64_t>& Field::modulus() const { return ctx_->spec.modulus; }
const mpz_class& Field::radicand() const { return ctx_->spec.radicand; }
bool Field::has_parameter() const { return ctx_->spec.parameter; }
std::string Field::name() const { return ctx_->name; }

mpz_class Field::order() const {
  if (!is_finite()) return 0;
  mpz_class q;
  mpz_ui_pow_ui(q.get_mpz_t(), static_cast<unsigned long>(ctx_->p), static_cast<unsigned long>(ctx_->spec.degree));
  return q;
}

Field Field::base() const { return Field(ctx_->base); }

FieldElem Field::zero() const { return from_mpz(0); }
FieldElem Field::one() const { return from_mpz(1); }
FieldElem Field::from_int(long n) const { return from_mpz(mpz_class(n)); }

FieldElem Field::from_mpz(const mpz_class& n) const {
  if (!has_parameter()) return FieldElem::make_base(ctx_, base_from_mpz(ctx_, n));
  return FieldElem::make_param(ctx_, param_const(ctx_->base, base_from_mpz(ctx_->base, n)),
                               param_const(ctx_->base, base_from_mpz(ctx_->base, 1)));
}

FieldElem Field::from_rational(const mpq_class& q) const {
  if (!has_parameter()) return FieldElem::make_base(ctx_, base_from_rational(ctx_, q));
  return FieldElem::make_param(ctx_, param_const(ctx_->base, base_from_rational(ctx_->base, q)),
                               param_const(ctx_->base, base_from_mpz(ctx_->base, 1)));
}

namespace {
BaseVal generator_val(const FieldCtx* b) {
  if (b->kind == BaseKind::quadratic) return QuadVal{0, 1};
  if (b->kind == BaseKind::extension) {
    std::vector<std::int64_t> v(b->spec.degree, 0);
    v[1] = 1;
    return v;
  }
  throw FieldError("field " + b->name + " has no generator");
}
}  // namespace

FieldElem Field::generator() const {
  const BaseVal g = generator_val(ctx_->base);
  if (!has_parameter()) return FieldElem::make_base(ctx_, g);
  return FieldElem::make_param(ctx_, param_const(ctx_->base, g), param_const(ctx_->base, base_from_mpz(ctx_->base, 1)));
}

FieldElem Field::parameter() const {
  if (!has_parameter()) throw FieldError("field " + name() + " has no parameter");
  const FieldCtx* b = ctx_->base;
  return FieldElem::make_param(ctx_, ParamPoly(std::vector<BaseElem>{{b, base_zero(b)}, {b, base_from_mpz(b, 1)}}),
                               param_const(b, base_from_mpz(b, 1)));
}

FieldElem Field::from_coordinates(const std::vector<std::int64_t>& coords) const {
  const FieldCtx* b = ctx_->base;
  BaseVal v;
  if (b->kind == BaseKind::prime) {
    if (coords.size() != 1) throw FieldError("expected one coordinate");
    v = mod(coords[0], b->p);
  } else if (b->kind == BaseKind::extension) {
    if (static_cast<int>(coords.size()) > b->spec.degree) throw FieldError("too many coordinates");
    std::vector<std::int64_t> c(b->spec.degree, 0);
    for (std::size_t i = 0; i < coords.size(); ++i) c[i] = mod(coords[i], b->p);
    v = c;
  } else {
    throw FieldError("coordinates require a finite base field");
  }
  if (!has_parameter()) return FieldElem::make_base(ctx_, v);
  return FieldElem::make_param(ctx_, param_const(b, v), param_const(b, base_from_mpz(b, 1)));
}

FieldElem Field::from_quadratic(const mpq_class& a, const mpq_class& bq) const {
  const FieldCtx* b = ctx_->base;
  if (b->kind != BaseKind::quadratic) throw FieldError("not a quadratic field");
  QuadVal v{a, bq};
  v.a.canonicalize();
  v.b.canonicalize();
  if (!has_parameter()) return FieldElem::make_base(ctx_, v);
  return FieldElem::make_param(ctx_, param_const(b, v), param_const(b, base_from_mpz(b, 1)));
}

// ---------------------------------------------------------------------------
// FieldElem

FieldElem FieldElem::make_base(const FieldCtx* ctx, BaseVal v) {
  FieldElem e;
  e.ctx_ = ctx;
  e.c_ = std::move(v);
  return e;
}

FieldElem FieldElem::make_param(const FieldCtx* ctx, ParamPoly num, ParamPoly den) {
  if (den.is_zero()) throw std::domain_error("division by zero");
  FieldElem e;
  e.ctx_ = ctx;
  if (num.is_zero()) {
    e.den_ = param_const(ctx->base, base_from_mpz(ctx->base, 1));
    return e;
  }
  if (!den.is_constant()) {
    ParamPoly g = ParamPoly::gcd(num, den);
    if (g.degree() > 0) {
      num = ParamPoly::exact_div(num, g);
      den = ParamPoly::exact_div(den, g);
    }
  }
  const BaseElem lc_inv = den.lead().inverse();
  e.num_ = num.scaled(lc_inv);
  e.den_ = den.scaled(lc_inv);
  return e;
}

bool FieldElem::is_zero() const {
  if (ctx_->spec.parameter) return num_.is_zero();
  return base_is_zero(c_);
}

bool FieldElem::is_one() const { return *this == field().one(); }

FieldElem FieldElem::operator-() const {
  if (ctx_->spec.parameter) return make_param(ctx_, -num_, den_);
  return make_base(ctx_, base_neg(ctx_, c_));
}

namespace {
void require_same(const FieldElem& a, const FieldElem& b) {
  if (!(a.field() == b.field())) throw FieldError("field mismatch: " + a.field().name() + " vs " + b.field().name());
}
}  // namespace

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
  require_same(a, b);
  if (a.ctx_->spec.parameter) {
    if (a.den_ == b.den_) return FieldElem::make_param(a.ctx_, a.num_ + b.num_, a.den_);
    return FieldElem::make_param(a.ctx_, a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  return FieldElem::make_base(a.ctx_, base_add(a.ctx_, a.c_, b.c_, false));
}

FieldElem operator-(const FieldElem& a, const FieldElem& b) {
  require_same(a, b);
  if (a.ctx_->spec.parameter) {
    if (a.den_ == b.den_) return FieldElem::make_param(a.ctx_, a.num_ - b.num_, a.den_);
    return FieldElem::make_param(a.ctx_, a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  return FieldElem::make_base(a.ctx_, base_add(a.ctx_, a.c_, b.c_, true));
}

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
  require_same(a, b);
  if (a.ctx_->spec.parameter) {
    if (a.num_.is_zero() || b.num_.is_zero()) return a.field().zero();
    return FieldElem::make_param(a.ctx_, a.num_ * b.num_, a.den_ * b.den_);
  }
  return FieldElem::make_base(a.ctx_, base_mul(a.ctx_, a.c_, b.c_));
}

FieldElem operator/(const FieldElem& a, const FieldElem& b) { return a * b.inverse(); }

bool operator==(const FieldElem& a, const FieldElem& b) {
  if (a.ctx_ != b.ctx_) return false;
  if (a.ctx_->spec.parameter) return a.num_ == b.num_ && a.den_ == b.den_;
  return a.c_ == b.c_;
}

FieldElem FieldElem::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (ctx_->spec.parameter) return make_param(ctx_, den_, num_);
  return make_base(ctx_, base_inv(ctx_, c_));
}

FieldElem FieldElem::pow(long n) const { return pow(mpz_class(n)); }

FieldElem FieldElem::pow(const mpz_class& n) const {
  if (n < 0) return inverse().pow(mpz_class(-n));
  FieldElem result = field().one();
  FieldElem base = *this;
  mpz_class e = n;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

bool FieldElem::is_parameter_free() const {
  if (!ctx_->spec.parameter) return true;
  return num_.degree() <= 0 && den_.degree() == 0;
}

bool FieldElem::in_prime_subfield() const {
  if (!is_parameter_free()) return false;
  if (ctx_->spec.parameter) return num_.is_zero() || base_in_prime(num_[0].v);
  return base_in_prime(c_);
}

namespace {
const BaseVal& free_value(const FieldElem& e, const BaseVal& own, const ParamPoly& num, BaseVal& scratch,
                          const FieldCtx* ctx) {
  if (!e.is_parameter_free()) throw FieldError("element involves the parameter");
  if (!ctx->spec.parameter) return own;
  scratch = num.is_zero() ? base_zero(ctx->base) : num[0].v;
  return scratch;
}
}  // namespace

mpq_class FieldElem::to_rational() const {
  if (!in_prime_subfield() || ctx_->spec.characteristic != 0) throw FieldError("not a rational element");
  BaseVal scratch;
  const BaseVal& v = free_value(*this, c_, num_, scratch, ctx_);
  if (auto q = std::get_if<mpq_class>(&v)) return *q;
  return std::get<QuadVal>(v).a;
}

std::int64_t FieldElem::to_residue() const {
  if (!in_prime_subfield() || ctx_->spec.characteristic == 0) throw FieldError("not a prime-field residue");
  BaseVal scratch;
  const BaseVal& v = free_value(*this, c_, num_, scratch, ctx_);
  if (auto r = std::get_if<std::int64_t>(&v)) return *r;
  return std::get<std::vector<std::int64_t>>(v)[0];
}

mpq_class FieldElem::rational_part() const {
  BaseVal scratch;
  const BaseVal& v = free_value(*this, c_, num_, scratch, ctx_);
  if (auto q = std::get_if<QuadVal>(&v)) return q->a;
  if (auto q = std::get_if<mpq_class>(&v)) return *q;
  throw FieldError("not a characteristic-0 element");
}

mpq_class FieldElem::sqrt_part() const {
  BaseVal scratch;
  const BaseVal& v = free_value(*this, c_, num_, scratch, ctx_);
  if (auto q = std::get_if<QuadVal>(&v)) return q->b;
  if (std::holds_alternative<mpq_class>(v)) return 0;
  throw FieldError("not a characteristic-0 element");
}

std::vector<std::int64_t> FieldElem::coordinates() const {
  BaseVal scratch;
  const BaseVal& v = free_value(*this, c_, num_, scratch, ctx_);
  if (auto r = std::get_if<std::int64_t>(&v)) return {*r};
  if (auto f = std::get_if<std::vector<std::int64_t>>(&v)) return *f;
  throw FieldError("not a finite-field element");
}

std::vector<FieldElem> FieldElem::param_numerator() const {
  if (!ctx_->spec.parameter) throw FieldError("not a parameter field");
  std::vector<FieldElem> out;
  for (const auto& c : num_.coeffs())
    out.push_back(make_param(ctx_, ParamPoly(c), param_const(ctx_->base, base_from_mpz(ctx_->base, 1))));
  return out;
}

std::vector<FieldElem> FieldElem::param_denominator() const {
  if (!ctx_->spec.parameter) throw FieldError("not a parameter field");
  std::vector<FieldElem> out;
  for (const auto& c : den_.coeffs())
    out.push_back(make_param(ctx_, ParamPoly(c), param_const(ctx_->base, base_from_mpz(ctx_->base, 1))));
  return out;
}

std::vector<FieldElem> FieldElem::base_numerator() const {
  if (!ctx_->spec.parameter) throw FieldError("not a parameter field");
  std::vector<FieldElem> out;
  for (const auto& c : num_.coeffs()) out.push_back(make_base(ctx_->base, c.v));
  return out;
}

std::vector<FieldElem> FieldElem::base_denominator() const {
  if (!ctx_->spec.parameter) throw FieldError("not a parameter field");
  std::vector<FieldElem> out;
  for (const auto& c : den_.coeffs()) out.push_back(make_base(ctx_->base, c.v));
  return out;
}

FieldElem FieldElem::from_base_polys(const Field& f, const std::vector<FieldElem>& num, const std::vector<FieldElem>& den) {
  if (!f.has_parameter()) throw FieldError("not a parameter field");
  const FieldCtx* b = f.ctx()->base;
  auto poly = [b](const std::vector<FieldElem>& cs) {
    std::vector<BaseElem> out;
    for (const auto& c : cs) {
      if (c.ctx_ != b) throw FieldError("coefficient outside the base field");
      out.push_back(BaseElem{b, c.c_});
    }
    return ParamPoly(std::move(out));
  };
  return make_param(f.ctx(), poly(num), poly(den));
}

std::string FieldElem::to_string() const {
  if (!ctx_) return "<unset>";
  if (!ctx_->spec.parameter) return base_str(ctx_, c_);
  const std::string n = param_poly_str(ctx_->base, num_);
  if (den_.degree() == 0) return n;
  const bool simple = num_.size() <= 1 && n.find_first_of("+-", 1) == std::string::npos;
  return (simple ? n : "(" + n + ")") + "/(" + param_poly_str(ctx_->base, den_) + ")";
}

FieldElem frobenius(const FieldElem& a) {
  const auto ell = a.field().characteristic();
  if (ell == 0) throw FieldError("Frobenius requires positive characteristic");
  return a.pow(static_cast<long>(ell));
}

FieldElem norm_to_prime(const FieldElem& a) {
  const Field f = a.field();
  if (!f.is_finite()) throw FieldError("norm requires a finite field");
  FieldElem result = a;
  FieldElem conj = a;
  for (int i = 1; i < f.degree(); ++i) {
    conj = frobenius(conj);
    result = result * conj;
  }
  return result;
}

FieldElem binomial_in(const Field& f, long n, long k) {
  if (k < 0 || k > n) return f.zero();
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return f.from_mpz(b);
}

}  // namespace skewlab
