#include "skewlab/orbits/orbits.hpp"

namespace skewlab {

namespace {

bool imaginary_quadratic(const Field& f) {
  return f.extension() == ExtensionKind::quadratic && f.radicand() < 0 && !f.has_parameter();
}

mpz_class ceil_q(const mpq_class& x) {
  mpz_class c;
  mpz_cdiv_q(c.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return c;
}

// nu(a) = a for Im a > 0, -a = J.a otherwise, J = diag(-1, 1).
Mat2Z nu_matrix(const FieldElem& a) { return a.sqrt_part() > 0 ? Mat2Z::identity() : Mat2Z(-1, 0, 0, 1); }

}  // namespace

ImagQuadPoint ImagQuadPoint::make(const FieldElem& v) {
  if (!imaginary_quadratic(v.field())) throw std::invalid_argument("upper half-plane point needs Q(sqrt d), d < 0");
  if (v.sqrt_part() <= 0) throw std::invalid_argument("point is not in the upper half plane");
  return {v};
}

mpq_class ImagQuadPoint::norm() const {
  const mpq_class x = value.rational_part(), y = value.sqrt_part();
  return x * x - y * y * mpq_class(value.field().radicand());
}

bool in_fundamental_domain(const ImagQuadPoint& tau) {
  const mpq_class x = tau.real(), n = tau.norm();
  const mpq_class half(1, 2);
  if (x <= -half || x > half) return false;
  if (n < 1) return false;
  if (n == 1 && x < 0) return false;
  return true;
}

Reduction fundamental_domain_reduce(const ImagQuadPoint& tau) {
  const Field f = tau.value.field();
  FieldElem t = tau.value;
  Mat2Z M;
  const mpq_class half(1, 2);
  for (;;) {
    const mpz_class k = ceil_q(t.rational_part() - half);
    if (k != 0) {
      t = t - f.from_mpz(k);
      M = Mat2Z::translation(-k) * M;
    }
    const mpq_class n = ImagQuadPoint{t}.norm();
    if (n < 1 || (n == 1 && t.rational_part() < 0)) {
      t = -t.inverse();
      M = Mat2Z::inversion() * M;
      continue;
    }
    break;
  }
  return {ImagQuadPoint{t}, M};
}

EquivalenceVerdict gl2z_equivalent(const FieldElem& a, const FieldElem& b) {
  const Field fa = a.field(), fb = b.field();
  auto quadratic = [](const Field& f) {
    return f.characteristic() == 0 && f.extension() == ExtensionKind::quadratic && !f.has_parameter();
  };
  if (a.in_prime_subfield() || b.in_prime_subfield())
    throw std::invalid_argument("rational parameter: use the Gelfand-Kirillov classification instead");
  if (!quadratic(fa) || !quadratic(fb)) throw std::invalid_argument("GL2(Z) equivalence needs quadratic irrationals");
  if ((fa.radicand() > 0) != (fb.radicand() > 0)) throw std::invalid_argument("cannot compare a real and an imaginary point");
  EquivalenceVerdict v;
  if (!(fa == fb)) {
    v.method = "field";
    v.detail = "different quadratic fields; the action preserves Q(sqrt d)";
    return v;
  }
  if (fa.radicand() > 0) {
    v.method = "continued-fraction tails";
    const ContFrac ca = cf_expand(QuadIrr::from_field(a));
    const ContFrac cb = cf_expand(QuadIrr::from_field(b));
    v.detail = ca.to_string() + " vs " + cb.to_string();
    v.witness = tail_equivalent(ca, cb, a, b);
    v.equivalent = v.witness.has_value();
    return v;
  }
  v.method = "fundamental-domain reduction";
  const Mat2Z Na = nu_matrix(a), Nb = nu_matrix(b);
  const Reduction ra = fundamental_domain_reduce(ImagQuadPoint::make(homographic(Na, a)));
  const Reduction rb = fundamental_domain_reduce(ImagQuadPoint::make(homographic(Nb, b)));
  v.detail = ra.reduced.value.to_string() + " vs " + rb.reduced.value.to_string();
  if (!(ra.reduced.value == rb.reduced.value)) return v;
  // b = Nb^-1 Rb^-1 Ra Na . a
  const Mat2Z W = Nb.inverse() * rb.M.inverse() * ra.M * Na;
  if (!(homographic(W, a) == b)) throw std::logic_error("reduction witness failed verification");
  v.equivalent = true;
  v.witness = W;
  return v;
}

std::optional<Mat2Z> brute_force_witness(const FieldElem& a, const FieldElem& b, long bound) {
  const Field f = a.field();
  for (long n = -bound; n <= bound; ++n)
    for (long q = -bound; q <= bound; ++q)
      for (long m = -bound; m <= bound; ++m)
        for (long r = -bound; r <= bound; ++r) {
          const long det = n * r - q * m;
          if (det != 1 && det != -1) continue;
          // W.a = b  <=>  n a + q = b (m a + r)
          const FieldElem lhs = f.from_int(n) * a + f.from_int(q);
          const FieldElem rhs = b * (f.from_int(m) * a + f.from_int(r));
          if (lhs == rhs) return Mat2Z(n, q, m, r);
        }
  return std::nullopt;
}

}  // namespace skewlab
