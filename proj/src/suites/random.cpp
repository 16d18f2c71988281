#include "skewlab/suites/random.hpp"

namespace skewlab::gen {

long integer(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

namespace {

FieldElem base_scalar(const Field& f, Rng& rng) {
  switch (f.extension()) {
    case ExtensionKind::none:
      if (f.characteristic() != 0) return f.from_int(integer(rng, 0, static_cast<long>(f.characteristic()) - 1));
      return f.from_rational(mpq_class(integer(rng, -4, 4), integer(rng, 1, 3)));
    case ExtensionKind::quadratic:
      return f.from_rational(mpq_class(integer(rng, -3, 3), integer(rng, 1, 2))) +
             f.from_int(integer(rng, -2, 2)) * f.generator();
    case ExtensionKind::finite: {
      FieldElem out = f.zero(), g = f.one();
      for (int i = 0; i < f.degree(); ++i) {
        out += f.from_int(integer(rng, 0, static_cast<long>(f.characteristic()) - 1)) * g;
        g *= f.generator();
      }
      return out;
    }
  }
  return f.zero();
}

}  // namespace

FieldElem scalar(const Field& f, Rng& rng, bool parameter_free) {
  if (!f.has_parameter() || parameter_free) return base_scalar(f, rng);
  const FieldElem a = f.parameter();
  FieldElem num = base_scalar(f, rng) + base_scalar(f, rng) * a;
  if (integer(rng, 0, 1)) num += base_scalar(f, rng) * a * a;
  if (integer(rng, 0, 1)) return num;
  return num / (a + base_scalar(f, rng));
}

FieldElem nonzero_scalar(const Field& f, Rng& rng, bool parameter_free) {
  for (;;) {
    FieldElem c = scalar(f, rng, parameter_free);
    if (!c.is_zero()) return c;
  }
}

Poly2 poly(const Field& f, Rng& rng, int max_deg, int terms, bool parameter_free) {
  Poly2 out(f);
  const int n = static_cast<int>(integer(rng, 1, terms));
  for (int i = 0; i < n; ++i)
    out = out + Poly2::monomial(scalar(f, rng, parameter_free), static_cast<int>(integer(rng, 0, max_deg)),
                                static_cast<int>(integer(rng, 0, max_deg)));
  return out;
}

RatFunc2 ratfunc(const Field& f, Rng& rng, bool parameter_free) {
  RatFunc2 num = RatFunc2::from_poly(poly(f, rng, 2, 3, parameter_free));
  RatFunc2 den = RatFunc2::monomial(f.one(), static_cast<int>(integer(rng, 0, 2)), static_cast<int>(integer(rng, 0, 2)));
  if (integer(rng, 0, 1)) {
    const RatFunc2 bin = RatFunc2::monomial(f.one(), static_cast<int>(integer(rng, 0, 1)), 1) +
                         RatFunc2::constant(nonzero_scalar(f, rng, parameter_free));
    den = den * bin;
  }
  return num / den;
}

RatFunc2 nonzero_ratfunc(const Field& f, Rng& rng) {
  for (;;) {
    RatFunc2 r = ratfunc(f, rng);
    if (!r.is_zero()) return r;
  }
}

SkewPoly skew(const Presentation& p, Rng& rng, int max_deg, bool parameter_free) {
  SkewPoly out(p.d);
  const int deg = static_cast<int>(integer(rng, 0, max_deg));
  for (int i = 0; i <= deg; ++i)
    if (i == deg || integer(rng, 0, 1)) out = out + SkewPoly::monomial(p.d, ratfunc(p.field(), rng, parameter_free), i);
  return out;
}

Mat2Z matrix_for(const FieldElem& alpha, Rng& rng, long bound) {
  const Field k = alpha.field();
  for (;;) {
    const Mat2Z M(integer(rng, -bound, bound), integer(rng, -bound, bound), integer(rng, -bound, bound),
                  integer(rng, -bound, bound));
    if (det_vanishes_in(M, k)) continue;
    if ((k.from_mpz(M.m) * alpha + k.from_mpz(M.r)).is_zero()) continue;
    if ((k.from_mpz(M.n) * alpha + k.from_mpz(M.q)).is_zero()) continue;
    return M;
  }
}

Mat2Z unimodular(Rng& rng, long bound) {
  for (;;) {
    const Mat2Z M(integer(rng, -bound, bound), integer(rng, -bound, bound), integer(rng, -bound, bound),
                  integer(rng, -bound, bound));
    if (M.unimodular()) return M;
  }
}

}  // namespace skewlab::gen
