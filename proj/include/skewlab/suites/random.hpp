#pragma once

#include <random>

#include "skewlab/presentations/presentations.hpp"

namespace skewlab {

using Rng = std::mt19937_64;

/// Small random objects for the sample-based suites and property tests.
namespace gen {

long integer(Rng& rng, long lo, long hi);

/// Drawn from small coordinates; parameter fields add a low-degree fraction
/// in a unless `parameter_free` is set.
FieldElem scalar(const Field& f, Rng& rng, bool parameter_free = false);
FieldElem nonzero_scalar(const Field& f, Rng& rng, bool parameter_free = false);

/// Up to `terms` monomials y^i z^j with 0 <= i, j <= max_deg.
Poly2 poly(const Field& f, Rng& rng, int max_deg = 2, int terms = 3, bool parameter_free = false);

/// Polynomial numerator over a denominator that is a monomial times (with
/// probability 1/2) a small binomial.
RatFunc2 ratfunc(const Field& f, Rng& rng, bool parameter_free = false);
RatFunc2 nonzero_ratfunc(const Field& f, Rng& rng);

SkewPoly skew(const Presentation& p, Rng& rng, int max_deg = 2, bool parameter_free = false);

/// Integer matrix with entries in [-bound, bound], det M != 0 in k and
/// m alpha + r, n alpha + q both nonzero (so M.alpha is a valid parameter).
Mat2Z matrix_for(const FieldElem& alpha, Rng& rng, long bound = 3);

/// det = +-1, entries in [-bound, bound].
Mat2Z unimodular(Rng& rng, long bound = 3);

}  // namespace gen

}  // namespace skewlab
