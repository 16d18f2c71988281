#include <algorithm>
#include <map>
#include <sstream>

#include "skewlab/orbits/orbits.hpp"

namespace skewlab {

namespace {

bool is_square(const mpz_class& n) { return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0; }

mpz_class floor_div(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

QuadIrr QuadIrr::make(mpz_class P, mpz_class Q, mpz_class D) {
  if (D <= 0 || is_square(D)) throw std::invalid_argument("QuadIrr needs a positive non-square D");
  if (Q == 0) throw std::invalid_argument("QuadIrr needs Q != 0");
  const mpz_class rem = (D - P * P) % Q;
  if (rem != 0) {
    // Scale by |Q| so that Q | D - P^2.
    const mpz_class aq = abs(Q);
    D *= Q * Q;
    P *= aq;
    Q *= aq;
  }
  return {P, Q, D};
}

QuadIrr QuadIrr::from_field(const FieldElem& a) {
  const Field f = a.field();
  if (f.extension() != ExtensionKind::quadratic || f.radicand() <= 0 || f.has_parameter())
    throw std::invalid_argument("real quadratic irrational needs an element of Q(sqrt d), d > 0");
  const mpq_class x = a.rational_part(), y = a.sqrt_part();
  if (y == 0) throw std::invalid_argument("element is rational");
  mpz_class L;
  mpz_lcm(L.get_mpz_t(), x.get_den_mpz_t(), y.get_den_mpz_t());
  const mpz_class A = x.get_num() * (L / x.get_den());
  const mpz_class B = y.get_num() * (L / y.get_den());
  const mpz_class D = B * B * f.radicand();
  return B > 0 ? make(A, L, D) : make(-A, -L, D);
}

FieldElem QuadIrr::value_in(const Field& f) const {
  const mpz_class d = f.radicand();
  if (d == 0 || D % d != 0 || !is_square(D / d)) throw std::invalid_argument("QuadIrr does not lie in " + f.name());
  mpz_class k;
  mpz_sqrt(k.get_mpz_t(), mpz_class(D / d).get_mpz_t());
  return f.from_quadratic(mpq_class(P, Q), mpq_class(k, Q));
}

std::string QuadIrr::to_string() const {
  return "(" + P.get_str() + "+sqrt(" + D.get_str() + "))/" + Q.get_str();
}

const mpz_class& ContFrac::term(std::size_t i) const {
  if (i < preperiod.size()) return preperiod[i];
  return period[(i - preperiod.size()) % period.size()];
}

Mat2Z ContFrac::prefix_matrix(std::size_t k) const {
  Mat2Z M;
  for (std::size_t i = 0; i < k; ++i) M = M * Mat2Z(term(i), 1, 1, 0);
  return M;
}

std::string ContFrac::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < preperiod.size(); ++i) os << (i == 0 ? "" : i == 1 ? "; " : ", ") << preperiod[i].get_str();
  os << (preperiod.empty() ? "(" : preperiod.size() == 1 ? "; (" : ", (");
  for (std::size_t i = 0; i < period.size(); ++i) os << (i ? ", " : "") << period[i].get_str();
  os << ")]";
  return os.str();
}

ContFrac cf_expand(const QuadIrr& a, std::size_t max_terms) {
  mpz_class s;
  mpz_sqrt(s.get_mpz_t(), a.D.get_mpz_t());
  mpz_class P = a.P, Q = a.Q;
  std::map<std::pair<mpz_class, mpz_class>, std::size_t> seen;
  std::vector<mpz_class> terms;
  ContFrac cf;
  mpz_class p1 = 1, p2 = 0, q1 = 0, q2 = 1;
  for (std::size_t i = 0; i < max_terms; ++i) {
    auto [it, fresh] = seen.emplace(std::make_pair(P, Q), i);
    if (!fresh) {
      const std::size_t start = it->second;
      cf.preperiod.assign(terms.begin(), terms.begin() + static_cast<long>(start));
      cf.period.assign(terms.begin() + static_cast<long>(start), terms.end());
      if (start == 0) {
        // Keep a_0 out of the period: [a0; (a1, ..., a0)].
        std::rotate(cf.period.begin(), cf.period.begin() + 1, cf.period.end());
        cf.preperiod.push_back(terms.front());
      }
      return cf;
    }
    // floor((P + sqrt D)/Q), exact since sqrt D is irrational.
    const mpz_class ai = Q > 0 ? floor_div(P + s, Q) : floor_div(-P - s - 1, -Q);
    terms.push_back(ai);
    const mpz_class pn = ai * p1 + p2, qn = ai * q1 + q2;
    p2 = p1;
    p1 = pn;
    q2 = q1;
    q1 = qn;
    cf.p.push_back(pn);
    cf.q.push_back(qn);
    const mpz_class Pn = ai * Q - P;
    Q = (a.D - Pn * Pn) / Q;
    P = Pn;
  }
  throw PeriodNotFound("no period within " + std::to_string(max_terms) + " partial quotients");
}

std::optional<Mat2Z> tail_equivalent(const ContFrac& a, const ContFrac& b, const FieldElem& av, const FieldElem& bv) {
  const std::size_t L = a.period.size();
  if (L != b.period.size() || L == 0) return std::nullopt;
  for (std::size_t r = 0; r < L; ++r) {
    bool match = true;
    for (std::size_t i = 0; i < L && match; ++i) match = b.period[i] == a.period[(i + r) % L];
    if (!match) continue;
    // a's tail from index |pre_a| + r equals b's tail from |pre_b|.
    const Mat2Z Ma = a.prefix_matrix(a.preperiod.size() + r);
    const Mat2Z Mb = b.prefix_matrix(b.preperiod.size());
    const Mat2Z W = Mb * Ma.inverse();
    if (homographic(W, av) == bv) return W;
  }
  return std::nullopt;
}

}  // namespace skewlab
