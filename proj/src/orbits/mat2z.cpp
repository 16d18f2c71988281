#include "skewlab/orbits/mat2z.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace skewlab {

Mat2Z Mat2Z::inverse() const {
  const mpz_class d = det();
  if (d == 1) return {r, -q, -m, n};
  if (d == -1) return {-r, q, m, -n};
  throw std::domain_error("matrix is not invertible over Z");
}

std::string Mat2Z::to_string() const {
  return n.get_str() + "," + q.get_str() + "," + m.get_str() + "," + r.get_str();
}

Mat2Z parse_matrix(const std::string& text) {
  std::vector<mpz_class> e;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto l = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw std::invalid_argument("empty matrix entry in '" + text + "'");
    mpz_class v;
    if (v.set_str(item.substr(b, l - b + 1), 10) != 0) throw std::invalid_argument("bad matrix entry '" + item + "'");
    e.push_back(v);
  }
  if (e.size() != 4) throw std::invalid_argument("matrix needs four entries n,q,m,r");
  return {e[0], e[1], e[2], e[3]};
}

FieldElem homographic(const Mat2Z& M, const FieldElem& alpha) {
  const Field f = alpha.field();
  const FieldElem den = f.from_mpz(M.m) * alpha + f.from_mpz(M.r);
  if (den.is_zero()) throw std::domain_error("homographic action: m*alpha + r = 0");
  return (f.from_mpz(M.n) * alpha + f.from_mpz(M.q)) / den;
}

bool det_vanishes_in(const Mat2Z& M, const Field& f) { return f.from_mpz(M.det()).is_zero(); }

}  // namespace skewlab
