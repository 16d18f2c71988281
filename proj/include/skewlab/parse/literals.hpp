#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "skewlab/presentations/presentations.hpp"

namespace skewlab {

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Element literals (grammar in docs/grammar.md):
///   rat:p/q | quad:(a+b*sqrt(d))/c | param | param:<expr in a> | ff:l^n:c0,c1,...
/// `characteristic` selects Q or F_l for rat/param; quad needs 0 and ff needs l.
FieldElem parse_element(const std::string& literal, std::uint64_t characteristic);

/// Infix expression over `f` with identifiers a (parameter) and th (generator).
FieldElem parse_scalar(const std::string& expr, const Field& f);

/// Infix expression in y, z over `f`; a and th as in parse_scalar.
RatFunc2 parse_ratfunc(const std::string& expr, const Field& f);

/// Infix expression in x, y, z, t inside the presentation. Division and
/// negative powers are allowed only for x-free operands.
SkewPoly parse_skew(const std::string& expr, const Presentation& p);

/// Case literals: "g:<element literal>" or "q".
CaseSpec parse_case(const std::string& literal, std::uint64_t characteristic);

}  // namespace skewlab
