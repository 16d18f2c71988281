#include "skewlab/parse/literals.hpp"

#include <cctype>
#include <functional>
#include <regex>

namespace skewlab {

namespace {

std::string strip(const std::string& s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

// Operations a value type must provide to be built by the expression parser.
template <typename V>
struct Semantics {
  std::function<V(const mpz_class&)> number;
  std::function<V(const std::string&)> variable;
  std::function<V(const V&, const V&)> div;
  std::function<V(const V&, long)> pow;
};

// expr   := term (("+" | "-") term)*
// term   := unary (("*" | "/") unary)*
// unary  := ("-" | "+") unary | power
// power  := atom ("^" exponent)?
// atom   := integer | identifier | "(" expr ")"
template <typename V>
class ExprParser {
 public:
  ExprParser(std::string src, Semantics<V> sem) : s_(strip(src)), sem_(std::move(sem)) {}

  V parse() {
    if (s_.empty()) throw ParseError("empty expression");
    V v = expr();
    if (i_ != s_.size()) fail("unexpected character");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(i_) + " in '" + s_ + "'");
  }
  bool eat(char c) {
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  char peek() const { return i_ < s_.size() ? s_[i_] : '\0'; }

  V expr() {
    V v = term();
    for (;;) {
      if (eat('+'))
        v = v + term();
      else if (eat('-'))
        v = v - term();
      else
        return v;
    }
  }
  V term() {
    V v = unary();
    for (;;) {
      if (eat('*'))
        v = v * unary();
      else if (eat('/'))
        v = sem_.div(v, unary());
      else
        return v;
    }
  }
  V unary() {
    if (eat('-')) {
      V v = unary();
      return sem_.number(0) - v;
    }
    if (eat('+')) return unary();
    return power();
  }
  V power() {
    V v = atom();
    if (!eat('^')) return v;
    const bool paren = eat('(');
    const bool neg = eat('-');
    const mpz_class e = integer();
    if (paren && !eat(')')) fail("expected ')'");
    if (!e.fits_slong_p()) fail("exponent too large");
    return sem_.pow(v, neg ? -e.get_si() : e.get_si());
  }
  mpz_class integer() {
    const std::size_t start = i_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++i_;
    if (start == i_) fail("expected an integer");
    return mpz_class(s_.substr(start, i_ - start));
  }
  V atom() {
    if (eat('(')) {
      V v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(peek()))) return sem_.number(integer());
    const std::size_t start = i_;
    while (std::isalpha(static_cast<unsigned char>(peek()))) ++i_;
    if (start == i_) fail("expected a number, identifier or '('");
    return sem_.variable(s_.substr(start, i_ - start));
  }

  std::string s_;
  Semantics<V> sem_;
  std::size_t i_ = 0;
};

FieldElem scalar_variable(const Field& f, const std::string& name) {
  if (name == "a") {
    if (!f.has_parameter()) throw ParseError("'a' needs a parameter field, got " + f.name());
    return f.parameter();
  }
  if (name == "th") {
    if (f.extension() == ExtensionKind::none) throw ParseError("'th' needs an extension field, got " + f.name());
    return f.generator();
  }
  throw ParseError("unknown identifier '" + name + "'");
}

Semantics<FieldElem> scalar_semantics(const Field& f) {
  Semantics<FieldElem> s;
  s.number = [f](const mpz_class& n) { return f.from_mpz(n); };
  s.variable = [f](const std::string& n) { return scalar_variable(f, n); };
  s.div = [](const FieldElem& a, const FieldElem& b) {
    if (b.is_zero()) throw ParseError("division by zero");
    return a / b;
  };
  s.pow = [](const FieldElem& a, long e) {
    if (e < 0 && a.is_zero()) throw ParseError("division by zero");
    return a.pow(e);
  };
  return s;
}

Field base_field(std::uint64_t ch) {
  try {
    return ch == 0 ? rationals() : prime_field(ch);
  } catch (const FieldError& e) {
    throw ParseError(e.what());
  }
}

std::uint64_t parse_u64(const std::string& s, const std::string& what) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) throw ParseError("bad " + what + " '" + s + "'");
  return std::stoull(s);
}

FieldElem parse_rat(const std::string& body, std::uint64_t ch) {
  static const std::regex re(R"(([+-]?\d+)(?:/(\d+))?)");
  std::smatch m;
  if (!std::regex_match(body, m, re)) throw ParseError("rat literal must be p or p/q, got '" + body + "'");
  const mpz_class p(m[1].str()[0] == '+' ? m[1].str().substr(1) : m[1].str());
  const mpz_class q = m[2].matched ? mpz_class(m[2].str()) : mpz_class(1);
  if (q == 0) throw ParseError("rat literal with zero denominator");
  const Field f = base_field(ch);
  const FieldElem den = f.from_mpz(q);
  if (den.is_zero()) throw ParseError("denominator " + q.get_str() + " vanishes in " + f.name());
  return f.from_mpz(p) / den;
}

FieldElem parse_quad(const std::string& body, std::uint64_t ch) {
  if (ch != 0) throw ParseError("quad literals need characteristic 0");
  static const std::regex re(R"(\(([+-]?\d+)([+-]\d+)\*sqrt\(([+-]?\d+)\)\)(?:/([+-]?\d+))?)");
  std::smatch m;
  if (!std::regex_match(body, m, re)) throw ParseError("quad literal must be (a+b*sqrt(d))/c, got '" + body + "'");
  auto z = [](std::string s) { return mpz_class(s[0] == '+' ? s.substr(1) : s); };
  const mpz_class a = z(m[1].str()), b = z(m[2].str()), d = z(m[3].str());
  const mpz_class c = m[4].matched ? z(m[4].str()) : mpz_class(1);
  if (c == 0) throw ParseError("quad literal with zero denominator");
  FieldSpec s;
  s.extension = ExtensionKind::quadratic;
  s.radicand = d;
  Field f;
  try {
    f = make_field(s);
  } catch (const FieldError& e) {
    throw ParseError(std::string("quad literal: ") + e.what());
  }
  return f.from_quadratic(mpq_class(a, c), mpq_class(b, c));
}

FieldElem parse_ff(const std::string& body, std::uint64_t ch) {
  static const std::regex re(R"((\d+)\^(\d+):([+-]?\d+(?:,[+-]?\d+)*))");
  std::smatch m;
  if (!std::regex_match(body, m, re)) throw ParseError("ff literal must be l^n:c0,c1,..., got '" + body + "'");
  const std::uint64_t ell = parse_u64(m[1].str(), "characteristic");
  if (ch != 0 && ch != ell) throw ParseError("ff literal over F_" + std::to_string(ell) + " but --char is " + std::to_string(ch));
  FieldSpec s;
  s.characteristic = ell;
  s.extension = ExtensionKind::finite;
  s.degree = static_cast<int>(parse_u64(m[2].str(), "degree"));
  std::vector<std::int64_t> coords;
  std::string list = m[3].str();
  std::size_t pos = 0;
  while (pos <= list.size()) {
    const std::size_t next = std::min(list.find(',', pos), list.size());
    coords.push_back(std::stoll(list.substr(pos, next - pos)));
    pos = next + 1;
  }
  if (static_cast<int>(coords.size()) > s.degree) throw ParseError("ff literal has more coordinates than the degree");
  Field f;
  try {
    f = make_field(s);
  } catch (const FieldError& e) {
    throw ParseError(std::string("ff literal: ") + e.what());
  }
  for (auto& c : coords) c = ((c % static_cast<std::int64_t>(ell)) + static_cast<std::int64_t>(ell)) % static_cast<std::int64_t>(ell);
  coords.resize(s.degree, 0);
  return f.from_coordinates(coords);
}

}  // namespace

FieldElem parse_scalar(const std::string& expr, const Field& f) {
  return ExprParser<FieldElem>(expr, scalar_semantics(f)).parse();
}

FieldElem parse_element(const std::string& literal, std::uint64_t characteristic) {
  const std::string lit = strip(literal);
  const auto colon = lit.find(':');
  const std::string tag = lit.substr(0, colon);
  const std::string body = colon == std::string::npos ? "" : lit.substr(colon + 1);
  if (tag == "rat") return parse_rat(body, characteristic);
  if (tag == "quad") return parse_quad(body, characteristic);
  if (tag == "ff") return parse_ff(body, characteristic);
  if (tag == "param") {
    FieldSpec s;
    s.characteristic = characteristic;
    s.parameter = true;
    Field f;
    try {
      f = make_field(s);
    } catch (const FieldError& e) {
      throw ParseError(std::string("param literal: ") + e.what());
    }
    return colon == std::string::npos ? f.parameter() : parse_scalar(body, f);
  }
  throw ParseError("unknown literal kind '" + tag + "' (expected rat, quad, param or ff)");
}

RatFunc2 parse_ratfunc(const std::string& expr, const Field& f) {
  Semantics<RatFunc2> s;
  s.number = [f](const mpz_class& n) { return RatFunc2::constant(f.from_mpz(n)); };
  s.variable = [f](const std::string& n) {
    if (n == "y") return RatFunc2::y(f);
    if (n == "z") return RatFunc2::z(f);
    return RatFunc2::constant(scalar_variable(f, n));
  };
  s.div = [](const RatFunc2& a, const RatFunc2& b) {
    if (b.is_zero()) throw ParseError("division by zero");
    return a / b;
  };
  s.pow = [](const RatFunc2& a, long e) {
    if (e < 0 && a.is_zero()) throw ParseError("division by zero");
    return a.pow(e);
  };
  return ExprParser<RatFunc2>(expr, s).parse();
}

SkewPoly parse_skew(const std::string& expr, const Presentation& p) {
  auto coefficient_of = [](const SkewPoly& v, const char* what) {
    if (v.degree() > 0) throw ParseError(std::string(what) + " needs an x-free operand");
    if (v.is_zero()) throw ParseError("division by zero");
    return v.coeff(0);
  };
  Semantics<SkewPoly> s;
  s.number = [&p](const mpz_class& n) { return p.scalar(p.field().from_mpz(n)); };
  s.variable = [&p](const std::string& n) {
    if (n == "x") return p.x;
    if (n == "y") return p.y;
    if (n == "z") return p.z;
    if (n == "t") return p.t;
    return p.scalar(scalar_variable(p.field(), n));
  };
  s.div = [&p, coefficient_of](const SkewPoly& a, const SkewPoly& b) {
    return a * p.coeff(coefficient_of(b, "division").inverse());
  };
  s.pow = [&p, coefficient_of](const SkewPoly& a, long e) {
    if (e >= 0) return skew_pow(a, static_cast<unsigned>(e));
    return p.coeff(coefficient_of(a, "negative power").inverse().pow(-e));
  };
  return ExprParser<SkewPoly>(expr, s).parse();
}

CaseSpec parse_case(const std::string& literal, std::uint64_t characteristic) {
  const std::string lit = strip(literal);
  if (lit == "q") return q_case(base_field(characteristic));
  if (lit.rfind("g:", 0) == 0) {
    const FieldElem alpha = parse_element(lit.substr(2), characteristic);
    if (alpha.is_zero()) throw ParseError("g_alpha needs alpha != 0");
    return g_case(alpha);
  }
  throw ParseError("case literal must be 'q' or 'g:<element literal>', got '" + literal + "'");
}

}  // namespace skewlab
