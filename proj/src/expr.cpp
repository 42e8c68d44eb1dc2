#include "hahnroot/expr.hpp"

#include <cctype>

namespace hahnroot {

namespace {

constexpr unsigned long kMaxPower = 100000;

class Parser {
 public:
  Parser(const std::string& text, FieldPtr ctx) : s_(text), ctx_(std::move(ctx)) {}

  Poly parse() {
    skip();
    if (pos_ == s_.size()) throw ParseError(pos_, "empty polynomial");
    Poly r = sum();
    skip();
    if (pos_ != s_.size()) throw ParseError(pos_, std::string("unexpected '") + s_[pos_] + "'");
    return r;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  Poly sum() {
    Poly acc(ctx_);
    bool negate = false;
    char c = peek();
    if (c == '+' || c == '-') {
      negate = c == '-';
      ++pos_;
    }
    for (;;) {
      Poly t = product();
      acc += negate ? -t : t;
      c = peek();
      if (c != '+' && c != '-') return acc;
      negate = c == '-';
      ++pos_;
    }
  }

  Poly product() {
    Poly acc = factor();
    for (;;) {
      const char c = peek();
      if (c == 'X' || c == 't' || c == '(') {
        acc = acc * factor();
        continue;
      }
      if (c != '*' && c != '/') return acc;
      const std::size_t at = pos_;
      ++pos_;
      Poly rhs = factor();
      if (c == '*') {
        acc = acc * rhs;
        continue;
      }
      if (rhs.degree() > 0) throw ParseError(at, "division by a polynomial in X");
      if (rhs.is_zero()) throw ParseError(at, "division by zero");
      acc = acc * rhs.coeffs()[0].inverse();
    }
  }

  unsigned long natural() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) throw ParseError(start, "expected a natural number");
    const std::string digits = s_.substr(start, pos_ - start);
    if (digits.size() > 6 || std::stoul(digits) > kMaxPower) throw ParseError(start, "exponent too large");
    return std::stoul(digits);
  }

  unsigned long power() {
    if (peek() != '^') return 1;
    ++pos_;
    return natural();
  }

  Poly factor() {
    const char c = peek();
    const std::size_t at = pos_;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      const mpz_class n(s_.substr(start, pos_ - start));
      const long v = static_cast<long>(mpz_fdiv_ui(n.get_mpz_t(), ctx_->p()));
      return Poly::constant(RatFun(FF(ctx_, v)));
    }
    if (c == 't') {
      ++pos_;
      const auto k = power();
      return Poly::constant(RatFun::monomial(FF::one(ctx_), Exponent(static_cast<long>(k))));
    }
    if (c == 'X') {
      ++pos_;
      return Poly::monomial(RatFun(FF::one(ctx_)), power());
    }
    if (c == '(') {
      ++pos_;
      Poly inner = sum();
      if (peek() != ')') throw ParseError(pos_, "expected ')'");
      ++pos_;
      if (peek() == '^') throw ParseError(pos_, "powers of parenthesized expressions are not supported");
      return inner;
    }
    if (c == '\0') throw ParseError(at, "unexpected end of input");
    throw ParseError(at, std::string("unknown symbol '") + c + "'");
  }

  const std::string& s_;
  FieldPtr ctx_;
  std::size_t pos_ = 0;
};

long symmetric(const FF& c) {
  const long p = c.ctx()->p();
  const long v = c.prime_value();
  return 2 * v > p ? v - p : v;
}

std::string t_power(long k) {
  if (k == 0) return "";
  if (k == 1) return "t";
  return "t^" + std::to_string(k);
}

/// A t-polynomial, highest power first, with its overall sign pulled out
/// so that the leading integer is positive.
std::pair<bool, std::string> format_tpoly(const TermPoly& a) {
  const auto& ts = a.terms();
  std::string out;
  const bool negative = symmetric(ts.back().coeff) < 0;
  for (std::size_t n = ts.size(); n-- > 0;) {
    long c = symmetric(ts[n].coeff);
    if (negative) c = -c;
    const long k = ts[n].exp.get_num().get_si();
    const bool first = n + 1 == ts.size();
    if (!first) out += c < 0 ? " - " : " + ";
    const long m = first ? c : std::labs(c);
    if (k == 0) {
      out += std::to_string(m);
    } else if (m == 1) {
      out += t_power(k);
    } else {
      out += std::to_string(m) + "*" + t_power(k);
    }
  }
  return {negative, out};
}

/// Sign and magnitude of a coefficient; `atomic` tells whether it can be
/// followed by "*X" without parentheses.
struct CoeffText {
  bool negative;
  std::string body;
  bool atomic;
};

CoeffText coefficient_parts(const RatFun& c) {
  for (const auto* part : {&c.num(), &c.den()}) {
    for (const auto& t : part->terms()) {
      if (t.exp.get_den() != 1) throw std::invalid_argument("coefficient is not in F_p(t)");
      if (!t.coeff.in_prime_field()) throw std::invalid_argument("coefficient is not in F_p(t)");
    }
  }
  auto [neg, num] = format_tpoly(c.num());
  const bool den_one = c.den().is_monomial() && c.den().lowest().exp == 0;
  if (den_one) return {neg, num, c.num().is_monomial()};
  auto [dneg, den] = format_tpoly(c.den());
  (void)dneg;
  if (c.num().is_monomial() && c.den().is_monomial()) return {neg, num + "/" + den, true};
  if (c.num().is_monomial()) return {neg, num + "/(" + den + ")", true};
  return {neg, "(" + num + ")/(" + den + ")", true};
}

}  // namespace

Poly parse_polynomial(const std::string& text, std::uint32_t p) {
  if (!is_prime(p)) throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
  return Parser(text, FieldCtx::prime(p)).parse();
}

std::string format_coefficient(const RatFun& c) {
  if (c.is_zero()) return "0";
  auto parts = coefficient_parts(c);
  if (!parts.negative) return parts.body;
  return parts.atomic ? "-" + parts.body : "-(" + parts.body + ")";
}

std::string format_polynomial(const Poly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (int i = f.degree(); i >= 0; --i) {
    const RatFun& c = f.coeffs()[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    auto parts = coefficient_parts(c);
    std::string body;
    const std::string x = i == 0 ? "" : (i == 1 ? "X" : "X^" + std::to_string(i));
    if (i == 0) {
      body = parts.atomic || !parts.negative ? parts.body : "(" + parts.body + ")";
    } else if (parts.body == "1") {
      body = x;
    } else {
      body = (parts.atomic ? parts.body : "(" + parts.body + ")") + "*" + x;
    }
    if (out.empty()) {
      out = parts.negative ? "-" + body : body;
    } else {
      out += parts.negative ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

}  // namespace hahnroot
