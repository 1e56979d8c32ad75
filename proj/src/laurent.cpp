#include "hx/laurent.hpp"

#include <cctype>

namespace hx {

std::string to_string(const Rational& r) {
  std::string num = boost::multiprecision::numerator(r).str();
  BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num;
  return num + "/" + den.str();
}

Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(s));
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("malformed rational '" + s + "'");
  }
}

std::string format_coeff(std::int64_t c) { return std::to_string(c); }
std::string format_coeff(const Rational& c) { return to_string(c); }

namespace {

// Tokenizes "a*x^k" terms separated by + / -.
template <class C, class ParseCoeff>
Laurent<C> parse_generic(std::string_view text, ParseCoeff parse_coeff) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw std::invalid_argument("empty Laurent polynomial text");
  Laurent<C> out;
  std::size_t i = 0;
  bool any = false;
  while (i < s.size()) {
    bool neg = false;
    if (s[i] == '+' || s[i] == '-') {
      neg = s[i] == '-';
      ++i;
    } else if (any) {
      throw std::invalid_argument("expected '+' or '-' in '" + s + "'");
    }
    std::size_t start = i;
    while (i < s.size() && s[i] != '+' && s[i] != '-') {
      // a '-' right after '^' belongs to the exponent
      if (s[i] == '^' && i + 1 < s.size() && s[i + 1] == '-') ++i;
      ++i;
    }
    std::string term = s.substr(start, i - start);
    if (term.empty()) throw std::invalid_argument("empty term in '" + s + "'");
    std::string coeff_part;
    std::string var_part;
    auto star = term.find('*');
    if (star != std::string::npos) {
      coeff_part = term.substr(0, star);
      var_part = term.substr(star + 1);
    } else if (std::isalpha(static_cast<unsigned char>(term[0]))) {
      var_part = term;
    } else {
      coeff_part = term;
    }
    int exponent = 0;
    if (!var_part.empty()) {
      if (!std::isalpha(static_cast<unsigned char>(var_part[0])))
        throw std::invalid_argument("bad variable in term '" + term + "'");
      exponent = 1;
      if (var_part.size() > 1) {
        if (var_part[1] != '^') throw std::invalid_argument("bad exponent in term '" + term + "'");
        try {
          std::size_t used = 0;
          exponent = std::stoi(var_part.substr(2), &used);
          if (used != var_part.size() - 2) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
          throw std::invalid_argument("bad exponent in term '" + term + "'");
        }
      }
    }
    C c = coeff_part.empty() ? C(1) : parse_coeff(coeff_part);
    if (neg) c = -c;
    out += Laurent<C>::monomial(c, exponent);
    any = true;
  }
  return out;
}

}  // namespace

LaurentZ parse_laurent_z(std::string_view text) {
  return parse_generic<std::int64_t>(text, [](const std::string& c) -> std::int64_t {
    try {
      std::size_t used = 0;
      long long v = std::stoll(c, &used);
      if (used != c.size()) throw std::invalid_argument("trailing");
      return v;
    } catch (const std::exception&) {
      throw std::invalid_argument("bad integer coefficient '" + c + "'");
    }
  });
}

LaurentQ parse_laurent_q(std::string_view text) {
  return parse_generic<Rational>(text, [](const std::string& c) { return parse_rational(c); });
}

BalancedPair decompose(const LaurentQ& p) {
  LaurentQ b = p.bar();
  const Rational half(1, 2);
  return {(p + b) * half, (p - b) * half};
}

LaurentQ antibalanced_generator() { return LaurentQ::monomial(1, 1) - LaurentQ::monomial(1, -1); }

LaurentQ divide_by_generator(const LaurentQ& p) {
  if (!p.is_antibalanced()) throw std::invalid_argument("divide_by_generator: input is not anti-balanced: " + p.to_string("t"));
  LaurentQ rem = p;
  LaurentQ quotient;
  const LaurentQ gen = antibalanced_generator();
  // Peel the top term: a*t^d = a*t^(d-1) * (t - t^-1) + a*t^(d-2).
  const int floor = p.is_zero() ? 0 : p.valuation();
  while (!rem.is_zero() && rem.degree() > floor) {
    int d = rem.degree();
    LaurentQ step = LaurentQ::monomial(rem.leading_coeff(), d - 1);
    quotient += step;
    rem -= step * gen;
  }
  if (!rem.is_zero()) throw std::logic_error("divide_by_generator: inexact division (internal fault)");
  return quotient;
}

}  // namespace hx
