#include "qconvex/arith.hpp"

#include <cctype>
#include <stdexcept>

namespace qconvex {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Integer binomial(long n, long k) {
  if (n < 0) throw std::domain_error("binomial: negative n = " + std::to_string(n));
  if (k < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

std::string to_decimal(const Integer& v) { return v.get_str(10); }

std::string to_decimal(const Rational& v) {
  if (is_integral(v)) return v.get_num().get_str(10);
  return v.get_num().get_str(10) + "/" + v.get_den().get_str(10);
}

namespace {

bool is_decimal(const std::string& s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Integer parse_integer(const std::string& text) {
  if (!is_decimal(text)) throw std::invalid_argument("not a decimal integer: '" + text + "'");
  // mpz_set_str rejects a leading '+'.
  return Integer(text[0] == '+' ? text.substr(1) : text, 10);
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(text));
  auto den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  return make_rational(parse_integer(text.substr(0, slash)), den);
}

}  // namespace qconvex
