#ifndef QCONVEX_ARITH_HPP
#define QCONVEX_ARITH_HPP

#include <gmpxx.h>

#include <string>

namespace qconvex {

/// Arbitrary-precision signed integer.
using Integer = mpz_class;

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator (construct through make_rational, or call canonicalize()).
using Rational = mpq_class;

/// num/den reduced to lowest terms. Throws std::domain_error when den == 0.
Rational make_rational(const Integer& num, const Integer& den);

/// C(n, k), zero for k < 0 or k > n. Throws std::domain_error for n < 0.
Integer binomial(long n, long k);

inline int sign(const Integer& v) { return sgn(v); }
inline int sign(const Rational& v) { return sgn(v); }

inline bool is_integral(const Rational& v) { return v.get_den() == 1; }

/// Decimal string; rationals render as "p/q" (or "p" when integral).
std::string to_decimal(const Integer& v);
std::string to_decimal(const Rational& v);

/// Parses an optionally signed decimal integer. Throws std::invalid_argument.
Integer parse_integer(const std::string& text);
/// Parses "p" or "p/q". Throws std::invalid_argument.
Rational parse_rational(const std::string& text);

}  // namespace qconvex

#endif  // QCONVEX_ARITH_HPP
