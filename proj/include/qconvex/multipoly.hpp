#ifndef QCONVEX_MULTIPOLY_HPP
#define QCONVEX_MULTIPOLY_HPP

#include <array>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "qconvex/arith.hpp"

namespace qconvex {

enum class Var { n = 0, t = 1, x = 2 };

/// "n", "t" or "x"; anything else throws std::invalid_argument.
Var parse_var(std::string_view name);
std::string_view var_name(Var v);

/// Sparse polynomial with rational coefficients in the variables n, t, x.
///
/// Terms are keyed by exponent triple (e_n, e_t, e_x). Zero coefficients are
/// never stored, so structural equality is polynomial equality.
class MultiPoly {
 public:
  using Exponents = std::array<int, 3>;
  using Terms = std::map<Exponents, Rational>;

  MultiPoly() = default;
  MultiPoly(long c);             // NOLINT(google-explicit-constructor)
  MultiPoly(const Rational& c);  // NOLINT(google-explicit-constructor)

  static MultiPoly var(Var v);
  static MultiPoly monomial(const Rational& c, Exponents e);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Highest exponent of v; -1 for the zero polynomial.
  int degree(Var v) const;
  /// Coefficient of the exact monomial e (zero when absent).
  Rational coeff(const Exponents& e) const;
  /// True when v does not occur.
  bool is_free_of(Var v) const { return degree(v) <= 0; }

  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

  MultiPoly& operator+=(const MultiPoly& r);
  MultiPoly& operator-=(const MultiPoly& r);
  MultiPoly& operator*=(const MultiPoly& r);

  friend MultiPoly operator+(MultiPoly p, const MultiPoly& r) { return p += r; }
  friend MultiPoly operator-(MultiPoly p, const MultiPoly& r) { return p -= r; }
  friend MultiPoly operator*(MultiPoly p, const MultiPoly& r) { return p *= r; }
  friend MultiPoly operator-(const MultiPoly& p) { return MultiPoly(0L) - p; }

  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.to_string(); }

 private:
  void add_term(const Exponents& e, const Rational& c);

  Terms terms_;
};

MultiPoly pow(const MultiPoly& p, unsigned k);

/// Formal partial derivative.
MultiPoly derivative(const MultiPoly& p, Var v);
MultiPoly mp_derivative(const MultiPoly& p, std::string_view var);

/// p with v replaced by `replacement`, fully expanded.
MultiPoly substitute(const MultiPoly& p, Var v, const MultiPoly& replacement);
MultiPoly mp_substitute(const MultiPoly& p, std::string_view var, const MultiPoly& replacement);

Rational eval(const MultiPoly& p, const Rational& n, const Rational& t, const Rational& x);
inline Rational mp_eval(const MultiPoly& p, const Rational& n, const Rational& t, const Rational& x) {
  return eval(p, n, t, x);
}

/// First monomial (in term order) on which a and b disagree, rendered as
/// "n^2*t: 3 vs 5"; nullopt when a == b.
std::optional<std::string> first_difference(const MultiPoly& a, const MultiPoly& b);

}  // namespace qconvex

#endif  // QCONVEX_MULTIPOLY_HPP
