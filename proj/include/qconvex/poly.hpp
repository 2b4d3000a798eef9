#ifndef QCONVEX_POLY_HPP
#define QCONVEX_POLY_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

#include "qconvex/arith.hpp"

namespace qconvex {

/// Dense univariate polynomial in q; coefficient i multiplies q^i.
///
/// The coefficient vector is always canonical: a nonzero polynomial never
/// stores a trailing zero and the zero polynomial stores nothing, so two
/// polynomials are equal exactly when their vectors are.
template <class Scalar>
class Polynomial {
 public:
  using scalar_type = Scalar;

  Polynomial() = default;
  Polynomial(std::initializer_list<Scalar> coeffs) : coeffs_(coeffs) { trim(); }
  explicit Polynomial(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Polynomial constant(const Scalar& c) { return Polynomial({c}); }

  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Coefficient of q^i, zero outside the stored range.
  Scalar operator[](long i) const {
    if (i < 0 || i > degree()) return Scalar(0);
    return coeffs_[static_cast<std::size_t>(i)];
  }

  std::span<const Scalar> coeffs() const { return coeffs_; }

  const Scalar& leading() const { return coeffs_.back(); }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  Polynomial& operator+=(const Polynomial& r) {
    if (r.coeffs_.size() > coeffs_.size()) coeffs_.resize(r.coeffs_.size(), Scalar(0));
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i) coeffs_[i] += r.coeffs_[i];
    trim();
    return *this;
  }

  Polynomial& operator-=(const Polynomial& r) {
    if (r.coeffs_.size() > coeffs_.size()) coeffs_.resize(r.coeffs_.size(), Scalar(0));
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i) coeffs_[i] -= r.coeffs_[i];
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial p, const Polynomial& r) { return p += r; }
  friend Polynomial operator-(Polynomial p, const Polynomial& r) { return p -= r; }

  friend Polynomial operator-(Polynomial p) {
    for (auto& c : p.coeffs_) c = -c;
    return p;
  }

  friend Polynomial operator*(const Polynomial& p, const Polynomial& r) {
    if (p.is_zero() || r.is_zero()) return {};
    std::vector<Scalar> out(p.coeffs_.size() + r.coeffs_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
      if (p.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < r.coeffs_.size(); ++j) out[i + j] += p.coeffs_[i] * r.coeffs_[j];
    }
    return Polynomial(std::move(out));
  }

  friend Polynomial operator*(const Scalar& c, Polynomial p) {
    for (auto& v : p.coeffs_) v *= c;
    p.trim();
    return p;
  }

  /// Horner evaluation.
  Scalar operator()(const Scalar& q) const {
    Scalar acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + *it;
    return acc;
  }

  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (long i = 0; i <= p.degree(); ++i) {
      const Scalar& c = p.coeffs_[static_cast<std::size_t>(i)];
      if (c == 0) continue;
      if (!first) os << (sgn(c) < 0 ? " - " : " + ");
      else if (sgn(c) < 0) os << "-";
      first = false;
      Scalar mag = abs(c);
      if (i == 0 || mag != 1) os << mag;
      if (i >= 1) os << (mag != 1 ? "*q" : "q");
      if (i >= 2) os << '^' << i;
    }
    return os;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Scalar> coeffs_;
};

using Poly = Polynomial<Rational>;
using IntPoly = Polynomial<Integer>;

inline Poly poly_mul(const Poly& p, const Poly& r) { return p * r; }
inline Poly poly_sub(const Poly& p, const Poly& r) { return p - r; }

}  // namespace qconvex

#endif  // QCONVEX_POLY_HPP
