#ifndef QCONVEX_IDENTITIES_HPP
#define QCONVEX_IDENTITIES_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qconvex/multipoly.hpp"
#include "qconvex/parallel.hpp"
#include "qconvex/report.hpp"

namespace qconvex {

struct NamedPoly {
  std::string name;
  std::string description;
  MultiPoly poly;
  std::vector<Var> variables;  // the variables the polynomial is read in
};

/// Catalog lookup; throws std::invalid_argument for an unknown name.
///
///   phi      the cubic controlling L_t(C(n,k))
///   psi      the sextic controlling L_t(a(n,k)) for a(n,k) = C(n,k)C(2n-2k,n-k)
///   psi1     dpsi/dx = 2(2x-t) psi1
///   psi2     dpsi1/dx = 2(2x-t) psi2
///   theta    the quartic governing L_t(a(n,0)), read in x
///   theta1   theta' = 2(n-x) theta1
///   theta2   theta1' = (2n-1) theta2
///   xi       psi1(0)/(n+1), read in t
///   eta      psi2(0), read in t
///   psi_nn, psi1_nn, psi2_nn   the t = n specialisations
NamedPoly build_named_poly(std::string_view name);
const std::vector<std::string>& named_poly_names();

struct IdentityCheck {
  std::string id;
  std::string title;
  std::string lhs;  // "; "-separated, one entry per equation
  std::string rhs;
  long equations = 0;
  bool pass = false;
  /// "<label>: <monomial>: <lhs coeff> vs <rhs coeff>" for the first failure.
  std::optional<std::string> difference;
};

/// Ids "a" through "o"; throws std::invalid_argument for anything else.
IdentityCheck verify_identity(std::string_view id);
const std::vector<std::string>& identity_ids();

enum class Factorization { phi, psi };

/// Compares L_mod against the closed-form factorization at every integer grid
/// point: phi pairs with the binomial triangle over 0 <= t <= 2n, psi with
/// the sun_a triangle over 0 <= t <= n. One section per call.
Report grid_verify_factorization(Factorization which, long n_max,
                                 const Parallelism& par = Parallelism::sequential());

/// Pointwise sign claims on integer grids up to n_max (>= 5, else
/// std::invalid_argument). One section per claim.
Report grid_verify_sign_claims(long n_max, const Parallelism& par = Parallelism::sequential());

}  // namespace qconvex

#endif  // QCONVEX_IDENTITIES_HPP
