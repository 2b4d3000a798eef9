#ifndef QCONVEX_CONVEXITY_HPP
#define QCONVEX_CONVEXITY_HPP

#include <optional>
#include <span>

#include "qconvex/arith.hpp"
#include "qconvex/parallel.hpp"
#include "qconvex/poly.hpp"
#include "qconvex/sequences.hpp"

namespace qconvex {

/// First interior index where the defining inequality fails, with the three
/// entries involved.
struct SequenceWitness {
  long index;
  Integer prev;
  Integer cur;
  Integer next;
};

struct ConvexityVerdict {
  bool holds = true;
  std::optional<SequenceWitness> witness;  // present iff !holds
};

/// a_{n-1} a_{n+1} >= a_n^2 for every interior n. Throws std::invalid_argument
/// on an empty list, or on a negative entry when require_nonnegative is set.
ConvexityVerdict is_log_convex(std::span<const Integer> values, bool require_nonnegative = true);
/// a_n^2 >= a_{n-1} a_{n+1} for every interior n.
ConvexityVerdict is_log_concave(std::span<const Integer> values, bool require_nonnegative = true);

/// First coefficient of the wrong sign in a three-term difference.
struct CoefficientWitness {
  long n;
  long t;
  Rational coefficient;
};

struct QLCVerdict {
  bool holds = true;
  std::optional<CoefficientWitness> witness;  // present iff !holds
};

/// p_prev * p_next - p_cur^2.
Poly qlc_difference(const Poly& p_prev, const Poly& p_cur, const Poly& p_next);

/// Checks g_{n-1} g_{n+1} - g_n^2 has only nonnegative coefficients for
/// 1 <= n <= n_max - 1. The witness is the lexicographically first (n, t)
/// failure whatever the thread count. Throws std::invalid_argument when
/// n_max < 1 and std::out_of_range when a file triangle stops short of n_max.
QLCVerdict is_q_log_convex_upto(const PolySeqSpec& spec, long n_max,
                                const Parallelism& par = Parallelism::sequential());
/// Mirror check: g_n^2 - g_{n-1} g_{n+1} has nonnegative coefficients. The
/// witness coefficient is taken from that (flipped) difference.
QLCVerdict is_q_log_concave_upto(const PolySeqSpec& spec, long n_max,
                                 const Parallelism& par = Parallelism::sequential());

/// Coefficient i equals coefficient n - i for every 0 <= i <= n. False when
/// deg(p) > n.
bool is_self_reciprocal(const Poly& p, long n);

/// Coefficient of q^t in f_{n-1} f_{n+1} - f_n^2, assembled from the L_t sum
/// (half weight on the diagonal k = t/2). Requires n >= 1, 0 <= t <= 2n
/// (std::out_of_range otherwise). The assembled value must be integral.
Integer coeff_A(const Triangle& tri, long n, long t);
/// Same for g_{n-1} g_{n+1} - g_n^2 with the u_k u_{t-k} weights.
Rational coeff_B(const PolySeqSpec& spec, long n, long t);

}  // namespace qconvex

#endif  // QCONVEX_CONVEXITY_HPP
