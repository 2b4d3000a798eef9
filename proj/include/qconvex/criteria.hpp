#ifndef QCONVEX_CRITERIA_HPP
#define QCONVEX_CRITERIA_HPP

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qconvex/arith.hpp"
#include "qconvex/parallel.hpp"
#include "qconvex/sequences.hpp"

namespace qconvex {

/// a(n+1,k)a(n-1,t-k) + a(n-1,k)a(n+1,t-k) - 2a(n,k)a(n,t-k) for k < t/2, and
/// a(n+1,k)a(n-1,k) - a(n,k)^2 on the diagonal k = t/2.
/// Requires n >= 1, 0 <= t <= 2n, 0 <= k <= t/2; std::invalid_argument otherwise.
Integer L_tilde(const Triangle& tri, long n, long t, long k);

/// The symmetric form for every k <= t/2, including the diagonal (where it is
/// twice L_tilde).
Integer L_mod(const Triangle& tri, long n, long t, long k);

/// Result of testing a finite sequence for a single +/- sign change.
///
/// Zeros are wildcards: the sequence is admissible when no strictly positive
/// entry follows a strictly negative one. split_index is the largest k' with
/// values[0..k'] >= 0 and values[k'+1..] <= 0; it is -1 when the very first
/// entry is negative.
struct SignPatternResult {
  bool admissible = true;
  std::optional<long> split_index;
  /// (i, j): first negative entry and the first positive entry after it.
  std::optional<std::pair<long, long>> violation;

  friend bool operator==(const SignPatternResult&, const SignPatternResult&) = default;
};

template <class Scalar>
SignPatternResult sign_pattern(std::span<const Scalar> values) {
  if (values.empty()) throw std::invalid_argument("sign_pattern needs a nonempty sequence");
  const long size = static_cast<long>(values.size());
  long first_negative = -1;
  for (long k = 0; k < size; ++k) {
    const int s = sgn(values[static_cast<std::size_t>(k)]);
    if (s < 0 && first_negative < 0) first_negative = k;
    if (s > 0 && first_negative >= 0) return {false, std::nullopt, std::pair{first_negative, k}};
  }
  return {true, first_negative < 0 ? size - 1 : first_negative - 1, std::nullopt};
}

template <class Scalar>
SignPatternResult sign_pattern(const std::vector<Scalar>& values) {
  return sign_pattern(std::span<const Scalar>(values));
}

enum class Theorem { liu_wang, self_reciprocal };
enum class LOperator { tilde, modified };

/// "T1.1" / "T2.1".
std::string_view theorem_label(Theorem th);
/// "L_tilde" / "L_mod".
std::string_view operator_label(LOperator op);

struct CriterionRow {
  long n;
  long t;
  SignPatternResult pattern;
};

/// First inadmissible (n, t) row, with the two entries that clash.
struct CriterionViolation {
  long n;
  long t;
  long i;
  long j;
  Integer value_i;
  Integer value_j;
};

struct CriterionReport {
  Theorem theorem;
  LOperator op;
  std::string triangle;
  std::string weights;  // empty for Theorem::liu_wang
  long n_max = 0;
  std::vector<CriterionRow> rows;  // (n, t) lexicographic
  std::optional<bool> c1_ok;       // self-reciprocal theorem only
  std::optional<long> c1_witness;  // first n with g_n not self-reciprocal
  std::optional<CriterionViolation> first_violation;
  bool overall = true;

  long admissible_rows() const;
};

/// The [L_tilde_t(a(n,k))]_{k=0..t/2} sign pattern for 1 <= n <= n_max and
/// 0 <= t <= 2n. Throws std::invalid_argument for n_max < 1 and
/// std::out_of_range when a file triangle lacks row n_max + 1.
CriterionReport check_theorem11(const Triangle& tri, long n_max, const Parallelism& par = Parallelism::sequential());

/// Self-reciprocity of g_n for n <= n_max + 1, plus the [L_mod] sign pattern
/// for 1 <= n <= n_max and 0 <= t <= n only.
CriterionReport check_theorem21(const PolySeqSpec& spec, long n_max,
                                const Parallelism& par = Parallelism::sequential());

}  // namespace qconvex

#endif  // QCONVEX_CRITERIA_HPP
