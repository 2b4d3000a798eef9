#include "qconvex/convexity.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "qconvex/criteria.hpp"

namespace qconvex {

namespace {

enum class Direction { convex, concave };

ConvexityVerdict check_sequence(std::span<const Integer> values, bool require_nonnegative, Direction dir) {
  if (values.empty()) throw std::invalid_argument("log-convexity check needs at least one value");
  if (require_nonnegative) {
    for (std::size_t i = 0; i < values.size(); ++i)
      if (sgn(values[i]) < 0)
        throw std::invalid_argument("negative entry at index " + std::to_string(i) + ": " + to_decimal(values[i]));
  }
  for (std::size_t i = 1; i + 1 < values.size(); ++i) {
    Integer outer = values[i - 1] * values[i + 1];
    Integer square = values[i] * values[i];
    bool ok = dir == Direction::convex ? outer >= square : square >= outer;
    if (!ok) return {false, SequenceWitness{static_cast<long>(i), values[i - 1], values[i], values[i + 1]}};
  }
  return {};
}

QLCVerdict check_q_sequence(const PolySeqSpec& spec, long n_max, const Parallelism& par, Direction dir) {
  if (n_max < 1) throw std::invalid_argument("q-log-convexity check needs n_max >= 1");
  spec.triangle.require_rows(n_max);

  std::vector<Poly> g(static_cast<std::size_t>(n_max + 1));
  parallel_for(0, n_max + 1, par, [&](long n) { g[static_cast<std::size_t>(n)] = gen_poly(spec, n); });

  // One slot per n so that the reported witness does not depend on scheduling.
  std::vector<std::optional<CoefficientWitness>> failures(static_cast<std::size_t>(n_max));
  parallel_for(1, n_max, par, [&](long n) {
    const auto i = static_cast<std::size_t>(n);
    Poly diff = qlc_difference(g[i - 1], g[i], g[i + 1]);
    if (dir == Direction::concave) diff = -diff;
    for (long t = 0; t <= diff.degree(); ++t) {
      if (sgn(diff[t]) < 0) {
        failures[i] = CoefficientWitness{n, t, diff[t]};
        return;
      }
    }
  });
  for (auto& f : failures)
    if (f) return {false, std::move(f)};
  return {};
}

void require_coeff_range(long n, long t) {
  if (n < 1) throw std::out_of_range("coefficient index needs n >= 1, got n = " + std::to_string(n));
  if (t < 0 || t > 2 * n)
    throw std::out_of_range("t = " + std::to_string(t) + " outside 0..2n for n = " + std::to_string(n));
}

}  // namespace

ConvexityVerdict is_log_convex(std::span<const Integer> values, bool require_nonnegative) {
  return check_sequence(values, require_nonnegative, Direction::convex);
}

ConvexityVerdict is_log_concave(std::span<const Integer> values, bool require_nonnegative) {
  return check_sequence(values, require_nonnegative, Direction::concave);
}

Poly qlc_difference(const Poly& p_prev, const Poly& p_cur, const Poly& p_next) {
  return p_prev * p_next - p_cur * p_cur;
}

QLCVerdict is_q_log_convex_upto(const PolySeqSpec& spec, long n_max, const Parallelism& par) {
  return check_q_sequence(spec, n_max, par, Direction::convex);
}

QLCVerdict is_q_log_concave_upto(const PolySeqSpec& spec, long n_max, const Parallelism& par) {
  return check_q_sequence(spec, n_max, par, Direction::concave);
}

bool is_self_reciprocal(const Poly& p, long n) {
  if (p.degree() > n) return false;
  for (long i = 0; 2 * i < n; ++i)
    if (p[i] != p[n - i]) return false;
  return true;
}

Integer coeff_A(const Triangle& tri, long n, long t) {
  require_coeff_range(n, t);
  Rational sum(0);
  for (long k = 0; 2 * k <= t; ++k) {
    Integer l = L_mod(tri, n, t, k);
    if (2 * k == t) sum += make_rational(l, 2);
    else sum += l;
  }
  sum.canonicalize();
  if (!is_integral(sum))
    throw std::logic_error("coeff_A(" + std::to_string(n) + "," + std::to_string(t) +
                           ") assembled a non-integer: " + to_decimal(sum));
  return sum.get_num();
}

Rational coeff_B(const PolySeqSpec& spec, long n, long t) {
  require_coeff_range(n, t);
  Rational sum(0);
  for (long k = 0; 2 * k <= t; ++k) {
    Integer term = L_mod(spec.triangle, n, t, k) * spec.weights(k) * spec.weights(t - k);
    if (2 * k == t) sum += make_rational(term, 2);
    else sum += term;
  }
  sum.canonicalize();
  return sum;
}

}  // namespace qconvex
