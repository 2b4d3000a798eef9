#include "qconvex/criteria.hpp"

#include <algorithm>
#include <iterator>
#include <string>

#include "qconvex/convexity.hpp"

namespace qconvex {

namespace {

void require_operator_args(long n, long t, long k) {
  if (n < 1) throw std::invalid_argument("L operator needs n >= 1, got n = " + std::to_string(n));
  if (t < 0 || t > 2 * n)
    throw std::invalid_argument("L operator: t = " + std::to_string(t) + " outside 0..2n for n = " + std::to_string(n));
  if (k < 0 || 2 * k > t)
    throw std::invalid_argument("L operator: k = " + std::to_string(k) + " outside 0..t/2 for t = " + std::to_string(t));
}

Integer symmetric_form(const Triangle& a, long n, long t, long k) {
  return a(n + 1, k) * a(n - 1, t - k) + a(n - 1, k) * a(n + 1, t - k) - 2 * a(n, k) * a(n, t - k);
}

std::vector<Integer> operator_row(const Triangle& tri, LOperator op, long n, long t) {
  std::vector<Integer> row;
  row.reserve(static_cast<std::size_t>(t / 2 + 1));
  for (long k = 0; 2 * k <= t; ++k) row.push_back(op == LOperator::tilde ? L_tilde(tri, n, t, k) : L_mod(tri, n, t, k));
  return row;
}

// Fills report.rows for 0 <= t <= 2n (or n) and records the first violation.
void scan_rows(CriterionReport& report, const Triangle& tri, long n_max, bool up_to_2n, const Parallelism& par) {
  std::vector<std::vector<CriterionRow>> per_n(static_cast<std::size_t>(n_max + 1));
  std::vector<std::optional<CriterionViolation>> violations(static_cast<std::size_t>(n_max + 1));
  parallel_for(1, n_max + 1, par, [&](long n) {
    const auto slot = static_cast<std::size_t>(n);
    const long t_max = up_to_2n ? 2 * n : n;
    for (long t = 0; t <= t_max; ++t) {
      auto values = operator_row(tri, report.op, n, t);
      auto pattern = sign_pattern(values);
      if (!pattern.admissible && !violations[slot]) {
        auto [i, j] = *pattern.violation;
        violations[slot] = CriterionViolation{n, t, i, j, values[static_cast<std::size_t>(i)],
                                              values[static_cast<std::size_t>(j)]};
      }
      per_n[slot].push_back({n, t, std::move(pattern)});
    }
  });
  for (long n = 1; n <= n_max; ++n) {
    auto& rows = per_n[static_cast<std::size_t>(n)];
    std::move(rows.begin(), rows.end(), std::back_inserter(report.rows));
    auto& v = violations[static_cast<std::size_t>(n)];
    if (v && !report.first_violation) report.first_violation = std::move(v);
  }
  report.overall = !report.first_violation;
}

}  // namespace

Integer L_tilde(const Triangle& tri, long n, long t, long k) {
  require_operator_args(n, t, k);
  if (2 * k == t) return tri(n + 1, k) * tri(n - 1, k) - tri(n, k) * tri(n, k);
  return symmetric_form(tri, n, t, k);
}

Integer L_mod(const Triangle& tri, long n, long t, long k) {
  require_operator_args(n, t, k);
  return symmetric_form(tri, n, t, k);
}

std::string_view theorem_label(Theorem th) { return th == Theorem::liu_wang ? "T1.1" : "T2.1"; }

std::string_view operator_label(LOperator op) { return op == LOperator::tilde ? "L_tilde" : "L_mod"; }

long CriterionReport::admissible_rows() const {
  return static_cast<long>(std::count_if(rows.begin(), rows.end(), [](const auto& r) { return r.pattern.admissible; }));
}

CriterionReport check_theorem11(const Triangle& tri, long n_max, const Parallelism& par) {
  if (n_max < 1) throw std::invalid_argument("check_theorem11 needs n_max >= 1");
  tri.require_rows(n_max + 1);
  CriterionReport report;
  report.theorem = Theorem::liu_wang;
  report.op = LOperator::tilde;
  report.triangle = tri.name();
  report.n_max = n_max;
  scan_rows(report, tri, n_max, /*up_to_2n=*/true, par);
  return report;
}

CriterionReport check_theorem21(const PolySeqSpec& spec, long n_max, const Parallelism& par) {
  if (n_max < 1) throw std::invalid_argument("check_theorem21 needs n_max >= 1");
  spec.triangle.require_rows(n_max + 1);
  CriterionReport report;
  report.theorem = Theorem::self_reciprocal;
  report.op = LOperator::modified;
  report.triangle = spec.triangle.name();
  report.weights = spec.weights.name();
  report.n_max = n_max;

  std::vector<char> reciprocal(static_cast<std::size_t>(n_max + 2), 1);
  parallel_for(0, n_max + 2, par, [&](long n) {
    reciprocal[static_cast<std::size_t>(n)] = is_self_reciprocal(gen_poly(spec, n), n) ? 1 : 0;
  });
  auto bad = std::find(reciprocal.begin(), reciprocal.end(), 0);
  report.c1_ok = bad == reciprocal.end();
  if (!*report.c1_ok) report.c1_witness = static_cast<long>(bad - reciprocal.begin());

  scan_rows(report, spec.triangle, n_max, /*up_to_2n=*/false, par);
  report.overall = report.overall && *report.c1_ok;
  return report;
}

}  // namespace qconvex
