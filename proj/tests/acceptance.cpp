// Acceptance suite: one [PASS]/[FAIL] line per criterion. Exit status is
// nonzero when any criterion fails.

#include <array>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "qconvex/cli.hpp"
#include "qconvex/convexity.hpp"
#include "qconvex/criteria.hpp"
#include "qconvex/identities.hpp"
#include "qconvex/report.hpp"
#include "qconvex/sequences.hpp"

namespace {

using namespace qconvex;

// Wall-clock limits in seconds; 0 means no limit.
constexpr double kGoldenLimit = 1.0;
constexpr double kHeadlineLimit = 120.0;
constexpr double kSelfReciprocalLimit = 5.0;
constexpr double kIdentityLimit = 5.0;

// Exact checks throughout: every comparison below is equality of integers or
// rationals, so the numeric tolerance is zero.
constexpr long kGoldenTable[4][5] = {{4, 0}, {8, 8, 0}, {40, 40, 46, 8}, {280, 336, 472, 332, 60}};

struct Outcome {
  bool pass;
  std::string detail;
};

struct Criterion {
  int number;
  std::string name;
  double limit;
  std::function<Outcome()> body;
};

std::string seconds(double s) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << s << " s";
  return os.str();
}

Outcome golden_table() {
  const Triangle a = sun_a_triangle();
  long matched = 0;
  std::string first_bad;
  for (long n = 1; n <= 4; ++n) {
    for (long t = 0; t <= n; ++t) {
      const Integer got = L_mod(a, n, t, 0);
      if (got == kGoldenTable[n - 1][t]) {
        ++matched;
      } else if (first_bad.empty()) {
        first_bad = " first mismatch L_" + std::to_string(t) + "(a(" + std::to_string(n) + ",0)) = " + to_decimal(got);
      }
    }
  }
  return {matched == 14, std::to_string(matched) + "/14 values exact" + first_bad};
}

Outcome q_log_convex(const PolySeqSpec& spec, long n_max) {
  const auto v = is_q_log_convex_upto(spec, n_max);
  std::string detail = "g_{n-1}g_{n+1} - g_n^2 >= 0 coefficientwise for 1 <= n <= " + std::to_string(n_max - 1);
  if (v.witness) {
    detail += "; witness n=" + std::to_string(v.witness->n) + " t=" + std::to_string(v.witness->t) +
              " coefficient=" + to_decimal(v.witness->coefficient);
  }
  return {v.holds, detail};
}

Outcome self_reciprocity() {
  const PolySeqSpec spec{sun_a_triangle(), central_binomial_weights()};
  for (long n = 0; n <= 200; ++n) {
    if (!is_self_reciprocal(gen_poly(spec, n), n)) return {false, "S_" + std::to_string(n) + " is not self-reciprocal"};
  }
  return {true, "S_n self-reciprocal for 0 <= n <= 200"};
}

Outcome sign_patterns() {
  const auto c2 = check_theorem21({sun_a_triangle(), central_binomial_weights()}, 50);
  const auto t11 = check_theorem11(binomial_triangle(), 50);
  const long c2_bad = static_cast<long>(c2.rows.size()) - c2.admissible_rows();
  const long t11_bad = static_cast<long>(t11.rows.size()) - t11.admissible_rows();
  const bool pass = c2_bad == 0 && t11_bad == 0 && c2.rows.size() == 1325 && t11.rows.size() == 2600;
  return {pass, "L_mod(sun_a) rows t<=n: " + std::to_string(c2.rows.size()) + " checked, " + std::to_string(c2_bad) +
                    " violations; L_tilde(binomial) rows t<=2n: " + std::to_string(t11.rows.size()) + " checked, " +
                    std::to_string(t11_bad) + " violations"};
}

Outcome identity_catalog() {
  long equations = 0;
  for (const auto& id : identity_ids()) {
    const auto c = verify_identity(id);
    equations += c.equations;
    if (!c.pass) return {false, "identity (" + id + ") fails: " + c.difference.value_or("")};
  }
  // The three named values, evaluated once more outside the catalog.
  const MultiPoly theta = build_named_poly("theta").poly;
  const MultiPoly n = MultiPoly::var(Var::n);
  const bool theta_at_n = substitute(theta, Var::x, n) == -n * (n - 1) * (n - 2) * (n + 1);
  const bool psi22 = eval(build_named_poly("psi_nn").poly, 2, 0, 1) == 8;
  const MultiPoly half = substitute(build_named_poly("psi_nn").poly, Var::x, make_rational(1, 2) * n);
  const bool psi_half = half == make_rational(-1, 8) * n * (n - 1) * (n * n - n - 4) * (n + 2) * (n + 2);
  const long count = static_cast<long>(identity_ids().size());
  return {theta_at_n && psi22 && psi_half,
          std::to_string(count) + " identities (a)-(o), " + std::to_string(equations) + " equations, canonical equality"};
}

std::string counts_of(const Report& r) {
  const auto& c = r.sections.at(0).counts;
  std::string s;
  for (const auto& [k, v] : c) s += (s.empty() ? "" : " ") + k + "=" + v;
  return s;
}

Outcome factorization_grids() {
  const Report phi_report = grid_verify_factorization(Factorization::phi, 50);
  const Report psi_report = grid_verify_factorization(Factorization::psi, 50);
  return {phi_report.overall() && psi_report.overall(), "phi grid (" + counts_of(phi_report) + "), psi grid (" + counts_of(psi_report) + ")"};
}

// Coefficient of q^t in g_{n-1}g_{n+1} - g_n^2, built from binomials alone.
Integer direct_coefficient(long n, long t, bool weighted) {
  auto g = [&](long m, long i) -> Integer {
    if (i < 0 || i > m) return 0;
    Integer v = binomial(m, i) * binomial(2 * m - 2 * i, m - i);
    if (weighted) v *= binomial(2 * i, i);
    return v;
  };
  Integer acc = 0;
  for (long i = 0; i <= t; ++i) acc += g(n - 1, i) * g(n + 1, t - i) - g(n, i) * g(n, t - i);
  return acc;
}

Outcome coefficient_oracle() {
  const Triangle a = sun_a_triangle();
  const PolySeqSpec spec{a, central_binomial_weights()};
  long checked = 0;
  for (long n = 1; n <= 50; ++n) {
    for (long t = 0; t <= 2 * n; ++t, ++checked) {
      const Rational b = coeff_B(spec, n, t);
      const std::string at = " at n=" + std::to_string(n) + " t=" + std::to_string(t);
      if (b != Rational(direct_coefficient(n, t, true))) return {false, "B differs from direct expansion" + at};
      if (coeff_A(a, n, t) != direct_coefficient(n, t, false)) return {false, "A differs from direct expansion" + at};
      if (b != coeff_B(spec, n, 2 * n - t)) return {false, "B(n,t) != B(n,2n-t)" + at};
    }
  }
  return {true, std::to_string(checked) + " (n,t) pairs, A and B equal direct expansion, B symmetric"};
}

struct SoundnessTally {
  long instances = 0;
  long hypotheses_met = 0;
  long counterexamples = 0;
  std::string first_counterexample;
};

// Hypotheses: C1 and C2 on the weighted sequence, log-convex weights, and
// q-log-convexity of the unweighted base sequence f_n.
void soundness_instance(const Triangle& tri, const WeightSeq& w, long n_max, SoundnessTally& tally) {
  ++tally.instances;
  const PolySeqSpec spec{tri, w};
  const bool criterion = check_theorem21(spec, n_max - 1).overall;
  const bool weights = is_log_convex(w.values(n_max + 1)).holds;
  const bool base = is_q_log_convex_upto({tri, builtin_weights("ones")}, n_max).holds;
  if (!(criterion && weights && base)) return;
  ++tally.hypotheses_met;
  if (!is_q_log_convex_upto(spec, n_max).holds) {
    if (tally.counterexamples++ == 0) tally.first_counterexample = tri.name() + " + " + w.name();
  }
}

Outcome soundness() {
  SoundnessTally builtin, random;
  for (const auto& t : triangle_names()) {
    for (const auto& w : weight_names()) soundness_instance(builtin_triangle(t), builtin_weights(w), 20, builtin);
  }

  const auto dir = std::filesystem::temp_directory_path() / ("qconvex_acceptance_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  std::mt19937_64 rng(20261016);
  auto pick = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
  constexpr long kRows = 12;
  constexpr int kTriangles = 24;
  for (int i = 0; i < kTriangles; ++i) {
    // Four families: log-convex multiples of C(n,k), of sun_a, random
    // palindromic rows, and unstructured rows.
    std::vector<std::vector<Integer>> rows;
    std::vector<Integer> scale{Integer(pick(1, 4))};
    long ratio = pick(1, 3);
    for (long n = 1; n <= kRows; ++n) {
      scale.push_back(scale.back() * ratio);
      ratio += pick(0, 2);
    }
    for (long n = 0; n <= kRows; ++n) {
      std::vector<Integer> row(static_cast<std::size_t>(n + 1));
      for (long k = 0; k <= n; ++k) {
        switch (i % 4) {
          case 0: row[k] = scale[n] * binomial(n, k); break;
          case 1: row[k] = scale[n] * binomial(n, k) * binomial(2 * n - 2 * k, n - k); break;
          case 2: row[k] = 2 * k <= n ? Integer(pick(1, 30)) : row[n - k]; break;
          default: row[k] = pick(1, 30); break;
        }
      }
      rows.push_back(std::move(row));
    }
    const Triangle generated("random", [rows](long n, long k) -> Integer { return rows[n][k]; },
                             TriangleSource::builtin, kRows);
    const auto path = dir / ("random_" + std::to_string(i) + ".csv");
    write_triangle_csv(generated, kRows, path);
    const Triangle loaded = load_triangle_csv(path);
    for (const auto& w : weight_names()) soundness_instance(loaded, builtin_weights(w), kRows, random);
  }
  std::filesystem::remove_all(dir);

  const long bad = builtin.counterexamples + random.counterexamples;
  std::string detail = "builtin: " + std::to_string(builtin.instances) + " specs, " +
                       std::to_string(builtin.hypotheses_met) + " meet hypotheses; random CSV: " +
                       std::to_string(kTriangles) + " triangles, " + std::to_string(random.instances) + " specs, " +
                       std::to_string(random.hypotheses_met) + " meet hypotheses; counterexamples " + std::to_string(bad);
  if (bad) detail += " (first: " + builtin.first_counterexample + random.first_counterexample + ")";
  // A vacuous sweep proves nothing.
  return {bad == 0 && builtin.hypotheses_met > 0 && random.hypotheses_met >= 5, detail};
}

std::string stripped(Report r) {
  r.started.clear();
  r.finished.clear();
  return report_to_json(r);
}

Outcome determinism() {
  if (std::getenv("QCONVEX_THREADS") == nullptr) ::setenv("QCONVEX_THREADS", "4", 1);
  std::vector<RunConfig> configs(4);
  configs[0].command = "verify-sun";
  configs[1].command = "check-c2";
  configs[2].command = "check-c2";
  configs[2].theorem = "1.1";
  configs[2].triangle = "binomial";
  configs[3].command = "identities";
  for (auto cfg : configs) {
    const std::string sequential = stripped(run_command(cfg));
    cfg.parallel = true;
    const std::string parallel = stripped(run_command(cfg));
    if (sequential != parallel) return {false, cfg.command + " report differs between sequential and parallel runs"};
  }
  return {true, "verify-sun, check-c2 (2.1 and 1.1), identities: identical reports on 1 and " +
                    std::string(std::getenv("QCONVEX_THREADS")) + " threads"};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "golden table L_t(a(n,0)), n=1..4", kGoldenLimit, golden_table},
      {2, "S_n q-log-convex, n_max=100", kHeadlineLimit,
       [] { return q_log_convex({sun_a_triangle(), central_binomial_weights()}, 100); }},
      {3, "f_n q-log-convex, n_max=100", kHeadlineLimit,
       [] { return q_log_convex({sun_a_triangle(), builtin_weights("ones")}, 100); }},
      {4, "S_n self-reciprocal, n<=200", kSelfReciprocalLimit, self_reciprocity},
      {5, "sign-pattern conditions, n<=50", 0, sign_patterns},
      {6, "identity catalog", kIdentityLimit, identity_catalog},
      {7, "factorization grids, n<=50", 0, factorization_grids},
      {8, "coefficient oracle, n<=50", 0, coefficient_oracle},
      {9, "soundness of the self-reciprocal criterion", 0, soundness},
      {10, "determinism of parallel runs", 0, determinism},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::string timing = seconds(elapsed);
    if (c.limit > 0) {
      timing += ", limit " + seconds(c.limit);
      if (elapsed > c.limit) {
        o.pass = false;
        o.detail += "; over time limit";
      }
    }
    if (!o.pass) ++failures;
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << "AC" << c.number << ' ' << c.name << ": " << o.detail << " ("
              << timing << ")" << std::endl;
  }
  std::cout << (failures == 0 ? "acceptance: all 10 criteria pass" : "acceptance: " + std::to_string(failures) + " failing")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
