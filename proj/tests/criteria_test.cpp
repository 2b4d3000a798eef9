#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "qconvex/convexity.hpp"
#include "qconvex/criteria.hpp"
#include "qconvex/sequences.hpp"
#include "test_support.hpp"

namespace qconvex {
namespace {

using testing::make_rng;
using testing::TempDir;
using testing::uniform;

const Triangle& all_ones() {
  static const Triangle tri("all_ones", [](long, long) -> Integer { return 1; });
  return tri;
}

// Pseudo-random positive triangle: every entry is fixed by (n, k), so repeated
// queries agree.
Triangle hashed_triangle(std::uint64_t seed) {
  return Triangle("hashed", [seed](long n, long k) -> Integer {
    std::uint64_t h = seed ^ (static_cast<std::uint64_t>(n) * 0x9E3779B97F4A7C15ULL) ^
                      (static_cast<std::uint64_t>(k) * 0xC2B2AE3D27D4EB4FULL);
    h ^= h >> 31;
    h *= 0xBF58476D1CE4E5B9ULL;
    h ^= h >> 29;
    return Integer(static_cast<unsigned long>(h % 50 + 1));
  });
}

// Largest admissible split by exhaustive search, -2 when none exists.
long brute_force_split(const std::vector<Integer>& v) {
  const long size = static_cast<long>(v.size());
  for (long split = size - 1; split >= -1; --split) {
    bool ok = true;
    for (long k = 0; k < size && ok; ++k) ok = k <= split ? sgn(v[k]) >= 0 : sgn(v[k]) <= 0;
    if (ok) return split;
  }
  return -2;
}

TEST(LTilde, Examples) {
  EXPECT_EQ(L_tilde(binomial_triangle(), 2, 2, 1), -1);
  EXPECT_EQ(L_tilde(binomial_triangle(), 2, 2, 0), 1);
  EXPECT_EQ(L_tilde(sun_a_triangle(), 1, 0, 0), 2);
}

TEST(LTilde, ArgumentErrors) {
  const Triangle b = binomial_triangle();
  EXPECT_THROW(L_tilde(b, 0, 0, 0), std::invalid_argument);
  EXPECT_THROW(L_tilde(b, 2, 5, 0), std::invalid_argument);
  EXPECT_THROW(L_tilde(b, 2, -1, 0), std::invalid_argument);
  EXPECT_THROW(L_tilde(b, 2, 3, 2), std::invalid_argument);
  EXPECT_THROW(L_tilde(b, 2, 2, -1), std::invalid_argument);
  EXPECT_THROW(L_mod(b, 2, 4, 3), std::invalid_argument);
  EXPECT_THROW(L_mod(b, 0, 0, 0), std::invalid_argument);
}

TEST(LMod, Examples) {
  EXPECT_EQ(L_mod(sun_a_triangle(), 1, 0, 0), 4);
  EXPECT_EQ(L_mod(sun_a_triangle(), 1, 1, 0), 0);
  EXPECT_EQ(L_mod(sun_a_triangle(), 4, 4, 0), 60);
}

TEST(LMod, GoldenTable) {
  const std::vector<std::vector<long>> golden = {{4, 0}, {8, 8, 0}, {40, 40, 46, 8}, {280, 336, 472, 332, 60}};
  for (long n = 1; n <= 4; ++n) {
    for (long t = 0; t <= n; ++t) EXPECT_EQ(L_mod(sun_a_triangle(), n, t, 0), golden[n - 1][t]) << n << "," << t;
  }
}

TEST(LOperators, DiagonalRelation) {
  for (const Triangle& tri : {binomial_triangle(), sun_a_triangle(), hashed_triangle(7)}) {
    for (long n = 1; n <= 30; ++n) {
      for (long t = 0; t <= 2 * n; t += 2) {
        ASSERT_EQ(L_mod(tri, n, t, t / 2), 2 * L_tilde(tri, n, t, t / 2)) << tri.name() << " " << n << "," << t;
      }
    }
  }
}

TEST(LOperators, OffDiagonalAgree) {
  for (long n = 1; n <= 15; ++n) {
    for (long t = 0; t <= 2 * n; ++t) {
      for (long k = 0; 2 * k < t; ++k) ASSERT_EQ(L_mod(sun_a_triangle(), n, t, k), L_tilde(sun_a_triangle(), n, t, k));
    }
  }
}

TEST(LOperators, ReconstructCoefficientA) {
  for (const Triangle& tri : {binomial_triangle(), sun_a_triangle(), hashed_triangle(3)}) {
    for (long n = 1; n <= 30; ++n) {
      for (long t = 0; t <= 2 * n; ++t) {
        Integer sum = 0;
        for (long k = 0; k <= t / 2; ++k) sum += L_tilde(tri, n, t, k);
        ASSERT_EQ(sum, coeff_A(tri, n, t)) << tri.name() << " " << n << "," << t;
      }
    }
  }
}

TEST(SignPattern, Examples) {
  const auto a = sign_pattern(std::vector<Integer>{5, 3, -2, -7});
  EXPECT_TRUE(a.admissible);
  EXPECT_EQ(a.split_index, 1);
  const auto b = sign_pattern(std::vector<Integer>{1, -1, 2});
  EXPECT_FALSE(b.admissible);
  EXPECT_EQ(b.violation, (std::pair<long, long>{1, 2}));
  EXPECT_FALSE(b.split_index.has_value());
  const auto c = sign_pattern(std::vector<Integer>{0, 0});
  EXPECT_TRUE(c.admissible);
  EXPECT_EQ(c.split_index, 1);
}

TEST(SignPattern, EdgeCases) {
  EXPECT_EQ(sign_pattern(std::vector<Integer>{-3, -1}).split_index, -1);
  EXPECT_EQ(sign_pattern(std::vector<Integer>{-3, 0}).split_index, -1);
  EXPECT_EQ(sign_pattern(std::vector<Integer>{2, 0, -1, 0}).split_index, 1);
  EXPECT_EQ(sign_pattern(std::vector<Integer>{7}).split_index, 0);
  EXPECT_TRUE(sign_pattern(std::vector<Rational>{make_rational(1, 2), make_rational(-1, 3)}).admissible);
  EXPECT_THROW(sign_pattern(std::vector<Integer>{}), std::invalid_argument);
}

TEST(SignPatternProperty, MatchesExhaustiveSearch) {
  auto rng = make_rng(21);
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<Integer> v(static_cast<std::size_t>(uniform(rng, 1, 8)));
    for (auto& x : v) x = uniform(rng, -2, 2);
    const auto r = sign_pattern(v);
    const long split = brute_force_split(v);
    ASSERT_EQ(r.admissible, split != -2);
    if (r.admissible) {
      ASSERT_EQ(r.split_index, split);
      ASSERT_FALSE(r.violation.has_value());
      for (long k = 0; k < static_cast<long>(v.size()); ++k) {
        ASSERT_TRUE(k <= *r.split_index ? sgn(v[k]) >= 0 : sgn(v[k]) <= 0);
      }
    } else {
      const auto [i, j] = *r.violation;
      ASSERT_LT(i, j);
      ASSERT_LT(sgn(v[i]), 0);
      ASSERT_GT(sgn(v[j]), 0);
      for (long k = 0; k < i; ++k) ASSERT_GE(sgn(v[k]), 0);
    }
  }
}

TEST(Labels, Names) {
  EXPECT_EQ(theorem_label(Theorem::liu_wang), "T1.1");
  EXPECT_EQ(theorem_label(Theorem::self_reciprocal), "T2.1");
  EXPECT_EQ(operator_label(LOperator::tilde), "L_tilde");
  EXPECT_EQ(operator_label(LOperator::modified), "L_mod");
}

TEST(Theorem11, Instances) {
  const auto bin = check_theorem11(binomial_triangle(), 50);
  EXPECT_TRUE(bin.overall);
  EXPECT_EQ(bin.theorem, Theorem::liu_wang);
  EXPECT_EQ(bin.op, LOperator::tilde);
  EXPECT_EQ(bin.rows.size(), 2600U);  // sum over n of 2n + 1
  EXPECT_EQ(bin.admissible_rows(), 2600);
  EXPECT_FALSE(bin.c1_ok.has_value());
  EXPECT_TRUE(check_theorem11(sun_a_triangle(), 30).overall);
  // The verdict holds, though L_tilde is not identically zero here.
  EXPECT_TRUE(check_theorem11(all_ones(), 5).overall);
  EXPECT_EQ(L_tilde(all_ones(), 2, 4, 2), -1);
  EXPECT_EQ(L_tilde(all_ones(), 2, 2, 1), 0);
}

TEST(Theorem11, DetectsViolation) {
  const Triangle bumpy("bumpy", [](long n, long k) -> Integer { return (n + k) % 3 == 0 ? 9 : 1; });
  const auto r = check_theorem11(bumpy, 8);
  ASSERT_FALSE(r.overall);
  ASSERT_TRUE(r.first_violation.has_value());
  const auto& v = *r.first_violation;
  EXPECT_EQ(L_tilde(bumpy, v.n, v.t, v.i), v.value_i);
  EXPECT_EQ(L_tilde(bumpy, v.n, v.t, v.j), v.value_j);
  EXPECT_LT(sgn(v.value_i), 0);
  EXPECT_GT(sgn(v.value_j), 0);
  EXPECT_LT(r.admissible_rows(), static_cast<long>(r.rows.size()));
}

TEST(Theorem11, ErrorPaths) {
  EXPECT_THROW(check_theorem11(binomial_triangle(), 0), std::invalid_argument);
  TempDir dir;
  const auto path = dir.path() / "b.csv";
  write_triangle_csv(binomial_triangle(), 6, path);
  const Triangle file = load_triangle_csv(path);
  EXPECT_THROW(check_theorem11(file, 6), std::out_of_range);
  EXPECT_TRUE(check_theorem11(file, 5).overall);
}

TEST(Theorem21, SunInstance) {
  const auto r = check_theorem21({sun_a_triangle(), central_binomial_weights()}, 50);
  EXPECT_TRUE(r.overall);
  EXPECT_EQ(r.c1_ok, true);
  EXPECT_EQ(r.rows.size(), 1325U);  // sum over n of n + 1
  EXPECT_EQ(r.op, LOperator::modified);
  EXPECT_EQ(r.weights, "central_binomial");
  EXPECT_EQ(r.triangle, "sun_a");
}

TEST(Theorem21, SunWithOnesFailsC1) {
  const auto r = check_theorem21({sun_a_triangle(), builtin_weights("ones")}, 20);
  EXPECT_EQ(r.c1_ok, false);
  EXPECT_EQ(r.c1_witness, 1);
  EXPECT_FALSE(r.overall);
}

TEST(Theorem21, BinomialPowers) {
  EXPECT_TRUE(check_theorem21({binomial_triangle(), builtin_weights("ones")}, 10).overall);
}

TEST(Theorem21, ErrorPaths) {
  const PolySeqSpec spec{sun_a_triangle(), central_binomial_weights()};
  EXPECT_THROW(check_theorem21(spec, 0), std::invalid_argument);
  TempDir dir;
  const auto path = dir.path() / "s.csv";
  write_triangle_csv(sun_a_triangle(), 6, path);
  const PolySeqSpec file_spec{load_triangle_csv(path), central_binomial_weights()};
  EXPECT_THROW(check_theorem21(file_spec, 6), std::out_of_range);
  EXPECT_TRUE(check_theorem21(file_spec, 5).overall);
}

TEST(Criteria, ParallelMatchesSequential) {
  const PolySeqSpec spec{sun_a_triangle(), central_binomial_weights()};
  const auto a = check_theorem21(spec, 25);
  const auto b = check_theorem21(spec, 25, Parallelism{4});
  ASSERT_EQ(a.rows.size(), b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    ASSERT_EQ(a.rows[i].n, b.rows[i].n);
    ASSERT_EQ(a.rows[i].t, b.rows[i].t);
    ASSERT_EQ(a.rows[i].pattern, b.rows[i].pattern);
  }
  const Triangle bumpy("bumpy", [](long n, long k) -> Integer { return (n * 7 + k) % 5 == 0 ? 11 : 2; });
  const auto c = check_theorem11(bumpy, 12);
  const auto d = check_theorem11(bumpy, 12, Parallelism{3});
  ASSERT_TRUE(c.first_violation && d.first_violation);
  EXPECT_EQ(c.first_violation->n, d.first_violation->n);
  EXPECT_EQ(c.first_violation->t, d.first_violation->t);
  EXPECT_EQ(c.admissible_rows(), d.admissible_rows());
}

// Without a q-log-convex base sequence f_n the two conditions alone do not
// force q-log-convexity: the all-ones triangle meets both yet fails.
TEST(Soundness, BaseSequenceHypothesisNeeded) {
  const PolySeqSpec spec{all_ones(), builtin_weights("ones")};
  EXPECT_TRUE(check_theorem21(spec, 6).overall);
  EXPECT_TRUE(is_log_convex(builtin_weights("ones").values(8)).holds);
  EXPECT_FALSE(is_q_log_convex_upto(spec, 7).holds);
  EXPECT_FALSE(is_q_log_convex_upto({all_ones(), builtin_weights("ones")}, 7).holds);
}

TEST(Soundness, BuiltinSpecs) {
  const long n_max = 12;
  long non_vacuous = 0;
  for (const auto& tname : triangle_names()) {
    for (const auto& wname : weight_names()) {
      const PolySeqSpec spec{builtin_triangle(tname), builtin_weights(wname)};
      const bool c = check_theorem21(spec, n_max - 1).overall;
      const bool w = is_log_convex(spec.weights.values(n_max + 1)).holds;
      const bool f = is_q_log_convex_upto({spec.triangle, builtin_weights("ones")}, n_max).holds;
      if (!(c && w && f)) continue;
      ++non_vacuous;
      EXPECT_TRUE(is_q_log_convex_upto(spec, n_max).holds) << tname << " + " << wname;
    }
  }
  EXPECT_GE(non_vacuous, 2);
}

TEST(Soundness, ScaledSymmetricTriangles) {
  // r_n C(n,k) with r_n log-convex keeps every hypothesis alive.
  auto rng = make_rng(31);
  long non_vacuous = 0;
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Integer> r{Integer(uniform(rng, 1, 3))};
    long ratio = uniform(rng, 1, 3);
    for (long n = 1; n <= 10; ++n) {
      r.push_back(r.back() * ratio);
      ratio += uniform(rng, 0, 2);
    }
    const Triangle tri("scaled", [r](long n, long k) -> Integer { return r[n] * binomial(n, k); });
    for (const char* wname : {"ones", "central_binomial", "catalan"}) {
      const PolySeqSpec spec{tri, builtin_weights(wname)};
      const bool c = check_theorem21(spec, 9).overall;
      const bool w = is_log_convex(spec.weights.values(11)).holds;
      const bool f = is_q_log_convex_upto({tri, builtin_weights("ones")}, 10).holds;
      if (!(c && w && f)) continue;
      ++non_vacuous;
      ASSERT_TRUE(is_q_log_convex_upto(spec, 10).holds) << "trial " << trial << " " << wname;
    }
  }
  EXPECT_GT(non_vacuous, 0);
}

}  // namespace
}  // namespace qconvex
