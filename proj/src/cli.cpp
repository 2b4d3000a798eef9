#include "qconvex/cli.hpp"

#include <CLI11.hpp>

#include <array>
#include <sstream>

#include "qconvex/convexity.hpp"
#include "qconvex/criteria.hpp"
#include "qconvex/identities.hpp"
#include "qconvex/sequences.hpp"

namespace qconvex {

namespace {

std::string str(long v) { return std::to_string(v); }

struct GoldenValue {
  long n;
  long t;
  long value;
};

// L_t(a(n,0)) for the sun_a triangle, n = 1..4, 0 <= t <= n.
constexpr std::array<GoldenValue, 14> kGoldenTable{{{1, 0, 4},
                                                    {1, 1, 0},
                                                    {2, 0, 8},
                                                    {2, 1, 8},
                                                    {2, 2, 0},
                                                    {3, 0, 40},
                                                    {3, 1, 40},
                                                    {3, 2, 46},
                                                    {3, 3, 8},
                                                    {4, 0, 280},
                                                    {4, 1, 336},
                                                    {4, 2, 472},
                                                    {4, 3, 332},
                                                    {4, 4, 60}}};

Triangle resolve_triangle(const std::string& name_or_path) {
  for (const auto& name : triangle_names())
    if (name == name_or_path) return builtin_triangle(name);
  std::error_code ec;
  if (!std::filesystem::is_regular_file(name_or_path, ec)) {
    throw ConfigError("unknown triangle '" + name_or_path + "': not a builtin (binomial, sun_a) and not a readable file");
  }
  try {
    return load_triangle_csv(name_or_path);
  } catch (const std::exception& e) {
    throw ConfigError("triangle file " + name_or_path + ": " + e.what());
  }
}

WeightSeq resolve_weights(const std::string& name) {
  try {
    return builtin_weights(name);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

Section qlc_section(const PolySeqSpec& spec, long n_max, bool concave, const Parallelism& par) {
  QLCVerdict v = concave ? is_q_log_concave_upto(spec, n_max, par) : is_q_log_convex_upto(spec, n_max, par);
  Section s;
  s.id = concave ? "q_log_concave" : "q_log_convex";
  s.pass = v.holds;
  s.counts = {{"n_from", "1"}, {"n_to", str(n_max - 1)}};
  s.details = {{"difference", concave ? "g_n^2 - g_{n-1} g_{n+1}" : "g_{n-1} g_{n+1} - g_n^2"},
               {"triangle", spec.triangle.name()},
               {"weights", spec.weights.name()}};
  if (v.witness)
    s.witness = Fields{{"n", str(v.witness->n)}, {"t", str(v.witness->t)}, {"coefficient", to_decimal(v.witness->coefficient)}};
  return s;
}

Section c1_section(const PolySeqSpec& spec, long n_to, const Parallelism& par) {
  std::vector<char> ok(static_cast<std::size_t>(n_to + 1), 1);
  parallel_for(0, n_to + 1, par,
               [&](long n) { ok[static_cast<std::size_t>(n)] = is_self_reciprocal(gen_poly(spec, n), n) ? 1 : 0; });
  Section s;
  s.id = "c1_self_reciprocal";
  s.counts = {{"n_from", "0"}, {"n_to", str(n_to)}};
  for (long n = 0; n <= n_to; ++n) {
    if (ok[static_cast<std::size_t>(n)]) continue;
    s.pass = false;
    Poly g = gen_poly(spec, n);
    for (long i = 0; i <= n; ++i) {
      if (g[i] != g[n - i]) {
        s.witness = Fields{{"n", str(n)}, {"i", str(i)}, {"coeff_i", to_decimal(g[i])}, {"coeff_n_minus_i", to_decimal(g[n - i])}};
        break;
      }
    }
    break;
  }
  return s;
}

Section criterion_section(const CriterionReport& report) {
  Section s;
  s.id = report.theorem == Theorem::liu_wang ? "t11_sign_pattern" : "c2_sign_pattern";
  s.pass = !report.first_violation;
  s.counts = {{"n_from", "1"},
              {"n_to", str(report.n_max)},
              {"rows", str(static_cast<long>(report.rows.size()))},
              {"admissible_rows", str(report.admissible_rows())}};
  s.details = {{"theorem", std::string(theorem_label(report.theorem))},
               {"operator", std::string(operator_label(report.op))},
               {"t_range", report.theorem == Theorem::liu_wang ? "0..2n" : "0..n"},
               {"triangle", report.triangle}};
  if (!report.weights.empty()) s.details.emplace_back("weights", report.weights);
  if (const auto& v = report.first_violation) {
    s.witness = Fields{{"n", str(v->n)},          {"t", str(v->t)},
                       {"negative_k", str(v->i)}, {"negative_value", to_decimal(v->value_i)},
                       {"positive_k", str(v->j)}, {"positive_value", to_decimal(v->value_j)}};
  }
  return s;
}

Section golden_table_section() {
  const Triangle a = sun_a_triangle();
  Section s;
  s.id = "golden_table";
  s.counts = {{"values", str(static_cast<long>(kGoldenTable.size()))}};
  for (const auto& g : kGoldenTable) {
    Integer got = L_mod(a, g.n, g.t, 0);
    const std::string key = "L_" + str(g.t) + "(a(" + str(g.n) + ",0))";
    s.details.emplace_back(key, to_decimal(got));
    if (got != g.value && !s.witness) {
      s.pass = false;
      s.witness = Fields{{"entry", key}, {"expected", str(g.value)}, {"computed", to_decimal(got)}};
    }
  }
  return s;
}

Section identity_section(const std::string& id) {
  IdentityCheck c = verify_identity(id);
  Section s;
  s.id = "identity." + c.id;
  s.pass = c.pass;
  s.counts = {{"equations", str(c.equations)}};
  s.details = {{"title", c.title}, {"lhs", c.lhs}, {"rhs", c.rhs}};
  if (c.difference) s.witness = Fields{{"difference", *c.difference}};
  return s;
}

Section seq_section(const PolySeqSpec& spec, long n_max) {
  Section s;
  s.id = "sequence";
  s.counts = {{"n_from", "0"}, {"n_to", str(n_max)}};
  for (long n = 0; n <= n_max; ++n) {
    Poly g = gen_poly(spec, n);
    std::string coeffs;
    for (long i = 0; i <= g.degree(); ++i) coeffs += (i ? "," : "") + to_decimal(g[i]);
    s.details.emplace_back("g_" + str(n), coeffs);
  }
  return s;
}

Report build_report(const RunConfig& cfg, long n_max, const Parallelism& par) {
  Report r;
  r.tool_version = kToolVersion;
  r.config = {{"command", cfg.command}};
  const auto& cmd = cfg.command;

  if (cmd == "verify-sun") {
    const PolySeqSpec spec{sun_a_triangle(), central_binomial_weights()};
    r.config.insert(r.config.end(), {{"triangle", "sun_a"}, {"weights", "central_binomial"}, {"n_max", str(n_max)}});
    r.sections.push_back(qlc_section(spec, n_max, false, par));
    r.sections.push_back(c1_section(spec, n_max, par));
    r.sections.push_back(golden_table_section());
    return r;
  }
  if (cmd == "identities") {
    r.config.insert(r.config.end(), {{"n_max", str(n_max)}, {"sign_n_max", str(cfg.sign_n_max)}});
    if (cfg.sign_n_max < 5) throw ConfigError("--sign-max-n must be at least 5");
    for (const auto& id : identity_ids()) r.sections.push_back(identity_section(id));
    r.append(grid_verify_factorization(Factorization::phi, n_max, par));
    r.append(grid_verify_factorization(Factorization::psi, n_max, par));
    r.append(grid_verify_sign_claims(cfg.sign_n_max, par));
    return r;
  }

  const Triangle tri = resolve_triangle(cfg.triangle);
  const PolySeqSpec spec{tri, resolve_weights(cfg.weights)};
  r.config.insert(r.config.end(), {{"triangle", cfg.triangle}, {"weights", cfg.weights}, {"n_max", str(n_max)}});

  try {
    if (cmd == "qlc") {
      r.config.emplace_back("concave", cfg.concave ? "true" : "false");
      r.sections.push_back(qlc_section(spec, n_max, cfg.concave, par));
    } else if (cmd == "check-c1") {
      tri.require_rows(n_max);
      r.sections.push_back(c1_section(spec, n_max, par));
    } else if (cmd == "check-c2") {
      r.config.emplace_back("theorem", cfg.theorem);
      if (cfg.theorem == "1.1") {
        r.sections.push_back(criterion_section(check_theorem11(tri, n_max, par)));
      } else if (cfg.theorem == "2.1") {
        auto report = check_theorem21(spec, n_max, par);
        r.sections.push_back(c1_section(spec, n_max + 1, par));
        r.sections.push_back(criterion_section(report));
      } else {
        throw ConfigError("--theorem must be 1.1 or 2.1, got '" + cfg.theorem + "'");
      }
    } else if (cmd == "seq") {
      tri.require_rows(n_max);
      r.sections.push_back(seq_section(spec, n_max));
    } else {
      throw ConfigError("unknown command '" + cmd + "'");
    }
  } catch (const std::out_of_range& e) {
    throw ConfigError(e.what());
  }
  return r;
}

void print_summary(const Report& report, std::ostream& out) {
  out << "qconvex " << report.config.front().second << ": " << (report.overall() ? "PASS" : "FAIL") << '\n';
  for (const auto& s : report.sections) {
    out << "  [" << (s.pass ? "PASS" : "FAIL") << "] " << s.id;
    if (!s.counts.empty()) {
      out << " (";
      for (std::size_t i = 0; i < s.counts.size(); ++i) out << (i ? ", " : "") << s.counts[i].first << '=' << s.counts[i].second;
      out << ')';
    }
    out << '\n';
    if (s.id == "sequence") {
      for (const auto& [k, v] : s.details) out << "         " << k << " = [" << v << "]\n";
    }
    if (s.witness) {
      out << "         witness:";
      for (const auto& [k, v] : *s.witness) out << ' ' << k << '=' << v;
      out << '\n';
    }
  }
}

}  // namespace

long default_n_max(const std::string& command) {
  if (command == "verify-sun") return 100;
  if (command == "seq") return 10;
  return 50;
}

Report run_command(const RunConfig& config) {
  const long n_max = config.n_max.value_or(default_n_max(config.command));
  if (n_max < 1) throw ConfigError("--max-n must be a positive integer");
  const Parallelism par = config.parallel ? Parallelism::from_env() : Parallelism::sequential();

  const std::string started = utc_timestamp();
  Report r = build_report(config, n_max, par);
  r.started = started;
  r.finished = utc_timestamp();
  return r;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of log-convexity and q-log-convexity of polynomial sequences", "qconvex"};
  app.require_subcommand(1);

  RunConfig cfg;
  long n_max = 0;
  std::string out_path;

  auto add_common = [&](CLI::App* sub, bool with_sequence) {
    sub->add_option("--max-n", n_max, "Largest n to check")->check(CLI::PositiveNumber);
    if (with_sequence) {
      sub->add_option("--triangle", cfg.triangle, "Builtin triangle (binomial, sun_a) or path to an n,k,value CSV");
      sub->add_option("--weights", cfg.weights, "Builtin weights (central_binomial, catalan, ones)");
    }
    sub->add_flag("--parallel", cfg.parallel, "Run grid checks on QCONVEX_THREADS (default: all) threads");
    sub->add_option("--out", out_path, "Write the JSON report here");
  };

  auto* verify = app.add_subcommand("verify-sun", "q-log-convexity of S_n(q), self-reciprocity and the L_t(a(n,0)) table");
  add_common(verify, false);
  auto* c1 = app.add_subcommand("check-c1", "Self-reciprocity of g_n(q) for 0 <= n <= max-n");
  add_common(c1, true);
  auto* c2 = app.add_subcommand("check-c2", "Sign-pattern hypothesis of the q-log-convexity criteria");
  add_common(c2, true);
  c2->add_option("--theorem", cfg.theorem, "2.1: L_mod on 0<=t<=n plus self-reciprocity; 1.1: L_tilde on 0<=t<=2n")
      ->check(CLI::IsMember({"1.1", "2.1"}));
  auto* ids = app.add_subcommand("identities", "Polynomial identity catalog, factorization grids and sign claims");
  add_common(ids, false);
  ids->add_option("--sign-max-n", cfg.sign_n_max, "Largest n for the pointwise sign claims")->check(CLI::Range(5L, 100000L));
  auto* qlc = app.add_subcommand("qlc", "q-log-convexity of g_n(q) up to max-n");
  add_common(qlc, true);
  qlc->add_flag("--concave", cfg.concave, "Check q-log-concavity instead");
  auto* seq = app.add_subcommand("seq", "Print g_n(q) for 0 <= n <= max-n");
  add_common(seq, true);

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.emplace_back("qconvex");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  cfg.command = app.get_subcommands().front()->get_name();
  if (n_max > 0) cfg.n_max = n_max;
  if (!out_path.empty()) cfg.out = out_path;

  Report report;
  try {
    report = run_command(cfg);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  print_summary(report, out);
  if (cfg.out) {
    try {
      write_report(report, *cfg.out);
    } catch (const std::exception& e) {
      err << "error: " << e.what() << '\n';
      return 2;
    }
  }
  return report.overall() ? 0 : 1;
}

}  // namespace qconvex
