#include "qconvex/identities.hpp"

#include <functional>
#include <stdexcept>
#include <utility>

#include "qconvex/criteria.hpp"
#include "qconvex/sequences.hpp"

namespace qconvex {

namespace {

const MultiPoly N = MultiPoly::var(Var::n);
const MultiPoly T = MultiPoly::var(Var::t);
const MultiPoly X = MultiPoly::var(Var::x);

MultiPoly frac(long p, long q) { return MultiPoly(make_rational(p, q)); }

MultiPoly at(const MultiPoly& p, Var v, const MultiPoly& value) { return substitute(p, v, value); }

// Both definitions take the t-expression so the t = n specialisation can be
// expanded directly rather than through substitute().
MultiPoly phi_definition(const MultiPoly& t) {
  return (N + 1) * (N - X) * (N - X + 1) + (N + 1) * (N - t + X) * (N - t + X + 1) -
         2 * N * (N - X + 1) * (N - t + X + 1);
}

MultiPoly psi_definition(const MultiPoly& t) {
  return (N + 1) * pow(N - X, 2) * pow(N - X + 1, 2) * (2 * N - 2 * t + 2 * X + 1) * (2 * N - 2 * t + 2 * X - 1) +
         (N + 1) * pow(N - t + X, 2) * pow(N - t + X + 1, 2) * (2 * N - 2 * X - 1) * (2 * N - 2 * X + 1) -
         2 * N * pow(N - X + 1, 2) * pow(N - t + X + 1, 2) * (2 * N - 2 * X - 1) * (2 * N - 2 * t + 2 * X - 1);
}

MultiPoly psi1_printed() {
  return 12 * (2 * N + 1) * pow(X, 4) - 24 * T * (2 * N + 1) * pow(X, 3) -
         2 * (16 * pow(N, 3) - 8 * (2 * T - 1) * pow(N, 2) - 2 * (7 * T * T + 3 * T + 1) * N - (8 * T * T - 4 * T + 3)) *
             pow(X, 2) +
         2 * T * (16 * pow(N, 3) - 8 * (2 * T - 1) * pow(N, 2) - 2 * (T * T + 3 * T + 1) * N - (2 * T * T - 4 * T + 3)) *
             X +
         (8 * pow(N, 5) - 4 * (4 * T - 1) * pow(N, 4) + 4 * (T * T - T - 3) * pow(N, 3) +
          4 * (-T * T + 5 * T + pow(T, 3) - 2) * pow(N, 2) + (4 * pow(T, 3) - 10 * T * T - 1 + 11 * T) * N -
          (2 * T * T - 3 * T + 1));
}

MultiPoly psi2_printed() {
  return 12 * (2 * N + 1) * X * X - 12 * T * (2 * N + 1) * X - 16 * pow(N, 3) + 8 * (2 * T - 1) * N * N +
         2 * (T * T + 3 * T + 1) * N + (2 * T * T - 4 * T + 3);
}

MultiPoly theta_printed() {
  return (4 * N * N - 1) * pow(X, 4) - 2 * (2 * N - 1) * (2 * N * N + 2 * N + 1) * pow(X, 3) +
         (4 * pow(N, 4) + 8 * pow(N, 3) + 8 * N * N - 1) * X * X - 2 * N * (N + 1) * (2 * N * N + 4 * N - 1) * X +
         2 * N * (2 * N - 1) * pow(N + 1, 2);
}

MultiPoly theta1_printed() {
  return 2 * (1 - 4 * N * N) * X * X + (2 * N - 1) * (2 * N * N + 4 * N + 3) * X - (2 * pow(N, 3) + 6 * N * N + 3 * N - 1);
}

MultiPoly theta2_printed() { return -4 * (2 * N + 1) * X + (2 * N * N + 4 * N + 3); }

MultiPoly xi_printed() {
  return 4 * N * pow(T, 3) + 2 * (2 * N * N - 4 * N - 1) * T * T - (16 * pow(N, 3) - 12 * N * N - 8 * N - 3) * T +
         (8 * pow(N, 4) - 4 * pow(N, 3) - 8 * N * N - 1);
}

MultiPoly eta_printed() {
  return 2 * (N + 1) * T * T + 2 * (8 * N * N + 3 * N - 2) * T - (2 * N - 1) * (8 * N * N + 8 * N + 3);
}

MultiPoly psi_nn_printed() {
  return 8 * (2 * N + 1) * pow(X, 6) - 24 * N * (2 * N + 1) * pow(X, 5) +
         2 * (26 * pow(N, 3) - 2 * N + 12 * N * N + 3) * pow(X, 4) -
         4 * N * (3 + 6 * pow(N, 3) + 2 * N * N - 2 * N) * pow(X, 3) +
         2 * (4 * N * N + 2 * N - 1 - 4 * pow(N, 3) + 2 * pow(N, 5)) * X * X +
         2 * N * (N - 1) * (2 * N - 1) * (N + 1) * X - N * (N - 1) * (N - 2) * pow(N + 1, 2);
}

MultiPoly psi1_nn_printed() {
  return 12 * (1 + 2 * N) * pow(X, 4) - 24 * N * (1 + 2 * N) * pow(X, 3) +
         2 * (6 * N * N - 2 * N + 3 + 14 * pow(N, 3)) * X * X - 2 * N * (2 * pow(N, 3) + 3 - 2 * N) * X -
         (N - 1) * (2 * N - 1) * (N + 1);
}

MultiPoly psi2_nn_printed() { return 12 * (1 + 2 * N) * X * X - 12 * N * (1 + 2 * N) * X + 2 * pow(N, 3) + 3 - 2 * N; }

struct CatalogEntry {
  const char* name;
  const char* description;
  std::vector<Var> variables;
  std::function<MultiPoly()> build;
};

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries{
      {"phi", "(n+1)(n-x)(n-x+1) + (n+1)(n-t+x)(n-t+x+1) - 2n(n-x+1)(n-t+x+1)", {Var::n, Var::t, Var::x},
       [] { return phi_definition(T); }},
      {"psi", "sextic in x controlling the sign of L_t(a(n,k)) for the sun_a triangle", {Var::n, Var::t, Var::x},
       [] { return psi_definition(T); }},
      {"psi1", "dpsi/dx = 2(2x-t) psi1", {Var::n, Var::t, Var::x}, psi1_printed},
      {"psi2", "dpsi1/dx = 2(2x-t) psi2", {Var::n, Var::t, Var::x}, psi2_printed},
      {"theta", "quartic whose sign decides L_t(a(n,0)), read at x = t", {Var::n, Var::x}, theta_printed},
      {"theta1", "theta'(x) = 2(n-x) theta1(x)", {Var::n, Var::x}, theta1_printed},
      {"theta2", "theta1'(x) = (2n-1) theta2(x)", {Var::n, Var::x}, theta2_printed},
      {"xi", "psi1(0) / (n+1) as a polynomial in t", {Var::n, Var::t}, xi_printed},
      {"eta", "psi2(0) as a polynomial in t", {Var::n, Var::t}, eta_printed},
      {"psi_nn", "psi at t = n", {Var::n, Var::x}, psi_nn_printed},
      {"psi1_nn", "psi1 at t = n", {Var::n, Var::x}, psi1_nn_printed},
      {"psi2_nn", "psi2 at t = n", {Var::n, Var::x}, psi2_nn_printed},
  };
  return entries;
}

MultiPoly named(std::string_view name) { return build_named_poly(name).poly; }

struct Equation {
  std::string lhs_text;
  std::string rhs_text;
  MultiPoly lhs;
  MultiPoly rhs;
};

struct IdentitySpec {
  const char* id;
  const char* title;
  std::function<std::vector<Equation>()> equations;
};

std::vector<Equation> identity_a() {
  const auto phi = named("phi");
  return {{"d/dx phi", "(4n+2)(2x-t)", derivative(phi, Var::x), (4 * N + 2) * (2 * X - T)},
          {"phi(0)", "(n+1)(t^2-t)", at(phi, Var::x, 0L), (N + 1) * (T * T - T)}};
}

std::vector<Equation> identity_b() {
  return {{"d/dx psi", "2(2x-t) psi1", derivative(named("psi"), Var::x), 2 * (2 * X - T) * named("psi1")}};
}

std::vector<Equation> identity_c() {
  return {{"d/dx psi1", "2(2x-t) psi2", derivative(named("psi1"), Var::x), 2 * (2 * X - T) * named("psi2")}};
}

std::vector<Equation> identity_d() {
  return {{"theta(n)", "-n(n-1)(n-2)(n+1)", at(named("theta"), Var::x, N), -N * (N - 1) * (N - 2) * (N + 1)}};
}

std::vector<Equation> identity_e() {
  return {{"d/dx theta", "2(n-x) theta1", derivative(named("theta"), Var::x), 2 * (N - X) * named("theta1")},
          {"d/dx theta1", "(2n-1) theta2", derivative(named("theta1"), Var::x), (2 * N - 1) * named("theta2")}};
}

std::vector<Equation> identity_f() {
  const auto theta = named("theta");
  return {
      {"theta(0)", "2n(2n-1)(n+1)^2", at(theta, Var::x, 0L), 2 * N * (2 * N - 1) * pow(N + 1, 2)},
      {"theta(1)", "2n^2(2n-1)(n-1)", at(theta, Var::x, 1L), 2 * N * N * (2 * N - 1) * (N - 1)},
      {"theta(2)", "2(n-2)(6n^3-13n^2+1)", at(theta, Var::x, 2L), 2 * (N - 2) * (6 * pow(N, 3) - 13 * N * N + 1)},
      {"theta(n-1)", "-4+8n+3n^4-10n^3+11n^2", at(theta, Var::x, N - 1),
       -4 + 8 * N + 3 * pow(N, 4) - 10 * pow(N, 3) + 11 * N * N},
  };
}

std::vector<Equation> identity_g() {
  const auto theta1 = named("theta1");
  const auto theta2 = named("theta2");
  return {
      {"theta1(0)", "1-2n^3-6n^2-3n", at(theta1, Var::x, 0L), 1 - 2 * pow(N, 3) - 6 * N * N - 3 * N},
      {"theta1(1)", "n(2(n-2)^2-9)", at(theta1, Var::x, 1L), N * (2 * pow(N - 2, 2) - 9)},
      {"theta1(n-1)", "-4n^4+16n^3-16n^2-12n+6", at(theta1, Var::x, N - 1),
       -4 * pow(N, 4) + 16 * pow(N, 3) - 16 * N * N - 12 * N + 6},
      {"theta2(0)", "2n^2+4n+3", at(theta2, Var::x, 0L), 2 * N * N + 4 * N + 3},
      {"theta2(n-1)", "-6n^2+8n+7", at(theta2, Var::x, N - 1), -6 * N * N + 8 * N + 7},
  };
}

std::vector<Equation> identity_h() {
  const auto psi2 = named("psi2");
  return {
      {"psi2(t/2)", "-4n(2n-t)^2-(4n-t-1)(2n-t)-3(t-1)", at(psi2, Var::x, frac(1, 2) * T),
       -4 * N * pow(2 * N - T, 2) - (4 * N - T - 1) * (2 * N - T) - 3 * (T - 1)},
      {"psi2(t-x)", "psi2(x) (axis of symmetry x = t/2)", at(psi2, Var::x, T - X), psi2},
  };
}

std::vector<Equation> identity_i() {
  const auto value = at(named("psi1"), Var::x, frac(1, 2) * T);
  const auto m = 2 * N - T;
  const auto expanded = 8 * pow(N, 5) - 16 * pow(N, 4) * T + 12 * pow(N, 3) * T * T - 4 * N * N * pow(T, 3) +
                        frac(1, 2) * N * pow(T, 4) + 4 * pow(N, 4) - 4 * pow(N, 3) * T + N * pow(T, 3) -
                        frac(1, 4) * pow(T, 4) - 12 * pow(N, 3) + 20 * N * N * T - 11 * N * T * T + 2 * pow(T, 3) -
                        8 * N * N + 11 * N * T - frac(7, 2) * T * T - N + 3 * T - 1;
  const auto by_powers = (frac(1, 2) * N - frac(1, 4)) * pow(m, 4) + (N - 2) * pow(m, 3) +
                         (N - frac(7, 2)) * pow(m, 2) + 3 * (N - 1) * m + 5 * N - 1;
  return {{"psi1(t/2)", "expanded quintic in n, t", value, expanded},
          {"psi1(t/2)", "(n/2-1/4)(2n-t)^4+(n-2)(2n-t)^3+(n-7/2)(2n-t)^2+3(n-1)(2n-t)+5n-1", value, by_powers}};
}

std::vector<Equation> identity_j() {
  const auto half = at(named("psi1"), Var::x, frac(1, 2) * T);
  return {
      {"psi1^(2,t)(t/2)", "3/4((4-t)^2-1)^2+3(4-t)+33/4", at(half, Var::n, 2L),
       frac(3, 4) * pow(pow(4 - T, 2) - 1, 2) + 3 * (4 - T) + frac(33, 4)},
      {"psi1^(3,t)(t/2)", "5/4(6-t)^4+(11/2-t)(6-t)^2+6(6-t)+14", at(half, Var::n, 3L),
       frac(5, 4) * pow(6 - T, 4) + (frac(11, 2) - T) * pow(6 - T, 2) + 6 * (6 - T) + 14},
  };
}

std::vector<Equation> identity_k() {
  return {
      {"psi1(0)", "(n+1) xi(t)", at(named("psi1"), Var::x, 0L), (N + 1) * named("xi")},
      {"psi2(0)", "eta(t)", at(named("psi2"), Var::x, 0L), named("eta")},
  };
}

std::vector<Equation> identity_l() {
  const auto xi = named("xi");
  const auto d1 = derivative(xi, Var::t);
  const auto d2 = derivative(d1, Var::t);
  const auto three_quarters_n = frac(3, 4) * N;
  return {
      {"xi(3n/4)", "-1/64(4n^2(n-4)^2+136(n-9/17)^2+440/17)", at(xi, Var::t, three_quarters_n),
       frac(-1, 64) * (4 * N * N * pow(N - 4, 2) + 136 * pow(N - frac(9, 17), 2) + frac(440, 17))},
      {"xi(n-1)", "-(4n-18)n^2-13n-6", at(xi, Var::t, N - 1), -(4 * N - 18) * N * N - 13 * N - 6},
      {"xi'(t)", "12nt^2+(8n^2-16n-4)t+(12n^2-16n^3+8n+3)", d1,
       12 * N * T * T + (8 * N * N - 16 * N - 4) * T + (12 * N * N - 16 * pow(N, 3) + 8 * N + 3)},
      {"xi''(t)", "24nt+(8n^2-16n-4)", d2, 24 * N * T + (8 * N * N - 16 * N - 4)},
      {"xi''(0)", "8(n-1)^2-12", at(d2, Var::t, 0L), 8 * pow(N - 1, 2) - 12},
      {"xi'(3n/4)", "-13/4n^3+5n+3", at(d1, Var::t, three_quarters_n), frac(-13, 4) * pow(N, 3) + 5 * N + 3},
  };
}

std::vector<Equation> identity_m() {
  const auto eta = named("eta");
  // eta'(t) = 4(n+1)(t - axis) with axis = -(8n^2+3n-2)/(2(n+1)), denominators cleared.
  return {
      {"eta(0)", "-16n^3-8n^2+2n+3", at(eta, Var::t, 0L), -16 * pow(N, 3) - 8 * N * N + 2 * N + 3},
      {"eta(3n/4)", "-23/8n^3-19/8n^2-n+3", at(eta, Var::t, frac(3, 4) * N),
       frac(-23, 8) * pow(N, 3) - frac(19, 8) * N * N - N + 3},
      {"eta'(t)", "4(n+1)(t + (8n^2+3n-2)/(2(n+1)))", derivative(eta, Var::t),
       4 * (N + 1) * T + 2 * (8 * N * N + 3 * N - 2)},
  };
}

std::vector<Equation> identity_n() {
  const auto psi_nn = named("psi_nn");
  const auto psi1_nn = named("psi1_nn");
  const auto psi2_nn = named("psi2_nn");
  const auto half_n = frac(1, 2) * N;
  return {
      {"psi at t=n (expanded from its definition)", "printed sextic psi_nn", psi_definition(N), psi_nn},
      {"d/dx psi_nn", "2(2x-n) psi1_nn", derivative(psi_nn, Var::x), 2 * (2 * X - N) * psi1_nn},
      {"d/dx psi1_nn", "2(2x-n) psi2_nn", derivative(psi1_nn, Var::x), 2 * (2 * X - N) * psi2_nn},
      {"psi1_nn(0)", "-n^2(n-1)-n(n^2-2)-1", at(psi1_nn, Var::x, 0L), -N * N * (N - 1) - N * (N * N - 2) - 1},
      {"psi1_nn(n/2)", "1/4(2n^3(n^2-2)+n^2(3n^2-2)+4(2n-1))", at(psi1_nn, Var::x, half_n),
       frac(1, 4) * (2 * pow(N, 3) * (N * N - 2) + N * N * (3 * N * N - 2) + 4 * (2 * N - 1))},
      {"psi2_nn(0)", "2n^3-2n+3", at(psi2_nn, Var::x, 0L), 2 * pow(N, 3) - 2 * N + 3},
      {"psi2_nn(n/2)", "-4n^3-3n^2-2n+3", at(psi2_nn, Var::x, half_n), -4 * pow(N, 3) - 3 * N * N - 2 * N + 3},
      {"psi_nn(1)", "(n-1)((3n-16)n^3+(21n^2+8n-12))", at(psi_nn, Var::x, 1L),
       (N - 1) * ((3 * N - 16) * pow(N, 3) + (21 * N * N + 8 * N - 12))},
      {"psi_nn(n/2)", "-1/8 n(n-1)(n^2-n-4)(n+2)^2", at(psi_nn, Var::x, half_n),
       frac(-1, 8) * N * (N - 1) * (N * N - N - 4) * pow(N + 2, 2)},
      {"psi^(2,2)(1)", "8", at(at(psi_nn, Var::n, 2L), Var::x, 1L), 8L},
  };
}

std::vector<Equation> identity_o() {
  return {
      {"psi[t:=n]", "psi_nn", at(named("psi"), Var::t, N), named("psi_nn")},
      {"psi1[t:=n]", "psi1_nn", at(named("psi1"), Var::t, N), named("psi1_nn")},
      {"psi2[t:=n]", "psi2_nn", at(named("psi2"), Var::t, N), named("psi2_nn")},
  };
}

const std::vector<IdentitySpec>& identity_catalog() {
  static const std::vector<IdentitySpec> specs{
      {"a", "derivative and constant term of phi", identity_a},
      {"b", "derivative of psi factors through psi1", identity_b},
      {"c", "derivative of psi1 factors through psi2", identity_c},
      {"d", "theta at x = n", identity_d},
      {"e", "derivative factorizations of theta and theta1", identity_e},
      {"f", "theta at x = 0, 1, 2, n-1", identity_f},
      {"g", "theta1 at x = 0, 1, n-1 and theta2 at x = 0, n-1", identity_g},
      {"h", "psi2 at its axis x = t/2", identity_h},
      {"i", "psi1 at x = t/2, two closed forms", identity_i},
      {"j", "psi1 at x = t/2 for n = 2, 3", identity_j},
      {"k", "psi1(0) and psi2(0) through xi and eta", identity_k},
      {"l", "xi values and derivatives", identity_l},
      {"m", "eta values and axis of symmetry", identity_m},
      {"n", "the t = n specialisation psi_nn", identity_n},
      {"o", "psi, psi1, psi2 at t = n agree with the specialised forms", identity_o},
  };
  return specs;
}

// ---------------------------------------------------------------------------
// Grid checks

using Point = std::pair<Fields, Rational>;

std::string str(long v) { return std::to_string(v); }

// Evaluates every point produced by row(n) for n in [n_lo, n_hi] and requires
// sign(value) == expected_sign. The witness is the first failing point in
// (n, row order).
Section sign_claim(std::string id, std::string statement, long n_lo, long n_hi, int expected_sign,
                   const Parallelism& par, const std::function<std::vector<Point>(long)>& row) {
  const long rows = std::max(0L, n_hi - n_lo + 1);
  std::vector<long> counts(static_cast<std::size_t>(rows), 0);
  std::vector<std::optional<Point>> failures(static_cast<std::size_t>(rows));
  parallel_for(0, rows, par, [&](long i) {
    auto points = row(n_lo + i);
    counts[static_cast<std::size_t>(i)] = static_cast<long>(points.size());
    for (auto& p : points) {
      if (sign(p.second) != expected_sign) {
        failures[static_cast<std::size_t>(i)] = std::move(p);
        return;
      }
    }
  });
  Section s;
  s.id = std::move(id);
  long total = 0;
  for (long c : counts) total += c;
  s.counts = {{"n_from", str(n_lo)}, {"n_to", str(n_hi)}, {"points", str(total)}};
  s.details = {{"claim", std::move(statement)}};
  for (auto& f : failures) {
    if (!f) continue;
    s.pass = false;
    Fields w = std::move(f->first);
    w.emplace_back("value", to_decimal(f->second));
    s.witness = std::move(w);
    break;
  }
  return s;
}

Rational rat(long v) { return Rational(v); }

}  // namespace

NamedPoly build_named_poly(std::string_view name) {
  for (const auto& e : catalog()) {
    if (name == e.name) return {e.name, e.description, e.build(), e.variables};
  }
  throw std::invalid_argument("unknown named polynomial '" + std::string(name) + "'");
}

const std::vector<std::string>& named_poly_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& e : catalog()) out.emplace_back(e.name);
    return out;
  }();
  return names;
}

IdentityCheck verify_identity(std::string_view id) {
  for (const auto& spec : identity_catalog()) {
    if (id != spec.id) continue;
    IdentityCheck check;
    check.id = spec.id;
    check.title = spec.title;
    check.pass = true;
    for (const auto& eq : spec.equations()) {
      if (check.equations++ > 0) {
        check.lhs += "; ";
        check.rhs += "; ";
      }
      check.lhs += eq.lhs_text;
      check.rhs += eq.rhs_text;
      if (auto diff = first_difference(eq.lhs, eq.rhs); diff && check.pass) {
        check.pass = false;
        check.difference = eq.lhs_text + ": " + *diff;
      }
    }
    return check;
  }
  throw std::invalid_argument("unknown identity id '" + std::string(id) + "'");
}

const std::vector<std::string>& identity_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& spec : identity_catalog()) out.emplace_back(spec.id);
    return out;
  }();
  return ids;
}

Report grid_verify_factorization(Factorization which, long n_max, const Parallelism& par) {
  if (n_max < 1) throw std::invalid_argument("grid_verify_factorization needs n_max >= 1");
  const bool binomial_phi = which == Factorization::phi;
  const Triangle tri = binomial_phi ? binomial_triangle() : sun_a_triangle();
  const MultiPoly factor = binomial_phi ? named("phi") : named("psi");

  struct RowResult {
    long points = 0;
    long skipped = 0;
    std::optional<Fields> mismatch;
    std::optional<Fields> first_skip;
  };
  std::vector<RowResult> rows(static_cast<std::size_t>(n_max + 1));

  parallel_for(1, n_max + 1, par, [&](long n) {
    auto& out = rows[static_cast<std::size_t>(n)];
    const long t_max = binomial_phi ? 2 * n : n;
    for (long t = 0; t <= t_max; ++t) {
      for (long k = 0; 2 * k <= t; ++k) {
        Integer den;
        Integer num;
        if (binomial_phi) {
          den = Integer(n) * (n + 1) * (n - k + 1);
          num = binomial(n, k) * binomial(n + 1, t - k);
        } else {
          const long odd1 = 2 * n - 2 * k - 1;
          const long odd2 = 2 * n - 2 * t + 2 * k - 1;
          if (odd1 % 2 == 0 || odd2 % 2 == 0) throw std::logic_error("psi factorization: odd denominator factor is even");
          den = Integer(n - k + 1) * (n - k + 1) * (n - t + k + 1) * (n - t + k + 1) * odd1 * odd2 * n;
          num = tri(n, k) * tri(n, t - k);
        }
        if (den == 0) {
          ++out.skipped;
          if (!out.first_skip) out.first_skip = Fields{{"n", str(n)}, {"t", str(t)}, {"k", str(k)}};
          continue;
        }
        ++out.points;
        const Rational lhs(L_mod(tri, n, t, k));
        const Rational rhs = make_rational(num, den) * eval(factor, rat(n), rat(t), rat(k));
        if (lhs != rhs && !out.mismatch) {
          out.mismatch = Fields{{"n", str(n)}, {"t", str(t)}, {"k", str(k)}, {"L_mod", to_decimal(lhs)},
                                {"factorized", to_decimal(rhs)}};
        }
      }
    }
  });

  Section s;
  s.id = binomial_phi ? "factorization.phi" : "factorization.psi";
  long points = 0;
  long skipped = 0;
  for (auto& r : rows) {
    points += r.points;
    skipped += r.skipped;
    if (r.mismatch && !s.witness) {
      s.pass = false;
      s.witness = r.mismatch;
    }
    if (r.first_skip && s.details.empty()) {
      for (auto& [k, v] : *r.first_skip) s.details.emplace_back("first_skipped_" + k, v);
    }
  }
  s.counts = {{"n_max", str(n_max)}, {"points", str(points)}, {"skipped_degenerate", str(skipped)}};
  s.details.insert(s.details.begin(),
                   {"identity", binomial_phi ? "L_mod(C(n,k)) = C(n,k)C(n+1,t-k) phi(k) / (n(n+1)(n-k+1)), 0<=t<=2n"
                                     : "L_mod(a(n,k)) = a(n,k)a(n,t-k) psi(k) / (n(n-k+1)^2(n-t+k+1)^2"
                                       "(2n-2k-1)(2n-2t+2k-1)), 0<=t<=n"});
  Report r;
  r.config = {{"check", binomial_phi ? "phi" : "psi"}, {"n_max", str(n_max)}};
  r.sections.push_back(std::move(s));
  return r;
}

Report grid_verify_sign_claims(long n_max, const Parallelism& par) {
  if (n_max < 5) throw std::invalid_argument("grid_verify_sign_claims needs n_max >= 5");
  const auto theta = named("theta");
  const auto psi1 = named("psi1");
  const auto psi2 = named("psi2");
  const auto psi_nn = named("psi_nn");
  const auto xi = named("xi");
  const auto eta = named("eta");
  const Rational zero(0);

  Report r;
  r.config = {{"check", "sign_claims"}, {"n_max", str(n_max)}};
  auto& out = r.sections;

  out.push_back(sign_claim("sign.theta_positive", "theta(t) > 0 for integers 0 <= t <= n-1, n >= 5", 5, n_max, 1, par,
                           [&](long n) {
                             std::vector<Point> pts;
                             for (long t = 0; t <= n - 1; ++t)
                               pts.push_back({{{"n", str(n)}, {"t", str(t)}}, eval(theta, rat(n), zero, rat(t))});
                             return pts;
                           }));
  out.push_back(sign_claim("sign.theta_at_n_negative", "theta(n) < 0 for n >= 5", 5, n_max, -1, par, [&](long n) {
    return std::vector<Point>{{{{"n", str(n)}}, eval(theta, rat(n), zero, rat(n))}};
  }));
  out.push_back(sign_claim("sign.psi2_half_negative", "psi2(t/2) < 0 for n >= 1, integers 0 <= t < n", 1, n_max, -1,
                           par, [&](long n) {
                             std::vector<Point> pts;
                             for (long t = 0; t < n; ++t)
                               pts.push_back({{{"n", str(n)}, {"t", str(t)}},
                                              eval(psi2, rat(n), rat(t), make_rational(t, 2))});
                             return pts;
                           }));
  out.push_back(sign_claim("sign.psi1_half_positive", "psi1(t/2) > 0 for n >= 2, integers 0 <= t < n", 2, n_max, 1,
                           par, [&](long n) {
                             std::vector<Point> pts;
                             for (long t = 0; t < n; ++t)
                               pts.push_back({{{"n", str(n)}, {"t", str(t)}},
                                              eval(psi1, rat(n), rat(t), make_rational(t, 2))});
                             return pts;
                           }));
  {
    auto s = sign_claim("sign.psi_nn_at_1_positive", "psi^(n,n)(1) > 0 for n >= 2 (n = 2 is the special case 8)", 2,
                        n_max, 1, par, [&](long n) {
                          return std::vector<Point>{{{{"n", str(n)}}, eval(psi_nn, rat(n), zero, rat(1))}};
                        });
    s.details.emplace_back("psi^(2,2)(1)", to_decimal(eval(psi_nn, rat(2), zero, rat(1))));
    out.push_back(std::move(s));
  }
  out.push_back(sign_claim("sign.psi_nn_half_negative", "psi^(n,n)(n/2) < 0 for n >= 3", 3, n_max, -1, par,
                           [&](long n) {
                             return std::vector<Point>{
                                 {{{"n", str(n)}}, eval(psi_nn, rat(n), zero, make_rational(n, 2))}};
                           }));
  out.push_back(sign_claim("sign.psi2_zero_small_n_negative",
                           "psi2(0) < 0 for (n,t) in {(2,0),(2,1),(3,0),(3,1),(3,2)}", 2, 3, -1, par, [&](long n) {
                             std::vector<Point> pts;
                             for (long t = 0; t < n; ++t)
                               pts.push_back({{{"n", str(n)}, {"t", str(t)}}, eval(psi2, rat(n), rat(t), zero)});
                             return pts;
                           }));
  out.push_back(sign_claim("sign.xi_negative", "xi(t) < 0 for n >= 4, integers 3n/4 <= t <= n-1", 4, n_max, -1, par,
                           [&](long n) {
                             std::vector<Point> pts;
                             for (long t = (3 * n + 3) / 4; t <= n - 1; ++t)
                               pts.push_back({{{"n", str(n)}, {"t", str(t)}}, eval(xi, rat(n), rat(t), zero)});
                             return pts;
                           }));
  out.push_back(sign_claim("sign.eta_negative", "eta(t) < 0 for n >= 2, integers 0 <= t <= 3n/4", 2, n_max, -1, par,
                           [&](long n) {
                             std::vector<Point> pts;
                             for (long t = 0; 4 * t <= 3 * n; ++t)
                               pts.push_back({{{"n", str(n)}, {"t", str(t)}}, eval(eta, rat(n), rat(t), zero)});
                             return pts;
                           }));
  return r;
}

}  // namespace qconvex
