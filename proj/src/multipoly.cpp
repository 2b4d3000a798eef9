#include "qconvex/multipoly.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace qconvex {

Var parse_var(std::string_view name) {
  if (name == "n") return Var::n;
  if (name == "t") return Var::t;
  if (name == "x") return Var::x;
  throw std::invalid_argument("unknown variable '" + std::string(name) + "' (expected n, t or x)");
}

std::string_view var_name(Var v) {
  switch (v) {
    case Var::n: return "n";
    case Var::t: return "t";
    case Var::x: return "x";
  }
  return "?";
}

MultiPoly::MultiPoly(long c) : MultiPoly(Rational(c)) {}

MultiPoly::MultiPoly(const Rational& c) {
  if (c != 0) terms_.emplace(Exponents{0, 0, 0}, c);
}

MultiPoly MultiPoly::var(Var v) {
  Exponents e{0, 0, 0};
  e[static_cast<std::size_t>(v)] = 1;
  return monomial(Rational(1), e);
}

MultiPoly MultiPoly::monomial(const Rational& c, Exponents e) {
  MultiPoly p;
  p.add_term(e, c);
  return p;
}

int MultiPoly::degree(Var v) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<std::size_t>(v)]);
  return d;
}

Rational MultiPoly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& r) {
  for (const auto& [e, c] : r.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& r) {
  for (const auto& [e, c] : r.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& r) {
  MultiPoly out;
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : r.terms_) {
      out.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
    }
  }
  *this = std::move(out);
  return *this;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest-degree monomials first reads closer to hand-written algebra.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << "-";
    first = false;
    Rational mag = abs(c);
    bool constant = e == Exponents{0, 0, 0};
    bool wrote = false;
    if (constant || mag != 1) {
      os << to_decimal(mag);
      wrote = true;
    }
    for (std::size_t i = 0; i < 3; ++i) {
      if (e[i] == 0) continue;
      if (wrote) os << '*';
      os << var_name(static_cast<Var>(i));
      if (e[i] > 1) os << '^' << e[i];
      wrote = true;
    }
  }
  return os.str();
}

MultiPoly pow(const MultiPoly& p, unsigned k) {
  MultiPoly result(1L);
  MultiPoly base = p;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return result;
}

MultiPoly derivative(const MultiPoly& p, Var v) {
  const auto i = static_cast<std::size_t>(v);
  MultiPoly out;
  for (const auto& [e, c] : p.terms()) {
    if (e[i] == 0) continue;
    auto de = e;
    de[i] -= 1;
    out += MultiPoly::monomial(c * e[i], de);
  }
  return out;
}

MultiPoly mp_derivative(const MultiPoly& p, std::string_view var) { return derivative(p, parse_var(var)); }

MultiPoly substitute(const MultiPoly& p, Var v, const MultiPoly& replacement) {
  const auto i = static_cast<std::size_t>(v);
  std::vector<MultiPoly> powers{MultiPoly(1L)};
  MultiPoly out;
  for (const auto& [e, c] : p.terms()) {
    while (static_cast<int>(powers.size()) <= e[i]) powers.push_back(powers.back() * replacement);
    auto rest = e;
    rest[i] = 0;
    out += MultiPoly::monomial(c, rest) * powers[static_cast<std::size_t>(e[i])];
  }
  return out;
}

MultiPoly mp_substitute(const MultiPoly& p, std::string_view var, const MultiPoly& replacement) {
  return substitute(p, parse_var(var), replacement);
}

namespace {

class PowerTable {
 public:
  explicit PowerTable(Rational base) : base_(std::move(base)), powers_{Rational(1)} {}
  const Rational& operator()(int k) {
    while (static_cast<int>(powers_.size()) <= k) powers_.push_back(powers_.back() * base_);
    return powers_[static_cast<std::size_t>(k)];
  }

 private:
  Rational base_;
  std::vector<Rational> powers_;
};

}  // namespace

Rational eval(const MultiPoly& p, const Rational& n, const Rational& t, const Rational& x) {
  PowerTable pn(n), pt(t), px(x);
  Rational acc(0);
  for (const auto& [e, c] : p.terms()) acc += c * pn(e[0]) * pt(e[1]) * px(e[2]);
  return acc;
}

std::optional<std::string> first_difference(const MultiPoly& a, const MultiPoly& b) {
  const MultiPoly diff = a - b;
  if (diff.is_zero()) return std::nullopt;
  const auto& [e, c] = *diff.terms().begin();
  std::string mono = MultiPoly::monomial(Rational(1), e).to_string();
  return mono + ": " + to_decimal(a.coeff(e)) + " vs " + to_decimal(b.coeff(e));
}

}  // namespace qconvex
