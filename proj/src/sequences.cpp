#include "qconvex/sequences.hpp"

#include <cstdint>
#include <fstream>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <unordered_map>
#include <utility>

namespace qconvex {

struct Triangle::State {
  std::string name;
  Generator generator;
  TriangleSource source;
  std::optional<long> max_n;

  mutable std::shared_mutex mutex;
  // Node-based map: references to stored values stay valid across rehash.
  mutable std::unordered_map<std::uint64_t, Integer> memo;
};

namespace {

const Integer kZero(0);

std::uint64_t memo_key(long n, long k) {
  return (static_cast<std::uint64_t>(n) << 32U) | static_cast<std::uint32_t>(k);
}

}  // namespace

Triangle::Triangle(std::string name, Generator generator, TriangleSource source, std::optional<long> max_n)
    : state_(std::make_shared<State>()) {
  state_->name = std::move(name);
  state_->generator = std::move(generator);
  state_->source = source;
  state_->max_n = max_n;
}

const std::string& Triangle::name() const { return state_->name; }
TriangleSource Triangle::source() const { return state_->source; }
std::optional<long> Triangle::max_n() const { return state_->max_n; }

const Integer& Triangle::operator()(long n, long k) const {
  if (n < 0) throw std::domain_error("triangle " + state_->name + ": negative row n = " + std::to_string(n));
  if (k < 0 || k > n) return kZero;
  if (state_->max_n && n > *state_->max_n) return kZero;

  const auto key = memo_key(n, k);
  {
    std::shared_lock lock(state_->mutex);
    if (auto it = state_->memo.find(key); it != state_->memo.end()) return it->second;
  }
  Integer value = state_->generator(n, k);
  std::unique_lock lock(state_->mutex);
  // A concurrent fill of the same entry computed the same value; keep the first.
  return state_->memo.try_emplace(key, std::move(value)).first->second;
}

void Triangle::require_rows(long n) const {
  if (state_->max_n && *state_->max_n < n) {
    throw std::out_of_range("triangle " + state_->name + " only has rows up to n = " +
                            std::to_string(*state_->max_n) + ", but the check needs n = " + std::to_string(n));
  }
}

Integer WeightSeq::operator()(long k) const {
  if (k < 0) throw std::domain_error("weights " + name_ + ": negative index k = " + std::to_string(k));
  return generator_(k);
}

std::vector<Integer> WeightSeq::values(long count) const {
  std::vector<Integer> out;
  out.reserve(static_cast<std::size_t>(std::max(0L, count)));
  for (long k = 0; k < count; ++k) out.push_back((*this)(k));
  return out;
}

Poly gen_poly(const PolySeqSpec& spec, long n) {
  if (n < 0) throw std::domain_error("gen_poly: negative n = " + std::to_string(n));
  std::vector<Rational> coeffs;
  coeffs.reserve(static_cast<std::size_t>(n + 1));
  for (long k = 0; k <= n; ++k) coeffs.emplace_back(spec.triangle(n, k) * spec.weights(k));
  return Poly(std::move(coeffs));
}

Triangle sun_a_triangle() {
  static const Triangle tri("sun_a", [](long n, long k) -> Integer { return binomial(n, k) * binomial(2 * (n - k), n - k); });
  return tri;
}

Triangle binomial_triangle() {
  static const Triangle tri("binomial", [](long n, long k) { return binomial(n, k); });
  return tri;
}

WeightSeq central_binomial_weights() {
  return WeightSeq("central_binomial", [](long k) { return binomial(2 * k, k); });
}

const std::vector<std::string>& triangle_names() {
  static const std::vector<std::string> names{"binomial", "sun_a"};
  return names;
}

const std::vector<std::string>& weight_names() {
  static const std::vector<std::string> names{"central_binomial", "catalan", "ones"};
  return names;
}

Triangle builtin_triangle(std::string_view name) {
  if (name == "binomial") return binomial_triangle();
  if (name == "sun_a") return sun_a_triangle();
  throw std::invalid_argument("unknown triangle '" + std::string(name) + "'");
}

WeightSeq builtin_weights(std::string_view name) {
  if (name == "central_binomial") return central_binomial_weights();
  if (name == "catalan") {
    return WeightSeq("catalan", [](long k) {
      Integer c = binomial(2 * k, k);
      mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(k + 1));
      return c;
    });
  }
  if (name == "ones") return WeightSeq("ones", [](long) { return Integer(1); });
  throw std::invalid_argument("unknown weights '" + std::string(name) + "'");
}

CsvError::CsvError(long line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

namespace {

std::string trim(std::string_view s) {
  const char* ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) out.push_back(trim(field));
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

long parse_index(const std::string& field, long line, const char* what) {
  Integer v;
  try {
    v = parse_integer(field);
  } catch (const std::invalid_argument&) {
    throw CsvError(line, std::string("field ") + what + " is not an integer: '" + field + "'");
  }
  if (!v.fits_slong_p() || v > 0x7fffffffL || v < -0x7fffffffL)
    throw CsvError(line, std::string("field ") + what + " out of range: " + field);
  return v.get_si();
}

}  // namespace

Triangle load_triangle_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open triangle file " + path.string());

  std::map<std::pair<long, long>, Integer> entries;
  long max_n = -1;
  std::string raw;
  long line_no = 0;
  bool seen_data = false;
  while (std::getline(in, raw)) {
    ++line_no;
    if (line_no == 1 && raw.starts_with("\xEF\xBB\xBF")) raw.erase(0, 3);
    std::string line = trim(raw);
    if (line.empty()) continue;
    auto fields = split_fields(line);
    if (!seen_data && fields.size() == 3 && fields[0] == "n" && fields[1] == "k" && fields[2] == "value") {
      seen_data = true;
      continue;
    }
    seen_data = true;
    if (fields.size() != 3)
      throw CsvError(line_no, "expected 3 fields n,k,value but found " + std::to_string(fields.size()));
    long n = parse_index(fields[0], line_no, "n");
    long k = parse_index(fields[1], line_no, "k");
    Integer value;
    try {
      value = parse_integer(fields[2]);
    } catch (const std::invalid_argument&) {
      throw CsvError(line_no, "field value is not an integer: '" + fields[2] + "'");
    }
    if (n < 0 || k < 0 || k > n)
      throw CsvError(line_no, "entry (" + fields[0] + "," + fields[1] + ") lies outside 0 <= k <= n");
    auto [it, inserted] = entries.try_emplace({n, k}, value);
    if (!inserted && it->second != value) {
      throw CsvError(line_no, "conflicting duplicate for (" + fields[0] + "," + fields[1] + "): " +
                                  to_decimal(it->second) + " vs " + to_decimal(value));
    }
    max_n = std::max(max_n, n);
  }

  auto table = std::make_shared<const std::map<std::pair<long, long>, Integer>>(std::move(entries));
  Triangle::Generator gen = [table](long n, long k) {
    auto it = table->find({n, k});
    return it == table->end() ? Integer(0) : it->second;
  };
  return Triangle(path.string(), std::move(gen), TriangleSource::file, max_n);
}

void write_triangle_csv(const Triangle& tri, long max_n, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write triangle file " + path.string());
  out << "n,k,value\n";
  for (long n = 0; n <= max_n; ++n)
    for (long k = 0; k <= n; ++k) out << n << ',' << k << ',' << to_decimal(tri(n, k)) << '\n';
  if (!out) throw std::runtime_error("failed writing triangle file " + path.string());
}

}  // namespace qconvex
