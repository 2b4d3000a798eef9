#ifndef QCONVEX_SEQUENCES_HPP
#define QCONVEX_SEQUENCES_HPP

#include <filesystem>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qconvex/arith.hpp"
#include "qconvex/poly.hpp"

namespace qconvex {

enum class TriangleSource { builtin, file };

/// Triangular array a(n, k), zero outside 0 <= k <= n.
///
/// Values are memoized on first query. Copies share the memo table, and the
/// table tolerates concurrent readers and writers.
class Triangle {
 public:
  /// Only ever called with 0 <= k <= n (and n <= max_n when bounded).
  using Generator = std::function<Integer(long n, long k)>;

  Triangle(std::string name, Generator generator, TriangleSource source = TriangleSource::builtin,
           std::optional<long> max_n = std::nullopt);

  const std::string& name() const;
  TriangleSource source() const;
  /// Largest row that carries data; nullopt for unbounded (builtin) arrays.
  /// An empty file triangle reports -1.
  std::optional<long> max_n() const;

  /// Throws std::domain_error for n < 0.
  const Integer& operator()(long n, long k) const;

  /// Throws std::out_of_range when the triangle is bounded below `n`. Checks
  /// that would otherwise silently read zero-extended rows call this first.
  void require_rows(long n) const;

 private:
  struct State;
  std::shared_ptr<State> state_;
};

inline const Integer& triangle_value(const Triangle& tri, long n, long k) { return tri(n, k); }

/// Weight sequence u_k for k >= 0.
class WeightSeq {
 public:
  using Generator = std::function<Integer(long k)>;

  WeightSeq(std::string name, Generator generator) : name_(std::move(name)), generator_(std::move(generator)) {}

  const std::string& name() const { return name_; }
  /// Throws std::domain_error for k < 0.
  Integer operator()(long k) const;
  /// u_0, ..., u_{count-1}.
  std::vector<Integer> values(long count) const;

 private:
  std::string name_;
  Generator generator_;
};

/// g_n(q) = sum_k a(n,k) u_k q^k.
struct PolySeqSpec {
  Triangle triangle;
  WeightSeq weights;
};

Poly gen_poly(const PolySeqSpec& spec, long n);

// Builtin registry. Unknown names throw std::invalid_argument.
Triangle builtin_triangle(std::string_view name);
WeightSeq builtin_weights(std::string_view name);
const std::vector<std::string>& triangle_names();
const std::vector<std::string>& weight_names();

/// a(n,k) = C(n,k) C(2n-2k, n-k).
Triangle sun_a_triangle();
Triangle binomial_triangle();
WeightSeq central_binomial_weights();

/// Malformed triangle CSV; what() names the offending line.
class CsvError : public std::runtime_error {
 public:
  CsvError(long line, const std::string& message);
  long line() const { return line_; }

 private:
  long line_;
};

/// Reads `n,k,value` rows (header optional, blank lines ignored). Identical
/// duplicates are accepted, conflicting ones are a CsvError. Throws
/// std::runtime_error when the file cannot be opened.
Triangle load_triangle_csv(const std::filesystem::path& path);

/// Writes rows 0..max_n of `tri` with a header line.
void write_triangle_csv(const Triangle& tri, long max_n, const std::filesystem::path& path);

}  // namespace qconvex

#endif  // QCONVEX_SEQUENCES_HPP
