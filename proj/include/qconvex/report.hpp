#ifndef QCONVEX_REPORT_HPP
#define QCONVEX_REPORT_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qconvex {

/// Ordered key/value list. Every value is a string so exact numbers survive
/// any JSON consumer untouched.
using Fields = std::vector<std::pair<std::string, std::string>>;

struct Section {
  std::string id;
  bool pass = true;
  Fields counts;
  Fields details;
  std::optional<Fields> witness;

  friend bool operator==(const Section&, const Section&) = default;
};

struct Report {
  std::string tool_version;
  Fields config;
  std::string started;
  std::string finished;
  std::vector<Section> sections;

  bool overall() const;
  void append(const Report& other);

  friend bool operator==(const Report&, const Report&) = default;
};

inline constexpr const char* kToolVersion = "0.3.1";

/// UTC, second resolution, e.g. "2026-10-16T09:39:00Z".
std::string utc_timestamp();

/// Serialized with keys in the fixed order tool_version, config, started,
/// finished, overall, sections; each section is id, status, counts, then
/// details and witness when present.
std::string report_to_json(const Report& report);
/// Inverse of report_to_json. Throws std::runtime_error on malformed input or
/// when the stored "overall" disagrees with the sections.
Report report_from_json(const std::string& text);

/// Throws std::runtime_error on I/O failure.
void write_report(const Report& report, const std::filesystem::path& path);

}  // namespace qconvex

#endif  // QCONVEX_REPORT_HPP
