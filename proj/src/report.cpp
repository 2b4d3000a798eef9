#include "qconvex/report.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace qconvex {

using ordered_json = nlohmann::ordered_json;

bool Report::overall() const {
  return std::all_of(sections.begin(), sections.end(), [](const Section& s) { return s.pass; });
}

void Report::append(const Report& other) { sections.insert(sections.end(), other.sections.begin(), other.sections.end()); }

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

namespace {

ordered_json fields_to_json(const Fields& fields) {
  ordered_json obj = ordered_json::object();
  for (const auto& [k, v] : fields) obj[k] = v;
  return obj;
}

Fields fields_from_json(const ordered_json& obj, const char* what) {
  if (!obj.is_object()) throw std::runtime_error(std::string("report: '") + what + "' must be an object");
  Fields out;
  for (const auto& [k, v] : obj.items()) {
    if (!v.is_string()) throw std::runtime_error("report: value of '" + k + "' must be a string");
    out.emplace_back(k, v.get<std::string>());
  }
  return out;
}

const ordered_json& member(const ordered_json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw std::runtime_error(std::string("report: missing key '") + key + "'");
  return *it;
}

std::string string_member(const ordered_json& obj, const char* key) {
  const auto& v = member(obj, key);
  if (!v.is_string()) throw std::runtime_error(std::string("report: '") + key + "' must be a string");
  return v.get<std::string>();
}

bool status_from(const std::string& s) {
  if (s == "pass") return true;
  if (s == "fail") return false;
  throw std::runtime_error("report: status must be pass or fail, got '" + s + "'");
}

}  // namespace

std::string report_to_json(const Report& report) {
  ordered_json j;
  j["tool_version"] = report.tool_version;
  j["config"] = fields_to_json(report.config);
  j["started"] = report.started;
  j["finished"] = report.finished;
  j["overall"] = report.overall() ? "pass" : "fail";
  ordered_json sections = ordered_json::array();
  for (const auto& s : report.sections) {
    ordered_json sj;
    sj["id"] = s.id;
    sj["status"] = s.pass ? "pass" : "fail";
    sj["counts"] = fields_to_json(s.counts);
    if (!s.details.empty()) sj["details"] = fields_to_json(s.details);
    if (s.witness) sj["witness"] = fields_to_json(*s.witness);
    sections.push_back(std::move(sj));
  }
  j["sections"] = std::move(sections);
  return j.dump(2) + "\n";
}

Report report_from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error(std::string("report: invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw std::runtime_error("report: top level must be an object");
  Report r;
  r.tool_version = string_member(j, "tool_version");
  r.config = fields_from_json(member(j, "config"), "config");
  r.started = string_member(j, "started");
  r.finished = string_member(j, "finished");
  const bool overall = status_from(string_member(j, "overall"));
  const auto& sections = member(j, "sections");
  if (!sections.is_array()) throw std::runtime_error("report: 'sections' must be an array");
  for (const auto& sj : sections) {
    Section s;
    s.id = string_member(sj, "id");
    s.pass = status_from(string_member(sj, "status"));
    s.counts = fields_from_json(member(sj, "counts"), "counts");
    if (sj.contains("details")) s.details = fields_from_json(sj["details"], "details");
    if (sj.contains("witness")) s.witness = fields_from_json(sj["witness"], "witness");
    r.sections.push_back(std::move(s));
  }
  if (overall != r.overall()) throw std::runtime_error("report: 'overall' disagrees with section statuses");
  return r;
}

void write_report(const Report& report, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open report file " + path.string());
  out << report_to_json(report);
  out.close();
  if (!out) throw std::runtime_error("failed writing report file " + path.string());
}

}  // namespace qconvex
