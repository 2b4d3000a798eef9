#ifndef QCONVEX_CLI_HPP
#define QCONVEX_CLI_HPP

#include <filesystem>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qconvex/report.hpp"

namespace qconvex {

/// Bad flags, unknown registry names, unreadable inputs. Maps to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;  // verify-sun | check-c1 | check-c2 | identities | qlc | seq
  std::string triangle = "sun_a";  // registry name or CSV path
  std::string weights = "central_binomial";
  std::optional<long> n_max;  // command default when unset
  long sign_n_max = 200;      // identities: range of the pointwise sign claims
  std::string theorem = "2.1";  // check-c2: "2.1" (L_mod, t <= n) or "1.1" (L_tilde, t <= 2n)
  bool concave = false;         // qlc: check q-log-concavity instead
  bool parallel = false;
  std::optional<std::filesystem::path> out;
};

/// Default --max-n for a command.
long default_n_max(const std::string& command);

/// Runs one command and returns its report. Timestamps are filled in; the
/// echoed config leaves out the execution-only settings (parallel, out) so
/// that reports are comparable across runs. Throws ConfigError.
Report run_command(const RunConfig& config);

/// Entry point behind the `qconvex` binary: 0 when every check passes, 1 when
/// any fails, 2 on usage or configuration errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qconvex

#endif  // QCONVEX_CLI_HPP
