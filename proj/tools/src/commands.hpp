#pragma once

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace radharm::cli {

/// Bad command-line input; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  std::vector<std::string> positionals;
  double tol = 1e-10;
  std::uint64_t seed = 42;
  int precision = 12;
  std::string out;  // empty: standard output
  bool svg = false;
  bool numeric_only = false;
  bool orientable = true;
};

using Settings = std::vector<std::pair<std::string, std::string>>;

/// "# radharm <command> key=value ..." with the command-specific settings
/// followed by the shared flags.
std::string config_line(const RunConfig& config, const Settings& settings);

int phi_table(const RunConfig& config, std::ostream& out);
int verify(const RunConfig& config, std::ostream& out);
int quotient(const RunConfig& config, std::ostream& out);
int bounds(const RunConfig& config, std::ostream& out);

}  // namespace radharm::cli
