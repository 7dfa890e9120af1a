#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "udnsim/radio.hpp"
#include "udnsim/scenario.hpp"

namespace udnsim {

// Everything a run needs besides the handover parameters (which are CLI-side
// knobs, not deployment description).
struct SimConfig {
  ScenarioConfig scenario;
  SiteParams site;
  LinkConfig link;
};

// Grammar or key errors found while reading a config. what() joins all
// messages, one per line.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(std::vector<std::string> messages);
  const std::vector<std::string>& messages() const { return messages_; }

 private:
  std::vector<std::string> messages_;
};

// key=value lines, '#' starts a comment, blank lines ignored. Every key must
// be one of the 24 known keys; unknown or duplicate keys are errors. Route
// endpoints are required for route=custom and, when given for route=A|B,
// must match the preset endpoints. Collects every error before throwing.
SimConfig parse_config(std::istream& in);
// Throws std::ios_base::failure when the file cannot be opened.
SimConfig parse_config_file(const std::string& path);

// Canonical echo of a config: fixed key order, one derived-values comment at
// the end. parse_config(serialize_config(c)) reproduces c.
std::string serialize_config(const SimConfig& cfg);

// Semantic checks (positivity, tic divisibility, route consistency...).
// Empty result means the config is runnable.
std::vector<std::string> validate_config(const SimConfig& cfg);

}  // namespace udnsim
