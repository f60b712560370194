#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lmg/errors.hpp"
#include "lmg/io/table.hpp"
#include "lmg/phase_space.hpp"
#include "lmg/thermo.hpp"

namespace lmg::io {

inline constexpr const char* kArtifactVersion = "0.1.0";

enum class ConfigErrorKind { UnknownFlag, MalformedValue, ConflictingModes };

class ConfigError : public Error {
 public:
  ConfigError(ConfigErrorKind kind, std::string token, const std::string& what)
      : Error(what + ": " + token), kind_(kind), token_(std::move(token)) {}
  ConfigErrorKind kind() const noexcept { return kind_; }
  const std::string& token() const noexcept { return token_; }

 private:
  ConfigErrorKind kind_;
  std::string token_;
};

enum class ModeSelection { NonExtensive, Extensive, Both };

struct Formats {
  bool csv = true;
  bool json = true;
  bool svg = true;
};

struct RunConfig {
  std::string command;
  std::string preset;
  EngineParams params;
  int n_from = 1;
  int n_to = 60;
  ModeSelection modes = ModeSelection::Both;
  std::string output_dir = ".";
  Formats formats;
  QuadratureResolution resolution;
  std::uint64_t seed = 0;  // reserved; every production path is deterministic
  int twice_s = 8;
  double squeeze = 1.0;
  int k_max = 50;
  std::optional<std::string> config_file;

  bool help = false;
  std::string help_text;

  /// Non-extensive first when both are selected.
  std::vector<ScalingMode> selected_modes() const;

  /// Every effective setting, for output headers.
  Meta meta() const;
};

const std::vector<std::string>& known_commands();
const std::vector<std::string>& known_presets();

/// Arguments exclude the program name. Precedence: defaults < config file
/// (`--config path`) < flags. Throws ConfigError for unknown flags or keys,
/// malformed values and conflicting mode selections; range problems surface
/// as the library's own errors (InvalidSector, InvalidCoupling, ...).
RunConfig parse_config(const std::vector<std::string>& args);

/// Applies `key = value` lines (with `#` comments) on top of `cfg`.
void apply_config_text(RunConfig& cfg, const std::string& text);

}  // namespace lmg::io
