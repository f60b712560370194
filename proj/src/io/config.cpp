#include "lmg/io/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "lmg/analysis.hpp"

namespace lmg::io {

namespace {

const std::vector<std::string> kValueKeys{
    "gamma-x-high", "gamma-y-high", "gamma-x-low", "gamma-y-low", "t-high",     "t-low",
    "n-from",       "n-to",         "twice-s",     "mode",        "output-dir", "formats",
    "theta-cells",  "phi-cells",    "seed",        "squeeze",     "k-max"};

const std::map<std::string, std::string> kOptionHelp{
    {"gamma-x-high", "hot-stroke x coupling"},
    {"gamma-y-high", "hot-stroke y coupling"},
    {"gamma-x-low", "cold-stroke x coupling"},
    {"gamma-y-low", "cold-stroke y coupling"},
    {"t-high", "hot bath temperature"},
    {"t-low", "cold bath temperature"},
    {"n-from", "first particle number of a sweep"},
    {"n-to", "last particle number of a sweep"},
    {"twice-s", "2S for single-sector commands"},
    {"mode", "extensive | nonextensive | both"},
    {"output-dir", "directory for written artifacts"},
    {"formats", "comma list of csv, json, svg"},
    {"theta-cells", "polar quadrature cells (even)"},
    {"phi-cells", "azimuthal quadrature cells"},
    {"seed", "recorded in metadata; runs are deterministic"},
    {"squeeze", "squeezing parameter r"},
    {"k-max", "largest photon number"}};

[[noreturn]] void malformed(const std::string& key, const std::string& value) {
  throw ConfigError(ConfigErrorKind::MalformedValue, key + "=" + value, "malformed value");
}

double to_double(const std::string& key, const std::string& s) {
  double v = 0.0;
  auto r = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || r.ec != std::errc{} || r.ptr != s.data() + s.size() || !std::isfinite(v))
    malformed(key, s);
  return v;
}

template <class Int>
Int to_integer(const std::string& key, const std::string& s) {
  Int v = 0;
  auto r = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || r.ec != std::errc{} || r.ptr != s.data() + s.size()) malformed(key, s);
  return v;
}

ModeSelection to_mode(const std::string& key, const std::string& s) {
  if (s == "nonextensive") return ModeSelection::NonExtensive;
  if (s == "extensive") return ModeSelection::Extensive;
  if (s == "both") return ModeSelection::Both;
  malformed(key, s);
}

Formats to_formats(const std::string& key, const std::string& s) {
  Formats f{false, false, false};
  std::istringstream ss(s);
  std::string item;
  bool any = false;
  while (std::getline(ss, item, ',')) {
    if (item == "csv") f.csv = true;
    else if (item == "json") f.json = true;
    else if (item == "svg") f.svg = true;
    else malformed(key, s);
    any = true;
  }
  if (!any) malformed(key, s);
  return f;
}

void apply(RunConfig& c, const std::string& key, const std::string& v) {
  if (key == "gamma-x-high") c.params.hot.gamma_x = to_double(key, v);
  else if (key == "gamma-y-high") c.params.hot.gamma_y = to_double(key, v);
  else if (key == "gamma-x-low") c.params.cold.gamma_x = to_double(key, v);
  else if (key == "gamma-y-low") c.params.cold.gamma_y = to_double(key, v);
  else if (key == "t-high") c.params.t_high = to_double(key, v);
  else if (key == "t-low") c.params.t_low = to_double(key, v);
  else if (key == "n-from") c.n_from = to_integer<int>(key, v);
  else if (key == "n-to") c.n_to = to_integer<int>(key, v);
  else if (key == "twice-s") c.twice_s = to_integer<int>(key, v);
  else if (key == "mode") c.modes = to_mode(key, v);
  else if (key == "output-dir") {
    if (v.empty()) malformed(key, v);
    c.output_dir = v;
  } else if (key == "formats") c.formats = to_formats(key, v);
  else if (key == "theta-cells") c.resolution.theta = to_integer<int>(key, v);
  else if (key == "phi-cells") c.resolution.phi = to_integer<int>(key, v);
  else if (key == "seed") c.seed = to_integer<std::uint64_t>(key, v);
  else if (key == "squeeze") c.squeeze = to_double(key, v);
  else if (key == "k-max") c.k_max = to_integer<int>(key, v);
  else throw ConfigError(ConfigErrorKind::UnknownFlag, key, "unknown key");
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string mode_name(ModeSelection m) {
  switch (m) {
    case ModeSelection::NonExtensive: return "nonextensive";
    case ModeSelection::Extensive: return "extensive";
    case ModeSelection::Both: return "both";
  }
  return {};
}

void validate(const RunConfig& c) {
  c.params.validate();
  make_sector(c.twice_s);
  if (c.n_from < 1 || c.n_to < c.n_from || c.n_to > kMaxSweepParticles)
    throw InvalidSector("N range must satisfy 1 <= n-from <= n-to <= " +
                        std::to_string(kMaxSweepParticles));
  try {
    c.resolution.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(ConfigErrorKind::MalformedValue,
                      "theta-cells=" + std::to_string(c.resolution.theta) +
                          ",phi-cells=" + std::to_string(c.resolution.phi),
                      e.what());
  }
  if (c.squeeze < 0.0) throw InvalidSqueezing("squeeze must be >= 0");
  if (c.k_max < 0) throw ConfigError(ConfigErrorKind::MalformedValue, "k-max=" + std::to_string(c.k_max), "malformed value");
}

}  // namespace

std::vector<ScalingMode> RunConfig::selected_modes() const {
  switch (modes) {
    case ModeSelection::NonExtensive: return {ScalingMode::NonExtensive};
    case ModeSelection::Extensive: return {ScalingMode::Extensive};
    case ModeSelection::Both: break;
  }
  return {ScalingMode::NonExtensive, ScalingMode::Extensive};
}

Meta RunConfig::meta() const {
  std::string fmts;
  for (auto [on, name] : {std::pair{formats.csv, "csv"}, {formats.json, "json"}, {formats.svg, "svg"}})
    if (on) fmts += (fmts.empty() ? "" : ",") + std::string(name);
  Meta m;
  m.emplace_back("artifact_version", std::string(kArtifactVersion));
  m.emplace_back("command", command);
  m.emplace_back("preset", preset);
  m.emplace_back("gamma_x_high", params.hot.gamma_x);
  m.emplace_back("gamma_y_high", params.hot.gamma_y);
  m.emplace_back("gamma_x_low", params.cold.gamma_x);
  m.emplace_back("gamma_y_low", params.cold.gamma_y);
  m.emplace_back("t_high", params.t_high);
  m.emplace_back("t_low", params.t_low);
  m.emplace_back("n_from", std::int64_t{n_from});
  m.emplace_back("n_to", std::int64_t{n_to});
  m.emplace_back("mode", mode_name(modes));
  m.emplace_back("twice_s", std::int64_t{twice_s});
  m.emplace_back("theta_cells", std::int64_t{resolution.theta});
  m.emplace_back("phi_cells", std::int64_t{resolution.phi});
  m.emplace_back("squeeze", squeeze);
  m.emplace_back("k_max", std::int64_t{k_max});
  m.emplace_back("seed", static_cast<std::int64_t>(seed));
  m.emplace_back("formats", fmts);
  m.emplace_back("config_file", config_file.value_or(""));
  return m;
}

const std::vector<std::string>& known_commands() {
  static const std::vector<std::string> v{"cycle", "sweep", "interference", "geometry", "squeezed", "figure"};
  return v;
}

const std::vector<std::string>& known_presets() {
  static const std::vector<std::string> v{"fig2a", "fig2b", "fig3a", "fig3b", "fig3c",
                                          "figS3", "figS4", "figS5", "figS6"};
  return v;
}

void apply_config_text(RunConfig& cfg, const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError(ConfigErrorKind::MalformedValue, line, "expected key = value");
    const std::string key = trim(line.substr(0, eq));
    if (std::find(kValueKeys.begin(), kValueKeys.end(), key) == kValueKeys.end())
      throw ConfigError(ConfigErrorKind::UnknownFlag, key, "unknown key");
    apply(cfg, key, trim(line.substr(eq + 1)));
  }
}

RunConfig parse_config(const std::vector<std::string>& args) {
  // Reject unknown flags up front so the error carries the exact token.
  for (const std::string& a : args) {
    if (a.size() < 2 || a[0] != '-' || (a[1] != '-' && !std::isalpha(static_cast<unsigned char>(a[1]))))
      continue;
    const std::string name = a.substr(0, a.find('='));
    const std::string bare = name.rfind("--", 0) == 0 ? name.substr(2) : name;
    const bool known = std::find(kValueKeys.begin(), kValueKeys.end(), bare) != kValueKeys.end() ||
                       name == "--extensive" || name == "--nonextensive" || name == "--config" ||
                       name == "--help" || name == "-h";
    if (!known) throw ConfigError(ConfigErrorKind::UnknownFlag, a, "unknown flag");
  }

  CLI::App app{"Quantum Otto engine with an LMG spin working medium", "lmg_engine"};
  std::map<std::string, std::string> values;
  for (const auto& key : kValueKeys) app.add_option("--" + key, values[key], kOptionHelp.at(key));
  std::string config_path;
  app.add_option("--config", config_path, "flat key = value file, overridden by flags");
  bool extensive = false, nonextensive = false;
  app.add_flag("--extensive", extensive, "only the Kac-rescaled model");
  app.add_flag("--nonextensive", nonextensive, "only the unscaled model");
  std::vector<std::string> positionals;
  app.add_option("command", positionals, "cycle | sweep | interference | geometry | squeezed | figure <preset>");

  RunConfig cfg;
  std::vector<const char*> argv{"lmg_engine"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    cfg.help = true;
    cfg.help_text = app.help();
    return cfg;
  } catch (const CLI::ParseError& e) {
    throw ConfigError(ConfigErrorKind::MalformedValue, e.what(), "cannot parse arguments");
  }

  if (positionals.empty())
    throw ConfigError(ConfigErrorKind::MalformedValue, "<command>", "missing command");
  cfg.command = positionals[0];
  if (std::find(known_commands().begin(), known_commands().end(), cfg.command) == known_commands().end())
    throw ConfigError(ConfigErrorKind::UnknownFlag, cfg.command, "unknown command");
  std::size_t used = 1;
  if (cfg.command == "figure") {
    if (positionals.size() < 2)
      throw ConfigError(ConfigErrorKind::MalformedValue, "figure", "missing preset name");
    cfg.preset = positionals[1];
    if (std::find(known_presets().begin(), known_presets().end(), cfg.preset) == known_presets().end())
      throw ConfigError(ConfigErrorKind::UnknownFlag, cfg.preset, "unknown preset");
    used = 2;
  }
  if (positionals.size() > used)
    throw ConfigError(ConfigErrorKind::UnknownFlag, positionals[used], "unexpected argument");

  if (app.count("--config")) {
    cfg.config_file = config_path;
    apply_config_text(cfg, read_file(config_path));
  }
  for (const auto& key : kValueKeys)
    if (app.count("--" + key)) apply(cfg, key, values[key]);

  if (extensive && nonextensive)
    throw ConfigError(ConfigErrorKind::ConflictingModes, "--nonextensive", "conflicting mode flags");
  if (extensive || nonextensive) {
    const ModeSelection flag = extensive ? ModeSelection::Extensive : ModeSelection::NonExtensive;
    if (app.count("--mode") && cfg.modes != flag)
      throw ConfigError(ConfigErrorKind::ConflictingModes, "--mode=" + values["mode"],
                        "conflicting mode selection");
    cfg.modes = flag;
  }

  validate(cfg);
  return cfg;
}

}  // namespace lmg::io
