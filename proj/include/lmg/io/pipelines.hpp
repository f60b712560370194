#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lmg/analysis.hpp"
#include "lmg/io/config.hpp"
#include "lmg/io/svg.hpp"
#include "lmg/io/table.hpp"

namespace lmg::io {

/// One output unit: `<stem>.csv`, `<stem>.json` and, when a chart is
/// attached, `<stem>.svg`.
struct Artifact {
  std::string stem;
  Table table;
  std::optional<Chart> chart;
};

Table sweep_to_table(const SweepTable& sweep, const Meta& meta);
/// Rebuilds rows from a table with the sweep_to_table columns; params are
/// read back from the meta block when present.
SweepTable sweep_from_table(const Table& t);

/// Runs the configured command (or figure preset) and returns its artifacts
/// without touching the file system.
std::vector<Artifact> run_command(const RunConfig& cfg);
std::vector<Artifact> run_preset(const std::string& preset, const RunConfig& cfg);

/// Writes every artifact in the selected formats below cfg.output_dir and
/// returns the written paths.
std::vector<std::string> write_artifacts(const RunConfig& cfg, const std::vector<Artifact>& artifacts);

}  // namespace lmg::io
