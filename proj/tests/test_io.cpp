#include <cmath>
#include <filesystem>

#include "doctest.h"
#include "lmg/io/config.hpp"
#include "lmg/io/csv.hpp"
#include "lmg/io/json.hpp"
#include "lmg/io/pipelines.hpp"
#include "lmg/io/svg.hpp"

using namespace lmg;
using namespace lmg::io;

namespace {

std::size_t count(const std::string& haystack, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = haystack.find(needle); pos != std::string::npos; pos = haystack.find(needle, pos + 1)) ++n;
  return n;
}

std::filesystem::path scratch(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("lmg_io_test_" + name);
  std::filesystem::remove_all(p);
  return p;
}

template <class Kind>
void expect_config_error(const std::vector<std::string>& args, ConfigErrorKind kind, const std::string& token) {
  try {
    parse_config(args);
    FAIL("no error raised");
  } catch (const ConfigError& e) {
    CHECK(e.kind() == kind);
    CHECK(e.token() == token);
  }
}

const std::vector<ScalingMode> kBoth{ScalingMode::NonExtensive, ScalingMode::Extensive};

}  // namespace

TEST_CASE("empty tables") {
  Table t;
  t.columns = {"N", "W"};
  CHECK(to_csv(t) == "N,W\n");
  CHECK(to_json(t).find("\"rows\": []") != std::string::npos);
  const Table back = parse_json(to_json(t));
  CHECK(back.columns == t.columns);
  CHECK(back.rows.empty());
}

TEST_CASE("CSV formatting") {
  Table t;
  t.meta = {{"t_high", 0.4}, {"mode", std::string("both")}};
  t.columns = {"N", "W", "eta"};
  t.add_row({std::int64_t{2}, 1.0 / 3.0, std::monostate{}});
  CHECK(to_csv(t) == "# t_high = 0.4\n# mode = both\nN,W,eta\n2,0.333333333333,\n");
  CHECK_THROWS_AS(t.add_row({std::int64_t{1}}), DimensionError);
  const Table back = parse_csv(to_csv(t));
  CHECK(back.meta.size() == 2);
  CHECK(as_double(back.meta[0].second) == 0.4);
  CHECK(is_null(back.rows[0][2]));
  CHECK(as_int(back.rows[0][0]) == 2);
}

TEST_CASE("sweep tables round-trip") {
  RunConfig cfg;
  cfg.command = "sweep";
  const SweepTable sweep = sweep_cycle(cfg.params, 1, 12, kBoth);
  const Table t = sweep_to_table(sweep, cfg.meta());
  const SweepTable from_json = sweep_from_table(parse_json(to_json(t)));
  CHECK(from_json.rows == sweep.rows);
  CHECK(from_json.params == sweep.params);
  // CSV keeps 12 significant digits
  const SweepTable from_csv = sweep_from_table(parse_csv(to_csv(t)));
  REQUIRE(from_csv.rows.size() == sweep.rows.size());
  for (std::size_t i = 0; i < sweep.rows.size(); ++i) {
    const SweepRow &a = sweep.rows[i], &b = from_csv.rows[i];
    CHECK(a.n == b.n);
    CHECK(a.mode == b.mode);
    CHECK(a.parity == b.parity);
    CHECK(a.eta_signed.has_value() == b.eta_signed.has_value());
    for (auto f : {&SweepRow::work, &SweepRow::q_in, &SweepRow::u_a, &SweepRow::u_d, &SweepRow::w_pert_xy})
      CHECK(std::abs(a.*f - b.*f) <= 5e-12 * std::abs(a.*f));
  }
}

TEST_CASE("meta block echoes every parameter") {
  RunConfig cfg = parse_config({"sweep"});
  const std::string csv = to_csv(sweep_to_table(SweepTable{}, cfg.meta()));
  for (const char* line : {"# gamma_x_high = 1.01", "# gamma_y_high = 0.01", "# gamma_x_low = 1", "# gamma_y_low = 0.02",
                           "# t_high = 0.4", "# t_low = 0.1", "# n_from = 1", "# n_to = 60", "# mode = both",
                           "# artifact_version = 0.1.0", "# theta_cells = 2048", "# phi_cells = 4096"})
    CHECK_MESSAGE(csv.find(line) != std::string::npos, line);
}

TEST_CASE("SVG chart") {
  Chart c{{"t", "x", "y"}, {{"one", {0.0, 1.0}, {0.0, 2.0}, Marker::Circle, {}, true}}};
  const std::string svg = render_svg(c, {{"k", 1.0}});
  CHECK(count(svg, "<polyline") == 1);
  CHECK(svg.find("width=\"960\" height=\"600\"") != std::string::npos);
  CHECK(svg.find("<metadata>") != std::string::npos);
  CHECK(svg == render_svg(c, {{"k", 1.0}}));
  c.series[0].filled = {true, false};
  CHECK(count(render_svg(c, {}), "fill=\"white\" stroke=") == 1);
  CHECK_THROWS_AS(render_svg(Chart{}, {}), EmptySeries);
  Chart bad = c;
  bad.series[0].y[1] = NAN;
  CHECK_THROWS_AS(render_svg(bad, {}), NonFiniteValue);
  Chart empty_series = c;
  empty_series.series[0].x.clear();
  empty_series.series[0].y.clear();
  CHECK_THROWS_AS(render_svg(empty_series, {}), EmptySeries);
}

TEST_CASE("nice ticks") {
  const auto t = nice_ticks(0.0, 60.0);
  CHECK(t.front() == 0.0);
  CHECK(t.back() >= 60.0);
  CHECK(t.size() >= 4);
  CHECK(t.size() <= 9);
  const auto s = nice_ticks(-0.0031, 0.0287);
  CHECK(s.front() <= -0.0031);
  CHECK(s.back() >= 0.0287);
  const auto flat = nice_ticks(2.0, 2.0);
  CHECK(flat.front() < 2.0);
  CHECK(flat.back() > 2.0);
}

TEST_CASE("config defaults and precedence") {
  const RunConfig d = parse_config({"sweep"});
  CHECK(d.params == EngineParams{});
  CHECK(d.modes == ModeSelection::Both);
  CHECK(d.n_from == 1);
  CHECK(d.n_to == 60);
  CHECK(d.selected_modes() == kBoth);

  const RunConfig flip = parse_config({"sweep", "--gamma-y-high", "0.02", "--gamma-y-low", "0.01"});
  CHECK(flip.params.hot.gamma_y - flip.params.cold.gamma_y > 0.0);

  const auto dir = scratch("cfg");
  std::filesystem::create_directories(dir);
  const std::string file = (dir / "run.cfg").string();
  write_file(file, "# comment\nt-high = 0.5   # trailing\n\nn-to = 20\nmode = extensive\n");
  const RunConfig f = parse_config({"sweep", "--config", file, "--t-high=0.6"});
  CHECK(f.params.t_high == 0.6);
  CHECK(f.n_to == 20);
  CHECK(f.modes == ModeSelection::Extensive);
  CHECK(f.config_file == file);

  const RunConfig fig = parse_config({"figure", "fig3b", "--nonextensive"});
  CHECK(fig.preset == "fig3b");
  CHECK(fig.modes == ModeSelection::NonExtensive);
  CHECK(parse_config({"--help"}).help);
}

TEST_CASE("config errors carry the offending token") {
  expect_config_error<void>({"sweep", "--bogus", "1"}, ConfigErrorKind::UnknownFlag, "--bogus");
  expect_config_error<void>({"sweep", "--t-high", "warm"}, ConfigErrorKind::MalformedValue, "t-high=warm");
  expect_config_error<void>({"sweep", "--n-to", "1.5"}, ConfigErrorKind::MalformedValue, "n-to=1.5");
  expect_config_error<void>({"sweep", "--mode", "all"}, ConfigErrorKind::MalformedValue, "mode=all");
  expect_config_error<void>({"sweep", "--formats", "png"}, ConfigErrorKind::MalformedValue, "formats=png");
  expect_config_error<void>({"sweep", "--extensive", "--nonextensive"}, ConfigErrorKind::ConflictingModes,
                            "--nonextensive");
  expect_config_error<void>({"sweep", "--mode", "both", "--extensive"}, ConfigErrorKind::ConflictingModes,
                            "--mode=both");
  expect_config_error<void>({"launch"}, ConfigErrorKind::UnknownFlag, "launch");
  expect_config_error<void>({"figure", "fig9"}, ConfigErrorKind::UnknownFlag, "fig9");
  expect_config_error<void>({"sweep", "extra"}, ConfigErrorKind::UnknownFlag, "extra");

  RunConfig c;
  CHECK_THROWS_AS(apply_config_text(c, "colour = red\n"), ConfigError);
  CHECK_THROWS_AS(apply_config_text(c, "just words\n"), ConfigError);
  CHECK_THROWS_AS(parse_config({"cycle", "--twice-s", "0"}), InvalidSector);
  CHECK_THROWS_AS(parse_config({"sweep", "--n-from", "5", "--n-to", "4"}), InvalidSector);
  CHECK_THROWS_AS(parse_config({"sweep", "--t-low", "0.5"}), InvalidTemperature);
  CHECK_THROWS_AS(parse_config({"sweep", "--config", "/nonexistent/lmg.cfg"}), IoError);
}

TEST_CASE("artifacts are written in the selected formats") {
  const auto dir = scratch("out");
  RunConfig cfg = parse_config({"sweep", "--n-to", "14", "--formats", "csv,svg", "--output-dir", dir.string()});
  const auto paths = write_artifacts(cfg, run_command(cfg));
  CHECK(std::filesystem::exists(dir / "sweep.csv"));
  CHECK(std::filesystem::exists(dir / "sweep.svg"));
  CHECK_FALSE(std::filesystem::exists(dir / "sweep.json"));
  CHECK(std::filesystem::exists(dir / "sweep_returns.csv"));
  CHECK(paths.size() == 3);
  CHECK_THROWS_AS(write_file("/proc/lmg_no_such_dir/x.csv", "x"), IoError);
}

TEST_CASE("fig3b has one series per scaling with parity markers") {
  RunConfig cfg = parse_config({"figure", "fig3b"});
  const auto artifacts = run_command(cfg);
  REQUIRE(artifacts.size() == 1);
  REQUIRE(artifacts[0].chart.has_value());
  const Chart& c = *artifacts[0].chart;
  REQUIRE(c.series.size() == 2);
  for (const Series& s : c.series) {
    REQUIRE(s.filled.size() == s.x.size());
    for (std::size_t i = 0; i < s.x.size(); ++i) CHECK(s.filled[i] == (static_cast<int>(s.x[i]) % 2 == 0));
  }
  CHECK(count(render_svg(c, artifacts[0].table.meta), "<polyline") == 2);
}

TEST_CASE("presets bind their quantities") {
  RunConfig cfg = parse_config({"figure", "fig2a"});
  const auto a = run_command(cfg);
  CHECK(a[0].table.columns == std::vector<std::string>{"N", "parity", "U_B_exact", "U_B_pert"});
  CHECK(a[0].chart->series.size() == 2);

  cfg = parse_config({"figure", "figS5", "--theta-cells", "256", "--phi-cells", "512"});
  const auto s5 = run_command(cfg);
  CHECK(s5[0].chart->series.size() == 4);
  cfg = parse_config({"figure", "figS4", "--theta-cells", "256", "--phi-cells", "512"});
  const auto s4 = run_command(cfg);
  CHECK(s4.size() == 2);
  CHECK(s4[0].chart->series.size() == 4);
}
