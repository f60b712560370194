#include "lmg/io/pipelines.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <tuple>
#include <filesystem>
#include <numbers>

#include "lmg/errors.hpp"
#include "lmg/io/csv.hpp"
#include "lmg/io/json.hpp"
#include "lmg/perturbation.hpp"
#include "lmg/phase_space.hpp"

namespace lmg::io {

namespace {

const std::vector<std::string> kSweepColumns{"N",   "mode", "W",   "Q_in",     "Q_out",     "eta_signed", "U_A",
                                             "U_B", "U_C",  "U_D", "W_pert_x", "W_pert_xy", "U_B_pert",   "parity"};

Cell opt(const std::optional<double>& v) { return v ? Cell{*v} : Cell{std::monostate{}}; }

Meta with(Meta meta, std::initializer_list<std::pair<std::string, Cell>> extra) {
  for (const auto& e : extra) meta.push_back(e);
  return meta;
}

std::vector<bool> even_filled(const std::vector<double>& n) {
  std::vector<bool> f;
  for (double v : n) f.push_back(static_cast<long>(v) % 2 == 0);
  return f;
}

const char* mode_label(ScalingMode m) {
  return m == ScalingMode::NonExtensive ? "non-extensive" : "extensive";
}

SweepTable run_sweep(const RunConfig& cfg, int from, int to, std::vector<ScalingMode> modes) {
  return sweep_cycle(cfg.params, from, to, modes);
}

/// One chart series per mode of a sweep quantity, even N filled.
Series sweep_series(const SweepTable& sweep, ScalingMode mode, const std::string& label,
                    double (*value)(const SweepRow&), bool (*keep)(const SweepRow&) = nullptr) {
  Series s;
  s.label = label;
  s.marker = mode == ScalingMode::NonExtensive ? Marker::Circle : Marker::Square;
  for (const SweepRow& r : sweep.rows) {
    if (r.mode != mode || (keep && !keep(r))) continue;
    s.x.push_back(r.n);
    s.y.push_back(value(r));
  }
  s.filled = even_filled(s.x);
  return s;
}

Table sweep_quantity_table(const SweepTable& sweep, const Meta& meta, const std::string& name,
                           Cell (*value)(const SweepRow&)) {
  Table t;
  t.meta = meta;
  t.columns = {"N", "mode", "parity", name};
  for (const SweepRow& r : sweep.rows)
    t.add_row({std::int64_t{r.n}, std::string(to_string(r.mode)), std::int64_t{r.parity}, value(r)});
  return t;
}

std::vector<Artifact> fig2(const RunConfig& cfg, bool energy) {
  const SweepTable sweep = run_sweep(cfg, 1, 20, {ScalingMode::NonExtensive});
  const std::string stem = energy ? "fig2a" : "fig2b";
  Table t;
  t.meta = with(cfg.meta(), {{"artifact", stem}, {"preset_n_from", std::int64_t{1}}, {"preset_n_to", std::int64_t{20}},
                             {"preset_mode", std::string("nonextensive")}});
  t.columns = energy ? std::vector<std::string>{"N", "parity", "U_B_exact", "U_B_pert"}
                     : std::vector<std::string>{"N", "parity", "W_exact", "W_pert"};
  Series exact, pert;
  exact.label = "exact diagonalization";
  pert.label = "first-order perturbation";
  pert.marker = Marker::Square;
  for (const SweepRow& r : sweep.rows) {
    const double e = energy ? r.u_b : r.work;
    const double p = energy ? r.u_b_pert : r.w_pert_x + r.w_pert_xy;
    t.add_row({std::int64_t{r.n}, std::int64_t{r.parity}, e, p});
    exact.x.push_back(r.n);
    exact.y.push_back(e);
    pert.x.push_back(r.n);
    pert.y.push_back(p);
  }
  exact.filled = even_filled(exact.x);
  Chart c{{energy ? "Internal energy at B" : "Work output", "N", energy ? "U_B" : "W"}, {exact, pert}};
  return {{stem, std::move(t), std::move(c)}};
}

std::vector<Artifact> fig3(const RunConfig& cfg, char panel) {
  const std::vector<ScalingMode> modes{ScalingMode::NonExtensive, ScalingMode::Extensive};
  const SweepTable sweep = run_sweep(cfg, 1, 60, modes);
  const std::string stem = std::string("fig3") + panel;
  const Meta meta = with(cfg.meta(), {{"artifact", stem}, {"preset_n_from", std::int64_t{1}},
                                      {"preset_n_to", std::int64_t{60}}, {"preset_mode", std::string("both")}});
  Chart c;
  c.axes.x_label = "N";
  Table t;
  if (panel == 'a') {
    t = sweep_quantity_table(sweep, meta, "U_B_per_N", [](const SweepRow& r) { return Cell{r.u_b / r.n}; });
    c.axes = {"Internal energy per particle at B", "N", "U_B / N"};
    for (ScalingMode m : modes)
      c.series.push_back(sweep_series(sweep, m, mode_label(m), [](const SweepRow& r) { return r.u_b / r.n; }));
  } else if (panel == 'b') {
    t = sweep_quantity_table(sweep, meta, "W", [](const SweepRow& r) { return Cell{r.work}; });
    c.axes = {"Work output", "N", "W"};
    for (ScalingMode m : modes)
      c.series.push_back(sweep_series(sweep, m, mode_label(m), [](const SweepRow& r) { return r.work; }));
  } else {
    t = sweep_quantity_table(sweep, meta, "eta_signed", [](const SweepRow& r) { return opt(r.eta_signed); });
    c.axes = {"Efficiency", "N", "1 + Q_out / Q_in"};
    for (ScalingMode m : modes)
      c.series.push_back(sweep_series(
          sweep, m, mode_label(m), [](const SweepRow& r) { return *r.eta_signed; },
          [](const SweepRow& r) { return r.eta_signed.has_value(); }));
  }
  return {{stem, std::move(t), std::move(c)}};
}

std::vector<Artifact> fig_s3(const RunConfig& cfg) {
  const std::vector<int> ns{16, 17};
  const auto report = delta_population_report(cfg.params, ns);
  Table t;
  t.meta = with(cfg.meta(), {{"artifact", std::string("figS3")}, {"preset_twice_s", std::string("16,17")}});
  t.columns = {"twice_s", "twice_n", "n", "delta_p", "dominant"};
  Chart c{{"Population change between B and D", "n", "P_n(B) - P_n(D)"}, {}};
  for (const auto& row : report) {
    Series s;
    s.label = "S = " + std::to_string(row.n / 2) + (row.n % 2 ? ".5" : "");
    s.marker = row.n % 2 ? Marker::Triangle : Marker::Circle;
    for (std::size_t k = 0; k < row.delta.size(); ++k) {
      const int tn = row.twice_labels[k];
      const bool dom = std::find(row.dominant_twice_labels.begin(), row.dominant_twice_labels.end(), tn) !=
                       row.dominant_twice_labels.end();
      t.add_row({std::int64_t{row.n}, std::int64_t{tn}, tn / 2.0, row.delta[k], std::int64_t{dom}});
      s.x.push_back(tn / 2.0);
      s.y.push_back(row.delta[k]);
    }
    c.series.push_back(std::move(s));
  }
  return {{"figS3", std::move(t), std::move(c)}};
}

struct SectorGeometry {
  SpinSector sector;
  BandAreaTable areas;
  TransitionTable exact;
};

SectorGeometry sector_geometry(int twice_s, const QuadratureResolution& res) {
  const SpinSector s = make_sector(twice_s);
  return {s, compute_band_areas(s, res), transition_table_exact(s)};
}

std::vector<Artifact> fig_s4(const RunConfig& cfg) {
  Table t;
  t.meta = with(cfg.meta(), {{"artifact", std::string("figS4")}});
  t.columns = {"panel", "twice_s", "twice_n", "twice_m", "m", "p_exact", "p_semiclassical", "allowed"};
  Chart c{{"Exact and semiclassical transition probabilities", "m", "P(n, m)"}, {}};
  const std::vector<std::tuple<std::string, int, int>> panels{{"a", 42, 0}, {"b", 21, 1}};
  for (const auto& [panel, ts, tn] : panels) {
    const SectorGeometry g = sector_geometry(ts, cfg.resolution);
    const TransitionTable sc = transition_table_semiclassical(g.areas);
    Series ex, se;
    const std::string tag = ts == 42 ? "n = 0, S = 21" : "n = 1/2, S = 21/2";
    ex.label = "exact, " + tag;
    se.label = "semiclassical, " + tag;
    ex.marker = Marker::Circle;
    se.marker = Marker::Square;
    for (int tm : g.sector.twice_labels()) {
      const bool allowed = sc.is_allowed(tn, tm);
      t.add_row({panel, std::int64_t{ts}, std::int64_t{tn}, std::int64_t{tm}, tm / 2.0, g.exact.at(tn, tm),
                 sc.at(tn, tm), std::int64_t{allowed}});
      ex.x.push_back(tm / 2.0);
      ex.y.push_back(g.exact.at(tn, tm));
      if (allowed) {
        se.x.push_back(tm / 2.0);
        se.y.push_back(sc.at(tn, tm));
      }
    }
    c.series.push_back(std::move(ex));
    c.series.push_back(std::move(se));
  }

  Table d;
  d.meta = with(cfg.meta(), {{"artifact", std::string("figS4_diff")}, {"preset_twice_s_from", std::int64_t{3}},
                             {"preset_twice_s_to", std::int64_t{42}}});
  d.columns = {"twice_s", "twice_k", "diff_exact", "diff_semiclassical"};
  Chart dc{{"Edge transition probability differences P(k+1, S) - P(k, S)", "S", "difference"}, {}};
  Series ei{"exact, integer S", {}, {}, Marker::Circle, {}, true};
  Series si{"semiclassical, integer S", {}, {}, Marker::Square, {}, true};
  Series eh{"exact, half-integer S", {}, {}, Marker::Triangle, {}, true};
  Series sh{"semiclassical, half-integer S", {}, {}, Marker::Diamond, {}, true};
  for (int ts = 3; ts <= 42; ++ts) {
    const int tk = ts % 2;
    if (!classically_allowed(make_sector(ts), tk + 2, ts)) continue;
    const SectorGeometry g = sector_geometry(ts, cfg.resolution);
    const double exact = g.exact.at(tk + 2, ts) - g.exact.at(tk, ts);
    const double semi = semiclassical_probability(band_geometry(g.areas, tk + 2, ts)) -
                        semiclassical_probability(band_geometry(g.areas, tk, ts));
    d.add_row({std::int64_t{ts}, std::int64_t{tk}, exact, semi});
    Series& se = tk ? eh : ei;
    Series& ss = tk ? sh : si;
    se.x.push_back(ts / 2.0);
    se.y.push_back(exact);
    ss.x.push_back(ts / 2.0);
    ss.y.push_back(semi);
  }
  dc.series = {ei, si, eh, sh};
  return {{"figS4", std::move(t), std::move(c)}, {"figS4_diff", std::move(d), std::move(dc)}};
}

/// Phi(n, S; S), cos^2 Phi and P(n, S; S) for n in {0, 1/2, 1, 3/2}.
std::vector<Artifact> fig_s56(const RunConfig& cfg, bool angles) {
  const std::string stem = angles ? "figS5" : "figS6";
  Table t;
  t.meta = with(cfg.meta(), {{"artifact", stem}, {"preset_twice_s_from", std::int64_t{1}},
                             {"preset_twice_s_to", std::int64_t{42}}});
  t.columns = {"twice_s", "S", "twice_n", "lens_area", "phi", "phi_over_half_pi", "cos2_phi", "p_semiclassical", "p_exact"};
  const std::array<Marker, 4> markers{Marker::Diamond, Marker::Triangle, Marker::Diamond, Marker::Triangle};
  const std::array<const char*, 4> names{"n = 0", "n = 1/2", "n = 1", "n = 3/2"};
  std::array<Series, 4> main, cos2;
  for (int i = 0; i < 4; ++i) {
    main[i].label = cos2[i].label = names[i];
    main[i].marker = cos2[i].marker = markers[i];
  }
  for (int ts = 1; ts <= 42; ++ts) {
    const SpinSector sector = make_sector(ts);
    bool any = false;
    for (int tn = ts % 2; tn <= 3; tn += 2) any = any || classically_allowed(sector, tn, ts);
    if (!any) continue;
    const SectorGeometry g = sector_geometry(ts, cfg.resolution);
    for (int tn = ts % 2; tn <= 3; tn += 2) {
      if (!classically_allowed(sector, tn, ts)) continue;
      const BandGeometry bg = band_geometry(g.areas, tn, ts);
      const double c2 = std::cos(bg.phi) * std::cos(bg.phi);
      const double psc = semiclassical_probability(bg);
      const double scaled = bg.phi / (std::numbers::pi / 2.0);
      t.add_row({std::int64_t{ts}, ts / 2.0, std::int64_t{tn}, bg.lens_area, bg.phi, scaled, c2, psc,
                 g.exact.at(tn, ts)});
      main[tn].x.push_back(ts / 2.0);
      main[tn].y.push_back(angles ? scaled : psc);
      cos2[tn].x.push_back(ts / 2.0);
      cos2[tn].y.push_back(c2);
    }
  }
  for (int i = 0; i < 4; ++i) main[i].filled = cos2[i].filled = std::vector<bool>(main[i].x.size(), i >= 2);
  auto keep = [](const std::array<Series, 4>& a) {
    std::vector<Series> out;
    for (const Series& s : a)
      if (!s.x.empty()) out.push_back(s);
    return out;
  };
  if (angles) {
    Chart c{{"Interference angle", "S", "Phi(n, S; S) / (pi / 2)"}, keep(main)};
    return {{stem, std::move(t), std::move(c)}};
  }
  Chart c{{"Semiclassical transition probability", "S", "P(n, S; S)"}, keep(main)};
  Table t2 = t;
  for (auto& [k, v] : t2.meta)
    if (k == "artifact") v = std::string("figS6_cos2");
  Chart c2{{"Interference cosine squared", "S", "cos^2 Phi(n, S; S)"}, keep(cos2)};
  return {{stem, std::move(t), std::move(c)}, {"figS6_cos2", std::move(t2), std::move(c2)}};
}

std::vector<Artifact> cmd_sweep(const RunConfig& cfg, int from, int to, const std::string& stem) {
  const SweepTable sweep = run_sweep(cfg, from, to, cfg.selected_modes());
  Artifact main{stem, sweep_to_table(sweep, with(cfg.meta(), {{"artifact", stem}})), std::nullopt};
  if (from == to) return {main};

  Chart c{{"Work output", "N", "W"}, {}};
  for (ScalingMode m : cfg.selected_modes())
    c.series.push_back(sweep_series(sweep, m, mode_label(m), [](const SweepRow& r) { return r.work; }));
  main.chart = std::move(c);
  std::vector<Artifact> out{main};

  // Returns and efficiency summary per mode, where the data supports it.
  Table r;
  r.meta = with(cfg.meta(), {{"artifact", stem + "_returns"}});
  r.columns = {"mode", "N", "W", "marginal", "productivity", "is_n_max", "is_n_dim"};
  for (ScalingMode m : cfg.selected_modes()) {
    const auto even = sweep.series(m, &SweepRow::work, 0);
    if (even.size() < 6) continue;
    const ReturnsAnalysis ra = returns_analysis(even);
    for (std::size_t i = 0; i < even.size(); ++i) {
      const int n = even[i].first;
      r.add_row({std::string(to_string(m)), std::int64_t{n}, even[i].second,
                 i ? Cell{ra.marginal[i - 1].second} : Cell{std::monostate{}}, ra.productivity[i].second,
                 std::int64_t{ra.n_max == n}, std::int64_t{ra.n_dim == n}});
    }
    r.meta.emplace_back(std::string("n_max_") + to_string(m), ra.n_max ? Cell{std::int64_t{*ra.n_max}} : Cell{});
    r.meta.emplace_back(std::string("n_dim_") + to_string(m), ra.n_dim ? Cell{std::int64_t{*ra.n_dim}} : Cell{});
    try {
      const EfficiencyExtremum e = efficiency_extrema(sweep, m);
      r.meta.emplace_back(std::string("n_at_max_eta_") + to_string(m), std::int64_t{e.n});
      r.meta.emplace_back(std::string("max_eta_") + to_string(m), e.eta);
    } catch (const NoEngineOperation&) {
      r.meta.emplace_back(std::string("n_at_max_eta_") + to_string(m), Cell{});
      r.meta.emplace_back(std::string("max_eta_") + to_string(m), Cell{});
    }
  }
  out.push_back({stem + "_returns", std::move(r), std::nullopt});
  return out;
}

std::vector<Artifact> cmd_interference(const RunConfig& cfg) {
  Table t;
  t.meta = with(cfg.meta(), {{"artifact", std::string("interference")}});
  t.columns = {"N",      "mode",     "W",         "W_gamma_y_zero", "W_plus",      "W_minus",
               "baseline", "sign_flip", "W_xy_first_order", "W_xy_restricted_band"};
  Chart c{{"Interference work", "N", "W_xy"}, {}};
  for (ScalingMode m : cfg.selected_modes()) {
    EngineParams p = cfg.params;
    p.mode = m;
    Series base{std::string("baseline, ") + mode_label(m), {}, {}, Marker::Circle, {}, true};
    Series flip{std::string("-(sign flip), ") + mode_label(m), {}, {}, Marker::Square, {}, true};
    Series first{std::string("first order, ") + mode_label(m), {}, {}, Marker::Triangle, {}, true};
    for (int n = cfg.n_from; n <= cfg.n_to; ++n) {
      const InterferenceRow row = interference_row(p, n);
      t.add_row({std::int64_t{n}, std::string(to_string(m)), row.work, row.work_gamma_y_zero, opt(row.work_plus),
                 opt(row.work_minus), row.baseline, opt(row.sign_flip), row.first_order_xy, row.restricted_band});
      base.x.push_back(n);
      base.y.push_back(row.baseline);
      if (row.sign_flip) {
        flip.x.push_back(n);
        flip.y.push_back(-*row.sign_flip);
      }
      first.x.push_back(n);
      first.y.push_back(row.first_order_xy);
    }
    base.filled = even_filled(base.x);
    flip.filled = even_filled(flip.x);
    first.filled = even_filled(first.x);
    c.series.push_back(std::move(base));
    if (!flip.x.empty()) c.series.push_back(std::move(flip));
    c.series.push_back(std::move(first));
  }
  return {{"interference", std::move(t), std::move(c)}};
}

std::vector<Artifact> cmd_geometry(const RunConfig& cfg) {
  const SpinSector sector = make_sector(cfg.twice_s);
  const std::vector<int> labels = sector.twice_labels();
  const GeometryReport rep = semiclassical_vs_exact_report(sector, labels, cfg.resolution);
  Table t;
  t.meta = with(cfg.meta(), {{"artifact", std::string("geometry")}});
  t.columns = {"twice_n", "twice_m", "p_exact", "p_semiclassical", "lobe_area", "lens_area", "phi", "allowed"};
  for (const auto& r : rep.rows)
    t.add_row({std::int64_t{r.twice_n}, std::int64_t{r.twice_m}, r.p_exact, r.p_semiclassical, r.lobe_area,
               r.lens_area, r.phi, std::int64_t{r.allowed}});

  const int tn = sector.integer_spin() ? 0 : 1;
  Series ex{"exact", {}, {}, Marker::Circle, {}, true};
  Series se{"semiclassical", {}, {}, Marker::Square, {}, true};
  for (const auto& r : rep.rows) {
    if (r.twice_n != tn) continue;
    ex.x.push_back(r.twice_m / 2.0);
    ex.y.push_back(r.p_exact);
    if (r.allowed) {
      se.x.push_back(r.twice_m / 2.0);
      se.y.push_back(r.p_semiclassical);
    }
  }
  Chart c{{"Transition probabilities from the lowest x level", "m", "P(n, m)"}, {ex}};
  if (!se.x.empty()) c.series.push_back(se);

  Table d;
  d.meta = with(cfg.meta(), {{"artifact", std::string("geometry_edges")}});
  d.columns = {"twice_k", "exact", "semiclassical"};
  for (const auto& e : rep.differences) d.add_row({std::int64_t{e.twice_k}, e.exact, e.semiclassical});
  return {{"geometry", std::move(t), std::move(c)}, {"geometry_edges", std::move(d), std::nullopt}};
}

std::vector<Artifact> cmd_squeezed(const RunConfig& cfg) {
  const FockDistribution f = squeezed_vacuum_fock(cfg.squeeze, cfg.k_max);
  Table t;
  t.meta = with(cfg.meta(), {{"artifact", std::string("squeezed")}});
  t.columns = {"k", "p"};
  Series s{"squeezed vacuum", {}, {}, Marker::Circle, {}, false};
  for (std::size_t k = 0; k < f.probs.size(); ++k) {
    t.add_row({static_cast<std::int64_t>(k), f.probs[k]});
    s.x.push_back(static_cast<double>(k));
    s.y.push_back(f.probs[k]);
  }
  Chart c{{"Photon-number distribution of a squeezed vacuum", "k", "P(k)"}, {s}};
  return {{"squeezed", std::move(t), std::move(c)}};
}

}  // namespace

Table sweep_to_table(const SweepTable& sweep, const Meta& meta) {
  Table t;
  t.meta = meta;
  t.columns = kSweepColumns;
  for (const SweepRow& r : sweep.rows)
    t.add_row({std::int64_t{r.n}, std::string(to_string(r.mode)), r.work, r.q_in, r.q_out, opt(r.eta_signed), r.u_a,
               r.u_b, r.u_c, r.u_d, r.w_pert_x, r.w_pert_xy, r.u_b_pert, std::int64_t{r.parity}});
  return t;
}

SweepTable sweep_from_table(const Table& t) {
  SweepTable out;
  auto meta = [&](const char* key, double& field) {
    for (const auto& [k, v] : t.meta)
      if (k == key) field = as_double(v);
  };
  meta("gamma_x_high", out.params.hot.gamma_x);
  meta("gamma_y_high", out.params.hot.gamma_y);
  meta("gamma_x_low", out.params.cold.gamma_x);
  meta("gamma_y_low", out.params.cold.gamma_y);
  meta("t_high", out.params.t_high);
  meta("t_low", out.params.t_low);
  std::vector<std::size_t> col;
  for (const auto& name : kSweepColumns) col.push_back(t.column_index(name));
  for (const auto& row : t.rows) {
    SweepRow r;
    r.n = static_cast<int>(as_int(row[col[0]]));
    r.mode = as_string(row[col[1]]) == "extensive" ? ScalingMode::Extensive : ScalingMode::NonExtensive;
    r.work = as_double(row[col[2]]);
    r.q_in = as_double(row[col[3]]);
    r.q_out = as_double(row[col[4]]);
    r.eta_signed = as_optional_double(row[col[5]]);
    r.u_a = as_double(row[col[6]]);
    r.u_b = as_double(row[col[7]]);
    r.u_c = as_double(row[col[8]]);
    r.u_d = as_double(row[col[9]]);
    r.w_pert_x = as_double(row[col[10]]);
    r.w_pert_xy = as_double(row[col[11]]);
    r.u_b_pert = as_double(row[col[12]]);
    r.parity = static_cast<int>(as_int(row[col[13]]));
    out.rows.push_back(r);
  }
  return out;
}

std::vector<Artifact> run_preset(const std::string& preset, const RunConfig& cfg) {
  RunConfig c = cfg;
  c.command = "figure";
  c.preset = preset;
  try {
    if (preset == "fig2a") return fig2(c, true);
    if (preset == "fig2b") return fig2(c, false);
    if (preset == "fig3a") return fig3(c, 'a');
    if (preset == "fig3b") return fig3(c, 'b');
    if (preset == "fig3c") return fig3(c, 'c');
    if (preset == "figS3") return fig_s3(c);
    if (preset == "figS4") return fig_s4(c);
    if (preset == "figS5") return fig_s56(c, true);
    if (preset == "figS6") return fig_s56(c, false);
  } catch (const EigensolverFailure& e) {
    throw EigensolverFailure("preset " + preset + ": " + e.what());
  }
  throw ConfigError(ConfigErrorKind::UnknownFlag, preset, "unknown preset");
}

std::vector<Artifact> run_command(const RunConfig& cfg) {
  if (cfg.command == "cycle") return cmd_sweep(cfg, cfg.twice_s, cfg.twice_s, "cycle");
  if (cfg.command == "sweep") return cmd_sweep(cfg, cfg.n_from, cfg.n_to, "sweep");
  if (cfg.command == "interference") return cmd_interference(cfg);
  if (cfg.command == "geometry") return cmd_geometry(cfg);
  if (cfg.command == "squeezed") return cmd_squeezed(cfg);
  if (cfg.command == "figure") return run_preset(cfg.preset, cfg);
  throw ConfigError(ConfigErrorKind::UnknownFlag, cfg.command, "unknown command");
}

std::vector<std::string> write_artifacts(const RunConfig& cfg, const std::vector<Artifact>& artifacts) {
  std::vector<std::string> written;
  const std::filesystem::path dir(cfg.output_dir);
  for (const Artifact& a : artifacts) {
    const std::string base = (dir / a.stem).string();
    if (cfg.formats.csv) {
      emit_csv(a.table, base + ".csv");
      written.push_back(base + ".csv");
    }
    if (cfg.formats.json) {
      emit_json(a.table, base + ".json");
      written.push_back(base + ".json");
    }
    if (cfg.formats.svg && a.chart) {
      emit_svg_chart(*a.chart, a.table.meta, base + ".svg");
      written.push_back(base + ".svg");
    }
  }
  return written;
}

}  // namespace lmg::io
