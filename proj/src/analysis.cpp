#include "lmg/analysis.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "lmg/errors.hpp"
#include "lmg/perturbation.hpp"
#include "lmg/phase_space.hpp"

namespace lmg {

std::vector<std::pair<int, double>> SweepTable::series(ScalingMode mode, double SweepRow::*field,
                                                       std::optional<int> parity) const {
  std::vector<std::pair<int, double>> out;
  for (const SweepRow& r : rows)
    if (r.mode == mode && (!parity || r.parity == *parity)) out.emplace_back(r.n, r.*field);
  return out;
}

SweepTable sweep_cycle(const EngineParams& params, int n_from, int n_to,
                       std::span<const ScalingMode> modes) {
  if (n_from < 1 || n_to < n_from || n_to > kMaxSweepParticles)
    throw InvalidSector("sweep range must satisfy 1 <= N_from <= N_to <= " +
                        std::to_string(kMaxSweepParticles) + ", got [" + std::to_string(n_from) +
                        ", " + std::to_string(n_to) + "]");
  params.validate();
  SweepTable table;
  table.params = params;
  for (ScalingMode mode : modes) {
    EngineParams p = params;
    p.mode = mode;
    for (int n = n_from; n <= n_to; ++n) {
      try {
        const SpinSector sector = make_sector(n);
        const CycleResult c = run_otto_cycle(sector, p);
        const TransitionTable tt = transition_table_exact(sector);
        const PerturbativeWork pw = perturbative_work(sector, p, tt);
        const PerturbativeCycle pc = perturbative_cycle(sector, p, tt);
        SweepRow row;
        row.n = n;
        row.mode = mode;
        row.work = c.work;
        row.q_in = c.q_in;
        row.q_out = c.q_out;
        row.eta_signed = c.eta_signed;
        row.u_a = c.u_a;
        row.u_b = c.u_b;
        row.u_c = c.u_c;
        row.u_d = c.u_d;
        row.w_pert_x = pw.w_x;
        row.w_pert_xy = pw.w_xy;
        row.u_b_pert = pc.u_b;
        row.parity = n % 2;
        table.rows.push_back(row);
      } catch (const EigensolverFailure& e) {
        throw EigensolverFailure("N = " + std::to_string(n) + " (" + to_string(mode) +
                                 "): " + e.what());
      }
    }
  }
  return table;
}

ReturnsAnalysis returns_analysis(std::span<const std::pair<int, double>> even_series) {
  if (even_series.size() < 6)
    throw InsufficientData("returns analysis needs at least 6 even-N points, got " +
                           std::to_string(even_series.size()));
  for (std::size_t i = 0; i < even_series.size(); ++i) {
    if (even_series[i].first % 2 != 0)
      throw InsufficientData("returns analysis expects even N only");
    if (i > 0 && even_series[i].first != even_series[i - 1].first + 2)
      throw InsufficientData("returns analysis expects consecutive even N");
  }

  ReturnsAnalysis out;
  auto best = std::max_element(even_series.begin(), even_series.end(),
                               [](const auto& a, const auto& b) { return a.second < b.second; });
  out.n_max = best->first;

  for (std::size_t i = 0; i < even_series.size(); ++i) {
    const auto [n, w] = even_series[i];
    out.productivity.emplace_back(n, w / n);
    if (i > 0) out.marginal.emplace_back(n, w - even_series[i - 1].second);
  }

  auto second_difference = [&](std::size_t i) {
    return even_series[i + 1].second - 2.0 * even_series[i].second + even_series[i - 1].second;
  };
  for (std::size_t i = 1; i + 2 < even_series.size(); ++i) {
    if (second_difference(i) < 0.0 && second_difference(i + 1) < 0.0) {
      out.n_dim = even_series[i].first;
      break;
    }
  }
  return out;
}

ReturnsAnalysis returns_analysis(const SweepTable& table, ScalingMode mode) {
  const auto even = table.series(mode, &SweepRow::work, 0);
  return returns_analysis(even);
}

EfficiencyExtremum efficiency_extrema(const SweepTable& table, ScalingMode mode) {
  std::optional<EfficiencyExtremum> best;
  for (const SweepRow& r : table.rows) {
    if (r.mode != mode || !(r.work > 0.0) || !(r.q_in > 0.0) || !r.eta_signed) continue;
    if (!best || *r.eta_signed > best->eta) best = EfficiencyExtremum{r.n, *r.eta_signed};
  }
  if (!best) throw NoEngineOperation(std::string("no row runs as an engine in ") + to_string(mode) + " mode");
  return *best;
}

std::vector<DeltaPopulationRow> delta_population_report(const EngineParams& params,
                                                        std::span<const int> n_list) {
  std::vector<DeltaPopulationRow> out;
  for (int n : n_list) {
    const SpinSector sector = make_sector(n);
    const DeltaPopulations dp = delta_populations(sector, params);
    DeltaPopulationRow row;
    row.n = n;
    row.twice_labels = sector.twice_labels();
    row.delta = dp.values;
    const std::array<int, 4> candidates =
        sector.integer_spin() ? std::array<int, 4>{-2, 0, 2, 0} : std::array<int, 4>{-3, -1, 1, 3};
    const std::size_t count = sector.integer_spin() ? 3 : 4;
    for (std::size_t i = 0; i < count; ++i)
      if (sector.has_label(candidates[i])) row.dominant_twice_labels.push_back(candidates[i]);
    double total = 0.0, dominant = 0.0;
    for (std::size_t k = 0; k < dp.values.size(); ++k) total += std::abs(dp.values[k]);
    for (int tn : row.dominant_twice_labels) dominant += std::abs(dp.at(tn));
    row.dominant_fraction = total > 0.0 ? dominant / total : 1.0;
    out.push_back(std::move(row));
  }
  return out;
}

double parity_oscillation_score(std::span<const std::pair<int, double>> series) {
  if (series.size() < 6)
    throw InsufficientData("parity score needs at least 6 consecutive N, got " +
                           std::to_string(series.size()));
  for (std::size_t i = 1; i < series.size(); ++i)
    if (series[i].first != series[i - 1].first + 1)
      throw InsufficientData("parity score needs consecutive N");
  double sum = 0.0;
  int count = 0;
  for (std::size_t i = 1; i + 1 < series.size(); ++i) {
    if (series[i].first % 2 != 0) continue;
    const double dev = series[i].second - 0.5 * (series[i - 1].second + series[i + 1].second);
    sum += (dev > 0.0) - (dev < 0.0);
    ++count;
  }
  return count ? sum / count : 0.0;
}

InterferenceRow interference_row(const EngineParams& params, int n) {
  const SpinSector sector = make_sector(n);
  const TransitionTable tt = transition_table_exact(sector);
  auto run = [&](const EngineParams& p) { return WorkRun{n, p, run_otto_cycle(sector, p).work}; };

  InterferenceRow row;
  row.n = n;
  row.mode = params.mode;
  const WorkRun full = run(params);
  EngineParams zero = params;
  zero.hot.gamma_y = 0.0;
  zero.cold.gamma_y = 0.0;
  const WorkRun reference = run(zero);
  row.work = full.work;
  row.work_gamma_y_zero = reference.work;
  row.baseline = isolate_interference_baseline(full, reference);

  const double lo = std::min(params.hot.gamma_y, params.cold.gamma_y);
  const double hi = std::max(params.hot.gamma_y, params.cold.gamma_y);
  if (hi > lo) {
    EngineParams plus = params, minus = params;
    plus.hot.gamma_y = hi;
    plus.cold.gamma_y = lo;
    minus.hot.gamma_y = lo;
    minus.cold.gamma_y = hi;
    const WorkRun wp = run(plus), wm = run(minus);
    row.work_plus = wp.work;
    row.work_minus = wm.work;
    row.sign_flip = isolate_interference_sign_flip(wp, wm);
  }
  row.first_order_xy = perturbative_work(sector, params, tt).w_xy;
  const double scale = params.mode == ScalingMode::Extensive ? static_cast<double>(n) : 1.0;
  row.restricted_band = restricted_band_work(sector, delta_populations(sector, params),
                                             (params.hot.gamma_y - params.cold.gamma_y) / scale, tt);
  return row;
}

QuadraticFit quadratic_fit(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw DimensionError("quadratic_fit: length mismatch");
  if (x.size() < 3) throw InsufficientData("quadratic_fit needs at least 3 points");
  const std::size_t n = x.size();
  double mean_x = 0.0, mean_y = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mean_x += x[i];
    mean_y += y[i];
  }
  mean_x /= n;
  mean_y /= n;
  double spread = 0.0;
  for (double v : x) spread = std::max(spread, std::abs(v - mean_x));
  if (spread == 0.0) throw InsufficientData("quadratic_fit needs distinct abscissae");

  // Normal equations in the scaled variable u = (x - mean) / spread.
  std::array<std::array<double, 4>, 3> a{};
  for (std::size_t i = 0; i < n; ++i) {
    const double u = (x[i] - mean_x) / spread;
    const std::array<double, 3> basis{1.0, u, u * u};
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) a[r][c] += basis[r] * basis[c];
      a[r][3] += basis[r] * y[i];
    }
  }
  for (int col = 0; col < 3; ++col) {
    int pivot = col;
    for (int r = col + 1; r < 3; ++r)
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
    std::swap(a[col], a[pivot]);
    if (a[col][col] == 0.0) throw InsufficientData("quadratic_fit: singular system");
    for (int r = 0; r < 3; ++r) {
      if (r == col) continue;
      const double f = a[r][col] / a[col][col];
      for (int c = col; c < 4; ++c) a[r][c] -= f * a[col][c];
    }
  }
  const double b0 = a[0][3] / a[0][0], b1 = a[1][3] / a[1][1], b2 = a[2][3] / a[2][2];

  // Back to the original variable.
  QuadraticFit fit;
  fit.c2 = b2 / (spread * spread);
  fit.c1 = b1 / spread - 2.0 * b2 * mean_x / (spread * spread);
  fit.c0 = b0 - b1 * mean_x / spread + b2 * mean_x * mean_x / (spread * spread);

  double ss_res = 0.0, ss_tot = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double u = (x[i] - mean_x) / spread;
    const double pred = b0 + b1 * u + b2 * u * u;
    ss_res += (y[i] - pred) * (y[i] - pred);
    ss_tot += (y[i] - mean_y) * (y[i] - mean_y);
  }
  fit.r_squared = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;
  return fit;
}

}  // namespace lmg
