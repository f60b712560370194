#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "lmg/spin.hpp"
#include "lmg/thermo.hpp"

namespace lmg {

struct SweepRow {
  int n = 0;
  ScalingMode mode = ScalingMode::NonExtensive;
  double work = 0.0;
  double q_in = 0.0;
  double q_out = 0.0;
  std::optional<double> eta_signed;
  double u_a = 0.0, u_b = 0.0, u_c = 0.0, u_d = 0.0;
  double w_pert_x = 0.0;
  double w_pert_xy = 0.0;
  double u_b_pert = 0.0;
  int parity = 0;

  friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

/// One row per (N, mode); modes in request order, N ascending within a mode.
struct SweepTable {
  EngineParams params;
  std::vector<SweepRow> rows;

  /// (N, W) pairs of one mode, optionally restricted to one parity.
  std::vector<std::pair<int, double>> series(ScalingMode mode, double SweepRow::*field,
                                             std::optional<int> parity = std::nullopt) const;
};

inline constexpr int kMaxSweepParticles = 500;

/// Exact cycle and first-order work for every N in [n_from, n_to] and every
/// requested mode (params.mode is ignored). Solver failures are rethrown
/// with the offending N in the message.
SweepTable sweep_cycle(const EngineParams& params, int n_from, int n_to,
                       std::span<const ScalingMode> modes);

struct ReturnsAnalysis {
  std::optional<int> n_max;
  std::optional<int> n_dim;
  /// W(N) - W(N-2) over even N
  std::vector<std::pair<int, double>> marginal;
  /// W(N) / N over even N
  std::vector<std::pair<int, double>> productivity;
};

/// Point of maximum return (argmax of W over even N) and point of
/// diminishing return: the smallest even N where the second difference
/// W(N+2) - 2W(N) + W(N-2) is negative at N and at N+2.
/// Needs at least six consecutive even-N points; throws InsufficientData.
ReturnsAnalysis returns_analysis(std::span<const std::pair<int, double>> even_series);
ReturnsAnalysis returns_analysis(const SweepTable& table, ScalingMode mode);

struct EfficiencyExtremum {
  int n = 0;
  double eta = 0.0;
};

/// Maximum of eta_signed over rows that run as an engine (W > 0, Q_in > 0).
/// Throws NoEngineOperation when there is none.
EfficiencyExtremum efficiency_extrema(const SweepTable& table, ScalingMode mode);

struct DeltaPopulationRow {
  int n = 0;
  std::vector<int> twice_labels;
  std::vector<double> delta;
  /// n in {0, +-1} for integer S, {+-1/2, +-3/2} for half-integer S
  std::vector<int> dominant_twice_labels;
  /// sum of |dP| over the dominant labels divided by the sum over all labels
  double dominant_fraction = 0.0;
};

std::vector<DeltaPopulationRow> delta_population_report(const EngineParams& params,
                                                        std::span<const int> n_list);

/// Mean over interior even N of sign(v(N) - (v(N-1) + v(N+1)) / 2).
/// Needs at least six consecutive N; throws InsufficientData.
double parity_oscillation_score(std::span<const std::pair<int, double>> series);

struct InterferenceRow {
  int n = 0;
  ScalingMode mode = ScalingMode::NonExtensive;
  double work = 0.0;
  double work_gamma_y_zero = 0.0;
  /// legs with the y couplings arranged so that gamma_y^H - gamma_y^L is
  /// +|d| and -|d|; unset when d = 0
  std::optional<double> work_plus, work_minus;
  double baseline = 0.0;              // W - W|gamma_y=0
  std::optional<double> sign_flip;    // (W+ - W-) / 2
  double first_order_xy = 0.0;        // perturbative W_xy at the given params
  double restricted_band = 0.0;       // two-band estimate
};

/// Both isolation protocols for one N in params.mode.
InterferenceRow interference_row(const EngineParams& params, int n);

struct QuadraticFit {
  double c0 = 0.0, c1 = 0.0, c2 = 0.0;
  double r_squared = 0.0;
};

/// Least-squares y = c0 + c1 x + c2 x^2; needs three or more points.
QuadraticFit quadratic_fit(std::span<const double> x, std::span<const double> y);

}  // namespace lmg
