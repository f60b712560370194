#pragma once

#include <optional>
#include <span>
#include <vector>

#include "lmg/eigen.hpp"
#include "lmg/spin.hpp"

namespace lmg {

/// Otto-cycle parameters. Energies and temperatures are in units of the cold
/// x-coupling.
struct EngineParams {
  CouplingPair hot{1.01, 0.01};
  CouplingPair cold{1.0, 0.02};
  double t_high = 0.4;
  double t_low = 0.1;
  ScalingMode mode = ScalingMode::NonExtensive;

  static EngineParams reference_defaults() { return {}; }

  /// Throws InvalidCoupling / InvalidTemperature; requires T_H > T_L > 0.
  void validate() const;

  /// Literal check of gx^H > gy^H >> gx^L > gy^L > 0, with ">>" meaning a
  /// factor of at least ten. Informational only.
  bool in_nominal_regime() const noexcept;

  friend bool operator==(const EngineParams&, const EngineParams&) = default;
};

struct ThermalPopulations {
  std::vector<double> probs;
  double temperature = 0.0;
};

/// Canonical populations of ascending energy levels, shifted by the minimum
/// before exponentiation. Throws InvalidTemperature for T <= 0.
ThermalPopulations gibbs_populations(std::span<const double> energies, double temperature);
inline ThermalPopulations gibbs_populations(const Spectrum& s, double temperature) {
  return gibbs_populations(s.values, temperature);
}

/// sum_k probs[k] * energies[k]; throws DimensionError on length mismatch.
double internal_energy(std::span<const double> probs, std::span<const double> energies);

struct CycleResult {
  int particles = 0;
  double u_a = 0.0, u_b = 0.0, u_c = 0.0, u_d = 0.0;
  double q_in = 0.0;
  double q_out = 0.0;
  double work = 0.0;
  /// W / Q_in, present only when Q_in > 0.
  std::optional<double> eta;
  /// 1 + Q_out / Q_in, present whenever Q_in != 0 (may be negative).
  std::optional<double> eta_signed;
};

/// Four-stroke quantum Otto cycle evaluated by exact diagonalization.
///
/// B and D are thermal states of the hot and cold Hamiltonians. The adiabats
/// carry populations level by level in ascending-energy order, so
/// U_A = sum p^L E^H and U_C = sum p^H E^L.
CycleResult run_otto_cycle(const SpinSector& sector, const EngineParams& params);

/// Assembles heats, work and efficiencies from the four internal energies.
CycleResult assemble_cycle(int particles, double u_a, double u_b, double u_c, double u_d);

}  // namespace lmg
