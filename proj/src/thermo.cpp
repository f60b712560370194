#include "lmg/thermo.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lmg/errors.hpp"
#include "lmg/numeric.hpp"

namespace lmg {

void EngineParams::validate() const {
  hot.validate();
  cold.validate();
  if (!std::isfinite(t_low) || !(t_low > 0.0))
    throw InvalidTemperature("T_L must be > 0, got " + std::to_string(t_low));
  if (!std::isfinite(t_high) || !(t_high > t_low))
    throw InvalidTemperature("T_H must exceed T_L, got T_H = " + std::to_string(t_high) +
                             ", T_L = " + std::to_string(t_low));
}

bool EngineParams::in_nominal_regime() const noexcept {
  constexpr double much = 10.0;
  return hot.gamma_x > hot.gamma_y && hot.gamma_y >= much * cold.gamma_x &&
         cold.gamma_x > cold.gamma_y && cold.gamma_y > 0.0;
}

ThermalPopulations gibbs_populations(std::span<const double> energies, double temperature) {
  if (!std::isfinite(temperature) || !(temperature > 0.0))
    throw InvalidTemperature("temperature must be > 0, got " + std::to_string(temperature));
  ThermalPopulations out;
  out.temperature = temperature;
  if (energies.empty()) return out;
  const double e_min = *std::min_element(energies.begin(), energies.end());
  out.probs.resize(energies.size());
  for (std::size_t k = 0; k < energies.size(); ++k)
    out.probs[k] = std::exp(-(energies[k] - e_min) / temperature);
  const double z = compensated_sum(out.probs);
  for (double& p : out.probs) p /= z;
  return out;
}

double internal_energy(std::span<const double> probs, std::span<const double> energies) {
  if (probs.size() != energies.size())
    throw DimensionError("internal_energy: " + std::to_string(probs.size()) +
                         " populations for " + std::to_string(energies.size()) + " levels");
  return compensated_dot(probs, energies);
}

CycleResult assemble_cycle(int particles, double u_a, double u_b, double u_c, double u_d) {
  CycleResult r;
  r.particles = particles;
  r.u_a = u_a;
  r.u_b = u_b;
  r.u_c = u_c;
  r.u_d = u_d;
  r.q_in = u_b - u_a;
  r.q_out = u_d - u_c;
  r.work = r.q_in + r.q_out;
  if (r.q_in != 0.0) r.eta_signed = 1.0 + r.q_out / r.q_in;
  if (r.q_in > 0.0) r.eta = r.work / r.q_in;
  return r;
}

CycleResult run_otto_cycle(const SpinSector& sector, const EngineParams& params) {
  params.validate();
  const Spectrum hot = eigendecompose(lmg_hamiltonian(sector, params.hot, params.mode));
  const Spectrum cold = eigendecompose(lmg_hamiltonian(sector, params.cold, params.mode));
  const ThermalPopulations p_hot = gibbs_populations(hot, params.t_high);
  const ThermalPopulations p_cold = gibbs_populations(cold, params.t_low);
  return assemble_cycle(sector.particles(),
                        internal_energy(p_cold.probs, hot.values),
                        internal_energy(p_hot.probs, hot.values),
                        internal_energy(p_hot.probs, cold.values),
                        internal_energy(p_cold.probs, cold.values));
}

}  // namespace lmg
