#pragma once

#include <vector>

#include "lmg/phase_space.hpp"
#include "lmg/spin.hpp"
#include "lmg/thermo.hpp"

namespace lmg {

enum class Endpoint { B, D };

/// Canonical populations of the unperturbed levels gamma_x n^2 over the
/// x-quantized labels n = -S..S.
struct XBasisPopulations {
  std::vector<double> probs;
  Endpoint endpoint = Endpoint::B;
  double temperature = 0.0;
  double gamma_x = 0.0;
};

XBasisPopulations xbasis_populations(const SpinSector& sector, double gamma_x,
                                     double temperature, Endpoint endpoint);

/// First-order internal energy
///   U = sum_n p_n gamma_x n^2 + sum_{n,m} p_n gamma_y m^2 P(n, m).
double perturbative_internal_energy(const SpinSector& sector, const XBasisPopulations& pops,
                                    double gamma_x, double gamma_y, const TransitionTable& p);

/// Spins beyond which first-order work is not trusted.
inline constexpr int kPerturbativeWorkLimit = 10;
/// Spins beyond which first-order internal energies are not trusted.
inline constexpr int kPerturbativeEnergyLimit = 40;

struct PerturbativeWork {
  double w_x = 0.0;
  double w_xy = 0.0;
  double w_total = 0.0;
  bool beyond_trusted_range = false;
};

/// W_x = sum_n dP_n (gx^H - gx^L) n^2 and
/// W_xy = sum_{n,m} dP_n (gy^H - gy^L) m^2 P(n, m), with dP = P^B - P^D and
/// couplings Kac-rescaled first in extensive mode.
PerturbativeWork perturbative_work(const SpinSector& sector, const EngineParams& params,
                                   const TransitionTable& p);

/// First-order internal energies at the four corners. B and D use their
/// thermal x-basis populations; A and C carry those populations over to the
/// other endpoint's couplings.
struct PerturbativeCycle {
  double u_a = 0.0, u_b = 0.0, u_c = 0.0, u_d = 0.0;
  bool beyond_trusted_range = false;
};

PerturbativeCycle perturbative_cycle(const SpinSector& sector, const EngineParams& params,
                                     const TransitionTable& p);

/// dP_n = P^B_n - P^D_n over n = -S..S.
struct DeltaPopulations {
  SpinSector sector;
  std::vector<double> values;

  double at(int twice_n) const { return values[sector.index_of(twice_n)]; }
};

DeltaPopulations delta_populations(const SpinSector& sector, const EngineParams& params);

/// A work value together with the run that produced it, for the
/// interference isolation protocols.
struct WorkRun {
  int twice_s = 0;
  EngineParams params;
  double work = 0.0;
};

/// W - W|_{gamma_y = 0}. The second run must have both y couplings at zero
/// and share sector, mode, x couplings and temperatures with the first;
/// otherwise ParameterMismatch.
double isolate_interference_baseline(const WorkRun& full, const WorkRun& gamma_y_zero);

/// (W+ - W-) / 2 where the two runs have opposite y-coupling differences of
/// equal size and otherwise identical parameters; otherwise ParameterMismatch.
double isolate_interference_sign_flip(const WorkRun& plus, const WorkRun& minus);

/// Two-band approximation 4 dP_k dgamma_y S^2 [P(k, S) - P(k+1, S)] with
/// k = 0 (integer S) or 1/2 (half-integer S).
double restricted_band_work(const SpinSector& sector, const DeltaPopulations& dp,
                            double delta_gamma_y, const TransitionTable& p);

}  // namespace lmg
