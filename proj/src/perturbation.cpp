#include "lmg/perturbation.hpp"

#include <cmath>
#include <string>

#include "lmg/errors.hpp"
#include "lmg/numeric.hpp"

namespace lmg {
namespace {

void require_table(const SpinSector& sector, const TransitionTable& p) {
  if (!(p.sector == sector) || p.values.rows() != sector.dim() || p.values.cols() != sector.dim())
    throw DimensionError("transition table belongs to a different sector");
}

// sum_m m^2 P(n, m) for every n
std::vector<double> y_second_moment(const SpinSector& sector, const TransitionTable& p) {
  const std::size_t d = sector.dim();
  std::vector<double> out(d);
  for (std::size_t n = 0; n < d; ++n) {
    CompensatedSum acc;
    for (std::size_t m = 0; m < d; ++m) {
      const double mm = sector.magnetic(m);
      acc.add(mm * mm * p.values(n, m));
    }
    out[n] = acc.value();
  }
  return out;
}

double x_second_moment(const SpinSector& sector, const std::vector<double>& weights) {
  CompensatedSum acc;
  for (std::size_t n = 0; n < weights.size(); ++n) {
    const double nn = sector.magnetic(n);
    acc.add(weights[n] * nn * nn);
  }
  return acc.value();
}

bool same_run_frame(const WorkRun& a, const WorkRun& b) {
  return a.twice_s == b.twice_s && a.params.mode == b.params.mode &&
         a.params.hot.gamma_x == b.params.hot.gamma_x &&
         a.params.cold.gamma_x == b.params.cold.gamma_x && a.params.t_high == b.params.t_high &&
         a.params.t_low == b.params.t_low;
}

}  // namespace

XBasisPopulations xbasis_populations(const SpinSector& sector, double gamma_x,
                                     double temperature, Endpoint endpoint) {
  if (!std::isfinite(temperature) || !(temperature > 0.0))
    throw InvalidTemperature("temperature must be > 0, got " + std::to_string(temperature));
  if (!std::isfinite(gamma_x) || !(gamma_x > 0.0))
    throw InvalidCoupling("gamma_x must be > 0, got " + std::to_string(gamma_x));
  XBasisPopulations out;
  out.endpoint = endpoint;
  out.temperature = temperature;
  out.gamma_x = gamma_x;
  // n = 0 (or +-1/2) is the minimum of n^2, so the exponents are already <= 0
  // after subtracting the smallest n^2.
  const double n_min_sq = sector.integer_spin() ? 0.0 : 0.25;
  out.probs.resize(sector.dim());
  for (std::size_t k = 0; k < sector.dim(); ++k) {
    const double n = sector.magnetic(k);
    out.probs[k] = std::exp(-(n * n - n_min_sq) * gamma_x / temperature);
  }
  const double z = compensated_sum(out.probs);
  for (double& v : out.probs) v /= z;
  return out;
}

double perturbative_internal_energy(const SpinSector& sector, const XBasisPopulations& pops,
                                    double gamma_x, double gamma_y, const TransitionTable& p) {
  require_table(sector, p);
  if (pops.probs.size() != sector.dim())
    throw DimensionError("populations do not match the sector dimension");
  const std::vector<double> ym = y_second_moment(sector, p);
  return gamma_x * x_second_moment(sector, pops.probs) + gamma_y * compensated_dot(pops.probs, ym);
}

DeltaPopulations delta_populations(const SpinSector& sector, const EngineParams& params) {
  params.validate();
  const CouplingPair hot = effective_couplings(sector, params.hot, params.mode);
  const CouplingPair cold = effective_couplings(sector, params.cold, params.mode);
  const XBasisPopulations b = xbasis_populations(sector, hot.gamma_x, params.t_high, Endpoint::B);
  const XBasisPopulations d = xbasis_populations(sector, cold.gamma_x, params.t_low, Endpoint::D);
  DeltaPopulations out{sector, std::vector<double>(sector.dim())};
  for (std::size_t k = 0; k < sector.dim(); ++k) out.values[k] = b.probs[k] - d.probs[k];
  return out;
}

PerturbativeWork perturbative_work(const SpinSector& sector, const EngineParams& params,
                                   const TransitionTable& p) {
  require_table(sector, p);
  const CouplingPair hot = effective_couplings(sector, params.hot, params.mode);
  const CouplingPair cold = effective_couplings(sector, params.cold, params.mode);
  const DeltaPopulations dp = delta_populations(sector, params);
  const std::vector<double> ym = y_second_moment(sector, p);

  PerturbativeWork w;
  w.w_x = (hot.gamma_x - cold.gamma_x) * x_second_moment(sector, dp.values);
  w.w_xy = (hot.gamma_y - cold.gamma_y) * compensated_dot(dp.values, ym);
  w.w_total = w.w_x + w.w_xy;
  w.beyond_trusted_range = sector.particles() > kPerturbativeWorkLimit;
  return w;
}

PerturbativeCycle perturbative_cycle(const SpinSector& sector, const EngineParams& params,
                                     const TransitionTable& p) {
  params.validate();
  const CouplingPair hot = effective_couplings(sector, params.hot, params.mode);
  const CouplingPair cold = effective_couplings(sector, params.cold, params.mode);
  const XBasisPopulations b = xbasis_populations(sector, hot.gamma_x, params.t_high, Endpoint::B);
  const XBasisPopulations d = xbasis_populations(sector, cold.gamma_x, params.t_low, Endpoint::D);
  PerturbativeCycle c;
  c.u_a = perturbative_internal_energy(sector, d, hot.gamma_x, hot.gamma_y, p);
  c.u_b = perturbative_internal_energy(sector, b, hot.gamma_x, hot.gamma_y, p);
  c.u_c = perturbative_internal_energy(sector, b, cold.gamma_x, cold.gamma_y, p);
  c.u_d = perturbative_internal_energy(sector, d, cold.gamma_x, cold.gamma_y, p);
  c.beyond_trusted_range = sector.particles() > kPerturbativeEnergyLimit;
  return c;
}

double isolate_interference_baseline(const WorkRun& full, const WorkRun& gamma_y_zero) {
  if (!same_run_frame(full, gamma_y_zero))
    throw ParameterMismatch("baseline runs differ in sector, mode, x couplings or temperatures");
  if (gamma_y_zero.params.hot.gamma_y != 0.0 || gamma_y_zero.params.cold.gamma_y != 0.0)
    throw ParameterMismatch("baseline reference run must have gamma_y = 0 at both endpoints");
  return full.work - gamma_y_zero.work;
}

double isolate_interference_sign_flip(const WorkRun& plus, const WorkRun& minus) {
  if (!same_run_frame(plus, minus))
    throw ParameterMismatch("sign-flip runs differ in sector, mode, x couplings or temperatures");
  const double d_plus = plus.params.hot.gamma_y - plus.params.cold.gamma_y;
  const double d_minus = minus.params.hot.gamma_y - minus.params.cold.gamma_y;
  if (!(d_plus > 0.0))
    throw ParameterMismatch("W+ run must have gamma_y^H - gamma_y^L > 0");
  if (std::abs(d_plus + d_minus) > 1e-12 * std::abs(d_plus))
    throw ParameterMismatch("W- run must have the opposite gamma_y difference of W+");
  return 0.5 * (plus.work - minus.work);
}

double restricted_band_work(const SpinSector& sector, const DeltaPopulations& dp,
                            double delta_gamma_y, const TransitionTable& p) {
  require_table(sector, p);
  if (!(dp.sector == sector)) throw DimensionError("population change belongs to another sector");
  const int twice_k = sector.integer_spin() ? 0 : 1;
  const int top = sector.twice_s();
  const double s = sector.spin();
  const double p_next = sector.has_label(twice_k + 2) ? p.at(twice_k + 2, top) : 0.0;
  return 4.0 * dp.at(twice_k) * delta_gamma_y * s * s * (p.at(twice_k, top) - p_next);
}

}  // namespace lmg
