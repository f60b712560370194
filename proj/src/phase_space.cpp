#include "lmg/phase_space.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "lmg/eigen.hpp"
#include "lmg/errors.hpp"
#include "lmg/numeric.hpp"
#include "lmg/simd/kernels.hpp"

namespace lmg {

TransitionTable transition_table_exact(const SpinSector& sector) {
  const std::size_t d = sector.dim();
  const Matrix sx = collective_spin_matrix(sector, Axis::X);
  std::vector<double> diag(d, 0.0);
  std::vector<double> off(d - 1);
  for (std::size_t k = 0; k + 1 < d; ++k) off[k] = sx(k + 1, k);
  // S_x has the simple spectrum -S..S, so ascending column j is |n = -S + j>.
  const Matrix x_states = tridiagonal_eigen(diag, off).vectors.transposed();

  // exp(-i pi n_z / 2) with n_z = twice_n / 2 is a multiple of pi / 4.
  constexpr double h = std::numbers::sqrt2 / 2.0;
  constexpr double cos8[8] = {1.0, h, 0.0, -h, -1.0, -h, 0.0, h};
  constexpr double sin8[8] = {0.0, h, 1.0, h, 0.0, -h, -1.0, -h};
  std::vector<double> re_w(d), im_w(d);
  for (std::size_t k = 0; k < d; ++k) {
    const int q = ((sector.twice_n(k) % 8) + 8) % 8;
    re_w[k] = cos8[q];
    im_w[k] = -sin8[q];
  }

  TransitionTable t{TransitionKind::Exact, sector, Matrix(d, d),
                    std::vector<std::uint8_t>(d * d, 1)};
  for (std::size_t n = 0; n < d; ++n) {
    for (std::size_t m = 0; m < d; ++m) {
      const double re = simd::weighted_dot(x_states.row(n), re_w, x_states.row(m));
      const double im = simd::weighted_dot(x_states.row(n), im_w, x_states.row(m));
      t.values(n, m) = re * re + im * im;
    }
  }
  return t;
}

void QuadratureResolution::validate() const {
  if (theta < 2 || theta % 2 != 0)
    throw std::invalid_argument("quadrature theta resolution must be even and >= 2");
  if (phi < 4) throw std::invalid_argument("quadrature phi resolution must be >= 4");
}

BandAreaTable compute_band_areas(const SpinSector& sector, const QuadratureResolution& res) {
  res.validate();
  const std::size_t d = sector.dim();
  const std::size_t cuts = d + 1;
  const double radius = sector.bloch_radius();
  const double spin = sector.spin();

  const auto n_phi = static_cast<std::size_t>(res.phi);
  const double d_phi = 2.0 * std::numbers::pi / res.phi;
  const double d_theta = std::numbers::pi / res.theta;
  std::vector<double> cos_phi(n_phi), sin_phi(n_phi);
  for (std::size_t j = 0; j < n_phi; ++j) {
    const double p = (static_cast<double>(j) + 0.5) * d_phi;
    cos_phi[j] = std::cos(p);
    sin_phi[j] = std::sin(p);
  }

  const simd::Binning binning{spin + 0.5, spin, static_cast<std::int32_t>(d - 1),
                              static_cast<std::int32_t>(d)};
  std::vector<std::int32_t> x_band(n_phi), x_cut(n_phi), y_band(n_phi), y_cut(n_phi);

  std::vector<std::uint32_t> lobe_count(d * d, 0), cut_count(cuts * cuts, 0);
  std::vector<std::size_t> lobe_touched, cut_touched;
  std::vector<CompensatedSum> lobe_acc(d * d), cut_acc(cuts * cuts);

  const int upper_rows = res.theta / 2;
  for (int i = 0; i < res.theta; ++i) {
    const double theta_lo = i * d_theta;
    const double theta_hi = (i + 1) * d_theta;
    const double theta_mid = (i + 0.5) * d_theta;
    const double cell = radius * radius * (std::cos(theta_lo) - std::cos(theta_hi)) * d_phi;
    const double rho = radius * std::sin(theta_mid);

    simd::bin_coordinates(rho, cos_phi, binning, x_band, x_cut);
    simd::bin_coordinates(rho, sin_phi, binning, y_band, y_cut);

    const bool upper = i < upper_rows;
    for (std::size_t j = 0; j < n_phi; ++j) {
      if (upper) {
        const std::size_t a = static_cast<std::size_t>(x_band[j]) * d + y_band[j];
        if (lobe_count[a]++ == 0) lobe_touched.push_back(a);
      }
      const std::size_t c = static_cast<std::size_t>(x_cut[j]) * cuts + y_cut[j];
      if (cut_count[c]++ == 0) cut_touched.push_back(c);
    }
    for (std::size_t a : lobe_touched) {
      lobe_acc[a].add(lobe_count[a] * cell);
      lobe_count[a] = 0;
    }
    for (std::size_t c : cut_touched) {
      cut_acc[c].add(cut_count[c] * cell);
      cut_count[c] = 0;
    }
    lobe_touched.clear();
    cut_touched.clear();
  }

  BandAreaTable out{sector, radius, Matrix(d, d), Matrix(d, d), res};
  for (std::size_t n = 0; n < d; ++n)
    for (std::size_t m = 0; m < d; ++m) out.lobe(n, m) = lobe_acc[n * d + m].value();

  // lens(n_k, m_l) = sum over cut bins cx > k, cy > l (suffix sums)
  Matrix suffix(cuts + 1, cuts + 1);
  for (std::size_t cx = cuts; cx-- > 0;)
    for (std::size_t cy = cuts; cy-- > 0;)
      suffix(cx, cy) = cut_acc[cx * cuts + cy].value() + suffix(cx + 1, cy) +
                       suffix(cx, cy + 1) - suffix(cx + 1, cy + 1);
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t l = 0; l < d; ++l) out.lens(k, l) = std::max(0.0, suffix(k + 1, l + 1));
  return out;
}

bool classically_allowed(const SpinSector& sector, int twice_n, int twice_m) noexcept {
  const long long s = sector.twice_s();
  return static_cast<long long>(twice_n) * twice_n + static_cast<long long>(twice_m) * twice_m <=
         s * (s + 2);
}

BandGeometry band_geometry(const BandAreaTable& areas, int twice_n, int twice_m) {
  const std::size_t n = areas.sector.index_of(twice_n);
  const std::size_t m = areas.sector.index_of(twice_m);
  if (!classically_allowed(areas.sector, twice_n, twice_m))
    throw ClassicallyForbidden("circles S_x = " + std::to_string(twice_n) + "/2 and S_y = " +
                               std::to_string(twice_m) + "/2 do not meet for 2S = " +
                               std::to_string(areas.sector.twice_s()));
  BandGeometry g;
  g.twice_s = areas.sector.twice_s();
  g.twice_n = twice_n;
  g.twice_m = twice_m;
  g.radius = areas.radius;
  g.lobe_area = areas.lobe(n, m);
  g.lens_area = areas.lens(n, m);
  g.phi = g.lens_area / (2.0 * g.radius) - std::numbers::pi / 4.0;
  g.classically_allowed = true;
  return g;
}

BandGeometry band_geometry(const SpinSector& sector, int twice_n, int twice_m,
                           const QuadratureResolution& res) {
  sector.index_of(twice_n);
  sector.index_of(twice_m);
  if (!classically_allowed(sector, twice_n, twice_m))
    throw ClassicallyForbidden("circles S_x = " + std::to_string(twice_n) + "/2 and S_y = " +
                               std::to_string(twice_m) + "/2 do not meet for 2S = " +
                               std::to_string(sector.twice_s()));
  return band_geometry(compute_band_areas(sector, res), twice_n, twice_m);
}

double semiclassical_probability(const BandGeometry& g) noexcept {
  if (!g.classically_allowed) return 0.0;
  const double c = std::cos(g.phi);
  return 4.0 * (g.lobe_area / (2.0 * std::numbers::pi * g.radius)) * c * c;
}

TransitionTable transition_table_semiclassical(const BandAreaTable& areas) {
  const SpinSector& sector = areas.sector;
  const std::size_t d = sector.dim();
  TransitionTable t{TransitionKind::Semiclassical, sector, Matrix(d, d),
                    std::vector<std::uint8_t>(d * d, 0)};
  for (std::size_t n = 0; n < d; ++n) {
    for (std::size_t m = 0; m < d; ++m) {
      if (!classically_allowed(sector, sector.twice_n(n), sector.twice_n(m))) continue;
      t.allowed[n * d + m] = 1;
      t.values(n, m) =
          semiclassical_probability(band_geometry(areas, sector.twice_n(n), sector.twice_n(m)));
    }
  }
  return t;
}

TransitionTable transition_table_semiclassical(const SpinSector& sector,
                                               const QuadratureResolution& res) {
  return transition_table_semiclassical(compute_band_areas(sector, res));
}

GeometryReport semiclassical_vs_exact_report(const SpinSector& sector,
                                             std::span<const int> twice_n_list,
                                             const QuadratureResolution& res) {
  for (int tn : twice_n_list) sector.index_of(tn);
  const BandAreaTable areas = compute_band_areas(sector, res);
  const TransitionTable exact = transition_table_exact(sector);
  const TransitionTable semi = transition_table_semiclassical(areas);

  GeometryReport report;
  report.twice_s = sector.twice_s();
  for (int tn : twice_n_list) {
    for (int tm : sector.twice_labels()) {
      GeometryReportRow row;
      row.twice_n = tn;
      row.twice_m = tm;
      row.p_exact = exact.at(tn, tm);
      row.p_semiclassical = semi.at(tn, tm);
      row.allowed = semi.is_allowed(tn, tm);
      const std::size_t n = sector.index_of(tn), m = sector.index_of(tm);
      row.lobe_area = areas.lobe(n, m);
      row.lens_area = areas.lens(n, m);
      row.phi = row.lens_area / (2.0 * areas.radius) - std::numbers::pi / 4.0;
      report.rows.push_back(row);
    }
  }
  const int top = sector.twice_s();
  for (int tk : twice_n_list) {
    if (!sector.has_label(tk + 2)) continue;
    report.differences.push_back({tk, exact.at(tk, top) - exact.at(tk + 2, top),
                                  semi.at(tk, top) - semi.at(tk + 2, top)});
  }
  return report;
}

FockDistribution squeezed_vacuum_fock(double r, int k_max) {
  if (!std::isfinite(r) || r < 0.0)
    throw InvalidSqueezing("squeezing parameter must be >= 0, got " + std::to_string(r));
  if (k_max < 0) throw DimensionError("k_max must be >= 0");
  FockDistribution f;
  f.squeeze = r;
  f.probs.assign(static_cast<std::size_t>(k_max) + 1, 0.0);
  const double t2 = std::tanh(r) * std::tanh(r);
  // P(2j+2) / P(2j) = tanh^2(r) (2j+1) / (2j+2)
  double p = 1.0 / std::cosh(r);
  for (int k = 0; k <= k_max; k += 2) {
    f.probs[static_cast<std::size_t>(k)] = p;
    p *= t2 * (k + 1.0) / (k + 2.0);
  }
  return f;
}

}  // namespace lmg
