#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lmg/matrix.hpp"
#include "lmg/spin.hpp"

namespace lmg {

enum class TransitionKind { Exact, Semiclassical };

/// P(n, m) between x-quantized |n> and y-quantized |m>, indexed by basis
/// index (n = -S + row, m = -S + col).
struct TransitionTable {
  TransitionKind kind = TransitionKind::Exact;
  SpinSector sector;
  Matrix values;
  /// Row-major flags; zero marks a classically forbidden semiclassical entry.
  std::vector<std::uint8_t> allowed;

  double at(int twice_n, int twice_m) const {
    return values(sector.index_of(twice_n), sector.index_of(twice_m));
  }
  bool is_allowed(int twice_n, int twice_m) const {
    return allowed[sector.index_of(twice_n) * sector.dim() + sector.index_of(twice_m)] != 0;
  }
};

/// Exact |<n_x|m_y>|^2. The x eigenbasis comes from the tridiagonal S_x; the
/// y eigenbasis is its image under a quarter turn about z, which in the S_z
/// basis is the diagonal phase exp(-i pi n_z / 2).
TransitionTable transition_table_exact(const SpinSector& sector);

struct QuadratureResolution {
  int theta = 2048;
  int phi = 4096;

  /// theta even and >= 2, phi >= 4; throws std::invalid_argument.
  void validate() const;
};

/// Areas on the Bloch sphere of radius sqrt(S(S+1)) for every label pair.
///
/// lobe(n, m): area of {|S_x - n| <= 1/2} & {|S_y - m| <= 1/2} & {S_z > 0},
///   with the outermost bands extended to the sphere.
/// lens(n, m): area of {S_x >= n} & {S_y >= m}.
struct BandAreaTable {
  SpinSector sector;
  double radius = 0.0;
  Matrix lobe;
  Matrix lens;
  QuadratureResolution resolution;
};

/// Midpoint quadrature on a latitude-longitude grid aligned with z. Cells
/// carry their exact spherical area and each grid point is binned once, so
/// every area is a sum over cells of an indicator function.
BandAreaTable compute_band_areas(const SpinSector& sector, const QuadratureResolution& res = {});

/// True when the circles S_x = n and S_y = m meet: n^2 + m^2 <= S(S+1).
bool classically_allowed(const SpinSector& sector, int twice_n, int twice_m) noexcept;

struct BandGeometry {
  int twice_s = 0;
  int twice_n = 0;
  int twice_m = 0;
  double radius = 0.0;
  double lobe_area = 0.0;
  double lens_area = 0.0;
  /// lens / (2 R) - pi / 4
  double phi = 0.0;
  bool classically_allowed = false;
};

/// Throws ClassicallyForbidden when the two circles do not meet.
BandGeometry band_geometry(const BandAreaTable& areas, int twice_n, int twice_m);
BandGeometry band_geometry(const SpinSector& sector, int twice_n, int twice_m,
                           const QuadratureResolution& res = {});

/// 4 (a / 2 pi R) cos^2(phi) on allowed entries; forbidden entries are zero
/// and flagged.
double semiclassical_probability(const BandGeometry& g) noexcept;
TransitionTable transition_table_semiclassical(const BandAreaTable& areas);
TransitionTable transition_table_semiclassical(const SpinSector& sector,
                                               const QuadratureResolution& res = {});

struct GeometryReportRow {
  int twice_n = 0;
  int twice_m = 0;
  double p_exact = 0.0;
  double p_semiclassical = 0.0;
  double lobe_area = 0.0;
  double lens_area = 0.0;
  double phi = 0.0;
  bool allowed = false;
};

/// P(k, S) - P(k+1, S) in both evaluations.
struct EdgeDifference {
  int twice_k = 0;
  double exact = 0.0;
  double semiclassical = 0.0;
};

struct GeometryReport {
  int twice_s = 0;
  std::vector<GeometryReportRow> rows;
  std::vector<EdgeDifference> differences;
};

/// Rows for each requested x label against every y label, plus the m = S
/// edge differences for each requested k that has a k + 1 neighbour.
GeometryReport semiclassical_vs_exact_report(const SpinSector& sector,
                                             std::span<const int> twice_n_list,
                                             const QuadratureResolution& res = {});

struct FockDistribution {
  double squeeze = 0.0;
  std::vector<double> probs;
};

/// Photon-number distribution of the squeezed vacuum, k = 0..k_max.
/// Throws InvalidSqueezing for r < 0 and DimensionError for k_max < 0.
FockDistribution squeezed_vacuum_fock(double r, int k_max);

}  // namespace lmg
