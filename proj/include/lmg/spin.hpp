#pragma once

#include <cstddef>
#include <vector>

#include "lmg/matrix.hpp"

namespace lmg {

/// Maximum-spin Dicke sector of N = 2S spin-1/2 particles.
///
/// Spin and magnetic quantum numbers are stored doubled so half-integer
/// values stay exact. Basis index k runs over twice_n = -twice_S + 2k, that is
/// n = -S, -S+1, ..., S.
class SpinSector {
 public:
  int twice_s() const noexcept { return twice_s_; }
  std::size_t dim() const noexcept { return static_cast<std::size_t>(twice_s_) + 1; }
  /// Number of spins N = 2S.
  int particles() const noexcept { return twice_s_; }
  double spin() const noexcept { return 0.5 * twice_s_; }
  bool integer_spin() const noexcept { return twice_s_ % 2 == 0; }

  int twice_n(std::size_t k) const noexcept { return -twice_s_ + 2 * static_cast<int>(k); }
  double magnetic(std::size_t k) const noexcept { return 0.5 * twice_n(k); }
  /// Basis index of a doubled magnetic number; throws InvalidLabel.
  std::size_t index_of(int twice_n) const;
  bool has_label(int twice_n) const noexcept;

  std::vector<int> twice_labels() const;

  /// Bloch-sphere radius sqrt(S(S+1)).
  double bloch_radius() const noexcept;

  friend bool operator==(const SpinSector&, const SpinSector&) = default;

 private:
  friend SpinSector make_sector(int twice_s);
  explicit SpinSector(int twice_s) : twice_s_(twice_s) {}
  int twice_s_ = 1;
};

/// Throws InvalidSector for twice_s < 1.
SpinSector make_sector(int twice_s);

enum class ScalingMode { NonExtensive, Extensive };

const char* to_string(ScalingMode mode) noexcept;

struct CouplingPair {
  double gamma_x = 1.0;
  double gamma_y = 0.0;

  /// gamma_x > 0 and gamma_y >= 0, both finite; throws InvalidCoupling.
  void validate() const;
  friend bool operator==(const CouplingPair&, const CouplingPair&) = default;
};

/// Couplings after Kac rescaling (divided by N) for the extensive model.
CouplingPair effective_couplings(const SpinSector& sector, const CouplingPair& c,
                                 ScalingMode mode) noexcept;

enum class Axis { X, Y, Z };

/// Collective spin matrix in the S_z basis. For Axis::Y the purely imaginary
/// S_y is returned through its real proxy K = i S_y (antisymmetric), so that
/// S_y^2 = -K^2.
Matrix collective_spin_matrix(const SpinSector& sector, Axis axis);

/// H = g_x S_x^2 + g_y S_y^2 with g = gamma (non-extensive) or gamma / N.
SymmetricMatrix lmg_hamiltonian(const SpinSector& sector, const CouplingPair& couplings,
                                ScalingMode mode);

}  // namespace lmg
