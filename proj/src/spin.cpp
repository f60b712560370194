#include "lmg/spin.hpp"

#include <cmath>
#include <string>

#include "lmg/errors.hpp"

namespace lmg {

SpinSector make_sector(int twice_s) {
  if (twice_s < 1)
    throw InvalidSector("twice_S must be >= 1, got " + std::to_string(twice_s));
  return SpinSector(twice_s);
}

bool SpinSector::has_label(int twice_n) const noexcept {
  return twice_n >= -twice_s_ && twice_n <= twice_s_ && (twice_n + twice_s_) % 2 == 0;
}

std::size_t SpinSector::index_of(int twice_n) const {
  if (!has_label(twice_n))
    throw InvalidLabel("2n = " + std::to_string(twice_n) + " is not a label of 2S = " +
                       std::to_string(twice_s_));
  return static_cast<std::size_t>((twice_n + twice_s_) / 2);
}

std::vector<int> SpinSector::twice_labels() const {
  std::vector<int> out(dim());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = twice_n(k);
  return out;
}

double SpinSector::bloch_radius() const noexcept {
  // S(S+1) = twice_S (twice_S + 2) / 4
  return 0.5 * std::sqrt(static_cast<double>(twice_s_) * (twice_s_ + 2));
}

const char* to_string(ScalingMode mode) noexcept {
  return mode == ScalingMode::Extensive ? "extensive" : "nonextensive";
}

void CouplingPair::validate() const {
  if (!std::isfinite(gamma_x) || !(gamma_x > 0.0))
    throw InvalidCoupling("gamma_x must be > 0, got " + std::to_string(gamma_x));
  if (!std::isfinite(gamma_y) || gamma_y < 0.0)
    throw InvalidCoupling("gamma_y must be >= 0, got " + std::to_string(gamma_y));
}

CouplingPair effective_couplings(const SpinSector& sector, const CouplingPair& c,
                                 ScalingMode mode) noexcept {
  if (mode == ScalingMode::NonExtensive) return c;
  const double n = sector.particles();
  return {c.gamma_x / n, c.gamma_y / n};
}

namespace {

// <n+1| S_+ |n> with doubled labels: sqrt(S(S+1) - n(n+1)) = sqrt((2S - 2n)(2S + 2n + 2)) / 2
double raising_element(int twice_s, int twice_n) {
  return 0.5 * std::sqrt(static_cast<double>(twice_s - twice_n) * (twice_s + twice_n + 2));
}

}  // namespace

Matrix collective_spin_matrix(const SpinSector& sector, Axis axis) {
  const std::size_t d = sector.dim();
  Matrix m(d, d);
  if (axis == Axis::Z) {
    for (std::size_t k = 0; k < d; ++k) m(k, k) = sector.magnetic(k);
    return m;
  }
  // S_x = (S_+ + S_-)/2, K = i S_y = (S_+ - S_-)/2
  for (std::size_t k = 0; k + 1 < d; ++k) {
    const double half = 0.5 * raising_element(sector.twice_s(), sector.twice_n(k));
    m(k + 1, k) = half;
    m(k, k + 1) = axis == Axis::X ? half : -half;
  }
  return m;
}

SymmetricMatrix lmg_hamiltonian(const SpinSector& sector, const CouplingPair& couplings,
                                ScalingMode mode) {
  couplings.validate();
  // Kac rescaling is applied to the assembled entries so that the extensive
  // matrix is exactly the non-extensive one divided by N.
  const double scale = mode == ScalingMode::Extensive ? sector.particles() : 1.0;
  const Matrix sx = collective_spin_matrix(sector, Axis::X);
  const Matrix k = collective_spin_matrix(sector, Axis::Y);
  const Matrix sx2 = multiply(sx, sx);
  const Matrix k2 = multiply(k, k);
  Matrix h(sector.dim(), sector.dim());
  for (std::size_t i = 0; i < h.rows(); ++i)
    for (std::size_t j = 0; j < h.cols(); ++j) h(i, j) = (couplings.gamma_x * sx2(i, j) - couplings.gamma_y * k2(i, j)) / scale;
  return SymmetricMatrix(std::move(h));
}

}  // namespace lmg
