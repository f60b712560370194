#include <algorithm>
#include <cmath>

#include "lmg/simd/kernels.hpp"

namespace lmg::simd::scalar {

void bin_coordinates(double radius, const double* axis, std::size_t n, const Binning& binning,
                     std::int32_t* band, std::int32_t* cut) noexcept {
  for (std::size_t j = 0; j < n; ++j) {
    const double c = radius * axis[j];
    const auto b = static_cast<std::int32_t>(std::floor(c + binning.band_shift));
    const auto t = static_cast<std::int32_t>(std::floor(c + binning.cut_shift)) + 1;
    band[j] = std::clamp<std::int32_t>(b, 0, binning.max_band);
    cut[j] = std::clamp<std::int32_t>(t, 0, binning.max_cut);
  }
}

double weighted_dot(const double* a, const double* w, const double* b, std::size_t n) noexcept {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += a[i] * w[i] * b[i];
  return s;
}

}  // namespace lmg::simd::scalar
