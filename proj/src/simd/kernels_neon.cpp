#include <arm_neon.h>

#include "lmg/simd/kernels.hpp"

namespace lmg::simd::neon {

void bin_coordinates(double radius, const double* axis, std::size_t n, const Binning& binning,
                     std::int32_t* band, std::int32_t* cut) noexcept {
  const float64x2_t r = vdupq_n_f64(radius);
  const float64x2_t band_shift = vdupq_n_f64(binning.band_shift);
  const float64x2_t cut_shift = vdupq_n_f64(binning.cut_shift);
  const int32x2_t zero = vdup_n_s32(0);
  const int32x2_t one = vdup_n_s32(1);
  const int32x2_t max_band = vdup_n_s32(binning.max_band);
  const int32x2_t max_cut = vdup_n_s32(binning.max_cut);

  std::size_t j = 0;
  for (; j + 2 <= n; j += 2) {
    const float64x2_t c = vmulq_f64(r, vld1q_f64(axis + j));
    const int32x2_t b = vmovn_s64(vcvtq_s64_f64(vrndmq_f64(vaddq_f64(c, band_shift))));
    const int32x2_t t =
        vadd_s32(vmovn_s64(vcvtq_s64_f64(vrndmq_f64(vaddq_f64(c, cut_shift)))), one);
    vst1_s32(band + j, vmin_s32(vmax_s32(b, zero), max_band));
    vst1_s32(cut + j, vmin_s32(vmax_s32(t, zero), max_cut));
  }
  if (j < n) scalar::bin_coordinates(radius, axis + j, n - j, binning, band + j, cut + j);
}

double weighted_dot(const double* a, const double* w, const double* b, std::size_t n) noexcept {
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t p = vmulq_f64(vld1q_f64(a + i), vld1q_f64(w + i));
    acc = vaddq_f64(acc, vmulq_f64(p, vld1q_f64(b + i)));
  }
  double s = vaddvq_f64(acc);
  for (; i < n; ++i) s += a[i] * w[i] * b[i];
  return s;
}

}  // namespace lmg::simd::neon
