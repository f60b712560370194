// Compiled with -mavx2; only reached after a run-time CPU check.
#include <immintrin.h>

#include "lmg/simd/kernels.hpp"

namespace lmg::simd::avx2 {

void bin_coordinates(double radius, const double* axis, std::size_t n, const Binning& binning,
                     std::int32_t* band, std::int32_t* cut) noexcept {
  const __m256d r = _mm256_set1_pd(radius);
  const __m256d band_shift = _mm256_set1_pd(binning.band_shift);
  const __m256d cut_shift = _mm256_set1_pd(binning.cut_shift);
  const __m128i zero = _mm_setzero_si128();
  const __m128i one = _mm_set1_epi32(1);
  const __m128i max_band = _mm_set1_epi32(binning.max_band);
  const __m128i max_cut = _mm_set1_epi32(binning.max_cut);

  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    const __m256d c = _mm256_mul_pd(r, _mm256_loadu_pd(axis + j));
    // floor() makes the conversion exact regardless of rounding mode
    const __m128i b = _mm256_cvtpd_epi32(_mm256_floor_pd(_mm256_add_pd(c, band_shift)));
    __m128i t = _mm256_cvtpd_epi32(_mm256_floor_pd(_mm256_add_pd(c, cut_shift)));
    t = _mm_add_epi32(t, one);
    _mm_storeu_si128(reinterpret_cast<__m128i*>(band + j),
                     _mm_min_epi32(_mm_max_epi32(b, zero), max_band));
    _mm_storeu_si128(reinterpret_cast<__m128i*>(cut + j),
                     _mm_min_epi32(_mm_max_epi32(t, zero), max_cut));
  }
  if (j < n) scalar::bin_coordinates(radius, axis + j, n - j, binning, band + j, cut + j);
}

double weighted_dot(const double* a, const double* w, const double* b, std::size_t n) noexcept {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256d p0 = _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(w + i));
    const __m256d p1 = _mm256_mul_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(w + i + 4));
    acc0 = _mm256_add_pd(acc0, _mm256_mul_pd(p0, _mm256_loadu_pd(b + i)));
    acc1 = _mm256_add_pd(acc1, _mm256_mul_pd(p1, _mm256_loadu_pd(b + i + 4)));
  }
  for (; i + 4 <= n; i += 4) {
    const __m256d p = _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(w + i));
    acc0 = _mm256_add_pd(acc0, _mm256_mul_pd(p, _mm256_loadu_pd(b + i)));
  }
  const __m256d acc = _mm256_add_pd(acc0, acc1);
  const __m128d lo = _mm256_castpd256_pd128(acc);
  const __m128d hi = _mm256_extractf128_pd(acc, 1);
  const __m128d pair = _mm_add_pd(lo, hi);
  double s = _mm_cvtsd_f64(_mm_add_sd(pair, _mm_unpackhi_pd(pair, pair)));
  for (; i < n; ++i) s += a[i] * w[i] * b[i];
  return s;
}

}  // namespace lmg::simd::avx2
