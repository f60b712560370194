#pragma once

#include <cstdint>
#include <span>

// Data-parallel inner loops. Every kernel has a scalar reference version and
// optional SIMD versions (AVX2 on x86-64, NEON on AArch64) selected at run time.
// The binning kernel is bit-identical across variants; weighted_dot may differ
// in the last bits because the SIMD variants reassociate the sum.

namespace lmg::simd {

enum class Isa { Scalar, Avx2, Neon };

const char* to_string(Isa isa) noexcept;

/// True when the variant is compiled in and the CPU supports it.
bool isa_supported(Isa isa) noexcept;

/// Widest supported variant.
Isa best_isa() noexcept;

Isa active_isa() noexcept;

/// Throws std::invalid_argument for an unsupported variant.
void set_active_isa(Isa isa);

/// Restores the previously active variant on destruction.
class ScopedIsa {
 public:
  explicit ScopedIsa(Isa isa) : previous_(active_isa()) { set_active_isa(isa); }
  ~ScopedIsa() { set_active_isa(previous_); }
  ScopedIsa(const ScopedIsa&) = delete;
  ScopedIsa& operator=(const ScopedIsa&) = delete;

 private:
  Isa previous_;
};

/// Band and threshold binning of one grid row.
///
/// For coordinate c = radius * axis[j]:
///   band[j] = clamp(floor(c + band_shift), 0, max_band)
///   cut[j]  = clamp(floor(c + cut_shift) + 1, 0, max_cut)
struct Binning {
  double band_shift = 0.0;
  double cut_shift = 0.0;
  std::int32_t max_band = 0;
  std::int32_t max_cut = 0;
};

void bin_coordinates(double radius, std::span<const double> axis, const Binning& binning,
                     std::span<std::int32_t> band, std::span<std::int32_t> cut);

/// sum_i a[i] * w[i] * b[i]
double weighted_dot(std::span<const double> a, std::span<const double> w,
                    std::span<const double> b);

namespace scalar {
void bin_coordinates(double radius, const double* axis, std::size_t n, const Binning& binning,
                     std::int32_t* band, std::int32_t* cut) noexcept;
double weighted_dot(const double* a, const double* w, const double* b, std::size_t n) noexcept;
}  // namespace scalar

namespace avx2 {
void bin_coordinates(double radius, const double* axis, std::size_t n, const Binning& binning,
                     std::int32_t* band, std::int32_t* cut) noexcept;
double weighted_dot(const double* a, const double* w, const double* b, std::size_t n) noexcept;
}  // namespace avx2

namespace neon {
void bin_coordinates(double radius, const double* axis, std::size_t n, const Binning& binning,
                     std::int32_t* band, std::int32_t* cut) noexcept;
double weighted_dot(const double* a, const double* w, const double* b, std::size_t n) noexcept;
}  // namespace neon

}  // namespace lmg::simd
