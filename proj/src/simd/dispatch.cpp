#include <atomic>
#include <stdexcept>
#include <string>

#include "lmg/errors.hpp"
#include "lmg/simd/kernels.hpp"

namespace lmg::simd {
namespace {

bool cpu_has_avx2() noexcept {
#if defined(LMG_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

std::atomic<Isa>& active() {
  static std::atomic<Isa> isa{best_isa()};
  return isa;
}

}  // namespace

const char* to_string(Isa isa) noexcept {
  switch (isa) {
    case Isa::Avx2: return "avx2";
    case Isa::Neon: return "neon";
    case Isa::Scalar: break;
  }
  return "scalar";
}

bool isa_supported(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar: return true;
    case Isa::Avx2: return cpu_has_avx2();
    case Isa::Neon:
#if defined(LMG_HAVE_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Isa best_isa() noexcept {
  if (isa_supported(Isa::Avx2)) return Isa::Avx2;
  if (isa_supported(Isa::Neon)) return Isa::Neon;
  return Isa::Scalar;
}

Isa active_isa() noexcept { return active().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
  if (!isa_supported(isa))
    throw std::invalid_argument(std::string("SIMD variant not available: ") + to_string(isa));
  active().store(isa, std::memory_order_relaxed);
}

void bin_coordinates(double radius, std::span<const double> axis, const Binning& binning,
                     std::span<std::int32_t> band, std::span<std::int32_t> cut) {
  if (band.size() != axis.size() || cut.size() != axis.size())
    throw DimensionError("bin_coordinates: output spans must match the axis table");
  switch (active_isa()) {
#if defined(LMG_HAVE_AVX2)
    case Isa::Avx2:
      return avx2::bin_coordinates(radius, axis.data(), axis.size(), binning, band.data(),
                                   cut.data());
#endif
#if defined(LMG_HAVE_NEON)
    case Isa::Neon:
      return neon::bin_coordinates(radius, axis.data(), axis.size(), binning, band.data(),
                                   cut.data());
#endif
    default:
      return scalar::bin_coordinates(radius, axis.data(), axis.size(), binning, band.data(),
                                     cut.data());
  }
}

double weighted_dot(std::span<const double> a, std::span<const double> w,
                    std::span<const double> b) {
  if (w.size() != a.size() || b.size() != a.size())
    throw DimensionError("weighted_dot: length mismatch");
  switch (active_isa()) {
#if defined(LMG_HAVE_AVX2)
    case Isa::Avx2: return avx2::weighted_dot(a.data(), w.data(), b.data(), a.size());
#endif
#if defined(LMG_HAVE_NEON)
    case Isa::Neon: return neon::weighted_dot(a.data(), w.data(), b.data(), a.size());
#endif
    default: return scalar::weighted_dot(a.data(), w.data(), b.data(), a.size());
  }
}

}  // namespace lmg::simd
