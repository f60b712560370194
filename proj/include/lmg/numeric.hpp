#pragma once

#include <span>

namespace lmg {

// Neumaier compensated accumulator.
class CompensatedSum {
 public:
  void add(double v) noexcept;
  double value() const noexcept { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

double compensated_sum(std::span<const double> values) noexcept;

/// Compensated sum of a[i] * b[i].
double compensated_dot(std::span<const double> a, std::span<const double> b) noexcept;

}  // namespace lmg
