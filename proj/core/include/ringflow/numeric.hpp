#pragma once

#include <cstddef>
#include <numbers>
#include <span>
#include <string>

namespace ringflow {

inline constexpr double kPi = std::numbers::pi;

/// Arguments below this magnitude use the Taylor form of sinc.
inline constexpr double kSincTaylorCutoff = 1e-4;

/// sin(pi x) with exact argument reduction; returns exactly 0 at integers.
double sin_pi(double x);

/// sinc(pi y) = sin(pi y) / (pi y), with sinc(0) = 1.
double sinc_pi(double y);

/// sinc(z) = sin(z) / z, with sinc(0) = 1.
double sinc(double z);

/// Compensated (Kahan) accumulator.
class KahanSum {
 public:
  void add(double value) {
    const double y = value - compensation_;
    const double t = sum_ + y;
    compensation_ = (t - sum_) - y;
    sum_ = t;
  }
  KahanSum& operator+=(double value) {
    add(value);
    return *this;
  }
  [[nodiscard]] double value() const { return sum_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

/// Fixed 17-significant-digit text form, round-trip exact for doubles.
/// Both zeros print as "0".
std::string format_real(double value);

/// Composite trapezoid rule over (possibly non-uniform) samples.
double trapezoid(std::span<const double> x, std::span<const double> y);

}  // namespace ringflow
