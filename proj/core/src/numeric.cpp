#include "ringflow/numeric.hpp"

#include <cmath>
#include <cstdio>

#include "ringflow/error.hpp"

namespace ringflow {

double sin_pi(double x) {
  // remainder() is exact, so r carries no rounding from the reduction.
  double r = std::remainder(x, 2.0);  // r in [-1, 1]
  if (r == 0.0 || std::fabs(r) == 1.0) return 0.0;
  if (r > 0.5) {
    r = 1.0 - r;
  } else if (r < -0.5) {
    r = -1.0 - r;
  }
  return std::sin(kPi * r);
}

double sinc_pi(double y) {
  const double z = kPi * y;
  if (std::fabs(z) < kSincTaylorCutoff) {
    if (z == 0.0) return 1.0;
    const double z2 = z * z;
    return 1.0 - z2 / 6.0 + z2 * z2 / 120.0;
  }
  return sin_pi(y) / z;
}

double sinc(double z) {
  if (std::fabs(z) < kSincTaylorCutoff) {
    if (z == 0.0) return 1.0;
    const double z2 = z * z;
    return 1.0 - z2 / 6.0 + z2 * z2 / 120.0;
  }
  return std::sin(z) / z;
}

std::string format_real(double value) {
  if (value == 0.0) return "0";  // drop the sign of negative zero
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

double trapezoid(std::span<const double> x, std::span<const double> y) {
  require(x.size() == y.size(), "trapezoid: sample arrays differ in length");
  require(x.size() >= 2, "trapezoid: need at least two samples");
  KahanSum sum;
  for (std::size_t i = 1; i < x.size(); ++i) {
    sum += 0.5 * (x[i] - x[i - 1]) * (y[i] + y[i - 1]);
  }
  return sum.value();
}

}  // namespace ringflow
