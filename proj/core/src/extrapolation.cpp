#include "ringflow/extrapolation.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <string>

#include "ringflow/parallel.hpp"

namespace ringflow {

ExtrapolationFit fit_quadratic(std::span<const TruncationPoint> points) {
  require(points.size() >= 4, "fit_quadratic: need at least 4 points, got " +
                                  std::to_string(points.size()));
  std::vector<TruncationPoint> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) { return a.n < b.n; });
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    require(sorted[i].n > 0, "fit_quadratic: N must be positive");
    require(std::isfinite(sorted[i].lambda), "fit_quadratic: non-finite lambda");
    require(i == 0 || sorted[i].n != sorted[i - 1].n,
            "fit_quadratic: duplicate N = " + std::to_string(sorted[i].n) +
                " makes the design rank-deficient");
  }

  const std::size_t count = sorted.size();
  std::vector<double> x(count), y(count);
  for (std::size_t i = 0; i < count; ++i) {
    x[i] = 1.0 / static_cast<double>(sorted[i].n);
    y[i] = sorted[i].lambda;
  }

  // Fit in t = (x - center) / half_width, t in [-1, 1].
  const auto [lo, hi] = std::minmax_element(x.begin(), x.end());
  const double center = 0.5 * (*hi + *lo);
  const double half_width = 0.5 * (*hi - *lo);
  std::vector<double> design(count * 3);
  std::vector<double> rhs = y;
  for (std::size_t i = 0; i < count; ++i) {
    const double t = (x[i] - center) / half_width;
    design[i * 3 + 0] = 1.0;
    design[i * 3 + 1] = t;
    design[i * 3 + 2] = t * t;
  }
  const lapack_int info =
      LAPACKE_dgels(LAPACK_ROW_MAJOR, 'N', static_cast<lapack_int>(count), 3, 1, design.data(), 3,
                    rhs.data(), 1);
  if (info > 0) throw ValidationError("fit_quadratic: rank-deficient design matrix");
  if (info < 0) throw ComputationError("dgels rejected argument " + std::to_string(-info));

  const double b0 = rhs[0], b1 = rhs[1], b2 = rhs[2];
  const double h2 = half_width * half_width;
  ExtrapolationFit fit;
  fit.a2 = b2 / h2;
  fit.a1 = b1 / half_width - 2.0 * b2 * center / h2;
  fit.a0 = b0 - b1 * center / half_width + b2 * center * center / h2;

  KahanSum residual;
  for (std::size_t i = 0; i < count; ++i) {
    const double e = y[i] - (fit.a0 + fit.a1 * x[i] + fit.a2 * x[i] * x[i]);
    residual += e * e;
  }
  fit.residual = residual.value();
  for (const auto& p : sorted) {
    fit.n_values.push_back(p.n);
    fit.lambda_values.push_back(p.lambda);
  }
  const double last = y[count - 1];
  const double step = std::fabs(last - y[count - 2]);
  fit.within_sanity_band = std::fabs(fit.a0 - last) <= 10.0 * step;
  return fit;
}

std::vector<std::size_t> default_sweep_schedule() { return {400, 600, 800, 1200, 1600}; }

std::vector<std::size_t> reference_schedule() {
  return {800, 1000, 1200, 1400, 1600, 1800, 2000, 2200, 2400, 3000, 4000, 5000, 6000, 8000, 10000};
}

ExtrapolationResult extrapolated_infimum(const RingParameters& params,
                                         std::span<const std::size_t> schedule,
                                         EigenMethod method, unsigned jobs) {
  require(schedule.size() >= 4, "extrapolation schedule needs at least 4 entries");
  auto solves = parallel_map(schedule.size(), jobs, [&](std::size_t i) {
    const std::size_t n = schedule[i];
    try {
      return min_eigen(build_kernel(RingConfig::with_dimension(params, n)), method);
    } catch (const SolverError& e) {
      throw SolverError("N = " + std::to_string(n) + ": " + e.what(), e.iterations(), e.residual());
    }
  });

  std::vector<TruncationPoint> points;
  points.reserve(schedule.size());
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    points.push_back({schedule[i], solves[i].lambda_min});
  }
  ExtrapolationResult result;
  result.fit = fit_quadratic(points);
  result.estimate = result.fit.a0;
  result.solves = std::move(solves);
  return result;
}

}  // namespace ringflow
