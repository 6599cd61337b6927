#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ringflow/eigensolve.hpp"
#include "ringflow/ring_kernel.hpp"

namespace ringflow {

/// One truncated solve: smallest eigenvalue at matrix dimension n.
struct TruncationPoint {
  std::size_t n = 0;
  double lambda = 0.0;
};

/// lambda(N) ~ a0 + a1/N + a2/N^2 by ordinary least squares.
struct ExtrapolationFit {
  double a0 = 0.0;
  double a1 = 0.0;
  double a2 = 0.0;
  double residual = 0.0;  // sum of squared fit errors
  std::vector<std::size_t> n_values;  // strictly increasing
  std::vector<double> lambda_values;
  /// |a0 - lambda(N_max)| <= 10 |lambda(N_max) - lambda(N_prev)|. A failed band
  /// is reported, never fatal.
  bool within_sanity_band = true;

  [[nodiscard]] double evaluate(double n) const { return a0 + a1 / n + a2 / (n * n); }
};

/// Needs at least four distinct N; duplicates make the design rank-deficient
/// and are rejected. Points may be given in any order.
ExtrapolationFit fit_quadratic(std::span<const TruncationPoint> points);

struct ExtrapolationResult {
  double estimate = 0.0;  // a0
  ExtrapolationFit fit;
  std::vector<EigenResult> solves;  // in schedule order
};

/// Default N schedule for sweeps.
std::vector<std::size_t> default_sweep_schedule();
/// The 15-point schedule used for high-accuracy points.
std::vector<std::size_t> reference_schedule();

/// Solves at every matrix dimension in `schedule` (run on up to `jobs`
/// threads), fits, and returns a0 as the N -> infinity estimate. A failed
/// solve is rethrown as SolverError naming the offending N.
ExtrapolationResult extrapolated_infimum(const RingParameters& params,
                                         std::span<const std::size_t> schedule,
                                         EigenMethod method = EigenMethod::automatic,
                                         unsigned jobs = 1);

}  // namespace ringflow
