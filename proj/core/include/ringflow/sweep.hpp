#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "ringflow/eigensolve.hpp"

namespace ringflow {

struct SweepRecord {
  double alpha_over_pi = 0.0;
  double beta = 0.0;
  double p_estimate = 0.0;  // extrapolated infimum of the integrated current
  std::vector<std::size_t> schedule;
  double fit_residual = 0.0;
  bool ok = true;
  std::string error;  // set when ok == false
};

struct SweepOptions {
  EigenMethod method = EigenMethod::automatic;
  unsigned jobs = 1;
};

/// One record per grid value, in grid order. Failures are recorded in the
/// record rather than thrown.
std::vector<SweepRecord> sweep_alpha(double beta, std::span<const double> alpha_over_pi_grid,
                                     std::span<const std::size_t> schedule,
                                     const SweepOptions& options = {});

/// CSV `alpha_over_pi,beta,p,residual`; failed points have empty p/residual.
void write_sweep_csv(std::ostream& out, const std::vector<SweepRecord>& records);

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  [[nodiscard]] bool degenerate() const { return lo == hi; }
};

struct InfimumOptions {
  std::size_t coarse_alpha_points = 31;
  std::size_t coarse_beta_points = 3;
  /// Points per side of the incumbent in each refinement stage; the window
  /// is one previous-stage step wide on each side, so the step shrinks by
  /// a factor of 10.
  std::size_t refine_half_points = 10;
  std::size_t beta_refine_half_points = 1;
  /// Schedule for the coarse scan followed by one schedule per refinement
  /// stage (so stages = size - 1; at least 3 refinement stages).
  std::vector<std::vector<std::size_t>> stage_schedules = {
      {400, 600, 800, 1200, 1600},
      {400, 600, 800, 1200, 1600},
      {400, 600, 800, 1200, 1600},
      {800, 1000, 1200, 1400, 1600, 1800, 2000}};
  /// Final stage evaluates beta = 0 only, when 0 lies in the beta box.
  bool pin_beta_zero_final = true;
  SweepOptions sweep;
};

struct StageSummary {
  double alpha_over_pi = 0.0;
  double beta = 0.0;
  double p = 0.0;
  double alpha_step = 0.0;  // grid spacing in alpha/pi used by this stage
  std::size_t evaluations = 0;
};

struct InfimumResult {
  double alpha_over_pi = 0.0;
  double beta = 0.0;
  double p = 0.0;
  std::vector<std::size_t> schedule;  // schedule that produced p
  std::vector<StageSummary> stages;
  std::size_t evaluations = 0;
  bool budget_exhausted = false;
};

/// Coarse scan of the (alpha/pi, beta) box, then successive local grids
/// around the incumbent. `budget` caps extrapolated evaluations; when it runs
/// out the incumbent is returned with budget_exhausted set.
InfimumResult find_infimum(Interval alpha_over_pi_box, Interval beta_box, std::size_t budget,
                           const InfimumOptions& options = {});

}  // namespace ringflow
