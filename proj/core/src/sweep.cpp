#include "ringflow/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include "ringflow/error.hpp"
#include "ringflow/extrapolation.hpp"
#include "ringflow/parallel.hpp"
#include "ringflow/ring_kernel.hpp"

namespace ringflow {
namespace {

SweepRecord evaluate_point(double alpha_over_pi, double beta,
                           std::span<const std::size_t> schedule, EigenMethod method) {
  SweepRecord record;
  record.alpha_over_pi = alpha_over_pi;
  record.beta = beta;
  record.schedule.assign(schedule.begin(), schedule.end());
  try {
    const auto params = RingParameters::from_alpha_over_pi(alpha_over_pi, beta);
    record.beta = params.beta();
    const auto result = extrapolated_infimum(params, schedule, method);
    record.p_estimate = result.estimate;
    record.fit_residual = result.fit.residual;
  } catch (const Error& e) {
    record.ok = false;
    record.error = e.what();
    record.p_estimate = std::numeric_limits<double>::quiet_NaN();
    record.fit_residual = std::numeric_limits<double>::quiet_NaN();
  }
  return record;
}

struct GridPoint {
  double alpha_over_pi;
  double beta;
};

std::vector<double> axis(double center, double step, std::size_t half, Interval box) {
  std::vector<double> values;
  for (long i = -static_cast<long>(half); i <= static_cast<long>(half); ++i) {
    const double v = center + static_cast<double>(i) * step;
    if (v >= box.lo - 1e-15 && v <= box.hi + 1e-15) values.push_back(std::clamp(v, box.lo, box.hi));
  }
  if (values.empty()) values.push_back(std::clamp(center, box.lo, box.hi));
  return values;
}

std::vector<double> uniform(Interval box, std::size_t points) {
  if (box.degenerate() || points < 2) return {box.hi};
  std::vector<double> values(points);
  for (std::size_t i = 0; i < points; ++i) {
    values[i] = box.lo + (box.hi - box.lo) * static_cast<double>(i) / static_cast<double>(points - 1);
  }
  values.back() = box.hi;
  return values;
}

}  // namespace

std::vector<SweepRecord> sweep_alpha(double beta, std::span<const double> alpha_over_pi_grid,
                                     std::span<const std::size_t> schedule,
                                     const SweepOptions& options) {
  require(!alpha_over_pi_grid.empty(), "sweep grid is empty");
  return parallel_map(alpha_over_pi_grid.size(), options.jobs, [&](std::size_t i) {
    return evaluate_point(alpha_over_pi_grid[i], beta, schedule, options.method);
  });
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRecord>& records) {
  out << "alpha_over_pi,beta,p,residual\n";
  for (const auto& r : records) {
    out << format_real(r.alpha_over_pi) << ',' << format_real(r.beta) << ',';
    if (r.ok) out << format_real(r.p_estimate) << ',' << format_real(r.fit_residual);
    else out << ',';
    out << '\n';
  }
}

InfimumResult find_infimum(Interval alpha_over_pi_box, Interval beta_box, std::size_t budget,
                           const InfimumOptions& options) {
  require(alpha_over_pi_box.lo > 0.0 && alpha_over_pi_box.lo <= alpha_over_pi_box.hi,
          "alpha/pi box must satisfy 0 < lo <= hi");
  require(beta_box.lo > -1.0 && beta_box.lo <= beta_box.hi && beta_box.hi <= 0.0,
          "beta box must lie in (-1, 0] with lo <= hi");
  require(options.stage_schedules.size() >= 1, "need at least the coarse schedule");
  require(budget >= 1, "budget must allow at least one evaluation");

  InfimumResult result;
  result.p = std::numeric_limits<double>::infinity();
  const bool single_point = alpha_over_pi_box.degenerate() && beta_box.degenerate();

  auto run_stage = [&](const std::vector<GridPoint>& grid, const std::vector<std::size_t>& schedule,
                       double alpha_step) {
    std::size_t allowed = std::min(grid.size(), budget - result.evaluations);
    if (allowed < grid.size()) result.budget_exhausted = true;
    auto records = parallel_map(allowed, options.sweep.jobs, [&](std::size_t i) {
      return evaluate_point(grid[i].alpha_over_pi, grid[i].beta, schedule, options.sweep.method);
    });
    result.evaluations += allowed;
    // The stage incumbent is the best point of this stage's own schedule.
    StageSummary stage{0.0, 0.0, std::numeric_limits<double>::infinity(), alpha_step, allowed};
    for (const auto& r : records) {
      if (r.ok && r.p_estimate < stage.p) {
        stage.p = r.p_estimate;
        stage.alpha_over_pi = r.alpha_over_pi;
        stage.beta = r.beta;
      }
    }
    if (std::isfinite(stage.p)) {
      result.alpha_over_pi = stage.alpha_over_pi;
      result.beta = stage.beta;
      result.p = stage.p;
      result.schedule = schedule;
    }
    result.stages.push_back(stage);
  };

  if (single_point) {
    run_stage({{alpha_over_pi_box.hi, beta_box.hi}}, options.stage_schedules.back(), 0.0);
    return result;
  }

  std::vector<GridPoint> grid;
  const auto alphas = uniform(alpha_over_pi_box, options.coarse_alpha_points);
  const auto betas = uniform(beta_box, options.coarse_beta_points);
  for (double b : betas) {
    for (double a : alphas) grid.push_back({a, b});
  }
  double alpha_step = alphas.size() > 1 ? alphas[1] - alphas[0] : 0.0;
  double beta_step = betas.size() > 1 ? betas[1] - betas[0] : 0.0;
  run_stage(grid, options.stage_schedules.front(), alpha_step);
  if (!std::isfinite(result.p)) throw ComputationError("every coarse grid point failed");

  for (std::size_t s = 1; s < options.stage_schedules.size() && !result.budget_exhausted; ++s) {
    const bool final_stage = s + 1 == options.stage_schedules.size();
    const double next_alpha_step = alpha_step / static_cast<double>(options.refine_half_points);
    const double next_beta_step =
        beta_step / static_cast<double>(std::max<std::size_t>(1, options.beta_refine_half_points));
    std::vector<double> stage_betas;
    if (final_stage && options.pin_beta_zero_final && beta_box.hi == 0.0) {
      stage_betas = {0.0};
    } else if (beta_step == 0.0) {
      stage_betas = {result.beta};
    } else {
      stage_betas = axis(result.beta, next_beta_step, options.beta_refine_half_points, beta_box);
    }
    const auto stage_alphas =
        alpha_step == 0.0
            ? std::vector<double>{result.alpha_over_pi}
            : axis(result.alpha_over_pi, next_alpha_step, options.refine_half_points,
                   alpha_over_pi_box);
    grid.clear();
    for (double b : stage_betas) {
      for (double a : stage_alphas) grid.push_back({a, b});
    }
    alpha_step = next_alpha_step;
    beta_step = next_beta_step;
    run_stage(grid, options.stage_schedules[s], alpha_step);
  }
  return result;
}

}  // namespace ringflow
