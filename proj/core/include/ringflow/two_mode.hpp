#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

namespace ringflow {

// Superpositions cos(phi/2) psi_{m1} + e^{i gamma} sin(phi/2) psi_{m2}.
// Here alpha is the plain dimensionless alpha (not alpha/pi). beta may be any
// value with beta <= m1, which keeps both modes at nonnegative kinetic angular
// momentum; the index-rescaling identity relies on beta outside (-1, 0].

struct TwoModeResult {
  double p_min = 0.0;
  double phi_star = 0.0;    // in [0, pi]
  double gamma_star = 0.0;  // in [0, 2 pi)
  double a_val = 0.0;       // m1 + m2 - 2 beta
  double b_val = 0.0;       // m2 - m1
  bool gamma_degenerate = false;  // A sinc(alpha A B) == 0: gamma does not matter
};

double two_mode_p(int m1, int m2, double alpha, double beta, double phi, double gamma);

TwoModeResult minimize_two_mode(int m1, int m2, double alpha, double beta);

struct TwoModeOptimum {
  double alpha = 0.0;
  double beta = 0.0;
  double p = 0.0;
  [[nodiscard]] double alpha_over_pi() const;
};

struct TwoModeSearchOptions {
  double alpha_over_pi_max = 2.0;
  std::optional<double> fixed_beta;  // search only the given beta slice
  std::size_t coarse_alpha_points = 400;
  std::size_t coarse_beta_points = 100;
};

/// Minimum of the closed-form two-mode bound over alpha/pi in (0, max],
/// beta in (-1, 0]: coarse grid scan then shrinking local grids.
TwoModeOptimum global_two_mode_min(int m1, int m2, const TwoModeSearchOptions& options = {});

/// Default beta values for the two-mode curve emitter (a plotting choice).
std::vector<double> default_curve_betas();

/// CSV rows `alpha_over_pi,beta,p_min` for every (beta, alpha/pi) pair,
/// beta-major.
void write_two_mode_curve(std::ostream& out, int m1, int m2,
                          std::span<const double> alpha_over_pi_grid,
                          std::span<const double> betas);

}  // namespace ringflow
