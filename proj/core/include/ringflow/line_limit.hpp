#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "ringflow/eigensolve.hpp"
#include "ringflow/symmetric_matrix.hpp"

namespace ringflow {

/// Reference value of the free-line backflow constant.
inline constexpr double kLineBackflowConstant = 0.0384517;

/// Uniform midpoint grid on (0, u_max): u_i = (i + 1/2) * spacing.
class LineGrid {
 public:
  LineGrid(double u_max, std::size_t n_points);

  [[nodiscard]] double u_max() const { return u_max_; }
  [[nodiscard]] std::size_t n_points() const { return n_points_; }
  [[nodiscard]] double spacing() const { return u_max_ / static_cast<double>(n_points_); }
  [[nodiscard]] double node(std::size_t i) const {
    return (static_cast<double>(i) + 0.5) * spacing();
  }
  [[nodiscard]] std::vector<double> nodes() const;

 private:
  double u_max_;
  std::size_t n_points_;
};

/// Nystrom matrix A_ij = (h/pi)(u_i + u_j) sinc(u_i^2 - u_j^2) for the
/// half-line integral eigenproblem with kernel (u + v) sinc(u^2 - v^2) / pi.
SymmetricMatrix line_kernel(const LineGrid& grid);

/// Smallest eigenvalue of the Nystrom matrix (approaches -c_line as the grid
/// covers more of the half line).
double nystrom_lambda_min(const LineGrid& grid, EigenMethod method = EigenMethod::automatic);

struct SmallAlphaLimit {
  double lambda_min = 0.0;
  double u_coverage = 0.0;  // (dimension - 1) * sqrt(alpha)
  bool coverage_warning = false;  // u_coverage < 8
};

/// Smallest eigenvalue of the ring kernel at small alpha. `dimension` is the
/// matrix size (modes 0..dimension-1).
SmallAlphaLimit ring_small_alpha_limit(double alpha, double beta, std::size_t dimension,
                                       EigenMethod method = EigenMethod::automatic);

struct ConvergenceRow {
  double u_max = 0.0;
  std::size_t n_points = 0;
  double lambda_min = 0.0;
};

/// Simultaneous refinement (u_max, n) -> (2 u_max, 2 n), `doublings` times.
std::vector<ConvergenceRow> nystrom_convergence_study(double u_max, std::size_t n_points,
                                                      std::size_t doublings,
                                                      EigenMethod method = EigenMethod::automatic);

/// Truncation error of the Nystrom route scales like 1/u_max; combining the
/// last two rows as 2 lambda(2u) - lambda(u) removes the leading term.
double richardson_in_u_max(const std::vector<ConvergenceRow>& rows);

/// CSV `u_max,n_points,lambda_min`.
void write_convergence_csv(std::ostream& out, const std::vector<ConvergenceRow>& rows);

}  // namespace ringflow
