#include "ringflow/line_limit.hpp"

#include <cmath>
#include <ostream>

#include "ringflow/error.hpp"
#include "ringflow/numeric.hpp"
#include "ringflow/ring_kernel.hpp"

namespace ringflow {

LineGrid::LineGrid(double u_max, std::size_t n_points) : u_max_(u_max), n_points_(n_points) {
  require(std::isfinite(u_max) && u_max > 0.0, "u_max must be positive");
  require(n_points >= 2, "line grid needs at least two points");
}

std::vector<double> LineGrid::nodes() const {
  std::vector<double> u(n_points_);
  for (std::size_t i = 0; i < n_points_; ++i) u[i] = node(i);
  return u;
}

SymmetricMatrix line_kernel(const LineGrid& grid) {
  const std::size_t n = grid.n_points();
  const double h = grid.spacing();
  SymmetricMatrix a(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      // u_i^2 - u_j^2 = h^2 (i - j)(i + j + 1) on midpoint nodes
      const double diff = h * h * (static_cast<double>(i) - static_cast<double>(j)) *
                          static_cast<double>(i + j + 1);
      a.set_symmetric(i, j, h / kPi * (grid.node(i) + grid.node(j)) * sinc(diff));
    }
  }
  return a;
}

double nystrom_lambda_min(const LineGrid& grid, EigenMethod method) {
  return min_eigen(line_kernel(grid), method).lambda_min;
}

SmallAlphaLimit ring_small_alpha_limit(double alpha, double beta, std::size_t dimension,
                                       EigenMethod method) {
  const auto params = RingParameters::from_alpha(alpha, beta);
  const auto config = RingConfig::with_dimension(params, dimension);
  SmallAlphaLimit out;
  out.lambda_min = min_eigen(build_kernel(config), method).lambda_min;
  out.u_coverage = static_cast<double>(config.n_trunc()) * std::sqrt(alpha);
  out.coverage_warning = out.u_coverage < 8.0;
  return out;
}

std::vector<ConvergenceRow> nystrom_convergence_study(double u_max, std::size_t n_points,
                                                      std::size_t doublings, EigenMethod method) {
  std::vector<ConvergenceRow> rows;
  for (std::size_t k = 0; k <= doublings; ++k) {
    const LineGrid grid(u_max, n_points);
    rows.push_back({u_max, n_points, nystrom_lambda_min(grid, method)});
    u_max *= 2.0;
    n_points *= 2;
  }
  return rows;
}

double richardson_in_u_max(const std::vector<ConvergenceRow>& rows) {
  require(rows.size() >= 2, "u_max extrapolation needs two rows");
  const auto& coarse = rows[rows.size() - 2];
  const auto& fine = rows.back();
  require(fine.u_max == 2.0 * coarse.u_max, "u_max extrapolation needs a doubling step");
  return 2.0 * fine.lambda_min - coarse.lambda_min;
}

void write_convergence_csv(std::ostream& out, const std::vector<ConvergenceRow>& rows) {
  out << "u_max,n_points,lambda_min\n";
  for (const auto& r : rows) {
    out << format_real(r.u_max) << ',' << r.n_points << ',' << format_real(r.lambda_min) << '\n';
  }
}

}  // namespace ringflow
