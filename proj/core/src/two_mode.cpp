#include "ringflow/two_mode.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include "ringflow/error.hpp"
#include "ringflow/numeric.hpp"

namespace ringflow {
namespace {

void check_modes(int m1, int m2) {
  require(0 <= m1 && m1 < m2, "two-mode analysis needs 0 <= m1 < m2");
}

// Both modes must carry nonnegative kinetic angular momentum: beta <= m1.
void check_parameters(int m1, double alpha, double beta) {
  require(std::isfinite(alpha) && alpha > 0.0, "alpha must be positive");
  require(std::isfinite(beta) && beta <= static_cast<double>(m1),
          "beta must not exceed m1 (negative kinetic angular momentum)");
}

double closed_form_min(int m1, int m2, double alpha, double beta) {
  const double a = m1 + m2 - 2.0 * beta;
  const double b = m2 - m1;
  const double s = a * sinc_pi(alpha / kPi * a * b);
  return alpha / kPi * (a - std::sqrt(b * b + s * s));
}

}  // namespace

double TwoModeOptimum::alpha_over_pi() const { return alpha / kPi; }

double two_mode_p(int m1, int m2, double alpha, double beta, double phi, double gamma) {
  check_modes(m1, m2);
  check_parameters(m1, alpha, beta);
  require(phi >= 0.0 && phi <= kPi, "phi must lie in [0, pi]");
  require(gamma >= 0.0 && gamma < 2.0 * kPi, "gamma must lie in [0, 2 pi)");
  const double a = m1 + m2 - 2.0 * beta;
  const double b = m2 - m1;
  return alpha / kPi *
         (a - b * std::cos(phi) + a * sinc_pi(alpha / kPi * a * b) * std::cos(gamma) * std::sin(phi));
}

TwoModeResult minimize_two_mode(int m1, int m2, double alpha, double beta) {
  check_modes(m1, m2);
  check_parameters(m1, alpha, beta);
  TwoModeResult r;
  r.a_val = m1 + m2 - 2.0 * beta;
  r.b_val = m2 - m1;
  const double s = r.a_val * sinc_pi(alpha / kPi * r.a_val * r.b_val);
  r.p_min = alpha / kPi * (r.a_val - std::sqrt(r.b_val * r.b_val + s * s));
  r.phi_star = std::atan2(std::fabs(s), r.b_val);
  r.gamma_degenerate = s == 0.0;
  r.gamma_star = s > 0.0 ? kPi : 0.0;
  return r;
}

TwoModeOptimum global_two_mode_min(int m1, int m2, const TwoModeSearchOptions& options) {
  check_modes(m1, m2);
  require(options.alpha_over_pi_max > 0.0, "alpha search box must be nonempty");
  require(options.coarse_alpha_points >= 2 && options.coarse_beta_points >= 2,
          "coarse grid needs at least two points per axis");
  if (options.fixed_beta) {
    require(*options.fixed_beta > -1.0 && *options.fixed_beta <= 0.0,
            "fixed beta must lie in (-1, 0]");
  }

  const double amax = options.alpha_over_pi_max;
  const double beta_floor = std::nextafter(-1.0, 0.0);
  auto objective = [&](double a_over_pi, double beta) {
    return closed_form_min(m1, m2, kPi * a_over_pi, beta);
  };

  // Coarse grid: alpha/pi = amax * i / n, beta = -j / n (j < n).
  double best_a = amax, best_b = options.fixed_beta.value_or(0.0);
  double best_p = std::numeric_limits<double>::infinity();
  const std::size_t na = options.coarse_alpha_points;
  const std::size_t nb = options.fixed_beta ? 1 : options.coarse_beta_points;
  for (std::size_t i = 1; i <= na; ++i) {
    const double a = amax * static_cast<double>(i) / static_cast<double>(na);
    for (std::size_t j = 0; j < nb; ++j) {
      const double b = options.fixed_beta
                           ? *options.fixed_beta
                           : -static_cast<double>(j) / static_cast<double>(nb);
      const double p = objective(a, b);
      if (p < best_p) {
        best_p = p;
        best_a = a;
        best_b = b;
      }
    }
  }

  // Shrinking 2-D grids around the incumbent, clipped to the box.
  double da = amax / static_cast<double>(na);
  double db = options.fixed_beta ? 0.0 : 1.0 / static_cast<double>(nb);
  constexpr int kHalf = 5;
  while (da > 1e-13) {
    for (int i = -kHalf; i <= kHalf; ++i) {
      const double a = best_a + i * da / kHalf;
      if (a <= 0.0 || a > amax) continue;
      for (int j = -kHalf; j <= kHalf; ++j) {
        if (db == 0.0 && j != 0) continue;
        const double b = std::clamp(best_b + j * db / kHalf, beta_floor, 0.0);
        const double p = objective(a, b);
        if (p < best_p) {
          best_p = p;
          best_a = a;
          best_b = b;
        }
      }
    }
    da /= 2.5;
    db /= 2.5;
  }
  return {kPi * best_a, best_b, best_p};
}

std::vector<double> default_curve_betas() { return {0.0, -0.25, -0.5, -0.75, -0.999}; }

void write_two_mode_curve(std::ostream& out, int m1, int m2,
                          std::span<const double> alpha_over_pi_grid,
                          std::span<const double> betas) {
  out << "alpha_over_pi,beta,p_min\n";
  for (double beta : betas) {
    for (double a : alpha_over_pi_grid) {
      const auto r = minimize_two_mode(m1, m2, kPi * a, beta);
      out << format_real(a) << ',' << format_real(beta) << ',' << format_real(r.p_min) << '\n';
    }
  }
}

}  // namespace ringflow
