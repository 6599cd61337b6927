#pragma once

// Reference computations that deliberately avoid the library's fast paths.
// They are slow and straightforward; use them only to check results.

#include <complex>
#include <random>
#include <span>
#include <vector>

#include "ringflow/modes.hpp"

namespace ringflow::oracle {

/// Literal O(N^2) double sum for T*J(theta, tau):
/// (alpha/pi) sum_{m,n} (m + n - 2 beta) conj(c_m) c_n e^{i(n-m)theta} e^{i(E_m - E_n)t/hbar}.
double double_sum_current(const ModeAmplitudes& state, double theta, double tau);

/// sum conj(c_m) K_mn c_n with K_mn evaluated from the defining formula via
/// std::sin, without the kernel module.
double direct_quadratic_form(std::span<const Complex> coeffs, double alpha, double beta,
                             long first_mode = 0);

/// Two-mode integrated current from the general quadratic form (not the
/// closed form).
double two_mode_from_quadratic_form(int m1, int m2, double alpha, double beta, double phi,
                                    double gamma);

/// Minimum of the two-mode integrated current over a uniform (phi, gamma) grid
/// with phi_points over [0, pi] and gamma_points over [0, 2 pi).
double two_mode_grid_min(int m1, int m2, double alpha, double beta, int phi_points,
                         int gamma_points);

/// Simpson quadrature of T*J(0, tau) on [-1/2, 1/2] with Richardson
/// refinement (16 S(h) - S(2h)) / 15, using double_sum_current.
double refined_simpson_current(const ModeAmplitudes& state, std::size_t intervals);

/// Random normalized state with `modes` complex coefficients.
ModeAmplitudes random_state(std::mt19937_64& rng, std::size_t modes, double alpha_over_pi,
                            double beta);

}  // namespace ringflow::oracle
