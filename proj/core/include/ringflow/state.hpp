#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "ringflow/eigensolve.hpp"
#include "ringflow/modes.hpp"
#include "ringflow/ring_kernel.hpp"

namespace ringflow {

// Dimensionless units throughout: tau = t/T, currents are T*J, and mode m
// accumulates phase 2 alpha (m - beta)^2 tau (E_m T / hbar = 2 alpha (m - beta)^2).

/// Eigenvector of the truncated kernel for its smallest eigenvalue, as a state.
struct MaximizingState {
  ModeAmplitudes amplitudes;
  std::size_t n_trunc = 0;
  double lambda_min = 0.0;
  double residual_norm = 0.0;
};

MaximizingState maximizing_state(const RingConfig& config,
                                 EigenMethod method = EigenMethod::automatic);

/// <E> T / hbar = 2 alpha sum_m |c_m|^2 (m - beta)^2.
double mean_energy(const ModeAmplitudes& state);

/// max_{m >= 1} |c_m| m^2 / |c_0|; the decay bound |c_m| < |c_0|/m^2 holds iff < 1.
struct CoefficientDecay {
  double worst_ratio = 0.0;
  std::size_t worst_mode = 0;
  [[nodiscard]] bool bound_holds() const { return worst_ratio < 1.0; }
};
CoefficientDecay coefficient_decay(const ModeAmplitudes& state);

/// T * J(theta, tau) = (2 alpha / pi) Re{ conj(z) w },
/// z = sum c_m e^{i m theta} e^{-i 2 alpha (m - beta)^2 tau},  w = sum (m - beta) (same terms).
double scaled_current(const ModeAmplitudes& state, double theta, double tau);

/// |Psi(theta, tau)|^2 = |z|^2 / (2 pi).
double probability_density(const ModeAmplitudes& state, double theta, double tau);

struct CurrentSeries {
  std::vector<double> tau_samples;  // strictly increasing
  std::vector<double> tj_values;
  double theta = 0.0;
};

/// n_samples equally spaced tau values covering [tau_lo, tau_hi] inclusive.
CurrentSeries current_series(const ModeAmplitudes& state, double theta, double tau_lo,
                             double tau_hi, std::size_t n_samples);

/// Trapezoid integral of a series over its full sampled range.
double integrate_trapezoid(const CurrentSeries& series);

/// Composite Simpson integral of T*J(0, tau) over tau in [-1/2, 1/2].
/// n_samples must be odd and at least 3.
double time_quadrature_p(const ModeAmplitudes& state, std::size_t n_samples);

/// Header `# alpha=<v> beta=<v> n_trunc=<v> lambda_min=<v>`, then `m,re,im` rows.
void write_state_csv(std::ostream& out, const MaximizingState& state);
/// Inverse of write_state_csv. Throws ValidationError on malformed input.
MaximizingState read_state_csv(std::istream& in);

/// `# theta=<v> alpha=<v> beta=<v> window=-0.5,0.5`, then `tau,tj` rows.
void write_series_csv(std::ostream& out, const CurrentSeries& series, const ModeAmplitudes& state);

}  // namespace ringflow
