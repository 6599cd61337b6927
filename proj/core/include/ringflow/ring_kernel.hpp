#pragma once

#include <cstddef>
#include <iosfwd>

#include "ringflow/modes.hpp"
#include "ringflow/numeric.hpp"
#include "ringflow/symmetric_matrix.hpp"

namespace ringflow {

struct CanonicalBeta {
  double beta = 0.0;  // in (-1, 0]
  long shift = 0;     // ceil(beta_raw); physical mode = canonical mode + shift
};

/// Maps a raw flux onto (-1, 0] using the beta -> beta + 1 index-shift symmetry.
CanonicalBeta canonicalize(double beta_raw);

/// Dimensionless (alpha, beta) with beta canonicalized. alpha is held as
/// alpha/pi so that integer multiples of pi are represented exactly.
class RingParameters {
 public:
  static RingParameters from_alpha(double alpha, double beta_raw);
  static RingParameters from_alpha_over_pi(double alpha_over_pi, double beta_raw);

  [[nodiscard]] double alpha() const { return kPi * alpha_over_pi_; }
  [[nodiscard]] double alpha_over_pi() const { return alpha_over_pi_; }
  [[nodiscard]] double beta() const { return beta_.beta; }
  [[nodiscard]] long beta_shift() const { return beta_.shift; }

 private:
  RingParameters(double alpha_over_pi, CanonicalBeta beta) : alpha_over_pi_(alpha_over_pi), beta_(beta) {}
  double alpha_over_pi_;
  CanonicalBeta beta_;
};

/// Ring parameters plus a truncation: mode indices run m = 0..n_trunc.
class RingConfig {
 public:
  RingConfig(RingParameters params, std::size_t n_trunc);
  /// Truncation given as the number of retained modes (matrix dimension).
  static RingConfig with_dimension(RingParameters params, std::size_t dimension);

  [[nodiscard]] const RingParameters& parameters() const { return params_; }
  [[nodiscard]] double alpha() const { return params_.alpha(); }
  [[nodiscard]] double alpha_over_pi() const { return params_.alpha_over_pi(); }
  [[nodiscard]] double beta() const { return params_.beta(); }
  [[nodiscard]] long beta_shift() const { return params_.beta_shift(); }
  [[nodiscard]] std::size_t n_trunc() const { return n_trunc_; }
  [[nodiscard]] std::size_t dimension() const { return n_trunc_ + 1; }

 private:
  RingParameters params_;
  std::size_t n_trunc_;
};

/// K_mn = (alpha/pi)(m + n - 2 beta) sinc[alpha (m + n - 2 beta)(m - n)].
/// No canonicalization: beta and the mode indices are taken as given.
double kernel_entry(double alpha_over_pi, double beta, double m, double n);

/// Kernel restricted to modes first_mode .. first_mode + dimension - 1, at an
/// arbitrary (not necessarily canonical) beta.
SymmetricMatrix kernel_block(double alpha_over_pi, double beta, long first_mode,
                             std::size_t dimension);

/// Immutable backflow kernel for one configuration.
class BackflowKernel {
 public:
  [[nodiscard]] const RingConfig& config() const { return config_; }
  [[nodiscard]] const SymmetricMatrix& matrix() const { return matrix_; }
  [[nodiscard]] std::size_t dimension() const { return matrix_.dimension(); }
  [[nodiscard]] double operator()(std::size_t m, std::size_t n) const { return matrix_(m, n); }

 private:
  friend BackflowKernel build_kernel(const RingConfig& config);
  BackflowKernel(RingConfig config, SymmetricMatrix matrix)
      : config_(config), matrix_(std::move(matrix)) {}
  RingConfig config_;
  SymmetricMatrix matrix_;
};

BackflowKernel build_kernel(const RingConfig& config);

/// Time-integrated current P = sum_{m,n} conj(c_m) K_mn c_n, accumulated in
/// fixed ascending order with compensated summation.
double integrated_current(const ModeAmplitudes& state, const BackflowKernel& kernel);

/// Same quadratic form against a bare matrix (used for shifted-index checks).
double quadratic_form(std::span<const Complex> coeffs, const SymmetricMatrix& matrix);

/// Row-major CSV, 17 significant digits, preceded by
/// `# alpha=<v> beta=<v> n=<v>` where n is n_trunc.
void write_kernel_csv(std::ostream& out, const BackflowKernel& kernel);

}  // namespace ringflow
