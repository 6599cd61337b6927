#include "ringflow/ring_kernel.hpp"

#include <cmath>
#include <ostream>
#include <string>

#include "ringflow/error.hpp"

namespace ringflow {

CanonicalBeta canonicalize(double beta_raw) {
  require(std::isfinite(beta_raw), "beta must be finite");
  const double shift = std::ceil(beta_raw);
  double beta = beta_raw - shift;
  // Rounding can land on -1 for inputs just above an integer.
  if (beta <= -1.0) beta = std::nextafter(-1.0, 0.0);
  if (beta == 0.0) beta = 0.0;  // drop a negative zero
  return {beta, static_cast<long>(shift)};
}

RingParameters RingParameters::from_alpha(double alpha, double beta_raw) {
  require(std::isfinite(alpha) && alpha > 0.0, "alpha must be positive and finite");
  return {alpha / kPi, canonicalize(beta_raw)};
}

RingParameters RingParameters::from_alpha_over_pi(double alpha_over_pi, double beta_raw) {
  require(std::isfinite(alpha_over_pi) && alpha_over_pi > 0.0,
          "alpha/pi must be positive and finite");
  return {alpha_over_pi, canonicalize(beta_raw)};
}

RingConfig::RingConfig(RingParameters params, std::size_t n_trunc)
    : params_(params), n_trunc_(n_trunc) {
  require(n_trunc >= 1, "n_trunc must be at least 1");
}

RingConfig RingConfig::with_dimension(RingParameters params, std::size_t dimension) {
  require(dimension >= 2, "truncation dimension must be at least 2");
  return {params, dimension - 1};
}

double kernel_entry(double alpha_over_pi, double beta, double m, double n) {
  const double s = (m + n) - 2.0 * beta;
  return alpha_over_pi * s * sinc_pi(alpha_over_pi * s * (m - n));
}

SymmetricMatrix kernel_block(double alpha_over_pi, double beta, long first_mode,
                             std::size_t dimension) {
  SymmetricMatrix k(dimension);
  for (std::size_t i = 0; i < dimension; ++i) {
    const double m = static_cast<double>(first_mode + static_cast<long>(i));
    for (std::size_t j = i; j < dimension; ++j) {
      const double n = static_cast<double>(first_mode + static_cast<long>(j));
      k.set_symmetric(i, j, kernel_entry(alpha_over_pi, beta, m, n));
    }
  }
  return k;
}

BackflowKernel build_kernel(const RingConfig& config) {
  return {config, kernel_block(config.alpha_over_pi(), config.beta(), 0, config.dimension())};
}

double quadratic_form(std::span<const Complex> coeffs, const SymmetricMatrix& matrix) {
  require(coeffs.size() == matrix.dimension(),
          "coefficient count " + std::to_string(coeffs.size()) +
              " does not match kernel dimension " + std::to_string(matrix.dimension()));
  KahanSum re;
  KahanSum im;
  double scale = 0.0;
  for (std::size_t m = 0; m < coeffs.size(); ++m) {
    const Complex cm = std::conj(coeffs[m]);
    if (cm == Complex{}) continue;
    for (std::size_t n = 0; n < coeffs.size(); ++n) {
      const Complex term = cm * matrix(m, n) * coeffs[n];
      re += term.real();
      im += term.imag();
      scale += std::abs(term);
    }
  }
  if (std::fabs(im.value()) > 1e-12 * std::max(1.0, scale)) {
    throw ComputationError("quadratic form has imaginary part " + format_real(im.value()));
  }
  return re.value();
}

double integrated_current(const ModeAmplitudes& state, const BackflowKernel& kernel) {
  require_normalized(state);
  return quadratic_form(state.coeffs, kernel.matrix());
}

void write_kernel_csv(std::ostream& out, const BackflowKernel& kernel) {
  const auto& cfg = kernel.config();
  out << "# alpha=" << format_real(cfg.alpha()) << " beta=" << format_real(cfg.beta())
      << " n=" << cfg.n_trunc() << '\n';
  const std::size_t n = kernel.dimension();
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j != 0) out << ',';
      out << format_real(kernel(m, j));
    }
    out << '\n';
  }
}

}  // namespace ringflow
