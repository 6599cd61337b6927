#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "ringflow/numeric.hpp"

namespace ringflow {

using Complex = std::complex<double>;

/// Complex amplitudes c_0..c_N of a ring state over the canonical modes
/// m = 0..N (nonnegative kinetic angular momentum), together with the
/// parameters they were built for.
struct ModeAmplitudes {
  std::vector<Complex> coeffs;
  double alpha_over_pi = 0.0;
  double beta = 0.0;  // canonical, in (-1, 0]

  [[nodiscard]] double alpha() const { return kPi * alpha_over_pi; }
  [[nodiscard]] std::size_t size() const { return coeffs.size(); }
  [[nodiscard]] double norm_squared() const;
};

/// Scales to unit norm and rotates the global phase so that the first
/// coefficient with magnitude above 1e-12 is real positive.
/// Throws ValidationError for an all-zero vector.
void normalize(ModeAmplitudes& state);

/// Throws ValidationError when | sum |c_m|^2 - 1 | exceeds `tolerance`.
void require_normalized(const ModeAmplitudes& state, double tolerance = 1e-10);

/// Single-mode state delta_{m, mode}.
ModeAmplitudes basis_state(std::size_t mode, std::size_t n_modes, double alpha_over_pi,
                           double beta);

}  // namespace ringflow
