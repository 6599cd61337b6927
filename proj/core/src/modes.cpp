#include "ringflow/modes.hpp"

#include <cmath>

#include "ringflow/error.hpp"

namespace ringflow {

double ModeAmplitudes::norm_squared() const {
  KahanSum sum;
  for (const auto& c : coeffs) sum += std::norm(c);
  return sum.value();
}

void normalize(ModeAmplitudes& state) {
  const double norm2 = state.norm_squared();
  require(norm2 > 0.0 && std::isfinite(norm2), "cannot normalize a zero or non-finite state");
  Complex phase = 1.0;
  for (const auto& c : state.coeffs) {
    if (std::abs(c) > 1e-12 * std::sqrt(norm2)) {
      phase = std::conj(c) / std::abs(c);
      break;
    }
  }
  const Complex scale = phase / std::sqrt(norm2);
  for (auto& c : state.coeffs) c *= scale;
}

void require_normalized(const ModeAmplitudes& state, double tolerance) {
  const double deviation = std::fabs(state.norm_squared() - 1.0);
  require(deviation <= tolerance,
          "state is not normalized: | ||c||^2 - 1 | = " + format_real(deviation));
}

ModeAmplitudes basis_state(std::size_t mode, std::size_t n_modes, double alpha_over_pi,
                           double beta) {
  require(mode < n_modes, "basis_state: mode index outside the truncation");
  ModeAmplitudes state{std::vector<Complex>(n_modes, 0.0), alpha_over_pi, beta};
  state.coeffs[mode] = 1.0;
  return state;
}

}  // namespace ringflow
