#include "ringflow/verify/oracles.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "ringflow/numeric.hpp"

namespace ringflow::oracle {
namespace {

double plain_sinc(double z) { return z == 0.0 ? 1.0 : std::sin(z) / z; }

}  // namespace

double double_sum_current(const ModeAmplitudes& state, double theta, double tau) {
  // Phase differences in extended precision; the pair phase is what the
  // literal sum needs, so no per-mode reduction is shared with the library.
  using Wide = long double;
  const Wide alpha = std::numbers::pi_v<Wide> * state.alpha_over_pi;
  const std::size_t n = state.coeffs.size();
  Complex total = 0.0;
  for (std::size_t a = 0; a < n; ++a) {
    const double ma = static_cast<double>(a);
    const Wide ea = 2 * alpha * (ma - static_cast<Wide>(state.beta)) * (ma - static_cast<Wide>(state.beta));
    for (std::size_t b = 0; b < n; ++b) {
      const double mb = static_cast<double>(b);
      const Wide eb = 2 * alpha * (mb - static_cast<Wide>(state.beta)) * (mb - static_cast<Wide>(state.beta));
      const Wide angle = static_cast<Wide>(mb - ma) * theta + (ea - eb) * tau;
      const Complex phase = std::polar(1.0, static_cast<double>(std::fmod(angle, 2 * std::numbers::pi_v<Wide>)));
      total += (ma + mb - 2.0 * state.beta) * std::conj(state.coeffs[a]) * state.coeffs[b] * phase;
    }
  }
  return state.alpha_over_pi * total.real();
}

double direct_quadratic_form(std::span<const Complex> coeffs, double alpha, double beta,
                             long first_mode) {
  Complex total = 0.0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const double m = static_cast<double>(first_mode) + static_cast<double>(i);
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
      const double n = static_cast<double>(first_mode) + static_cast<double>(j);
      const double s = m + n - 2.0 * beta;
      const double k = alpha / kPi * s * plain_sinc(alpha * s * (m - n));
      total += std::conj(coeffs[i]) * k * coeffs[j];
    }
  }
  return total.real();
}

double two_mode_from_quadratic_form(int m1, int m2, double alpha, double beta, double phi,
                                    double gamma) {
  std::vector<Complex> c(static_cast<std::size_t>(m2 - m1 + 1), 0.0);
  c.front() = std::cos(phi / 2.0);
  c.back() = std::polar(std::sin(phi / 2.0), gamma);
  return direct_quadratic_form(c, alpha, beta, m1);
}

double two_mode_grid_min(int m1, int m2, double alpha, double beta, int phi_points,
                         int gamma_points) {
  // Only modes m1 and m2 carry weight, so a 2x2 form suffices.
  const double a = m1 + m2 - 2.0 * beta;
  const double k11 = alpha / kPi * (2.0 * m1 - 2.0 * beta);
  const double k22 = alpha / kPi * (2.0 * m2 - 2.0 * beta);
  const double k12 = alpha / kPi * a * plain_sinc(alpha * a * (m1 - m2));
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < phi_points; ++i) {
    const double phi = kPi * i / (phi_points - 1);
    const double c1 = std::cos(phi / 2.0), s1 = std::sin(phi / 2.0);
    for (int j = 0; j < gamma_points; ++j) {
      const double gamma = 2.0 * kPi * j / gamma_points;
      const double p = k11 * c1 * c1 + k22 * s1 * s1 + 2.0 * k12 * c1 * s1 * std::cos(gamma);
      best = std::min(best, p);
    }
  }
  return best;
}

double refined_simpson_current(const ModeAmplitudes& state, std::size_t intervals) {
  if (intervals % 2 == 1) ++intervals;
  if (intervals % 4 != 0) intervals += 2;
  auto simpson = [&](std::size_t count) {
    const double h = 1.0 / static_cast<double>(count);
    KahanSum sum;
    for (std::size_t i = 0; i <= count; ++i) {
      const double w = (i == 0 || i == count) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
      sum += w * double_sum_current(state, 0.0, -0.5 + static_cast<double>(i) * h);
    }
    return sum.value() * h / 3.0;
  };
  const double fine = simpson(intervals);
  const double coarse = simpson(intervals / 2);
  return (16.0 * fine - coarse) / 15.0;
}

ModeAmplitudes random_state(std::mt19937_64& rng, std::size_t modes, double alpha_over_pi,
                            double beta) {
  std::normal_distribution<double> gauss;
  ModeAmplitudes s;
  s.alpha_over_pi = alpha_over_pi;
  s.beta = beta;
  s.coeffs.resize(modes);
  for (auto& c : s.coeffs) c = Complex(gauss(rng), gauss(rng));
  normalize(s);
  return s;
}

}  // namespace ringflow::oracle
