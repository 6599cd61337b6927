#include "ringflow/state.hpp"

#include <cmath>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <string>

#include "ringflow/error.hpp"

namespace ringflow {
namespace {

struct Sums {
  Complex z;
  Complex w;
};

// Phases reach 2 alpha m^2 tau ~ 1e6 rad for large states, so they are formed
// and reduced mod 2 pi in extended precision before the double-precision trig.
using Wide = long double;
constexpr Wide kTwoPiWide = 2 * std::numbers::pi_v<Wide>;

Sums mode_sums(const ModeAmplitudes& state, double theta, double tau) {
  const Wide alpha = std::numbers::pi_v<Wide> * state.alpha_over_pi;
  Complex z = 0.0, w = 0.0;
  for (std::size_t m = 0; m < state.coeffs.size(); ++m) {
    const Complex c = state.coeffs[m];
    if (c == Complex{}) continue;
    const Wide kw = static_cast<Wide>(m) - state.beta;
    const Wide wide_phase = static_cast<Wide>(m) * theta - 2 * alpha * kw * kw * tau;
    const auto phase = static_cast<double>(std::remainder(wide_phase, kTwoPiWide));
    const double k = static_cast<double>(kw);
    const Complex term = c * Complex(std::cos(phase), std::sin(phase));
    z += term;
    w += k * term;
  }
  return {z, w};
}

double parse_header_value(const std::string& header, const std::string& key) {
  const std::string needle = key + "=";
  const auto pos = header.find(needle);
  require(pos != std::string::npos, "state file header lacks '" + key + "'");
  try {
    return std::stod(header.substr(pos + needle.size()));
  } catch (const std::exception&) {
    throw ValidationError("state file header has a malformed '" + key + "'");
  }
}

}  // namespace

MaximizingState maximizing_state(const RingConfig& config, EigenMethod method) {
  const EigenResult eig = min_eigen(build_kernel(config), method);
  MaximizingState out;
  out.amplitudes.alpha_over_pi = config.alpha_over_pi();
  out.amplitudes.beta = config.beta();
  out.amplitudes.coeffs.assign(eig.eigenvector.begin(), eig.eigenvector.end());
  normalize(out.amplitudes);
  out.n_trunc = config.n_trunc();
  out.lambda_min = eig.lambda_min;
  out.residual_norm = eig.residual_norm;
  return out;
}

double mean_energy(const ModeAmplitudes& state) {
  KahanSum sum;
  for (std::size_t m = 0; m < state.coeffs.size(); ++m) {
    const double k = static_cast<double>(m) - state.beta;
    sum += std::norm(state.coeffs[m]) * k * k;
  }
  return 2.0 * state.alpha() * sum.value();
}

CoefficientDecay coefficient_decay(const ModeAmplitudes& state) {
  require(state.coeffs.size() >= 2, "coefficient decay needs at least two modes");
  const double c0 = std::abs(state.coeffs[0]);
  require(c0 > 0.0, "coefficient decay is relative to c_0, which vanishes");
  CoefficientDecay decay;
  for (std::size_t m = 1; m < state.coeffs.size(); ++m) {
    const double md = static_cast<double>(m);
    const double ratio = std::abs(state.coeffs[m]) * md * md / c0;
    if (ratio > decay.worst_ratio || decay.worst_mode == 0) {
      decay.worst_ratio = ratio;
      decay.worst_mode = m;
    }
  }
  return decay;
}

double scaled_current(const ModeAmplitudes& state, double theta, double tau) {
  const auto [z, w] = mode_sums(state, theta, tau);
  return 2.0 * state.alpha_over_pi * (std::conj(z) * w).real();
}

double probability_density(const ModeAmplitudes& state, double theta, double tau) {
  return std::norm(mode_sums(state, theta, tau).z) / (2.0 * kPi);
}

CurrentSeries current_series(const ModeAmplitudes& state, double theta, double tau_lo,
                             double tau_hi, std::size_t n_samples) {
  require(n_samples >= 2, "current series needs at least two samples");
  require(std::isfinite(tau_lo) && std::isfinite(tau_hi) && tau_lo < tau_hi,
          "current series needs a nonempty tau range");
  CurrentSeries series;
  series.theta = theta;
  series.tau_samples.resize(n_samples);
  series.tj_values.resize(n_samples);
  const double step = (tau_hi - tau_lo) / static_cast<double>(n_samples - 1);
  for (std::size_t i = 0; i < n_samples; ++i) {
    const double tau = i + 1 == n_samples ? tau_hi : tau_lo + static_cast<double>(i) * step;
    series.tau_samples[i] = tau;
    series.tj_values[i] = scaled_current(state, theta, tau);
  }
  return series;
}

double integrate_trapezoid(const CurrentSeries& series) {
  return trapezoid(series.tau_samples, series.tj_values);
}

double time_quadrature_p(const ModeAmplitudes& state, std::size_t n_samples) {
  require(n_samples >= 3 && n_samples % 2 == 1, "Simpson quadrature needs an odd sample count >= 3");
  const std::size_t intervals = n_samples - 1;
  const double h = 1.0 / static_cast<double>(intervals);
  KahanSum sum;
  for (std::size_t i = 0; i <= intervals; ++i) {
    const double tau = -0.5 + static_cast<double>(i) * h;
    const double weight = (i == 0 || i == intervals) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
    sum += weight * scaled_current(state, 0.0, tau);
  }
  return sum.value() * h / 3.0;
}

void write_state_csv(std::ostream& out, const MaximizingState& state) {
  const auto& amp = state.amplitudes;
  out << "# alpha=" << format_real(amp.alpha()) << " beta=" << format_real(amp.beta)
      << " n_trunc=" << state.n_trunc << " lambda_min=" << format_real(state.lambda_min) << '\n';
  out << "m,re,im\n";
  for (std::size_t m = 0; m < amp.coeffs.size(); ++m) {
    out << m << ',' << format_real(amp.coeffs[m].real()) << ',' << format_real(amp.coeffs[m].imag())
        << '\n';
  }
}

MaximizingState read_state_csv(std::istream& in) {
  std::string header;
  require(static_cast<bool>(std::getline(in, header)) && header.starts_with("#"),
          "state file must start with a '#' header line");
  MaximizingState state;
  const double alpha = parse_header_value(header, "alpha");
  require(alpha > 0.0, "state file alpha must be positive");
  state.amplitudes.alpha_over_pi = alpha / kPi;
  state.amplitudes.beta = parse_header_value(header, "beta");
  state.lambda_min = parse_header_value(header, "lambda_min");
  const double n_trunc = parse_header_value(header, "n_trunc");
  require(n_trunc >= 1.0, "state file n_trunc must be at least 1");
  state.n_trunc = static_cast<std::size_t>(n_trunc);

  std::string line;
  std::getline(in, line);
  require(line == "m,re,im", "state file lacks the 'm,re,im' column header");
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string fields[3];
    for (auto& f : fields) {
      require(static_cast<bool>(std::getline(row, f, ',')), "malformed state row: " + line);
    }
    try {
      require(std::stoul(fields[0]) == state.amplitudes.coeffs.size(),
              "state rows must list m = 0, 1, 2, ... in order");
      state.amplitudes.coeffs.emplace_back(std::stod(fields[1]), std::stod(fields[2]));
    } catch (const std::logic_error&) {
      throw ValidationError("malformed state row: " + line);
    }
  }
  require(state.amplitudes.coeffs.size() == state.n_trunc + 1,
          "state file row count does not match n_trunc");
  require_normalized(state.amplitudes);
  return state;
}

void write_series_csv(std::ostream& out, const CurrentSeries& series, const ModeAmplitudes& state) {
  out << "# theta=" << format_real(series.theta) << " alpha=" << format_real(state.alpha())
      << " beta=" << format_real(state.beta) << " window=-0.5,0.5\n";
  out << "tau,tj\n";
  for (std::size_t i = 0; i < series.tau_samples.size(); ++i) {
    out << format_real(series.tau_samples[i]) << ',' << format_real(series.tj_values[i]) << '\n';
  }
}

}  // namespace ringflow
