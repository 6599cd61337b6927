#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <string>

#include "ringflow/error.hpp"
#include "ringflow/ring_kernel.hpp"
#include "ringflow/state.hpp"
#include "ringflow/two_mode.hpp"
#include "ringflow/verify/oracles.hpp"

namespace ringflow {
namespace {

constexpr double kOptimum = 0.3703965;

const MaximizingState& optimum_state() {
  static const MaximizingState s =
      maximizing_state(RingConfig::with_dimension(RingParameters::from_alpha_over_pi(kOptimum, 0.0), 2000));
  return s;
}

TEST(MaximizingState, ReferenceTruncation) {
  const auto& s = optimum_state();
  EXPECT_NEAR(s.lambda_min, -0.11681564340085021, 1e-9);
  EXPECT_EQ(s.n_trunc, 1999u);
  EXPECT_NEAR(s.amplitudes.norm_squared(), 1.0, 1e-12);
  EXPECT_GT(s.amplitudes.coeffs[0].real(), 0.0);
  const auto k = build_kernel(RingConfig::with_dimension(RingParameters::from_alpha_over_pi(kOptimum, 0.0), 2000));
  EXPECT_NEAR(integrated_current(s.amplitudes, k), -0.11681564340085021, 1e-9);
}

TEST(MaximizingState, CoefficientDecay) {
  const auto d = coefficient_decay(optimum_state().amplitudes);
  EXPECT_TRUE(d.bound_holds());
  EXPECT_GE(d.worst_mode, 1u);
}

TEST(MaximizingState, AlphaPiIsGroundMode) {
  const auto s = maximizing_state(RingConfig(RingParameters::from_alpha_over_pi(1.0, 0.0), 50));
  EXPECT_NEAR(s.lambda_min, 0.0, 1e-14);
  EXPECT_NEAR(std::abs(s.amplitudes.coeffs[0]), 1.0, 1e-14);
}

TEST(MeanEnergy, Examples) {
  EXPECT_EQ(mean_energy(basis_state(0, 4, 0.5, 0.0)), 0.0);
  EXPECT_NEAR(mean_energy(basis_state(1, 4, 1.0, 0.0)), 2 * kPi, 1e-14);
  EXPECT_NEAR(mean_energy(optimum_state().amplitudes), 0.3855, 2e-3);
}

TEST(MeanEnergy, StableUnderTruncation) {
  const auto s3000 =
      maximizing_state(RingConfig::with_dimension(RingParameters::from_alpha_over_pi(kOptimum, 0.0), 3000));
  EXPECT_NEAR(mean_energy(s3000.amplitudes), mean_energy(optimum_state().amplitudes), 1e-4);
}

TEST(CurrentSeries, SingleModeIsConstant) {
  const auto s = basis_state(2, 5, 1.0, 0.0);
  const auto series = current_series(s, 0.0, -1.5, 1.5, 301);
  for (double v : series.tj_values) EXPECT_NEAR(v, 4.0, 1e-13);
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  const auto t = basis_state(3, 5, 0.23, -0.4);
  for (int i = 0; i < 50; ++i) EXPECT_NEAR(scaled_current(t, u(rng), u(rng)), 2 * 0.23 * 3.4, 1e-13);
}

TEST(CurrentSeries, SamplesAndValidation) {
  const auto s = basis_state(0, 2, 0.5, 0.0);
  const auto series = current_series(s, 0.0, -0.5, 0.5, 11);
  ASSERT_EQ(series.tau_samples.size(), 11u);
  EXPECT_EQ(series.tau_samples.front(), -0.5);
  EXPECT_EQ(series.tau_samples.back(), 0.5);
  for (std::size_t i = 1; i < 11; ++i) EXPECT_GT(series.tau_samples[i], series.tau_samples[i - 1]);
  EXPECT_THROW(current_series(s, 0.0, 0.5, -0.5, 11), ValidationError);
  EXPECT_THROW(current_series(s, 0.0, -0.5, 0.5, 1), ValidationError);
}

TEST(CurrentSeries, OptimumHasPositiveSample) {
  const auto series = current_series(optimum_state().amplitudes, 0.0, -0.5, 0.5, 4001);
  EXPECT_TRUE(std::any_of(series.tj_values.begin(), series.tj_values.end(), [](double v) { return v > 0; }));
}

TEST(TimeQuadrature, SingleModeExact) {
  const auto s = basis_state(1, 3, 1.0, 0.0);
  for (std::size_t n : {3u, 5u, 101u}) EXPECT_NEAR(time_quadrature_p(s, n), 2.0, 1e-14);
  EXPECT_THROW(time_quadrature_p(s, 4), ValidationError);
  EXPECT_THROW(time_quadrature_p(s, 1), ValidationError);
}

TEST(TimeQuadrature, RandomStateMatchesQuadraticForm) {
  std::mt19937_64 rng(37);
  const auto s = oracle::random_state(rng, 8, 0.37, -0.3);
  const auto k = build_kernel(RingConfig::with_dimension(RingParameters::from_alpha_over_pi(0.37, -0.3), 8));
  const double p = integrated_current(s, k);
  EXPECT_NEAR(time_quadrature_p(s, 16385), p, 1e-8);
  EXPECT_NEAR(oracle::refined_simpson_current(s, 4096), p, 1e-8);
}

TEST(TimeQuadrature, TwoModeOptimumState) {
  const auto opt = global_two_mode_min(0, 1);
  const auto r = minimize_two_mode(0, 1, opt.alpha, opt.beta);
  ModeAmplitudes s{{std::cos(r.phi_star / 2), std::polar(std::sin(r.phi_star / 2), r.gamma_star)},
                   opt.alpha_over_pi(), opt.beta};
  EXPECT_NEAR(time_quadrature_p(s, 16385), r.p_min, 1e-8);
}

TEST(TimeQuadrature, FourthOrderConvergence) {
  std::mt19937_64 rng(4);
  const auto s = oracle::random_state(rng, 4, 0.3, -0.2);
  const auto k = build_kernel(RingConfig::with_dimension(RingParameters::from_alpha_over_pi(0.3, -0.2), 4));
  const double exact = integrated_current(s, k);
  const double e1 = std::abs(time_quadrature_p(s, 33) - exact);
  const double e2 = std::abs(time_quadrature_p(s, 65) - exact);
  const double e3 = std::abs(time_quadrature_p(s, 129) - exact);
  EXPECT_NEAR(std::log2(e1 / e2), 4.0, 0.3);
  EXPECT_NEAR(std::log2(e2 / e3), 4.0, 0.3);
}

TEST(Density, ParsevalNormalization) {
  std::mt19937_64 rng(6);
  const auto s = oracle::random_state(rng, 6, 0.41, -0.7);
  const int n = 64;
  for (double tau : {-0.3, 0.0, 0.77}) {
    double total = 0.0;
    for (int i = 0; i < n; ++i) total += probability_density(s, 2 * kPi * i / n, tau);
    EXPECT_NEAR(total * 2 * kPi / n, 1.0, 1e-13);
  }
}

TEST(Density, ContinuityEquation) {
  std::mt19937_64 rng(10);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 10; ++trial) {
    const auto s = oracle::random_state(rng, 5, 0.2 + 0.5 * u(rng), -u(rng));
    const double th = 2 * kPi * u(rng), tau = u(rng) - 0.5;
    auto defect = [&](double h) {
      const double dt = (probability_density(s, th, tau + h) - probability_density(s, th, tau - h)) / (2 * h);
      const double dth = (scaled_current(s, th + h, tau) - scaled_current(s, th - h, tau)) / (2 * h);
      return std::abs(dt + dth);
    };
    const double d1 = defect(1e-2), d2 = defect(5e-3), d3 = defect(2.5e-3);
    EXPECT_NEAR(d1 / d2, 4.0, 0.5);
    EXPECT_NEAR(d2 / d3, 4.0, 0.5);
    EXPECT_LT(defect(1e-5), 1e-6);
  }
}

TEST(StateCsv, RoundTrip) {
  const auto s = maximizing_state(RingConfig(RingParameters::from_alpha_over_pi(0.37, -0.3), 30));
  std::stringstream io;
  write_state_csv(io, s);
  const auto back = read_state_csv(io);
  EXPECT_EQ(back.n_trunc, s.n_trunc);
  EXPECT_EQ(back.lambda_min, s.lambda_min);
  EXPECT_DOUBLE_EQ(back.amplitudes.alpha_over_pi, s.amplitudes.alpha_over_pi);
  EXPECT_EQ(back.amplitudes.beta, s.amplitudes.beta);
  EXPECT_EQ(back.amplitudes.coeffs, s.amplitudes.coeffs);
}

TEST(StateCsv, MalformedInputs) {
  const auto s = maximizing_state(RingConfig(RingParameters::from_alpha_over_pi(0.37, 0.0), 3));
  std::stringstream good;
  write_state_csv(good, s);
  const std::string text = good.str();
  auto reject = [](const std::string& t) {
    std::istringstream in(t);
    EXPECT_THROW(read_state_csv(in), ValidationError) << t;
  };
  reject("");
  reject("m,re,im\n0,1,0\n");
  reject(text.substr(0, text.rfind('\n', text.size() - 2) + 1));  // missing last row
  std::string bad_row = text;
  bad_row.replace(bad_row.rfind("\n3,"), 3, "\n7,");
  reject(bad_row);
  std::string no_alpha = text;
  no_alpha.replace(no_alpha.find("alpha="), 6, "alfa=");
  reject(no_alpha);
}

TEST(SeriesCsv, Header) {
  const auto s = basis_state(1, 2, 0.5, 0.0);
  std::ostringstream out;
  write_series_csv(out, current_series(s, 0.0, -1.5, 1.5, 5), s);
  const std::string text = out.str();
  EXPECT_EQ(text.rfind("# theta=0 alpha=", 0), 0u);
  EXPECT_NE(text.find("window=-0.5,0.5\ntau,tj\n"), std::string::npos);
}

}  // namespace
}  // namespace ringflow
