#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>
#include <string>

#include "ringflow/eigensolve.hpp"
#include "ringflow/error.hpp"
#include "ringflow/ring_kernel.hpp"
#include "ringflow/verify/oracles.hpp"

namespace ringflow {
namespace {

TEST(KernelEntry, DiagonalAtAlphaPi) {
  EXPECT_EQ(kernel_entry(1.0, 0.0, 0, 0), 0.0);
  EXPECT_EQ(kernel_entry(1.0, 0.0, 0, 1), 0.0);
  EXPECT_EQ(kernel_entry(1.0, 0.0, 1, 1), 2.0);
  EXPECT_EQ(kernel_entry(1.0, 0.0, 3, 7), 0.0);
}

TEST(KernelEntry, HalfFluxHalfAlpha) {
  EXPECT_DOUBLE_EQ(kernel_entry(0.5, -0.5, 0, 0), 0.5);
}

TEST(KernelEntry, SymmetricAndMatchesFormula) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> a(0.01, 2.0), b(-0.99, 0.0);
  for (int i = 0; i < 200; ++i) {
    const double ap = a(rng), beta = b(rng);
    const int m = static_cast<int>(rng() % 40), n = static_cast<int>(rng() % 40);
    EXPECT_EQ(kernel_entry(ap, beta, m, n), kernel_entry(ap, beta, n, m));
    const double s = m + n - 2.0 * beta;
    const double z = kPi * ap * s * (m - n);
    const double ref = ap * s * (z == 0.0 ? 1.0 : std::sin(z) / z);
    EXPECT_NEAR(kernel_entry(ap, beta, m, n), ref, 1e-12 * std::max(1.0, std::abs(z)));
  }
}

TEST(Canonicalize, ShiftsIntoHalfOpenInterval) {
  const auto c = canonicalize(1.75);
  EXPECT_DOUBLE_EQ(c.beta, -0.25);
  EXPECT_EQ(c.shift, 2);
  EXPECT_EQ(canonicalize(0.0).beta, 0.0);
  EXPECT_EQ(canonicalize(-1.0).beta, 0.0);
  EXPECT_EQ(canonicalize(-1.0).shift, -1);
  EXPECT_EQ(canonicalize(3.0).shift, 3);
  for (double raw : {-7.3, -0.999999, 0.3, 12.5, 1e-17}) {
    const auto k = canonicalize(raw);
    EXPECT_GT(k.beta, -1.0) << raw;
    EXPECT_LE(k.beta, 0.0) << raw;
  }
}

TEST(Canonicalize, RejectsNonFinite) {
  EXPECT_THROW(canonicalize(std::numeric_limits<double>::quiet_NaN()), ValidationError);
  EXPECT_THROW(canonicalize(std::numeric_limits<double>::infinity()), ValidationError);
}

TEST(RingParameters, AlphaForms) {
  const auto p = RingParameters::from_alpha(kPi, 0.0);
  EXPECT_DOUBLE_EQ(p.alpha_over_pi(), 1.0);
  const auto q = RingParameters::from_alpha_over_pi(0.25, 1.5);
  EXPECT_DOUBLE_EQ(q.alpha(), kPi / 4);
  EXPECT_DOUBLE_EQ(q.beta(), -0.5);
  EXPECT_EQ(q.beta_shift(), 2);
  EXPECT_THROW(RingParameters::from_alpha(0.0, 0.0), ValidationError);
  EXPECT_THROW(RingParameters::from_alpha_over_pi(-1.0, 0.0), ValidationError);
  EXPECT_THROW(RingConfig(q, 0), ValidationError);
  EXPECT_EQ(RingConfig::with_dimension(q, 10).n_trunc(), 9u);
}

TEST(BackflowKernel, BlockEqualsEntries) {
  const auto cfg = RingConfig(RingParameters::from_alpha_over_pi(0.37, -0.3), 20);
  const auto k = build_kernel(cfg);
  ASSERT_EQ(k.dimension(), 21u);
  for (std::size_t m = 0; m < 21; ++m)
    for (std::size_t n = 0; n < 21; ++n) EXPECT_EQ(k(m, n), kernel_entry(0.37, -0.3, m, n));
}

TEST(IntegratedCurrent, BasisStatesAtAlphaPi) {
  const auto k = build_kernel(RingConfig(RingParameters::from_alpha_over_pi(1.0, 0.0), 5));
  EXPECT_DOUBLE_EQ(integrated_current(basis_state(3, 6, 1.0, 0.0), k), 6.0);
  ModeAmplitudes pair{{0.0, 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0), 0.0, 0.0, 0.0}, 1.0, 0.0};
  EXPECT_NEAR(integrated_current(pair, k), 1.0 + 2.0, 1e-14);
  ModeAmplitudes mixed{{1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0), 0.0, 0.0, 0.0, 0.0}, 1.0, 0.0};
  EXPECT_NEAR(integrated_current(mixed, k), 1.0, 1e-14);
}

TEST(IntegratedCurrent, RejectsMismatchAndUnnormalized) {
  const auto k = build_kernel(RingConfig(RingParameters::from_alpha_over_pi(0.5, 0.0), 3));
  EXPECT_THROW(integrated_current(basis_state(0, 3, 0.5, 0.0), k), ValidationError);
  ModeAmplitudes big{{1.0, 1.0, 0.0, 0.0}, 0.5, 0.0};
  EXPECT_THROW(integrated_current(big, k), ValidationError);
}

TEST(IntegratedCurrent, AgreesWithDirectOracle) {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> a(0.02, 1.5), b(-0.99, 0.0);
  for (int i = 0; i < 30; ++i) {
    const double ap = a(rng), beta = b(rng);
    const std::size_t modes = 2 + rng() % 30;
    const auto state = oracle::random_state(rng, modes, ap, beta);
    const auto k = build_kernel(RingConfig::with_dimension(RingParameters::from_alpha_over_pi(ap, beta), modes));
    const double ref = oracle::direct_quadratic_form(state.coeffs, kPi * ap, beta);
    EXPECT_NEAR(integrated_current(state, k), ref, 1e-12 * std::max(1.0, static_cast<double>(modes)));
  }
}

TEST(IntegratedCurrent, ShiftedFluxSameValue) {
  std::mt19937_64 rng(5);
  const auto state = oracle::random_state(rng, 12, 0.41, -0.25);
  const auto k = build_kernel(RingConfig::with_dimension(RingParameters::from_alpha_over_pi(0.41, 1.75), 12));
  const double shifted = quadratic_form(state.coeffs, kernel_block(0.41, 1.75, 2, 12));
  EXPECT_NEAR(integrated_current(state, k), shifted, 1e-13);
}

TEST(Kernel, UnboundedAboveAtHighModes) {
  // The spectrum is bounded below but not above: high single modes carry
  // large positive current.
  double previous = -1.0;
  for (long first : {0L, 10L, 100L}) {
    const auto block = kernel_block(0.37, 0.0, first, 1);
    EXPECT_GT(block(0, 0), previous);
    previous = block(0, 0);
  }
  EXPECT_NEAR(previous, 0.37 * 200.0, 1e-12);
}

TEST(Kernel, MinEigenBelowMinDiagonal) {
  const auto k = build_kernel(RingConfig(RingParameters::from_alpha_over_pi(0.37, 0.0), 100));
  EXPECT_LE(min_eigen(k).lambda_min, k.matrix().min_diagonal());
}

TEST(KernelCsv, HeaderAndShape) {
  const auto k = build_kernel(RingConfig(RingParameters::from_alpha_over_pi(0.5, -0.5), 2));
  std::ostringstream out;
  write_kernel_csv(out, k);
  std::istringstream in(out.str());
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header.rfind("# alpha=", 0), 0u);
  EXPECT_NE(header.find("beta=-0.5"), std::string::npos);
  EXPECT_NE(header.find("n=2"), std::string::npos);
  std::string line;
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), 2);
  }
  EXPECT_EQ(rows, 3);
}

}  // namespace
}  // namespace ringflow
