#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "ringflow/eigensolve.hpp"
#include "ringflow/error.hpp"
#include "ringflow/extrapolation.hpp"
#include "ringflow/ring_kernel.hpp"

namespace ringflow {
namespace {

constexpr double kOptimum = 0.3703965;

BackflowKernel optimum_kernel(std::size_t dimension) {
  return build_kernel(RingConfig::with_dimension(RingParameters::from_alpha_over_pi(kOptimum, 0.0), dimension));
}

double residual(const SymmetricMatrix& a, const EigenResult& r) {
  std::vector<double> y(a.dimension());
  a.multiply(r.eigenvector, y);
  double s = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) s += std::pow(y[i] - r.lambda_min * r.eigenvector[i], 2);
  return std::sqrt(s);
}

TEST(MinEigen, ReferenceTruncations) {
  EXPECT_NEAR(min_eigen(optimum_kernel(800)).lambda_min, -0.11681560946083251, 1e-9);
  EXPECT_NEAR(min_eigen(optimum_kernel(2000)).lambda_min, -0.11681564340085021, 1e-9);
}

TEST(MinEigen, AlphaPiGivesZero) {
  for (auto method : {EigenMethod::dense, EigenMethod::iterative}) {
    const auto k = build_kernel(RingConfig(RingParameters::from_alpha_over_pi(1.0, 0.0), 300));
    const auto r = min_eigen(k, method);
    if (method == EigenMethod::dense) {
      EXPECT_EQ(r.lambda_min, 0.0);
    }
    EXPECT_NEAR(r.lambda_min, 0.0, 1e-12) << to_string(method);
    EXPECT_NEAR(std::abs(r.eigenvector[0]), 1.0, 1e-12);
  }
}

TEST(MinEigen, DenseAndIterativeAgree) {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> a(0.05, 2.0), b(-0.999, 0.0);
  std::uniform_int_distribution<std::size_t> n(20, 700);
  for (int i = 0; i < 20; ++i) {
    const std::size_t dim = i == 0 ? 2000 : n(rng);
    const auto k = build_kernel(RingConfig::with_dimension(RingParameters::from_alpha_over_pi(a(rng), b(rng)), dim));
    const auto d = min_eigen(k, EigenMethod::dense);
    const auto it = min_eigen(k, EigenMethod::iterative);
    EXPECT_NEAR(d.lambda_min, it.lambda_min, 1e-10) << "dim " << dim;
    EXPECT_GT(it.iterations, 0u);
    EXPECT_EQ(d.iterations, 0u);
  }
}

TEST(MinEigen, ResidualCertifiedAndBelowDiagonal) {
  const auto k = optimum_kernel(1000);
  for (auto method : {EigenMethod::dense, EigenMethod::iterative}) {
    const auto r = min_eigen(k, method);
    EXPECT_LE(r.residual_norm, kResidualBound * k.matrix().max_diagonal());
    EXPECT_NEAR(residual(k.matrix(), r), r.residual_norm, 1e-12);
    EXPECT_LE(r.lambda_min, k.matrix().min_diagonal());
    EXPECT_EQ(r.n_trunc, 999u);
    double norm = 0.0;
    for (double v : r.eigenvector) norm += v * v;
    EXPECT_NEAR(norm, 1.0, 1e-12);
  }
}

TEST(MinEigen, SignConvention) {
  const auto r = min_eigen(optimum_kernel(200));
  std::size_t first = 0;
  while (std::abs(r.eigenvector[first]) <= 1e-12) ++first;
  EXPECT_GT(r.eigenvector[first], 0.0);
}

TEST(MinEigen, MonotoneInTruncation) {
  double previous = 0.0;
  for (std::size_t n : {100, 200, 400, 800, 1200, 1600, 2000, 3000}) {
    const double lam = min_eigen(optimum_kernel(n)).lambda_min;
    EXPECT_LE(lam, previous + 1e-13) << n;
    previous = lam;
  }
}

TEST(MinEigen, ReferenceTableIsMonotone) {
  const std::vector<double> table{-0.11681560946083251, -0.11681562375295221, -0.11681563170026898,
                                  -0.11681563657782222, -0.11681563974451246, -0.11681564184588990,
                                  -0.11681564340085021, -0.11681564437173106, -0.11681564524093137,
                                  -0.11681564684342790, -0.11681564811514884, -0.11681564868561355,
                                  -0.11681564900305073, -0.11681564932805089, -0.11681564947322964};
  for (std::size_t i = 1; i < table.size(); ++i) EXPECT_LT(table[i], table[i - 1]);
}

TEST(MinEigen, AutomaticPicksDenseBelowLimit) {
  EXPECT_EQ(min_eigen(optimum_kernel(50)).method, EigenMethod::dense);
}

TEST(MinEigen, IterationCapRaisesSolverError) {
  LanczosOptions tight;
  tight.max_basis = 4;
  tight.max_restarts = 0;
  tight.check_interval = 2;
  try {
    (void)min_eigen(optimum_kernel(500), EigenMethod::iterative, tight);
    FAIL() << "expected SolverError";
  } catch (const SolverError& e) {
    EXPECT_GT(e.iterations(), 0u);
    EXPECT_GT(e.residual(), 0.0);
  }
}

TEST(EigenMethod, Parse) {
  EXPECT_EQ(parse_eigen_method("dense"), EigenMethod::dense);
  EXPECT_EQ(parse_eigen_method("iterative"), EigenMethod::iterative);
  EXPECT_EQ(parse_eigen_method("auto"), EigenMethod::automatic);
  EXPECT_EQ(to_string(EigenMethod::automatic), "auto");
  EXPECT_THROW(parse_eigen_method("qr"), ValidationError);
}

}  // namespace
}  // namespace ringflow
