#include <gtest/gtest.h>

#include <cmath>
#include <sstream>
#include <string>

#include "ringflow/error.hpp"
#include "ringflow/line_limit.hpp"
#include "ringflow/numeric.hpp"

namespace ringflow {
namespace {

TEST(LineGrid, MidpointNodes) {
  const LineGrid g(10.0, 4);
  EXPECT_EQ(g.spacing(), 2.5);
  const auto u = g.nodes();
  ASSERT_EQ(u.size(), 4u);
  EXPECT_EQ(u.front(), 1.25);
  EXPECT_EQ(u.back(), 8.75);
  EXPECT_THROW(LineGrid(0.0, 10), ValidationError);
  EXPECT_THROW(LineGrid(5.0, 1), ValidationError);
}

TEST(LineKernel, SymmetricWithExpectedEntries) {
  const LineGrid g(3.0, 30);
  const auto a = line_kernel(g);
  const double h = g.spacing();
  for (std::size_t i = 0; i < 30; ++i) {
    EXPECT_NEAR(a(i, i), h / kPi * 2 * g.node(i), 1e-15);
    for (std::size_t j = 0; j < 30; ++j) {
      EXPECT_EQ(a(i, j), a(j, i));
      const double ui = g.node(i), uj = g.node(j);
      EXPECT_NEAR(a(i, j), h / kPi * (ui + uj) * sinc(ui * ui - uj * uj), 1e-13);
    }
  }
}

TEST(Nystrom, ConvergenceStudyMonotone) {
  const auto rows = nystrom_convergence_study(2.5, 125, 3);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows.back().u_max, 20.0);
  EXPECT_EQ(rows.back().n_points, 1000u);
  for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_LT(rows[i].lambda_min, rows[i - 1].lambda_min);
  for (const auto& r : rows) EXPECT_GT(r.lambda_min, -kLineBackflowConstant);
  const double rich = richardson_in_u_max(rows);
  EXPECT_LT(std::abs(rich + kLineBackflowConstant), std::abs(rows.back().lambda_min + kLineBackflowConstant));
  std::ostringstream out;
  write_convergence_csv(out, rows);
  EXPECT_EQ(out.str().rfind("u_max,n_points,lambda_min\n2.5,125,", 0), 0u);
}

TEST(Nystrom, RichardsonNeedsDoubling) {
  std::vector<ConvergenceRow> rows{{10.0, 100, -0.03}, {15.0, 200, -0.035}};
  EXPECT_THROW(richardson_in_u_max(rows), ValidationError);
  EXPECT_THROW(richardson_in_u_max({rows[0]}), ValidationError);
}

TEST(SmallAlpha, RingRouteNearLineConstant) {
  const auto r = ring_small_alpha_limit(1e-3, 0.0, 1000);
  EXPECT_NEAR(r.lambda_min, -kLineBackflowConstant, 1e-3);
  EXPECT_FALSE(r.coverage_warning);
  EXPECT_NEAR(r.u_coverage, 999 * std::sqrt(1e-3), 1e-12);
}

TEST(SmallAlpha, CrossRouteAgreement) {
  const double ring = ring_small_alpha_limit(1e-3, 0.0, 1000).lambda_min;
  const double line = nystrom_lambda_min(LineGrid(40.0, 4000));
  EXPECT_NEAR(ring, line, 2e-3);
}

TEST(SmallAlpha, FluxDependenceFadesAsAlphaShrinks) {
  double previous = 1.0;
  for (double alpha : {1e-1, 1e-2, 1e-3}) {
    const auto dim = static_cast<std::size_t>(std::ceil(20.0 / std::sqrt(alpha))) + 1;
    const double spread = std::abs(ring_small_alpha_limit(alpha, 0.0, dim).lambda_min -
                                   ring_small_alpha_limit(alpha, -0.5, dim).lambda_min);
    EXPECT_LT(spread, previous) << alpha;
    previous = spread;
  }
}

TEST(SmallAlpha, CoverageWarning) {
  EXPECT_TRUE(ring_small_alpha_limit(1e-4, 0.0, 100).coverage_warning);
}

}  // namespace
}  // namespace ringflow
