#include "ringflow/eigensolve.hpp"

#include <cblas.h>
#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ringflow {
namespace {

double norm2(std::span<const double> v) {
  return cblas_dnrm2(static_cast<blasint>(v.size()), v.data(), 1);
}

double residual_norm(const SymmetricMatrix& a, std::span<const double> v, double lambda) {
  std::vector<double> r(v.size());
  a.multiply(v, r);
  for (std::size_t i = 0; i < v.size(); ++i) r[i] -= lambda * v[i];
  return norm2(r);
}

void fix_sign(std::vector<double>& v) {
  for (double x : v) {
    if (std::fabs(x) > 1e-12) {
      if (x < 0.0) {
        for (double& y : v) y = -y;
      }
      return;
    }
  }
}

EigenResult dense_min_eigen(const SymmetricMatrix& a) {
  const auto n = static_cast<lapack_int>(a.dimension());
  std::vector<double> work(a.data().begin(), a.data().end());
  std::vector<double> z(a.dimension());
  std::vector<lapack_int> support(2);
  lapack_int found = 0;
  double w = 0.0;
  const lapack_int info = LAPACKE_dsyevr(LAPACK_ROW_MAJOR, 'V', 'I', 'U', n, work.data(), n, 0.0,
                                         0.0, 1, 1, 0.0, &found, &w, z.data(), 1, support.data());
  if (info != 0 || found != 1) {
    throw SolverError("dsyevr failed with info " + std::to_string(info), 0,
                      std::numeric_limits<double>::quiet_NaN());
  }
  EigenResult result;
  result.lambda_min = w;
  result.eigenvector = std::move(z);
  result.method = EigenMethod::dense;
  return result;
}

struct RitzPair {
  double value;
  std::vector<double> coords;  // in the Lanczos basis
};

RitzPair smallest_ritz_pair(const std::vector<double>& diag, const std::vector<double>& offdiag) {
  const auto k = static_cast<lapack_int>(diag.size());
  std::vector<double> d = diag;
  std::vector<double> e(offdiag.begin(), offdiag.begin() + (k - 1));
  e.push_back(0.0);
  std::vector<double> z(diag.size());
  std::vector<lapack_int> support(2);
  lapack_int found = 0;
  double w = 0.0;
  const lapack_int info = LAPACKE_dstevr(LAPACK_COL_MAJOR, 'V', 'I', k, d.data(), e.data(), 0.0,
                                         0.0, 1, 1, 0.0, &found, &w, z.data(), k, support.data());
  if (info != 0 || found != 1) {
    throw SolverError("dstevr failed with info " + std::to_string(info), diag.size(),
                      std::numeric_limits<double>::quiet_NaN());
  }
  return {w, std::move(z)};
}

// Lanczos on (A - sigma I) with sigma = -1, full reorthogonalization (two
// classical Gram-Schmidt passes), explicit restart from the current Ritz
// vector when the basis is full.
EigenResult lanczos_min_eigen(const SymmetricMatrix& a, const LanczosOptions& opt) {
  constexpr double sigma = -1.0;
  const std::size_t n = a.dimension();
  const auto bn = static_cast<blasint>(n);
  const double scale = std::max(std::fabs(a.max_diagonal()), 1e-300);
  const double target = opt.tolerance * scale;
  const double certify = kResidualBound * scale;
  const std::size_t max_basis = std::max<std::size_t>(2, std::min(opt.max_basis, n));

  std::vector<double> start(n, 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> basis;  // row j = q_j
  std::vector<double> w(n), h(max_basis);
  std::size_t total_steps = 0;
  double last_residual = std::numeric_limits<double>::infinity();

  for (std::size_t restart = 0; restart <= opt.max_restarts; ++restart) {
    basis.assign(start.begin(), start.end());
    std::vector<double> diag, offdiag;
    for (std::size_t j = 0;; ++j) {
      std::span<const double> q(basis.data() + j * n, n);
      a.multiply(q, w);
      cblas_daxpy(bn, -sigma, q.data(), 1, w.data(), 1);
      const auto rows = static_cast<blasint>(j + 1);
      diag.push_back(cblas_ddot(bn, q.data(), 1, w.data(), 1));
      for (int pass = 0; pass < 2; ++pass) {
        cblas_dgemv(CblasRowMajor, CblasNoTrans, rows, bn, 1.0, basis.data(), bn, w.data(), 1, 0.0,
                    h.data(), 1);
        cblas_dgemv(CblasRowMajor, CblasTrans, rows, bn, -1.0, basis.data(), bn, h.data(), 1, 1.0,
                    w.data(), 1);
      }
      const double beta = norm2(w);
      ++total_steps;

      const bool exhausted = beta <= 1e-14 * scale || j + 1 == n;
      const bool full = j + 1 == max_basis;
      if (!(exhausted || full || (j + 1) % opt.check_interval == 0)) {
        offdiag.push_back(beta);
        cblas_dscal(bn, 1.0 / beta, w.data(), 1);
        basis.insert(basis.end(), w.begin(), w.end());
        continue;
      }

      offdiag.push_back(beta);
      RitzPair ritz = smallest_ritz_pair(diag, offdiag);
      const double estimate = std::fabs(beta * ritz.coords.back());
      if (estimate <= target || exhausted || full) {
        std::vector<double> y(n);
        cblas_dgemv(CblasRowMajor, CblasTrans, rows, bn, 1.0, basis.data(), bn, ritz.coords.data(),
                    1, 0.0, y.data(), 1);
        cblas_dscal(bn, 1.0 / norm2(y), y.data(), 1);
        const double lambda = ritz.value + sigma;
        last_residual = residual_norm(a, y, lambda);
        if (last_residual <= certify && (estimate <= target || exhausted)) {
          EigenResult result;
          result.lambda_min = lambda;
          result.eigenvector = std::move(y);
          result.method = EigenMethod::iterative;
          result.iterations = total_steps;
          result.restarts = restart;
          return result;
        }
        if (full || exhausted) {
          start = std::move(y);
          break;
        }
      }
      cblas_dscal(bn, 1.0 / beta, w.data(), 1);
      basis.insert(basis.end(), w.begin(), w.end());
    }
  }
  throw SolverError("Lanczos did not converge after " + std::to_string(total_steps) +
                        " steps (residual " + format_real(last_residual) + ")",
                    total_steps, last_residual);
}

}  // namespace

std::string_view to_string(EigenMethod method) {
  switch (method) {
    case EigenMethod::dense:
      return "dense";
    case EigenMethod::iterative:
      return "iterative";
    case EigenMethod::automatic:
      return "auto";
  }
  return "unknown";
}

EigenMethod parse_eigen_method(std::string_view name) {
  if (name == "dense") return EigenMethod::dense;
  if (name == "iterative") return EigenMethod::iterative;
  if (name == "auto") return EigenMethod::automatic;
  throw ValidationError("unknown eigen method '" + std::string(name) + "'");
}

EigenResult min_eigen(const SymmetricMatrix& matrix, EigenMethod method,
                      const LanczosOptions& options) {
  require(matrix.dimension() >= 1, "min_eigen: empty matrix");
  if (method == EigenMethod::automatic) {
    method = matrix.dimension() <= kDenseDimensionLimit ? EigenMethod::dense
                                                        : EigenMethod::iterative;
  }
  EigenResult result = method == EigenMethod::dense ? dense_min_eigen(matrix)
                                                    : lanczos_min_eigen(matrix, options);
  fix_sign(result.eigenvector);
  result.residual_norm = residual_norm(matrix, result.eigenvector, result.lambda_min);
  const double bound = kResidualBound * std::fabs(matrix.max_diagonal());
  if (!(result.residual_norm <= bound)) {
    throw SolverError("eigenpair residual " + format_real(result.residual_norm) +
                          " exceeds certification bound " + format_real(bound),
                      result.iterations, result.residual_norm);
  }
  return result;
}

EigenResult min_eigen(const BackflowKernel& kernel, EigenMethod method,
                      const LanczosOptions& options) {
  EigenResult result = min_eigen(kernel.matrix(), method, options);
  result.n_trunc = kernel.config().n_trunc();
  return result;
}

}  // namespace ringflow
