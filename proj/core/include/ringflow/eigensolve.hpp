#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "ringflow/error.hpp"
#include "ringflow/ring_kernel.hpp"
#include "ringflow/symmetric_matrix.hpp"

namespace ringflow {

enum class EigenMethod {
  dense,      ///< LAPACK dsyevr, smallest eigenpair only
  iterative,  ///< Lanczos with full reorthogonalization
  automatic,  ///< dense up to kDenseDimensionLimit, iterative above
};

inline constexpr std::size_t kDenseDimensionLimit = 4000;

std::string_view to_string(EigenMethod method);
/// Accepts "dense", "iterative" and "auto". Throws ValidationError otherwise.
EigenMethod parse_eigen_method(std::string_view name);

struct EigenResult {
  double lambda_min = 0.0;
  std::vector<double> eigenvector;  // unit norm, first significant entry > 0
  std::size_t n_trunc = 0;
  double residual_norm = 0.0;  // ||K v - lambda v||_2
  EigenMethod method = EigenMethod::dense;
  std::size_t iterations = 0;  // Lanczos steps (0 for dense)
  std::size_t restarts = 0;
};

struct LanczosOptions {
  std::size_t max_basis = 1200;   // Krylov vectors kept before an explicit restart
  std::size_t max_restarts = 8;
  std::size_t check_interval = 10;
  /// Stop once the Ritz residual is below tolerance * max diagonal entry.
  double tolerance = 1e-12;
};

/// Raised when the iterative path exhausts its iteration cap or a residual
/// fails certification. Carries the diagnostics of the failed attempt.
class SolverError : public ComputationError {
 public:
  SolverError(const std::string& what, std::size_t iterations, double residual)
      : ComputationError(what), iterations_(iterations), residual_(residual) {}
  [[nodiscard]] std::size_t iterations() const { return iterations_; }
  [[nodiscard]] double residual() const { return residual_; }

 private:
  std::size_t iterations_;
  double residual_;
};

/// Residual certification bound: residual_norm <= kResidualBound * max diagonal.
inline constexpr double kResidualBound = 1e-10;

EigenResult min_eigen(const SymmetricMatrix& matrix, EigenMethod method = EigenMethod::automatic,
                      const LanczosOptions& options = {});

/// Smallest eigenpair of a truncated backflow kernel; n_trunc is filled in.
EigenResult min_eigen(const BackflowKernel& kernel, EigenMethod method = EigenMethod::automatic,
                      const LanczosOptions& options = {});

}  // namespace ringflow
