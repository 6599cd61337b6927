#include "ringflow/symmetric_matrix.hpp"

#include <cblas.h>

#include <algorithm>
#include <limits>
#include <new>
#include <string>

#include "ringflow/error.hpp"

namespace ringflow {

SymmetricMatrix::SymmetricMatrix(std::size_t n) : n_(n) {
  if (n != 0 && n > std::numeric_limits<std::size_t>::max() / n / sizeof(double)) {
    throw ResourceError("matrix of dimension " + std::to_string(n) + " overflows address space");
  }
  try {
    data_.assign(n * n, 0.0);
  } catch (const std::bad_alloc&) {
    throw ResourceError("cannot allocate dense matrix of dimension " + std::to_string(n));
  } catch (const std::length_error&) {
    throw ResourceError("cannot allocate dense matrix of dimension " + std::to_string(n));
  }
}

double SymmetricMatrix::max_diagonal() const {
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n_; ++i) best = std::max(best, (*this)(i, i));
  return best;
}

double SymmetricMatrix::min_diagonal() const {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n_; ++i) best = std::min(best, (*this)(i, i));
  return best;
}

void SymmetricMatrix::multiply(std::span<const double> x, std::span<double> y) const {
  require(x.size() == n_ && y.size() == n_, "matrix-vector product: dimension mismatch");
  const auto n = static_cast<blasint>(n_);
  cblas_dgemv(CblasRowMajor, CblasNoTrans, n, n, 1.0, data_.data(), n, x.data(), 1, 0.0,
              y.data(), 1);
}

}  // namespace ringflow
