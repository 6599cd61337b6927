#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace ringflow {

/// Dense square matrix with full (both-triangle) row-major storage.
/// Writers are expected to keep it symmetric; set_symmetric() does both halves.
class SymmetricMatrix {
 public:
  SymmetricMatrix() = default;
  /// Throws ResourceError when n*n doubles cannot be allocated.
  explicit SymmetricMatrix(std::size_t n);

  [[nodiscard]] std::size_t dimension() const { return n_; }
  [[nodiscard]] double operator()(std::size_t row, std::size_t col) const {
    return data_[row * n_ + col];
  }
  void set_symmetric(std::size_t row, std::size_t col, double value) {
    data_[row * n_ + col] = value;
    data_[col * n_ + row] = value;
  }

  [[nodiscard]] std::span<const double> data() const { return data_; }
  [[nodiscard]] std::span<const double> row(std::size_t r) const {
    return std::span<const double>(data_).subspan(r * n_, n_);
  }

  [[nodiscard]] double max_diagonal() const;
  [[nodiscard]] double min_diagonal() const;

  /// y = A x
  void multiply(std::span<const double> x, std::span<double> y) const;

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

}  // namespace ringflow
