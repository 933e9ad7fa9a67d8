#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace xxzbell {

// Square row-major matrix of doubles.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  explicit DenseMatrix(std::size_t dim) : dim_(dim), data_(dim * dim, 0.0) {}

  std::size_t dim() const noexcept { return dim_; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
  double operator()(std::size_t i, std::size_t j) const {
    return data_[i * dim_ + j];
  }
  std::span<const double> row(std::size_t i) const {
    return {data_.data() + i * dim_, dim_};
  }
  std::span<const double> data() const noexcept { return data_; }

  double frobenius_norm() const;
  bool is_symmetric() const;

 private:
  std::size_t dim_ = 0;
  std::vector<double> data_;
};

}  // namespace xxzbell
