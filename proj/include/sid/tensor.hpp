// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sid {

using Shape = std::vector<int64_t>;

std::string shape_str(const Shape& s);

// Dense row-major double array, rank 0..4. Rank 4 is interpreted as
// (batch, channels, height, width) throughout the detector code.
class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(Shape shape);
  Tensor(Shape shape, double fill);

  static Tensor zeros(Shape shape) { return Tensor(std::move(shape)); }
  static Tensor full(Shape shape, double v) { return Tensor(std::move(shape), v); }

  const Shape& shape() const { return shape_; }
  int64_t dim(size_t i) const { return shape_[i]; }
  size_t rank() const { return shape_.size(); }
  int64_t numel() const { return static_cast<int64_t>(data_.size()); }
  bool same_shape(const Tensor& o) const { return shape_ == o.shape_; }

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }

  double& operator[](int64_t i) { return data_[static_cast<size_t>(i)]; }
  double operator[](int64_t i) const { return data_[static_cast<size_t>(i)]; }

  // 4-D accessors (b, c, h, w).
  double& at(int64_t b, int64_t c, int64_t h, int64_t w) {
    return data_[static_cast<size_t>(((b * shape_[1] + c) * shape_[2] + h) * shape_[3] + w)];
  }
  double at(int64_t b, int64_t c, int64_t h, int64_t w) const {
    return data_[static_cast<size_t>(((b * shape_[1] + c) * shape_[2] + h) * shape_[3] + w)];
  }

  void fill(double v);
  void add_(const Tensor& o);          // elementwise +=
  void scale_(double s);
  Tensor reshaped(Shape shape) const;  // same numel, new shape

  bool all_finite() const;
  bool bit_equal(const Tensor& o) const;

 private:
  Shape shape_;
  std::vector<double> data_;
};

int64_t shape_numel(const Shape& s);

}  // namespace sid
