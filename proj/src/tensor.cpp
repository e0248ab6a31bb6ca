// SPDX-License-Identifier: Apache-2.0
#include "sid/tensor.hpp"

#include <cmath>
#include <cstring>
#include <sstream>

#include "sid/errors.hpp"

namespace sid {

int64_t shape_numel(const Shape& s) {
  int64_t n = 1;
  for (int64_t d : s) n *= d;
  return n;
}

std::string shape_str(const Shape& s) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) os << ",";
    os << s[i];
  }
  os << ")";
  return os.str();
}

Tensor::Tensor(Shape shape)
    : shape_(std::move(shape)), data_(static_cast<size_t>(shape_numel(shape_)), 0.0) {}

Tensor::Tensor(Shape shape, double fill)
    : shape_(std::move(shape)), data_(static_cast<size_t>(shape_numel(shape_)), fill) {}

void Tensor::fill(double v) {
  for (auto& x : data_) x = v;
}

void Tensor::add_(const Tensor& o) {
  if (!same_shape(o)) {
    throw ShapeError("tensor add: shape mismatch " + shape_str(shape_) + " vs " +
                     shape_str(o.shape_));
  }
  for (size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
}

void Tensor::scale_(double s) {
  for (auto& x : data_) x *= s;
}

Tensor Tensor::reshaped(Shape shape) const {
  if (shape_numel(shape) != numel()) {
    throw ShapeError("reshape: numel mismatch " + shape_str(shape_) + " -> " +
                     shape_str(shape));
  }
  Tensor out;
  out.shape_ = std::move(shape);
  out.data_ = data_;
  return out;
}

bool Tensor::all_finite() const {
  for (double x : data_) {
    if (!std::isfinite(x)) return false;
  }
  return true;
}

bool Tensor::bit_equal(const Tensor& o) const {
  if (!same_shape(o)) return false;
  return std::memcmp(data_.data(), o.data_.data(), data_.size() * sizeof(double)) == 0;
}

}  // namespace sid
