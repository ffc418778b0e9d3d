#pragma once

#include <cmath>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace miue {

// Dense row-major tensor of 64-bit floats. Shape {r, c} for matrices,
// {n} for vectors, {1} for scalars.
class Tensor {
 public:
  Tensor() = default;

  explicit Tensor(std::vector<std::size_t> shape)
      : shape_(std::move(shape)), values_(count(shape_), 0.0) {}

  Tensor(std::vector<std::size_t> shape, std::vector<double> values)
      : shape_(std::move(shape)), values_(std::move(values)) {
    if (count(shape_) != values_.size()) {
      throw std::invalid_argument("Tensor: shape/value count mismatch");
    }
  }

  static Tensor zeros(std::vector<std::size_t> shape) { return Tensor(std::move(shape)); }

  static Tensor full(std::vector<std::size_t> shape, double v) {
    Tensor t(std::move(shape));
    std::fill(t.values_.begin(), t.values_.end(), v);
    return t;
  }

  static Tensor scalar(double v) { return Tensor({1}, {v}); }

  const std::vector<std::size_t>& shape() const { return shape_; }
  std::size_t rank() const { return shape_.size(); }
  std::size_t size() const { return values_.size(); }

  std::size_t rows() const {
    require_rank2("rows");
    return shape_[0];
  }
  std::size_t cols() const {
    require_rank2("cols");
    return shape_[1];
  }

  bool is_scalar() const { return size() == 1; }

  double scalar_value() const {
    if (!is_scalar()) throw std::logic_error("Tensor: not a scalar");
    return values_[0];
  }

  double* data() { return values_.data(); }
  const double* data() const { return values_.data(); }

  double& operator[](std::size_t i) { return values_[i]; }
  double operator[](std::size_t i) const { return values_[i]; }

  double& at(std::size_t r, std::size_t c) {
    require_rank2("at");
    return values_[r * shape_[1] + c];
  }
  double at(std::size_t r, std::size_t c) const {
    require_rank2("at");
    return values_[r * shape_[1] + c];
  }

  std::vector<double>& values() { return values_; }
  const std::vector<double>& values() const { return values_; }

  bool same_shape(const Tensor& o) const { return shape_ == o.shape_; }

  bool all_finite() const {
    for (double v : values_) {
      if (!std::isfinite(v)) return false;
    }
    return true;
  }

  void fill(double v) { std::fill(values_.begin(), values_.end(), v); }

  // Row slice of a rank-2 tensor as a new {1, cols} tensor.
  Tensor row(std::size_t r) const {
    require_rank2("row");
    Tensor out({1, shape_[1]});
    const double* src = values_.data() + r * shape_[1];
    std::copy(src, src + shape_[1], out.data());
    return out;
  }

 private:
  static std::size_t count(const std::vector<std::size_t>& shape) {
    std::size_t n = 1;
    for (std::size_t s : shape) n *= s;
    return shape.empty() ? 1 : n;
  }

  void require_rank2(const char* what) const {
    if (shape_.size() != 2) {
      throw std::logic_error(std::string("Tensor::") + what + ": rank-2 required");
    }
  }

  std::vector<std::size_t> shape_;
  std::vector<double> values_;
};

}  // namespace miue
