#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace homrand {

using Eigen::MatrixXd;
using Eigen::VectorXd;

/// Dense rank-3 array of doubles, zero-initialized.
class Tensor3 {
 public:
  Tensor3() = default;
  Tensor3(int d0, int d1, int d2)
      : d0_(d0), d1_(d1), d2_(d2),
        v_(static_cast<size_t>(d0) * d1 * d2, 0.0) {
    if (d0 < 0 || d1 < 0 || d2 < 0) throw std::invalid_argument("Tensor3: negative dim");
  }

  double& operator()(int i, int j, int k) { return v_[idx(i, j, k)]; }
  double operator()(int i, int j, int k) const { return v_[idx(i, j, k)]; }

  int dim0() const { return d0_; }
  int dim1() const { return d1_; }
  int dim2() const { return d2_; }
  bool cubic() const { return d0_ == d1_ && d1_ == d2_; }

 private:
  size_t idx(int i, int j, int k) const {
    return (static_cast<size_t>(i) * d1_ + j) * d2_ + k;
  }
  int d0_ = 0, d1_ = 0, d2_ = 0;
  std::vector<double> v_;
};

/// Dense rank-4 array of doubles, zero-initialized.
class Tensor4 {
 public:
  Tensor4() = default;
  Tensor4(int d0, int d1, int d2, int d3)
      : d0_(d0), d1_(d1), d2_(d2), d3_(d3),
        v_(static_cast<size_t>(d0) * d1 * d2 * d3, 0.0) {}

  double& operator()(int i, int j, int k, int l) { return v_[idx(i, j, k, l)]; }
  double operator()(int i, int j, int k, int l) const { return v_[idx(i, j, k, l)]; }

  int dim0() const { return d0_; }
  int dim1() const { return d1_; }
  int dim2() const { return d2_; }
  int dim3() const { return d3_; }

 private:
  size_t idx(int i, int j, int k, int l) const {
    return ((static_cast<size_t>(i) * d1_ + j) * d2_ + k) * d3_ + l;
  }
  int d0_ = 0, d1_ = 0, d2_ = 0, d3_ = 0;
  std::vector<double> v_;
};

}  // namespace homrand
