// Copyright 2026 the vcod-bench authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "vcod/filter.hpp"

#include <cmath>
#include <stdexcept>

namespace vcod {
namespace {

constexpr int kRadius = 3;

Eigen::Matrix<double, 7, 1> gaussian_kernel_1d(double sigma) {
  if (!(sigma > 0.0)) throw std::invalid_argument("gaussian sigma must be positive");
  Eigen::Matrix<double, 7, 1> k;
  for (int i = -kRadius; i <= kRadius; ++i) {
    k(i + kRadius) = std::exp(-(i * i) / (2.0 * sigma * sigma));
  }
  k /= k.sum();
  return k;
}

}  // namespace

Eigen::Matrix<double, 7, 7> gaussian_kernel_7x7(double sigma) {
  // Outer product of the normalized 1-D kernel; sums to 1 and equals the
  // jointly normalized 2-D kernel.
  const auto k = gaussian_kernel_1d(sigma);
  return k * k.transpose();
}

RealField gaussian_filter_7x7(const RealField& field, double sigma) {
  const auto k = gaussian_kernel_1d(sigma);
  const Eigen::Index rows = field.rows();
  const Eigen::Index cols = field.cols();

  // Separable convolution with zero padding: horizontal, then vertical.
  RealField tmp = RealField::Zero(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (Eigen::Index c = 0; c < cols; ++c) {
      double acc = 0.0;
      const Eigen::Index lo = std::max<Eigen::Index>(-kRadius, -c);
      const Eigen::Index hi = std::min<Eigen::Index>(kRadius, cols - 1 - c);
      for (Eigen::Index d = lo; d <= hi; ++d) acc += k(d + kRadius) * field(r, c + d);
      tmp(r, c) = acc;
    }
  }
  RealField out = RealField::Zero(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const Eigen::Index lo = std::max<Eigen::Index>(-kRadius, -r);
    const Eigen::Index hi = std::min<Eigen::Index>(kRadius, rows - 1 - r);
    for (Eigen::Index c = 0; c < cols; ++c) {
      double acc = 0.0;
      for (Eigen::Index d = lo; d <= hi; ++d) acc += k(d + kRadius) * tmp(r + d, c);
      out(r, c) = acc;
    }
  }
  return out;
}

}  // namespace vcod
