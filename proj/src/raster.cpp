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

#include "vcod/raster.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace vcod {

BinarizePolicy BinarizePolicy::parse(const std::string& text) {
  if (text == "adaptive") return adaptive();
  if (text.rfind("fixed:", 0) == 0) {
    size_t pos = 0;
    double tau = std::stod(text.substr(6), &pos);
    if (pos != text.size() - 6 || tau < 0.0 || tau > 1.0) {
      throw std::invalid_argument("bad fixed threshold in '" + text + "'");
    }
    return fixed(tau);
  }
  throw std::invalid_argument("unknown binarize policy '" + text + "' (want fixed:<t> or adaptive)");
}

std::string BinarizePolicy::to_string() const {
  if (kind == Kind::Adaptive) return "adaptive";
  return "fixed:" + std::to_string(tau);
}

BinaryMask binarize(const GrayFrame& frame, const BinarizePolicy& policy) {
  double tau = policy.tau;
  if (policy.kind == BinarizePolicy::Kind::Adaptive) {
    tau = std::min(2.0 * frame.mean(), 1.0 - std::numeric_limits<double>::epsilon());
  } else if (tau < 0.0 || tau > 1.0) {
    throw std::invalid_argument("fixed threshold must lie in [0,1]");
  }
  return frame >= tau;
}

InstanceMask connected_components(const BinaryMask& mask, int connectivity) {
  if (connectivity != 4 && connectivity != 8) {
    throw std::invalid_argument("connectivity must be 4 or 8");
  }
  const Eigen::Index rows = mask.rows();
  const Eigen::Index cols = mask.cols();
  InstanceMask out;
  out.labels = LabelArray::Zero(rows, cols);

  static constexpr int dr8[] = {-1, -1, -1, 0, 0, 1, 1, 1};
  static constexpr int dc8[] = {-1, 0, 1, -1, 1, -1, 0, 1};
  static constexpr int dr4[] = {-1, 0, 0, 1};
  static constexpr int dc4[] = {0, -1, 1, 0};
  const int* dr = connectivity == 4 ? dr4 : dr8;
  const int* dc = connectivity == 4 ? dc4 : dc8;
  const int ndirs = connectivity;

  std::vector<Eigen::Index> stack;
  std::int32_t next = 0;
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (Eigen::Index c = 0; c < cols; ++c) {
      if (!mask(r, c) || out.labels(r, c) != 0) continue;
      ++next;
      out.labels(r, c) = next;
      stack.push_back(r * cols + c);
      while (!stack.empty()) {
        const Eigen::Index p = stack.back();
        stack.pop_back();
        const Eigen::Index pr = p / cols;
        const Eigen::Index pc = p % cols;
        for (int k = 0; k < ndirs; ++k) {
          const Eigen::Index nr = pr + dr[k];
          const Eigen::Index nc = pc + dc[k];
          if (nr < 0 || nr >= rows || nc < 0 || nc >= cols) continue;
          if (!mask(nr, nc) || out.labels(nr, nc) != 0) continue;
          out.labels(nr, nc) = next;
          stack.push_back(nr * cols + nc);
        }
      }
    }
  }
  out.instance_count = next;
  return out;
}

std::pair<int, int> centroid(const BinaryMask& mask) {
  const Eigen::Index rows = mask.rows();
  const Eigen::Index cols = mask.cols();
  std::int64_t sum_r = 0;
  std::int64_t sum_c = 0;
  std::int64_t n = 0;
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (Eigen::Index c = 0; c < cols; ++c) {
      if (mask(r, c)) {
        sum_r += r;
        sum_c += c;
        ++n;
      }
    }
  }
  if (n == 0) throw EmptyMaskError("centroid of an all-background mask");
  const int cr = static_cast<int>(std::floor(static_cast<double>(sum_r) / n + 0.5));
  const int cc = static_cast<int>(std::floor(static_cast<double>(sum_c) / n + 0.5));
  return {cr, cc};
}

BBox bbox_of(const BinaryMask& mask) {
  const Eigen::Index rows = mask.rows();
  const Eigen::Index cols = mask.cols();
  BBox box{static_cast<int>(cols), static_cast<int>(rows), -1, -1};
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (Eigen::Index c = 0; c < cols; ++c) {
      if (!mask(r, c)) continue;
      box.x_min = std::min(box.x_min, static_cast<int>(c));
      box.x_max = std::max(box.x_max, static_cast<int>(c));
      box.y_min = std::min(box.y_min, static_cast<int>(r));
      box.y_max = std::max(box.y_max, static_cast<int>(r));
    }
  }
  if (box.x_max < 0) throw EmptyMaskError("bounding box of an all-background mask");
  return box;
}

}  // namespace vcod
