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

#include "vcod/distance.hpp"

#include <cmath>
#include <vector>

namespace vcod {
namespace {

// Lower-envelope pass along one column. Parabolas f_v(r) = (r - v)^2 + w[v]
// are added in increasing vertex order; interval boundaries are kept as exact
// rationals (num/den, den > 0) so that queries landing exactly on a boundary
// resolve to the earlier parabola, i.e. the smallest row among equidistant
// candidates.
struct Envelope {
  std::vector<std::int64_t> vertex;
  std::vector<std::int64_t> z_num;  // z[k] = left boundary of vertex[k]'s interval
  std::vector<std::int64_t> z_den;  // den 0 encodes -infinity

  void reset() {
    vertex.clear();
    z_num.clear();
    z_den.clear();
  }
};

// Intersection of parabolas at vertices p < q with offsets wp, wq:
// s = (q^2 + wq - p^2 - wp) / (2 (q - p)).
inline void intersect(std::int64_t p, std::int64_t wp, std::int64_t q, std::int64_t wq,
                      std::int64_t& num, std::int64_t& den) {
  num = q * q + wq - p * p - wp;
  den = 2 * (q - p);
}

// a/b <= c/d with b > 0 and d > 0 (d == 0 means c/d = -infinity).
inline bool rational_le(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  if (d == 0) return false;  // nothing is <= -infinity
  return a * d <= c * b;
}

}  // namespace

DistanceField euclidean_distance_transform(const BinaryMask& mask) {
  const Eigen::Index rows = mask.rows();
  const Eigen::Index cols = mask.cols();
  if (!mask.any()) throw EmptyMaskError("distance transform of an all-background mask");

  // Pass 1: nearest foreground column within each row; ties resolve left.
  Int64Array ncol(rows, cols);
  std::vector<bool> row_has_fg(static_cast<size_t>(rows), false);
  for (Eigen::Index r = 0; r < rows; ++r) {
    std::int64_t last = -1;
    for (Eigen::Index c = 0; c < cols; ++c) {
      if (mask(r, c)) last = c;
      ncol(r, c) = last;
    }
    row_has_fg[static_cast<size_t>(r)] = last >= 0;
    std::int64_t next = -1;
    for (Eigen::Index c = cols - 1; c >= 0; --c) {
      if (mask(r, c)) next = c;
      const std::int64_t left = ncol(r, c);
      if (left < 0) {
        ncol(r, c) = next;
      } else if (next >= 0 && next - c < c - left) {
        ncol(r, c) = next;  // strictly closer on the right; ties keep the left pick
      }
    }
  }

  DistanceField field;
  field.dist2.resize(rows, cols);
  field.nearest.resize(rows, cols);

  // Pass 2: per column, lower envelope over rows. The winning vertex is the
  // smallest row among equidistant candidates, and pass 1 already picked the
  // smallest column within each row, so `nearest` is the smallest row-major
  // index of the tie set.
  Envelope env;
  std::vector<std::int64_t> w(static_cast<size_t>(rows));
  for (Eigen::Index c = 0; c < cols; ++c) {
    env.reset();
    for (Eigen::Index r = 0; r < rows; ++r) {
      if (!row_has_fg[static_cast<size_t>(r)]) continue;
      const std::int64_t d = c - ncol(r, c);
      w[static_cast<size_t>(r)] = d * d;
      if (env.vertex.empty()) {
        env.vertex.push_back(r);
        env.z_num.push_back(0);
        env.z_den.push_back(0);  // -infinity
        continue;
      }
      std::int64_t num = 0;
      std::int64_t den = 1;
      while (!env.vertex.empty()) {
        const std::int64_t top = env.vertex.back();
        intersect(top, w[static_cast<size_t>(top)], r, w[static_cast<size_t>(r)], num, den);
        if (env.vertex.size() == 1 ||
            !rational_le(num, den, env.z_num.back(), env.z_den.back())) {
          break;
        }
        env.vertex.pop_back();
        env.z_num.pop_back();
        env.z_den.pop_back();
      }
      env.vertex.push_back(r);
      env.z_num.push_back(num);
      env.z_den.push_back(den);
    }

    size_t k = 0;
    for (Eigen::Index r = 0; r < rows; ++r) {
      // advance while z[k+1] < r, exactly
      while (k + 1 < env.vertex.size() &&
             env.z_num[k + 1] < r * env.z_den[k + 1]) {
        ++k;
      }
      const std::int64_t v = env.vertex[k];
      const std::int64_t dr = r - v;
      field.dist2(r, c) = dr * dr + w[static_cast<size_t>(v)];
      field.nearest(r, c) = v * cols + ncol(v, c);
    }
  }

  field.distance = field.dist2.cast<double>().sqrt();
  return field;
}

}  // namespace vcod
