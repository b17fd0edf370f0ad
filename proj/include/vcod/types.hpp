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

#pragma once

#include <Eigen/Dense>

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace vcod {

// All rasters are dense row-major grids indexed (row, col) with row 0 at the
// top. Flat (row-major) index of pixel (r, c) is r * cols + c.
using GrayFrame  = Eigen::Array<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using BinaryMask = Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using LabelArray = Eigen::Array<std::int32_t, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Int64Array = Eigen::Array<std::int64_t, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// A per-pixel real grid; same storage as a grayscale frame, values need not
/// lie in [0,1].
using RealField = GrayFrame;

/// Multi-instance labeling. 0 is background, instances are 1..instance_count
/// (contiguous for labelings produced by connected_components).
struct InstanceMask {
  LabelArray labels;
  int instance_count = 0;

  Eigen::Index rows() const { return labels.rows(); }
  Eigen::Index cols() const { return labels.cols(); }

  /// Binary mask of one instance label.
  BinaryMask instance(int label) const { return labels == label; }
};

/// Inclusive pixel-coordinate bounding box; x is column, y is row.
struct BBox {
  int x_min = 0;
  int y_min = 0;
  int x_max = 0;
  int y_max = 0;

  friend bool operator==(const BBox&, const BBox&) = default;
};

/// A closed ring of vertices on the integer pixel-corner lattice: pixel
/// (r, c) occupies the unit square [c, c+1] x [r, r+1]. The last vertex
/// connects back to the first. Outer boundaries carry positive shoelace
/// area in (x right, y down) coordinates; hole rings carry negative area
/// and have `hole` set.
struct Polygon {
  std::vector<std::array<int, 2>> vertices;  // (x, y)
  bool hole = false;
};

/// Exact Euclidean distance field over a mask: squared distances are exact
/// integers, `nearest` holds the row-major flat index of the nearest
/// foreground pixel (ties resolved to the smallest index).
struct DistanceField {
  Int64Array dist2;
  GrayFrame distance;
  Int64Array nearest;
};

/// Dimension mismatch between rasters that must agree.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Operation requires at least one foreground pixel.
class EmptyMaskError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline void require_same_shape(Eigen::Index r1, Eigen::Index c1, Eigen::Index r2,
                               Eigen::Index c2, const char* what) {
  if (r1 != r2 || c1 != c2) {
    throw DimensionError(std::string(what) + ": shape mismatch (" + std::to_string(r1) + "x" +
                         std::to_string(c1) + " vs " + std::to_string(r2) + "x" +
                         std::to_string(c2) + ")");
  }
}

}  // namespace vcod
