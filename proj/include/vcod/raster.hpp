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

#include "vcod/types.hpp"

#include <string>
#include <utility>

namespace vcod {

/// Thresholding policy for turning grayscale frames into masks.
struct BinarizePolicy {
  enum class Kind { Fixed, Adaptive };
  Kind kind = Kind::Fixed;
  double tau = 0.5;  // used by Fixed

  static BinarizePolicy fixed(double tau) { return {Kind::Fixed, tau}; }
  static BinarizePolicy adaptive() { return {Kind::Adaptive, 0.0}; }

  /// Parses "fixed:<t>" or "adaptive"; throws std::invalid_argument otherwise.
  static BinarizePolicy parse(const std::string& text);
  std::string to_string() const;
};

/// Fixed: bit = value >= tau. Adaptive: tau = min(2 * mean(frame), 1 - eps),
/// then bit = value >= tau.
BinaryMask binarize(const GrayFrame& frame, const BinarizePolicy& policy);

/// Deterministic connected-component labeling: components are numbered 1..K
/// by the row-major order of their first pixel. `connectivity` is 4 or 8.
InstanceMask connected_components(const BinaryMask& mask, int connectivity);

/// Round-half-up arithmetic mean of foreground (row, col) indices.
/// Throws EmptyMaskError for all-background masks.
std::pair<int, int> centroid(const BinaryMask& mask);

/// Tight inclusive bounding box over the foreground.
/// Throws EmptyMaskError for all-background masks.
BBox bbox_of(const BinaryMask& mask);

}  // namespace vcod
