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

namespace vcod {

/// Exact Euclidean distance transform with nearest-foreground indices.
///
/// Squared distances are computed in integer arithmetic (two-pass lower
/// envelope per dimension), so they match an all-pairs brute-force scan
/// exactly. When several foreground pixels are equidistant, `nearest` holds
/// the one with the smallest row-major index. Throws EmptyMaskError when the
/// mask has no foreground.
DistanceField euclidean_distance_transform(const BinaryMask& mask);

}  // namespace vcod
