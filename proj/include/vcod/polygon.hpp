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

#include <vector>

namespace vcod {

/// Traces region boundaries as closed rings on the pixel-corner lattice
/// (crack following along pixel edges), then simplifies each ring with
/// Douglas-Peucker at the given tolerance. Tolerance 0 preserves the region
/// exactly: rasterizing the result reproduces the mask bit for bit.
///
/// Outer rings are emitted with positive shoelace area in (x right, y down)
/// coordinates, holes with negative area and `hole = true`. Ring order and
/// starting vertices are deterministic (row-major discovery).
std::vector<Polygon> mask_to_polygons(const BinaryMask& mask, double tolerance);

/// Rasterizes rings with the even-odd rule sampled at pixel centers
/// (c + 0.5, r + 0.5). Vertices must lie inside [0, width] x [0, height];
/// out-of-bounds vertices raise std::invalid_argument. The crossing tests
/// are exact integer arithmetic.
BinaryMask polygons_to_mask(const std::vector<Polygon>& polygons, int width, int height);

/// Douglas-Peucker simplification of an open polyline; endpoints are kept.
std::vector<std::array<int, 2>> simplify_polyline(const std::vector<std::array<int, 2>>& points,
                                                  double tolerance);

/// Twice the signed shoelace area of a ring in (x right, y down) coordinates.
long long ring_signed_area2(const std::vector<std::array<int, 2>>& vertices);

}  // namespace vcod
