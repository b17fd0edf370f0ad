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

/// The normalized 7x7 Gaussian kernel: entries proportional to
/// exp(-(dx^2 + dy^2) / (2 sigma^2)), scaled to sum to 1.
Eigen::Matrix<double, 7, 7> gaussian_kernel_7x7(double sigma);

/// Convolves a real grid with the normalized 7x7 Gaussian kernel, treating
/// everything outside the grid as zero. sigma must be positive.
RealField gaussian_filter_7x7(const RealField& field, double sigma);

}  // namespace vcod
