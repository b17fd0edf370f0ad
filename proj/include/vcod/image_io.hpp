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

namespace vcod {

/// Image decode/encode failure (missing file, bad encoding, zero-sized image).
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Loads a PNG or JPEG as a normalized grayscale frame: value = intensity/255.
/// Color inputs are converted to luma; 16-bit PNGs are reduced to 8 bits.
GrayFrame load_gray(const std::string& path);

/// Loads a mask image: foreground iff 8-bit intensity >= 128. Tolerates
/// anti-aliased exports.
BinaryMask load_binary_mask(const std::string& path);

/// Loads an instance label image: 8-bit intensity taken verbatim as the
/// instance label (0 = background).
InstanceMask load_instance_mask(const std::string& path);

/// Writes a mask as an 8-bit grayscale PNG with values 0/255.
void save_mask_png(const std::string& path, const BinaryMask& mask);

/// Writes instance labels as an 8-bit grayscale PNG with values 0..K.
/// Labels above 255 are rejected.
void save_label_png(const std::string& path, const LabelArray& labels);

/// Writes a [0,1] frame as an 8-bit grayscale PNG, rounding value*255.
void save_gray_png(const std::string& path, const GrayFrame& frame);

}  // namespace vcod
