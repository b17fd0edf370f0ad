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

#include "vcod/raster.hpp"
#include "vcod/types.hpp"

namespace vcod {

/// Parameters of the five-metric evaluation protocol.
struct MetricConfig {
  double alpha = 0.5;                  // structure-measure object/region balance
  double beta_sq = 1.0;                // weighted-F beta^2
  double wf_sigma = 5.0;               // Gaussian sigma of the error smoothing
  double wf_decay = 5.0;               // background distance-decay constant
  double epsilon = 2.220446049250313e-16;
  BinarizePolicy binarize_policy = BinarizePolicy::fixed(0.5);
};

/// Per-frame scores; every entry lies in [0,1].
struct FrameScores {
  double s_alpha = 0.0;
  double f_beta_w = 0.0;
  double mae = 0.0;
  double dice = 0.0;
  double iou = 0.0;
};

/// Mean absolute per-pixel error between a grayscale prediction and a binary
/// ground truth.
double mae(const GrayFrame& pred, const BinaryMask& gt);

/// 2|P∩G| / (|P|+|G|); 1 when both masks are empty.
double dice(const BinaryMask& pred, const BinaryMask& gt);

/// |P∩G| / |P∪G|; 1 when both masks are empty.
double iou(const BinaryMask& pred, const BinaryMask& gt);

/// Structure measure: mixes an object-aware mean/std similarity over
/// foreground and background with a region-aware quadrant similarity split at
/// the ground-truth centroid. All-background ground truth scores
/// 1 - mean(pred); all-foreground scores mean(pred).
double s_measure(const GrayFrame& pred, const BinaryMask& gt, const MetricConfig& cfg = {});

/// Weighted F-measure over dependency-weighted error fields: background
/// errors are substituted from the nearest foreground pixel, smoothed with a
/// 7x7 Gaussian, min-combined on foreground, and weighted by a distance decay
/// on background. Empty-foreground ground truth scores 0 (callers are
/// expected to flag such frames).
double weighted_f(const GrayFrame& pred, const BinaryMask& gt, const MetricConfig& cfg = {});

/// All five metrics for one frame pair; dice/iou binarize the prediction with
/// cfg.binarize_policy.
FrameScores eval_frame(const GrayFrame& pred, const BinaryMask& gt, const MetricConfig& cfg = {});

}  // namespace vcod
