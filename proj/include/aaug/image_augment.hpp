/**
 * Copyright 2026 The aaug Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstddef>
#include <vector>

#include "aaug/image.hpp"
#include "aaug/rng.hpp"

namespace aaug {

struct AffineAugParams {
  double p_reflect_x = 0.5;
  double p_reflect_y = 0.5;
  double scale_min = 1.0;
  double scale_max = 2.0;
  double rotation_min_deg = -10.0;
  double rotation_max_deg = 10.0;
  double translation_min_px = 0.0;
  double translation_max_px = 5.0;
};

void validate_affine_params(const AffineAugParams& p);

// One concrete draw of the affine augmentation.
struct AffineDraw {
  bool reflect_x = false;  // left-right
  bool reflect_y = false;  // top-bottom
  double scale_x = 1.0;
  double scale_y = 1.0;
  double rotation_deg = 0.0;
  double translate_x = 0.0;  // columns
  double translate_y = 0.0;  // rows
};

AffineDraw draw_affine(const AffineAugParams& p, RngStream& rng);

/// Reflection, axis scaling and rotation about the image centre, then
/// translation, sampled bilinearly. Pixels that map outside the source are 0.
Image apply_affine(const Image& img, const AffineDraw& draw);
Image random_affine(const Image& img, const AffineAugParams& p, RngStream& rng);

std::vector<Image> standard_img_protocol(const Image& img, std::size_t copies, RngStream& rng,
                                         const AffineAugParams& p = {});

}  // namespace aaug
