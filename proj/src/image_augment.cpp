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

#include "aaug/image_augment.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "aaug/errors.hpp"

namespace aaug {

void validate_affine_params(const AffineAugParams& p) {
  auto prob = [](double v) { return v >= 0.0 && v <= 1.0; };
  if (!prob(p.p_reflect_x) || !prob(p.p_reflect_y)) {
    throw InvalidArgument("affine: reflection probabilities must lie in [0, 1]");
  }
  if (!(p.scale_min > 0.0 && p.scale_min <= p.scale_max)) {
    throw InvalidArgument("affine: scale range must be positive and ordered");
  }
  if (!(p.rotation_min_deg <= p.rotation_max_deg) ||
      !(p.translation_min_px <= p.translation_max_px)) {
    throw InvalidArgument("affine: ranges must be ordered");
  }
}

AffineDraw draw_affine(const AffineAugParams& p, RngStream& rng) {
  validate_affine_params(p);
  AffineDraw d;
  d.reflect_x = rng.bernoulli(p.p_reflect_x);
  d.reflect_y = rng.bernoulli(p.p_reflect_y);
  d.scale_x = rng.uniform(p.scale_min, p.scale_max);
  d.scale_y = rng.uniform(p.scale_min, p.scale_max);
  d.rotation_deg = rng.uniform(p.rotation_min_deg, p.rotation_max_deg);
  d.translate_x = rng.uniform(p.translation_min_px, p.translation_max_px);
  d.translate_y = rng.uniform(p.translation_min_px, p.translation_max_px);
  return d;
}

Image apply_affine(const Image& img, const AffineDraw& d) {
  if (img.empty()) throw InvalidArgument("affine: empty image");
  if (!(d.scale_x > 0.0) || !(d.scale_y > 0.0)) throw InvalidArgument("affine: scale must be positive");

  const double cx = (static_cast<double>(img.width) - 1.0) / 2.0;
  const double cy = (static_cast<double>(img.height) - 1.0) / 2.0;
  const double theta = d.rotation_deg * std::numbers::pi / 180.0;
  const double cs = std::cos(theta);
  const double sn = std::sin(theta);

  // Forward: p' = c + t + R S F (p - c). Each output pixel pulls from the
  // inverse image of its centre.
  Image out(img.width, img.height);
  for (std::size_t row = 0; row < img.height; ++row) {
    for (std::size_t col = 0; col < img.width; ++col) {
      const double ux = static_cast<double>(col) - cx - d.translate_x;
      const double uy = static_cast<double>(row) - cy - d.translate_y;
      // R^-1
      double vx = cs * ux + sn * uy;
      double vy = -sn * ux + cs * uy;
      // S^-1, F^-1
      vx /= d.scale_x;
      vy /= d.scale_y;
      if (d.reflect_x) vx = -vx;
      if (d.reflect_y) vy = -vy;
      const double sx = vx + cx;
      const double sy = vy + cy;

      const double fx = std::floor(sx);
      const double fy = std::floor(sy);
      const double tx = sx - fx;
      const double ty = sy - fy;
      auto pixel = [&](double x, double y) -> double {
        if (x < 0.0 || y < 0.0 || x > static_cast<double>(img.width - 1) ||
            y > static_cast<double>(img.height - 1)) {
          return 0.0;
        }
        return img.at(static_cast<std::size_t>(y), static_cast<std::size_t>(x));
      };
      double v = (1.0 - tx) * (1.0 - ty) * pixel(fx, fy);
      if (tx > 0.0) v += tx * (1.0 - ty) * pixel(fx + 1.0, fy);
      if (ty > 0.0) v += (1.0 - tx) * ty * pixel(fx, fy + 1.0);
      if (tx > 0.0 && ty > 0.0) v += tx * ty * pixel(fx + 1.0, fy + 1.0);
      out.at(row, col) = static_cast<std::uint8_t>(std::clamp(std::lround(v), 0L, 255L));
    }
  }
  return out;
}

Image random_affine(const Image& img, const AffineAugParams& p, RngStream& rng) {
  return apply_affine(img, draw_affine(p, rng));
}

std::vector<Image> standard_img_protocol(const Image& img, std::size_t copies, RngStream& rng,
                                         const AffineAugParams& p) {
  if (copies < 1) throw InvalidArgument("standard_img_protocol: copies must be >= 1");
  std::vector<Image> out;
  out.reserve(copies);
  for (std::size_t i = 0; i < copies; ++i) out.push_back(random_affine(img, p, rng));
  return out;
}

}  // namespace aaug
