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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cmath>
#include <cstdlib>
#include <numbers>

#include "aaug/errors.hpp"
#include "aaug/image_augment.hpp"

using namespace aaug;

namespace {

Image random_image(std::size_t w, std::size_t h, std::uint64_t seed) {
  Image img(w, h);
  RngStream rng(seed);
  for (auto& p : img.pixels) p = static_cast<std::uint8_t>(rng.uniform_int(0, 255));
  return img;
}

// Builds the forward 2x2 matrix R*S*F, inverts it by cofactors and samples
// bilinearly with zero fill.
Image oracle_affine(const Image& img, const AffineDraw& d) {
  const double th = d.rotation_deg * std::numbers::pi / 180.0;
  const double fx = d.reflect_x ? -1.0 : 1.0;
  const double fy = d.reflect_y ? -1.0 : 1.0;
  const std::array<double, 4> m{std::cos(th) * d.scale_x * fx, -std::sin(th) * d.scale_y * fy,
                                std::sin(th) * d.scale_x * fx, std::cos(th) * d.scale_y * fy};
  const double det = m[0] * m[3] - m[1] * m[2];
  const std::array<double, 4> inv{m[3] / det, -m[1] / det, -m[2] / det, m[0] / det};
  const double cx = (img.width - 1) / 2.0, cy = (img.height - 1) / 2.0;
  auto get = [&](long x, long y) -> double {
    if (x < 0 || y < 0 || x >= static_cast<long>(img.width) || y >= static_cast<long>(img.height)) return 0.0;
    return img.at(static_cast<std::size_t>(y), static_cast<std::size_t>(x));
  };
  Image out(img.width, img.height);
  for (std::size_t r = 0; r < img.height; ++r) {
    for (std::size_t c = 0; c < img.width; ++c) {
      const double ux = c - cx - d.translate_x, uy = r - cy - d.translate_y;
      const double sx = inv[0] * ux + inv[1] * uy + cx;
      const double sy = inv[2] * ux + inv[3] * uy + cy;
      const long x0 = static_cast<long>(std::floor(sx)), y0 = static_cast<long>(std::floor(sy));
      const double tx = sx - x0, ty = sy - y0;
      const double v = (1 - tx) * (1 - ty) * get(x0, y0) + tx * (1 - ty) * get(x0 + 1, y0) +
                       (1 - tx) * ty * get(x0, y0 + 1) + tx * ty * get(x0 + 1, y0 + 1);
      out.at(r, c) = static_cast<std::uint8_t>(std::lround(v));
    }
  }
  return out;
}

}  // namespace

TEST_CASE("identity draw") {
  const Image img = random_image(37, 21, 1);
  CHECK(apply_affine(img, AffineDraw{}) == img);
}

TEST_CASE("reflections") {
  const Image img = random_image(16, 9, 2);
  AffineDraw flip;
  flip.reflect_x = true;
  const Image once = apply_affine(img, flip);
  for (std::size_t r = 0; r < img.height; ++r)
    for (std::size_t c = 0; c < img.width; ++c) CHECK(once.at(r, c) == img.at(r, img.width - 1 - c));
  CHECK(apply_affine(once, flip) == img);

  AffineDraw vflip;
  vflip.reflect_y = true;
  const Image v = apply_affine(img, vflip);
  for (std::size_t r = 0; r < img.height; ++r)
    for (std::size_t c = 0; c < img.width; ++c) CHECK(v.at(r, c) == img.at(img.height - 1 - r, c));
}

TEST_CASE("integer translation") {
  const Image img = random_image(20, 15, 3);
  AffineDraw t;
  t.translate_x = 2.0;
  t.translate_y = 3.0;
  const Image out = apply_affine(img, t);
  for (std::size_t r = 0; r < img.height; ++r) {
    for (std::size_t c = 0; c < img.width; ++c) {
      if (r < 3 || c < 2) {
        CHECK(out.at(r, c) == 0);
      } else {
        CHECK(out.at(r, c) == img.at(r - 3, c - 2));
      }
    }
  }
}

TEST_CASE("matches the matrix oracle") {
  const Image img = random_image(33, 24, 4);
  RngStream rng(5);
  const AffineAugParams p;
  for (int i = 0; i < 40; ++i) {
    const AffineDraw d = draw_affine(p, rng);
    const Image got = apply_affine(img, d);
    const Image want = oracle_affine(img, d);
    int worst = 0;
    for (std::size_t k = 0; k < got.pixels.size(); ++k) {
      worst = std::max(worst, std::abs(int(got.pixels[k]) - int(want.pixels[k])));
    }
    CHECK(worst <= 1);
  }
}

TEST_CASE("draw ranges") {
  RngStream rng(6);
  const AffineAugParams p;
  int rx = 0;
  for (int i = 0; i < 400; ++i) {
    const AffineDraw d = draw_affine(p, rng);
    rx += d.reflect_x;
    CHECK(d.scale_x >= 1.0);
    CHECK(d.scale_y <= 2.0);
    CHECK(std::abs(d.rotation_deg) <= 10.0);
    CHECK(d.translate_x >= 0.0);
    CHECK(d.translate_y <= 5.0);
  }
  CHECK(rx > 150);
  CHECK(rx < 250);

  AffineAugParams bad;
  bad.scale_min = 0.0;
  CHECK_THROWS_AS(draw_affine(bad, rng), InvalidArgument);
  bad = {};
  bad.p_reflect_y = 1.5;
  CHECK_THROWS_AS(draw_affine(bad, rng), InvalidArgument);
}

TEST_CASE("standard_img_protocol") {
  const Image img = random_image(40, 30, 7);
  RngStream a(8), b(8);
  const auto out = standard_img_protocol(img, 10, a);
  REQUIRE(out.size() == 10);
  const auto again = standard_img_protocol(img, 10, b);
  for (std::size_t i = 0; i < 10; ++i) {
    CHECK(out[i].width == img.width);
    CHECK(out[i].height == img.height);
    CHECK(out[i] == again[i]);
  }
  CHECK_THROWS_AS(standard_img_protocol(img, 0, a), InvalidArgument);
  CHECK_THROWS_AS(apply_affine(Image{}, AffineDraw{}), InvalidArgument);
}
