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

#include <algorithm>
#include <cmath>

#include "aaug/errors.hpp"
#include "aaug/protocols.hpp"
#include "oracles.hpp"

using namespace aaug;

namespace {

AudioSignal noise_clip(std::size_t n, int rate, std::uint64_t seed) {
  AudioSignal s{std::vector<double>(n), rate};
  RngStream rng(seed);
  for (double& v : s.samples) v = rng.uniform(-0.5, 0.5);
  return s;
}

Spectrogram spec_of(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  Spectrogram s(rows, cols, 31.25, 0.008, 16000);
  RngStream rng(seed);
  for (double& v : s.data()) v = rng.uniform(0.0, 10.0);
  return s;
}

}  // namespace

TEST_CASE("tokens") {
  for (auto name : {ProtocolName::NoAug, ProtocolName::StandardImg, ProtocolName::StandardSgn,
                    ProtocolName::Signal, ProtocolName::Spectro}) {
    CHECK(parse_protocol(protocol_token(name)) == name);
  }
  CHECK(parse_protocol("signal") == ProtocolName::Signal);
  CHECK_FALSE(parse_protocol("Signal").has_value());
  CHECK(protocol_domain(ProtocolName::Spectro) == Domain::Spectrogram);
  CHECK(protocol_domain(ProtocolName::StandardImg) == Domain::Image);
  CHECK(protocol_domain(ProtocolName::StandardSgn) == Domain::Audio);
}

TEST_CASE("std-sgn draws") {
  StdSgnParams off;
  off.p_apply = 0.0;
  RngStream rng(1);
  const StdSgnDraw none = draw_std_sgn(off, rng);
  CHECK_FALSE(none.any());
  const AudioSignal s = noise_clip(4000, 8000, 2);
  RngStream noise(3);
  CHECK(apply_std_sgn(s, none, off, noise) == s);

  // Gates never shift where the values come from.
  StdSgnParams on;
  on.p_apply = 1.0;
  RngStream a(9), b(9);
  const StdSgnDraw da = draw_std_sgn(off, a);
  const StdSgnDraw db = draw_std_sgn(on, b);
  CHECK(da.speed == db.speed);
  CHECK(da.semitones == db.semitones);
  CHECK(da.shift_seconds == db.shift_seconds);
  CHECK(db.any());

  RngStream r(4);
  StdSgnParams p;
  for (int i = 0; i < 200; ++i) {
    const StdSgnDraw d = draw_std_sgn(p, r);
    CHECK(d.speed >= 0.8);
    CHECK(d.speed <= 1.2);
    CHECK(std::abs(d.semitones) <= 2.0);
    CHECK(std::abs(d.volume_db) <= 3.0);
    CHECK(d.snr_db >= 0.0);
    CHECK(d.snr_db <= 10.0);
    CHECK(std::abs(d.shift_seconds) <= 0.005);
  }
}

TEST_CASE("time_shift_seconds is a rotation") {
  const AudioSignal s = noise_clip(1000, 8000, 5);
  const AudioSignal delayed = time_shift_seconds(s, 0.001);  // 8 samples
  for (std::size_t i = 0; i < s.size(); ++i) CHECK(delayed.samples[(i + 8) % s.size()] == s.samples[i]);
  const AudioSignal advanced = time_shift_seconds(s, -0.001);
  for (std::size_t i = 0; i < s.size(); ++i) CHECK(advanced.samples[i] == s.samples[(i + 8) % s.size()]);
  CHECK(time_shift_seconds(s, 0.0) == s);
  auto sorted = [](std::vector<double> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  CHECK(sorted(time_shift_seconds(s, 0.0042).samples) == sorted(s.samples));
}

TEST_CASE("std_signal_protocol") {
  const AudioSignal s = noise_clip(8000, 8000, 6);
  RngStream a(10), b(10);
  const auto out = std_signal_protocol(s, a);
  REQUIRE(out.size() == 10);
  const auto again = std_signal_protocol(s, b);
  for (std::size_t i = 0; i < out.size(); ++i) {
    CHECK(out[i] == again[i]);
    CHECK(out[i].sample_rate == s.sample_rate);
    CHECK(std::all_of(out[i].samples.begin(), out[i].samples.end(), [](double v) { return std::isfinite(v); }));
  }
  StdSgnParams off;
  off.p_apply = 0.0;
  off.copies = 3;
  RngStream c(11);
  for (const auto& copy : std_signal_protocol(s, c, off)) CHECK(copy == s);
}

TEST_CASE("apply_protocol counts") {
  const AudioSignal clip = noise_clip(8000, 16000, 7);
  const std::vector<Item> audio_pool{noise_clip(8000, 16000, 8)};
  const Spectrogram spec = spec_of(64, 40, 9);
  const std::vector<Item> spec_pool{spec_of(64, 40, 10)};
  const Image img(30, 20, 100);

  RngStream rng(12);
  for (int trial = 0; trial < 3; ++trial) {
    AugmentationProtocol p;
    p.name = ProtocolName::NoAug;
    auto none = apply_protocol(clip, p, {}, rng);
    REQUIRE(none.size() == 1);
    CHECK(none[0].transform == "identity");
    CHECK(std::get<AudioSignal>(none[0].item) == clip);

    p.name = ProtocolName::Signal;
    CHECK(apply_protocol(clip, p, audio_pool, rng).size() == 12);
    p.name = ProtocolName::StandardSgn;
    CHECK(apply_protocol(clip, p, {}, rng).size() == 11);
    p.name = ProtocolName::Spectro;
    CHECK(apply_protocol(spec, p, spec_pool, rng).size() == 7);
    p.name = ProtocolName::StandardImg;
    p.img_copies = 4;
    const auto imgs = apply_protocol(img, p, {}, rng);
    CHECK(imgs.size() == 5);
    CHECK(derived_count(p) == 4);
  }
}

TEST_CASE("apply_protocol errors") {
  const AudioSignal clip = noise_clip(800, 8000, 7);
  RngStream rng(13);
  AugmentationProtocol p;
  p.name = ProtocolName::Signal;
  CHECK_THROWS_WITH_AS(apply_protocol(clip, p, {}, rng), doctest::Contains("empty same-class pool"),
                       InvalidArgument);
  p.name = ProtocolName::Spectro;
  CHECK_THROWS_WITH_AS(apply_protocol(clip, p, {spec_of(8, 8, 1)}, rng), doctest::Contains("domain mismatch"),
                       InvalidArgument);
  p.name = ProtocolName::StandardImg;
  CHECK_THROWS_AS(apply_protocol(clip, p, {}, rng), InvalidArgument);
}

TEST_CASE("apply_protocol determinism") {
  const AudioSignal clip = noise_clip(4000, 16000, 14);
  const std::vector<Item> pool{noise_clip(3000, 16000, 15), noise_clip(5000, 16000, 16)};
  AugmentationProtocol p;
  p.name = ProtocolName::Signal;
  RngStream a(77), b(77), c(78);
  const auto x = apply_protocol(clip, p, pool, a);
  const auto y = apply_protocol(clip, p, pool, b);
  const auto z = apply_protocol(clip, p, pool, c);
  REQUIRE(x.size() == y.size());
  bool any_diff = false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    CHECK(x[i].transform == y[i].transform);
    CHECK(std::get<AudioSignal>(x[i].item) == std::get<AudioSignal>(y[i].item));
    any_diff = any_diff || !(std::get<AudioSignal>(x[i].item) == std::get<AudioSignal>(z[i].item));
  }
  CHECK(any_diff);
}
