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

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "aaug/audio.hpp"
#include "aaug/image.hpp"
#include "aaug/image_augment.hpp"
#include "aaug/rng.hpp"
#include "aaug/signal_augment.hpp"
#include "aaug/spectro_augment.hpp"
#include "aaug/spectrogram.hpp"

namespace aaug {

enum class ProtocolName { NoAug, StandardImg, StandardSgn, Signal, Spectro };

// Command-line tokens: none, std-img, std-sgn, signal, spectro.
std::string_view protocol_token(ProtocolName name);
std::optional<ProtocolName> parse_protocol(std::string_view token);

enum class Domain { Audio, Spectrogram, Image };
// Item kind a protocol consumes. NoAUG accepts anything and reports Audio.
Domain protocol_domain(ProtocolName name);

struct StdSgnParams {
  double p_apply = 0.5;
  double speed_min = 0.8;
  double speed_max = 1.2;
  double semitones_min = -2.0;
  double semitones_max = 2.0;
  double volume_db_min = -3.0;
  double volume_db_max = 3.0;
  double snr_db_min = 0.0;
  double snr_db_max = 10.0;
  double shift_seconds_min = -0.005;
  double shift_seconds_max = 0.005;
  std::size_t copies = 10;
  PitchShiftParams pitch;
};

/// One output of the standard signal recipe, before it is applied.
struct StdSgnDraw {
  bool speed_on = false;
  double speed = 1.0;
  bool pitch_on = false;
  double semitones = 0.0;
  bool volume_on = false;
  double volume_db = 0.0;
  bool noise_on = false;
  double snr_db = 0.0;
  bool shift_on = false;
  double shift_seconds = 0.0;

  bool any() const { return speed_on || pitch_on || volume_on || noise_on || shift_on; }
};

StdSgnDraw draw_std_sgn(const StdSgnParams& p, RngStream& rng);
// Firing transforms run in order: speed, pitch, volume, noise, time shift.
AudioSignal apply_std_sgn(const AudioSignal& s, const StdSgnDraw& draw, const StdSgnParams& p,
                          RngStream& noise_rng);
// Circular shift by round(seconds * rate) samples; positive values delay.
AudioSignal time_shift_seconds(const AudioSignal& s, double seconds);

std::vector<AudioSignal> std_signal_protocol(const AudioSignal& s, RngStream& rng,
                                             const StdSgnParams& p = {});

struct AugmentationProtocol {
  ProtocolName name = ProtocolName::NoAug;
  StdSgnParams std_sgn;
  SignalProtocolParams signal;
  SpectroProtocolParams spectro;
  AffineAugParams std_img;
  std::size_t img_copies = 10;
};

using Item = std::variant<AudioSignal, Spectrogram, Image>;

struct AugmentedItem {
  std::string transform;
  Item item;
};

// Number of derived items (excluding the original) the protocol yields.
std::size_t derived_count(const AugmentationProtocol& protocol);

/// Applies `protocol` to `item`; element 0 of the result is the original
/// under the name "identity". Mixing transforms take a uniformly drawn partner
/// from `pool`, which must hold items of the same kind and class.
std::vector<AugmentedItem> apply_protocol(const Item& item, const AugmentationProtocol& protocol,
                                          const std::vector<Item>& pool, RngStream& rng);

}  // namespace aaug
