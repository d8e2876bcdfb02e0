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
#include <filesystem>
#include <span>
#include <vector>

namespace aaug {

/// Mono sample buffer. Amplitudes are nominally in [-1, 1] but nothing clamps
/// them; the duration is samples.size() / sample_rate.
struct AudioSignal {
  std::vector<double> samples;
  int sample_rate = 0;

  std::size_t size() const { return samples.size(); }
  bool empty() const { return samples.empty(); }
  double duration() const {
    return sample_rate > 0 ? static_cast<double>(samples.size()) / sample_rate : 0.0;
  }

  friend bool operator==(const AudioSignal&, const AudioSignal&) = default;
};

// Throws InvalidArgument unless sample_rate > 0, samples are non-empty and
// every amplitude is finite. `what` prefixes the message.
void validate_signal(const AudioSignal& signal, const char* what = "signal");

AudioSignal read_wav(const std::filesystem::path& path);
// Always writes mono IEEE float32, little-endian.
void write_wav(const AudioSignal& signal, const std::filesystem::path& path);

double rms(std::span<const double> samples);
inline double rms(const AudioSignal& signal) { return rms(signal.samples); }
double peak(std::span<const double> samples);

inline constexpr double kLogFloor = 1e-10;

double db_to_amplitude(double db);
double amplitude_to_db(double amplitude);

// Linear interpolation at fractional index `pos`, clamped to [0, size - 1].
double sample_at(std::span<const double> samples, double pos);

/// Playback-rate change by `factor`: output length round(N / factor), sample n
/// taken at input position n * factor. factor 2 doubles the speed and every
/// frequency. Sample rate is left unchanged.
AudioSignal resample(const AudioSignal& signal, double factor);

}  // namespace aaug
