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

#include "aaug/audio.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "aaug/errors.hpp"

namespace aaug {

void validate_signal(const AudioSignal& signal, const char* what) {
  if (signal.sample_rate <= 0) {
    throw InvalidArgument(std::string(what) + ": sample rate must be positive");
  }
  if (signal.samples.empty()) {
    throw InvalidArgument(std::string(what) + ": no samples");
  }
  for (double v : signal.samples) {
    if (!std::isfinite(v)) {
      throw InvalidArgument(std::string(what) + ": non-finite sample");
    }
  }
}

double rms(std::span<const double> samples) {
  if (samples.empty()) throw InvalidArgument("rms: empty input");
  double acc = 0.0;
  for (double v : samples) acc += v * v;
  return std::sqrt(acc / static_cast<double>(samples.size()));
}

double peak(std::span<const double> samples) {
  double p = 0.0;
  for (double v : samples) p = std::max(p, std::abs(v));
  return p;
}

double db_to_amplitude(double db) { return std::pow(10.0, db / 20.0); }

double amplitude_to_db(double amplitude) {
  return 20.0 * std::log10(std::abs(amplitude) + kLogFloor);
}

double sample_at(std::span<const double> samples, double pos) {
  const auto last = static_cast<double>(samples.size() - 1);
  if (pos <= 0.0) return samples.front();
  if (pos >= last) return samples.back();
  const double base = std::floor(pos);
  const auto i = static_cast<std::size_t>(base);
  const double t = pos - base;
  if (t == 0.0) return samples[i];
  return samples[i] + t * (samples[i + 1] - samples[i]);
}

AudioSignal resample(const AudioSignal& signal, double factor) {
  if (!(factor > 0.0) || !std::isfinite(factor)) {
    throw InvalidArgument("resample: factor must be positive");
  }
  validate_signal(signal, "resample");
  const auto n_out = static_cast<std::size_t>(
      std::llround(static_cast<double>(signal.size()) / factor));
  AudioSignal out{std::vector<double>(n_out), signal.sample_rate};
  for (std::size_t n = 0; n < n_out; ++n) {
    out.samples[n] = sample_at(signal.samples, static_cast<double>(n) * factor);
  }
  return out;
}

}  // namespace aaug
