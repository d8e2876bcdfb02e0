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

// Duration-preserving pitch shift: playback-rate change followed by a
// waveform-similarity overlap-add (WSOLA) time stretch back to the original
// length.

#include <algorithm>
#include <cmath>
#include <numbers>

#include "aaug/errors.hpp"
#include "aaug/signal_augment.hpp"

namespace aaug {

namespace {

std::size_t seconds_to_samples(double seconds, int rate) {
  return static_cast<std::size_t>(std::max<long long>(1, std::llround(seconds * rate)));
}

double read(const std::vector<double>& x, std::ptrdiff_t idx) {
  return (idx >= 0 && idx < static_cast<std::ptrdiff_t>(x.size()))
             ? x[static_cast<std::size_t>(idx)]
             : 0.0;
}

}  // namespace

AudioSignal wsola_stretch(const AudioSignal& s, std::size_t target_length,
                          const PitchShiftParams& p) {
  validate_signal(s, "wsola_stretch");
  if (target_length == 0) throw InvalidArgument("wsola_stretch: target length must be positive");
  if (!(p.window_seconds > 0.0) || !(p.hop_seconds > 0.0) || !(p.tolerance_seconds >= 0.0) ||
      p.hop_seconds > p.window_seconds) {
    throw InvalidArgument("wsola_stretch: need 0 < hop <= window and tolerance >= 0");
  }
  if (target_length == s.size()) return s;

  const std::size_t win = std::max<std::size_t>(2, seconds_to_samples(p.window_seconds, s.sample_rate));
  const std::size_t hop = std::min(win, seconds_to_samples(p.hop_seconds, s.sample_rate));
  const auto tol = static_cast<std::ptrdiff_t>(std::llround(p.tolerance_seconds * s.sample_rate));
  const auto L = static_cast<std::ptrdiff_t>(win);
  const auto H = static_cast<std::ptrdiff_t>(hop);
  const double stretch = static_cast<double>(target_length) / static_cast<double>(s.size());

  std::vector<double> window(win);
  for (std::size_t m = 0; m < win; ++m) {
    window[m] = 0.5 * (1.0 - std::cos(2.0 * std::numbers::pi * static_cast<double>(m) / win));
  }

  const auto n_out = static_cast<std::ptrdiff_t>(target_length);
  std::vector<double> acc(target_length, 0.0);
  std::vector<double> weight(target_length, 0.0);
  std::vector<double> reference(win);

  const std::vector<double>& x = s.samples;
  std::ptrdiff_t previous = 0;
  bool first = true;
  // Frames start one hop before the output so every output sample sees full
  // window overlap.
  for (std::ptrdiff_t out_start = -H; out_start < n_out; out_start += H) {
    const double centre_in = (static_cast<double>(out_start) + L / 2.0) / stretch;
    const auto nominal = static_cast<std::ptrdiff_t>(std::llround(centre_in - L / 2.0));

    std::ptrdiff_t chosen = nominal;
    if (!first) {
      const std::ptrdiff_t natural = previous + H;
      double ref_energy = 0.0;
      for (std::ptrdiff_t m = 0; m < L; ++m) {
        reference[static_cast<std::size_t>(m)] = read(x, natural + m);
        ref_energy += reference[static_cast<std::size_t>(m)] * reference[static_cast<std::size_t>(m)];
      }
      if (ref_energy > 0.0) {
        double best = -2.0;
        // Offsets visited as 0, -1, +1, -2, +2, ...; ties keep the smaller shift.
        for (std::ptrdiff_t step = 0; step <= 2 * tol; ++step) {
          const std::ptrdiff_t delta = (step % 2 == 0) ? step / 2 : -(step + 1) / 2;
          const std::ptrdiff_t cand = nominal + delta;
          double dot = 0.0;
          double energy = 0.0;
          for (std::ptrdiff_t m = 0; m < L; ++m) {
            const double v = read(x, cand + m);
            dot += v * reference[static_cast<std::size_t>(m)];
            energy += v * v;
          }
          const double score = energy > 0.0 ? dot / std::sqrt(energy * ref_energy) : -1.0;
          if (score > best) {
            best = score;
            chosen = cand;
          }
        }
      }
    }
    first = false;
    previous = chosen;

    for (std::ptrdiff_t m = 0; m < L; ++m) {
      const std::ptrdiff_t o = out_start + m;
      if (o < 0 || o >= n_out) continue;
      const double w = window[static_cast<std::size_t>(m)];
      acc[static_cast<std::size_t>(o)] += w * read(x, chosen + m);
      weight[static_cast<std::size_t>(o)] += w;
    }
  }

  for (std::size_t i = 0; i < target_length; ++i) {
    if (weight[i] > 1e-9) acc[i] /= weight[i];
  }
  return AudioSignal{std::move(acc), s.sample_rate};
}

AudioSignal pitch_shift(const AudioSignal& s, double semitones, const PitchShiftParams& p) {
  validate_signal(s, "pitch_shift");
  if (!std::isfinite(semitones)) throw InvalidArgument("pitch_shift: semitones must be finite");
  if (semitones == 0.0) return s;
  const double ratio = std::exp2(semitones / 12.0);
  const AudioSignal shifted = resample(s, ratio);
  return wsola_stretch(shifted, s.size(), p);
}

}  // namespace aaug
