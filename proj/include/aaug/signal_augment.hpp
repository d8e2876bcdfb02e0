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
#include <string>
#include <vector>

#include "aaug/audio.hpp"
#include "aaug/rng.hpp"

namespace aaug {

struct WowParams {
  double a_m = 3.0;  // modulation depth
  double f_m = 2.0;  // modulation frequency, Hz
};

struct NoiseParams {
  double snr_db = 10.0;
};

struct DrcCurve {
  double threshold_db = -20.0;
  double ratio = 4.0;
};

/// Wow resampling: output sample n reads the input at time
/// F(t) = t + a_m sin(2 pi f_m t) / (2 pi f_m), t = n / sample_rate, with
/// linear interpolation and the read position clamped to the signal. The
/// instantaneous playback rate is 1 + a_m cos(2 pi f_m t); for a_m > 1 the
/// warp runs backwards part of the time.
AudioSignal wow_resample(const AudioSignal& s, const WowParams& p = {});

/// Adds white Gaussian noise scaled so that rms(noise) = rms(s) * 10^(-snr/20)
/// holds exactly for the drawn noise. Rejects silent input.
AudioSignal add_noise(const AudioSignal& s, const NoiseParams& p, RngStream& rng);

/// Normalises by the 90th percentile of |x| (nearest rank) and saturates
/// everything outside [-1, 1] to sign(x). Rejects constant signals.
AudioSignal clip(const AudioSignal& s);
// Nearest-rank percentile, q in (0, 1].
double nearest_rank_percentile(std::vector<double> values, double q);

// resample(s, 1 + percent / 100).
AudioSignal speed_up(const AudioSignal& s, double percent);

// sin(2 pi x) applied five times per sample.
AudioSignal harmonic_distortion(const AudioSignal& s);

AudioSignal gain(const AudioSignal& s, double db);

// s[split..] followed by s[..split].
AudioSignal rand_time_shift(const AudioSignal& s, std::size_t split);
// As above with split uniform in [0, size].
AudioSignal rand_time_shift(const AudioSignal& s, RngStream& rng);

/// Sum of two signals at the same rate; the shorter is zero-padded. The result
/// is divided by its peak only when that peak exceeds 1.
AudioSignal sound_mix(const AudioSignal& s1, const AudioSignal& s2);

/// Static single-knee compressor in the dB domain, applied per sample:
/// levels above threshold_db are reduced by 1 / ratio relative to the knee.
AudioSignal drc(const AudioSignal& s, const DrcCurve& curve = {});
double drc_level(double level_db, const DrcCurve& curve);

struct PitchShiftParams {
  double window_seconds = 0.050;
  double hop_seconds = 0.025;
  // Search radius for the WSOLA alignment.
  double tolerance_seconds = 0.010;
};

/// Duration-preserving pitch shift by 2^(semitones / 12): resample by the
/// ratio, then stretch back to the input length with waveform-similarity
/// overlap-add (Hann windows).
AudioSignal pitch_shift(const AudioSignal& s, double semitones, const PitchShiftParams& p = {});

/// Time stretch to exactly `target_length` samples, pitch unchanged.
AudioSignal wsola_stretch(const AudioSignal& s, std::size_t target_length,
                          const PitchShiftParams& p = {});

struct SignalProtocolParams {
  WowParams wow;
  NoiseParams noise;
  double speed_percent = 15.0;
  double gain_db = 10.0;
  DrcCurve drc;
  double pitch_semitones = 2.0;
  PitchShiftParams pitch;
};

struct NamedSignal {
  std::string transform;
  AudioSignal signal;
};

/// The eleven-output signal recipe, in order: wow, noise, clip, speed_up,
/// harmonic_distortion, gain, rand_time_shift, sound_mix, drc, pitch_shift_a
/// (+semitones), pitch_shift_b (-semitones). Failures are rethrown as
/// TransformError naming the transform.
std::vector<NamedSignal> signal_protocol(const AudioSignal& s, const AudioSignal& classmate,
                                         RngStream& rng, const SignalProtocolParams& p = {});

inline constexpr std::size_t kSignalProtocolOutputs = 11;

}  // namespace aaug
