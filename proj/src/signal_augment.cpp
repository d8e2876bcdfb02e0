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

#include "aaug/signal_augment.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "aaug/errors.hpp"

namespace aaug {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

AudioSignal with_samples(const AudioSignal& like, std::vector<double> samples) {
  return AudioSignal{std::move(samples), like.sample_rate};
}

}  // namespace

AudioSignal wow_resample(const AudioSignal& s, const WowParams& p) {
  validate_signal(s, "wow_resample");
  if (!(p.a_m >= 0.0) || !(p.f_m > 0.0)) {
    throw InvalidArgument("wow_resample: need a_m >= 0 and f_m > 0");
  }
  const double rate = s.sample_rate;
  const double depth = p.a_m * rate / (kTwoPi * p.f_m);  // in samples
  std::vector<double> out(s.size());
  for (std::size_t n = 0; n < s.size(); ++n) {
    const auto t = static_cast<double>(n);
    const double pos = t + depth * std::sin(kTwoPi * p.f_m * t / rate);
    out[n] = sample_at(s.samples, pos);
  }
  return with_samples(s, std::move(out));
}

AudioSignal add_noise(const AudioSignal& s, const NoiseParams& p, RngStream& rng) {
  validate_signal(s, "add_noise");
  if (!std::isfinite(p.snr_db)) throw InvalidArgument("add_noise: snr_db must be finite");
  const double signal_rms = rms(s);
  if (signal_rms == 0.0) throw InvalidArgument("add_noise: silent input, SNR undefined");

  std::vector<double> noise(s.size());
  for (double& v : noise) v = rng.normal();
  const double noise_rms = rms(noise);
  const double scale = noise_rms > 0.0 ? signal_rms * db_to_amplitude(-p.snr_db) / noise_rms : 0.0;

  std::vector<double> out(s.samples);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += scale * noise[i];
  return with_samples(s, std::move(out));
}

double nearest_rank_percentile(std::vector<double> values, double q) {
  if (values.empty()) throw InvalidArgument("percentile: empty input");
  if (!(q > 0.0 && q <= 1.0)) throw InvalidArgument("percentile: q must be in (0, 1]");
  const auto n = values.size();
  auto rank = static_cast<std::size_t>(std::ceil(q * static_cast<double>(n)));
  rank = std::clamp<std::size_t>(rank, 1, n);
  auto nth = values.begin() + static_cast<std::ptrdiff_t>(rank - 1);
  std::nth_element(values.begin(), nth, values.end());
  return *nth;
}

AudioSignal clip(const AudioSignal& s) {
  validate_signal(s, "clip");
  const bool constant = std::all_of(s.samples.begin(), s.samples.end(),
                                    [&](double v) { return v == s.samples.front(); });
  if (constant) throw InvalidArgument("clip: constant signal, percentile is degenerate");

  std::vector<double> magnitudes(s.size());
  std::transform(s.samples.begin(), s.samples.end(), magnitudes.begin(),
                 [](double v) { return std::abs(v); });
  const double q = nearest_rank_percentile(std::move(magnitudes), 0.9);
  if (q == 0.0) throw InvalidArgument("clip: 90th percentile of |x| is zero");

  std::vector<double> out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double v = s.samples[i] / q;
    out[i] = std::abs(v) > 1.0 ? std::copysign(1.0, v) : v;
  }
  return with_samples(s, std::move(out));
}

AudioSignal speed_up(const AudioSignal& s, double percent) {
  if (!(percent > -100.0)) throw InvalidArgument("speed_up: percent must exceed -100");
  if (percent == 0.0) {
    validate_signal(s, "speed_up");
    return s;
  }
  return resample(s, 1.0 + percent / 100.0);
}

AudioSignal harmonic_distortion(const AudioSignal& s) {
  validate_signal(s, "harmonic_distortion");
  std::vector<double> out(s.samples);
  for (double& v : out) {
    for (int k = 0; k < 5; ++k) v = std::sin(kTwoPi * v);
  }
  return with_samples(s, std::move(out));
}

AudioSignal gain(const AudioSignal& s, double db) {
  validate_signal(s, "gain");
  if (!std::isfinite(db)) throw InvalidArgument("gain: db must be finite");
  if (db == 0.0) return s;
  const double factor = db_to_amplitude(db);
  std::vector<double> out(s.samples);
  for (double& v : out) v *= factor;
  return with_samples(s, std::move(out));
}

AudioSignal rand_time_shift(const AudioSignal& s, std::size_t split) {
  validate_signal(s, "rand_time_shift");
  if (split > s.size()) throw InvalidArgument("rand_time_shift: split beyond signal end");
  std::vector<double> out(s.samples);
  std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(split), out.end());
  return with_samples(s, std::move(out));
}

AudioSignal rand_time_shift(const AudioSignal& s, RngStream& rng) {
  validate_signal(s, "rand_time_shift");
  const auto split = rng.uniform_int(0, static_cast<std::int64_t>(s.size()));
  return rand_time_shift(s, static_cast<std::size_t>(split));
}

AudioSignal sound_mix(const AudioSignal& s1, const AudioSignal& s2) {
  validate_signal(s1, "sound_mix");
  validate_signal(s2, "sound_mix");
  if (s1.sample_rate != s2.sample_rate) throw InvalidArgument("sound_mix: sample-rate mismatch");
  std::vector<double> out(std::max(s1.size(), s2.size()), 0.0);
  for (std::size_t i = 0; i < s1.size(); ++i) out[i] += s1.samples[i];
  for (std::size_t i = 0; i < s2.size(); ++i) out[i] += s2.samples[i];
  const double top = peak(out);
  if (top > 1.0) {
    for (double& v : out) v /= top;
  }
  return with_samples(s1, std::move(out));
}

double drc_level(double level_db, const DrcCurve& curve) {
  if (level_db < curve.threshold_db) return level_db;
  return curve.threshold_db + (level_db - curve.threshold_db) / curve.ratio;
}

AudioSignal drc(const AudioSignal& s, const DrcCurve& curve) {
  validate_signal(s, "drc");
  if (!(curve.ratio >= 1.0) || !std::isfinite(curve.threshold_db)) {
    throw InvalidArgument("drc: ratio must be >= 1 and threshold finite");
  }
  std::vector<double> out(s.samples);
  for (double& v : out) {
    if (v == 0.0) continue;
    const double level = 20.0 * std::log10(std::abs(v));
    const double reduction = drc_level(level, curve) - level;
    if (reduction != 0.0) v *= db_to_amplitude(reduction);
  }
  return with_samples(s, std::move(out));
}

std::vector<NamedSignal> signal_protocol(const AudioSignal& s, const AudioSignal& classmate,
                                         RngStream& rng, const SignalProtocolParams& p) {
  // Each transform draws from its own child stream so adding draws to one
  // transform never perturbs the others.
  const RngStream base(rng.next_u64());
  std::vector<NamedSignal> out;
  out.reserve(kSignalProtocolOutputs);

  auto run = [&](const char* name, const std::function<AudioSignal(RngStream&)>& fn) {
    RngStream child = base.fork(out.size());
    try {
      out.push_back({name, fn(child)});
    } catch (const Error& e) {
      throw TransformError(name, e.what());
    }
  };

  run("wow", [&](RngStream&) { return wow_resample(s, p.wow); });
  run("noise", [&](RngStream& r) { return add_noise(s, p.noise, r); });
  run("clip", [&](RngStream&) { return clip(s); });
  run("speed_up", [&](RngStream&) { return speed_up(s, p.speed_percent); });
  run("harmonic_distortion", [&](RngStream&) { return harmonic_distortion(s); });
  run("gain", [&](RngStream&) { return gain(s, p.gain_db); });
  run("rand_time_shift", [&](RngStream& r) { return rand_time_shift(s, r); });
  run("sound_mix", [&](RngStream&) { return sound_mix(s, classmate); });
  run("drc", [&](RngStream&) { return drc(s, p.drc); });
  run("pitch_shift_a", [&](RngStream&) { return pitch_shift(s, p.pitch_semitones, p.pitch); });
  run("pitch_shift_b", [&](RngStream&) { return pitch_shift(s, -p.pitch_semitones, p.pitch); });
  return out;
}

}  // namespace aaug
