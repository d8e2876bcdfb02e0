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

#include "aaug/protocols.hpp"

#include <algorithm>
#include <cmath>

#include "aaug/errors.hpp"

namespace aaug {

std::string_view protocol_token(ProtocolName name) {
  switch (name) {
    case ProtocolName::NoAug: return "none";
    case ProtocolName::StandardImg: return "std-img";
    case ProtocolName::StandardSgn: return "std-sgn";
    case ProtocolName::Signal: return "signal";
    case ProtocolName::Spectro: return "spectro";
  }
  return "none";
}

std::optional<ProtocolName> parse_protocol(std::string_view token) {
  for (auto name : {ProtocolName::NoAug, ProtocolName::StandardImg, ProtocolName::StandardSgn,
                    ProtocolName::Signal, ProtocolName::Spectro}) {
    if (protocol_token(name) == token) return name;
  }
  return std::nullopt;
}

Domain protocol_domain(ProtocolName name) {
  switch (name) {
    case ProtocolName::StandardImg: return Domain::Image;
    case ProtocolName::Spectro: return Domain::Spectrogram;
    default: return Domain::Audio;
  }
}

StdSgnDraw draw_std_sgn(const StdSgnParams& p, RngStream& rng) {
  // Every value is drawn whether or not its gate fires so the stream layout
  // is fixed.
  StdSgnDraw d;
  d.speed_on = rng.bernoulli(p.p_apply);
  d.speed = rng.uniform(p.speed_min, p.speed_max);
  d.pitch_on = rng.bernoulli(p.p_apply);
  d.semitones = rng.uniform(p.semitones_min, p.semitones_max);
  d.volume_on = rng.bernoulli(p.p_apply);
  d.volume_db = rng.uniform(p.volume_db_min, p.volume_db_max);
  d.noise_on = rng.bernoulli(p.p_apply);
  d.snr_db = rng.uniform(p.snr_db_min, p.snr_db_max);
  d.shift_on = rng.bernoulli(p.p_apply);
  d.shift_seconds = rng.uniform(p.shift_seconds_min, p.shift_seconds_max);
  return d;
}

AudioSignal time_shift_seconds(const AudioSignal& s, double seconds) {
  validate_signal(s, "time_shift");
  const auto n = static_cast<long long>(s.size());
  const long long shift = std::llround(seconds * s.sample_rate);
  // Delaying by k samples is a split at n - k.
  const long long split = ((-shift % n) + n) % n;
  return rand_time_shift(s, static_cast<std::size_t>(split));
}

AudioSignal apply_std_sgn(const AudioSignal& s, const StdSgnDraw& d, const StdSgnParams& p,
                          RngStream& noise_rng) {
  AudioSignal out = s;
  if (d.speed_on) out = resample(out, d.speed);
  if (d.pitch_on) out = pitch_shift(out, d.semitones, p.pitch);
  if (d.volume_on) out = gain(out, d.volume_db);
  if (d.noise_on) out = add_noise(out, NoiseParams{d.snr_db}, noise_rng);
  if (d.shift_on) out = time_shift_seconds(out, d.shift_seconds);
  return out;
}

std::vector<AudioSignal> std_signal_protocol(const AudioSignal& s, RngStream& rng,
                                             const StdSgnParams& p) {
  validate_signal(s, "std_signal_protocol");
  if (!(p.p_apply >= 0.0 && p.p_apply <= 1.0)) {
    throw InvalidArgument("std_signal_protocol: p_apply must lie in [0, 1]");
  }
  if (!(p.speed_min > 0.0)) throw InvalidArgument("std_signal_protocol: speed must be positive");
  const RngStream base(rng.next_u64());
  std::vector<AudioSignal> out;
  out.reserve(p.copies);
  for (std::size_t i = 0; i < p.copies; ++i) {
    RngStream draws = base.fork(2 * i);
    RngStream noise = base.fork(2 * i + 1);
    const StdSgnDraw d = draw_std_sgn(p, draws);
    try {
      out.push_back(apply_std_sgn(s, d, p, noise));
    } catch (const Error& e) {
      throw TransformError("std_sgn", e.what());
    }
  }
  return out;
}

std::size_t derived_count(const AugmentationProtocol& protocol) {
  switch (protocol.name) {
    case ProtocolName::NoAug: return 0;
    case ProtocolName::StandardImg: return protocol.img_copies;
    case ProtocolName::StandardSgn: return protocol.std_sgn.copies;
    case ProtocolName::Signal: return kSignalProtocolOutputs;
    case ProtocolName::Spectro: return kSpectroProtocolOutputs;
  }
  return 0;
}

namespace {

const char* item_kind(const Item& item) {
  switch (item.index()) {
    case 0: return "audio";
    case 1: return "spectrogram";
    default: return "image";
  }
}

template <typename T>
const T& expect(const Item& item, ProtocolName name) {
  if (const T* p = std::get_if<T>(&item)) return *p;
  throw InvalidArgument(std::string("protocol ") + std::string(protocol_token(name)) +
                        ": domain mismatch, got " + item_kind(item));
}

template <typename T>
const T& pick_partner(const std::vector<Item>& pool, ProtocolName name, RngStream& rng) {
  if (pool.empty()) {
    throw InvalidArgument(std::string("protocol ") + std::string(protocol_token(name)) +
                          ": empty same-class pool");
  }
  const auto i = rng.uniform_int(0, static_cast<std::int64_t>(pool.size()) - 1);
  return expect<T>(pool[static_cast<std::size_t>(i)], name);
}

}  // namespace

std::vector<AugmentedItem> apply_protocol(const Item& item, const AugmentationProtocol& protocol,
                                          const std::vector<Item>& pool, RngStream& rng) {
  std::vector<AugmentedItem> out;
  out.push_back({"identity", item});
  const ProtocolName name = protocol.name;

  switch (name) {
    case ProtocolName::NoAug:
      break;
    case ProtocolName::StandardSgn: {
      const auto& s = expect<AudioSignal>(item, name);
      for (auto& derived : std_signal_protocol(s, rng, protocol.std_sgn)) {
        out.push_back({"std_sgn", std::move(derived)});
      }
      break;
    }
    case ProtocolName::Signal: {
      const auto& s = expect<AudioSignal>(item, name);
      const auto& partner = pick_partner<AudioSignal>(pool, name, rng);
      for (auto& derived : signal_protocol(s, partner, rng, protocol.signal)) {
        out.push_back({derived.transform, std::move(derived.signal)});
      }
      break;
    }
    case ProtocolName::Spectro: {
      const auto& spec = expect<Spectrogram>(item, name);
      const auto& partner = pick_partner<Spectrogram>(pool, name, rng);
      for (auto& derived : spectro_protocol(spec, partner, rng, protocol.spectro)) {
        out.push_back({derived.transform, std::move(derived.spec)});
      }
      break;
    }
    case ProtocolName::StandardImg: {
      const auto& img = expect<Image>(item, name);
      for (auto& derived : standard_img_protocol(img, protocol.img_copies, rng, protocol.std_img)) {
        out.push_back({"random_affine", std::move(derived)});
      }
      break;
    }
  }
  return out;
}

}  // namespace aaug
