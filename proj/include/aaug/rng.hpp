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

#include <cstdint>
#include <string_view>

namespace aaug {

/// Deterministic random stream.
///
/// Draw i of a stream with seed s is splitmix64_mix(s + (i + 1) * 0x9E3779B97F4A7C15),
/// i.e. SplitMix64 viewed as a counter-based generator. The sequence depends on
/// nothing but the seed, so identical seeds replay identically on every platform.
/// Floating-point draws use 53-bit mantissas; normal draws use Box-Muller.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed = 0) : seed_(seed) {}

  std::uint64_t seed() const { return seed_; }
  std::uint64_t counter() const { return counter_; }

  std::uint64_t next_u64();
  // Uniform in [0, 1).
  double uniform();
  // Uniform in [lo, hi]; returns lo when lo == hi.
  double uniform(double lo, double hi);
  // Uniform integer in [lo, hi], unbiased.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);
  double normal();
  bool bernoulli(double p);

  // Independent child stream keyed by `key`. Does not advance this stream.
  RngStream fork(std::uint64_t key) const;

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

std::uint64_t splitmix64_mix(std::uint64_t x);

// 64-bit FNV-1a.
std::uint64_t hash_string(std::string_view text);

// Per-task seed: hash(master_seed, task_id, transform_index).
std::uint64_t derive_seed(std::uint64_t master_seed, std::string_view task_id,
                          std::uint64_t transform_index);

}  // namespace aaug
