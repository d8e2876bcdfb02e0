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
#include <cstdint>
#include <filesystem>
#include <string>

#include "aaug/protocols.hpp"
#include "aaug/spectrogram.hpp"

namespace aaug {

/// Run configuration. The JSON form has top-level keys seed, output_dir,
/// folds, jobs and one object per parameter bundle: dgt, std_img, std_sgn,
/// signal, spectro. Every key is optional; unknown keys are errors.
struct Config {
  std::uint64_t seed = 0;
  std::filesystem::path output_dir = "out";
  std::size_t folds = 10;
  std::size_t jobs = 1;
  DgtParams dgt;
  // Parameter bundles for every protocol; `name` is set by the caller.
  AugmentationProtocol protocol;
};

// Throws SchemaError on malformed JSON, unknown keys, wrong value types or
// values that break a parameter invariant.
Config parse_config(const std::string& json_text);
Config load_config(const std::filesystem::path& path);
std::string config_to_json(const Config& config);

void validate_config(const Config& config);

}  // namespace aaug
