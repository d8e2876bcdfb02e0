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

// Small on-disk corpora for dataset and CLI tests.

#pragma once

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "aaug/audio.hpp"

namespace fixture {

struct Corpus {
  std::filesystem::path manifest;
  std::vector<std::string> ids;
  std::vector<std::string> labels;
};

// `per_class[c]` clips for class "c<c>", each a short decaying tone whose
// pitch depends on class and index.
inline Corpus write_corpus(const std::filesystem::path& dir, const std::vector<std::size_t>& per_class,
                           std::size_t samples = 4000, int rate = 16000) {
  std::filesystem::create_directories(dir / "wav");
  Corpus c;
  c.manifest = dir / "manifest.csv";
  std::ofstream m(c.manifest);
  m << "sample_id,path,label\n";
  for (std::size_t k = 0; k < per_class.size(); ++k) {
    for (std::size_t i = 0; i < per_class[k]; ++i) {
      const std::string id = "c" + std::to_string(k) + "_" + std::to_string(i);
      const std::string label = "c" + std::to_string(k);
      aaug::AudioSignal s{std::vector<double>(samples), rate};
      const double f = 200.0 * static_cast<double>(k + 1) + 7.0 * static_cast<double>(i);
      for (std::size_t n = 0; n < samples; ++n) {
        const double t = static_cast<double>(n) / rate;
        s.samples[n] = 0.6 * std::exp(-3.0 * t) * std::sin(2.0 * std::numbers::pi * f * t) +
                       0.05 * std::sin(2.0 * std::numbers::pi * 3.1 * f * t);
      }
      aaug::write_wav(s, dir / "wav" / (id + ".wav"));
      m << id << ",wav/" << id << ".wav," << label << "\n";
      c.ids.push_back(id);
      c.labels.push_back(label);
    }
  }
  return c;
}

inline std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// Relative path -> contents for every regular file below `root`.
inline std::map<std::string, std::string> tree(const std::filesystem::path& root) {
  std::map<std::string, std::string> out;
  for (const auto& e : std::filesystem::recursive_directory_iterator(root)) {
    if (e.is_regular_file()) out[std::filesystem::relative(e.path(), root).generic_string()] = slurp(e.path());
  }
  return out;
}

}  // namespace fixture
