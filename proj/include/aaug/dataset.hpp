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
#include <map>
#include <string>
#include <vector>

#include "aaug/protocols.hpp"
#include "aaug/spectrogram.hpp"

namespace aaug {

struct ManifestEntry {
  std::string sample_id;
  std::filesystem::path path;
  std::string label;
};

struct Manifest {
  std::vector<ManifestEntry> entries;

  // Sorted distinct labels.
  std::vector<std::string> classes() const;
  const ManifestEntry* find(const std::string& sample_id) const;
};

/// Reads `sample_id,path,label` CSV. Relative paths resolve against the
/// manifest's directory. Throws SchemaError on a bad header, malformed row,
/// duplicate id or (when check_files) missing audio file.
Manifest load_manifest(const std::filesystem::path& csv_path, bool check_files = true);
void validate_manifest(const Manifest& m, bool check_files = true);

struct FoldAssignment {
  std::size_t k = 10;
  std::uint64_t seed = 0;
  std::map<std::string, std::size_t> fold_of;
  std::vector<std::string> warnings;

  std::vector<std::size_t> fold_sizes() const;
};

/// Per class (labels in sorted order), shuffles the class's samples with a
/// seed-derived stream and deals them round-robin. The deal continues from
/// where the previous class stopped, so overall fold sizes stay balanced as
/// well.
FoldAssignment stratified_folds(const Manifest& m, std::size_t k, std::uint64_t seed);

// {"k":10,"seed":...,"folds":{"id":0,...}}
std::string folds_to_json(const FoldAssignment& folds);
FoldAssignment folds_from_json(const std::string& text);
void save_folds(const FoldAssignment& folds, const std::filesystem::path& path);
FoldAssignment load_folds(const std::filesystem::path& path);
// Every manifest id must have a fold below k, and nothing else may be listed.
void check_folds_match(const Manifest& m, const FoldAssignment& folds);

struct IndexRow {
  std::string derived_id;
  std::string origin_id;
  std::string protocol;
  std::string transform;
  std::string path;  // relative to the fold directory
};

struct PartnerRow {
  std::string origin_id;
  std::string partner_id;
};

struct AugmentedIndex {
  std::vector<IndexRow> rows;        // training set, originals included
  std::vector<IndexRow> test_rows;   // untouched test-fold items
  std::vector<PartnerRow> partners;  // mixing partner per training origin
  std::vector<std::string> warnings;
};

struct PartnerPlan {
  std::vector<PartnerRow> partners;  // one per training sample, manifest order
  std::vector<std::string> warnings;
};

/// Mixing partner for every sample outside `test_fold`: a uniformly drawn
/// training sample of the same class other than itself. A sample without
/// such a classmate is paired with itself and a warning is recorded.
PartnerPlan plan_partners(const Manifest& m, const FoldAssignment& folds, std::size_t test_fold,
                          std::uint64_t seed);

struct BuildOptions {
  std::filesystem::path out_dir;
  std::size_t test_fold = 0;
  std::uint64_t seed = 0;
  std::size_t jobs = 1;
  AugmentationProtocol protocol;
  DgtParams dgt;
};

// `<origin>__<protocol>__<transform>__<n>`
std::string derived_id(const std::string& origin, std::string_view protocol,
                       const std::string& transform, std::size_t n);

/// Augments every sample outside `test_fold` and writes the result under
/// out_dir/fold_<test_fold>/: train/ and test/ item files, index.csv,
/// test_index.csv and partners.csv. Mixing partners come only from the
/// training portion of the same class. Output is independent of `jobs`.
AugmentedIndex build_training_set(const Manifest& m, const FoldAssignment& folds,
                                  const BuildOptions& options);

// Circularly repeats or truncates columns so `spec` has `cols` columns.
Spectrogram fit_width(const Spectrogram& spec, std::size_t cols);

void write_index_csv(const std::vector<IndexRow>& rows, const std::filesystem::path& path);
std::vector<IndexRow> read_index_csv(const std::filesystem::path& path);

}  // namespace aaug
