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
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace aaug {

struct ScoreRow {
  std::string sample_id;
  std::size_t fold = 0;
  std::vector<double> scores;
  std::string true_label;

  friend bool operator==(const ScoreRow&, const ScoreRow&) = default;
};

/// Per-sample class scores produced by one classifier (or a fused ensemble).
struct ScoreMatrix {
  std::string classifier_id;
  std::vector<std::string> class_names;
  std::vector<ScoreRow> rows;

  friend bool operator==(const ScoreMatrix&, const ScoreMatrix&) = default;
};

// Throws SchemaError on a wrong score-vector length, duplicate sample id or
// a true label that is not a class name.
void validate_scores(const ScoreMatrix& m);

// Reads `sample_id,fold,true_label,<class_1>,...,<class_C>`; `NaN` cells are
// allowed. The classifier id is the file stem.
ScoreMatrix read_scores_csv(const std::filesystem::path& path);
// Writes with max_digits10 precision so values survive a round trip.
void write_scores_csv(const ScoreMatrix& m, const std::filesystem::path& path);

/// NaN scores become 0; a row whose scores are all equal becomes all zeros.
ScoreMatrix sanitize(const ScoreMatrix& m);

/// Sum rule over sanitized inputs. Rows follow the first matrix's order and
/// the classifier id joins the inputs' ids with '+'.
ScoreMatrix fuse_sum(const std::vector<ScoreMatrix>& matrices);

// Lowest index among the maximal scores.
std::size_t predict(const std::vector<double>& scores);

struct RecognitionRate {
  std::vector<std::pair<std::size_t, double>> per_fold;  // ascending fold index
  double mean = 0.0;    // average of per-fold accuracies
  double pooled = 0.0;  // correct / total over every row
};

RecognitionRate recognition_rate(const ScoreMatrix& m);

struct FusionRecipe {
  std::string variant;
  std::vector<std::filesystem::path> scores;
};

// JSON: {"variant": "...", "scores": ["a.csv", ...]}; relative paths resolve
// against the recipe's directory.
FusionRecipe load_recipe(const std::filesystem::path& path);

// Member count of the ensembles named in the evaluation ("Fusion Si+Sp" -> 10,
// ...); nullopt for custom names.
std::optional<std::size_t> known_variant_size(const std::string& variant);

/// Loads every score file of the recipe and sums them. A known variant
/// name with the wrong number of members is rejected.
ScoreMatrix fuse_spec(const FusionRecipe& recipe);

}  // namespace aaug
