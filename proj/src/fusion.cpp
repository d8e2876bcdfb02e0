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

#include "aaug/fusion.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

#include "json.hpp"

#include "aaug/csv.hpp"
#include "aaug/errors.hpp"

namespace aaug {

namespace fs = std::filesystem;

void validate_scores(const ScoreMatrix& m) {
  if (m.class_names.empty()) throw SchemaError(m.classifier_id + ": no classes");
  std::set<std::string> classes(m.class_names.begin(), m.class_names.end());
  if (classes.size() != m.class_names.size()) {
    throw SchemaError(m.classifier_id + ": duplicate class name");
  }
  std::set<std::string> ids;
  for (const auto& row : m.rows) {
    if (row.scores.size() != m.class_names.size()) {
      throw SchemaError(m.classifier_id + ": sample '" + row.sample_id + "' has " +
                        std::to_string(row.scores.size()) + " scores for " +
                        std::to_string(m.class_names.size()) + " classes");
    }
    if (!ids.insert(row.sample_id).second) {
      throw SchemaError(m.classifier_id + ": duplicate sample_id '" + row.sample_id + "'");
    }
    if (!classes.contains(row.true_label)) {
      throw SchemaError(m.classifier_id + ": sample '" + row.sample_id + "' has unknown label '" +
                        row.true_label + "'");
    }
  }
}

namespace {

double parse_score(const std::string& text, const std::string& where) {
  if (text == "NaN" || text == "nan" || text == "NAN") return std::numeric_limits<double>::quiet_NaN();
  double v = 0.0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) throw SchemaError(where + ": bad score '" + text + "'");
  return v;
}

std::size_t parse_fold(const std::string& text, const std::string& where) {
  std::size_t v = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw SchemaError(where + ": bad fold '" + text + "'");
  }
  return v;
}

}  // namespace

ScoreMatrix read_scores_csv(const fs::path& path) {
  const auto rows = csv::read_file(path);
  const std::string name = path.string();
  if (rows.empty()) throw SchemaError(name + ": empty score file");

  const auto& header = rows.front().fields;
  const char* expected[] = {"sample_id", "fold", "true_label"};
  for (std::size_t i = 0; i < 3; ++i) {
    if (header.size() <= i || header[i] != expected[i]) {
      throw SchemaError(name + ":" + std::to_string(rows.front().line) + ": column " +
                        std::to_string(i + 1) + " must be '" + expected[i] + "', found '" +
                        (header.size() > i ? header[i] : std::string()) + "'");
    }
  }
  if (header.size() < 4) throw SchemaError(name + ": header names no class columns");

  ScoreMatrix m;
  m.classifier_id = path.stem().string();
  m.class_names.assign(header.begin() + 3, header.end());
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& f = rows[i].fields;
    const std::string where = name + ":" + std::to_string(rows[i].line);
    if (f.size() != header.size()) {
      throw SchemaError(where + ": expected " + std::to_string(header.size()) + " fields, got " +
                        std::to_string(f.size()));
    }
    ScoreRow row{f[0], parse_fold(f[1], where), {}, f[2]};
    for (std::size_t c = 3; c < f.size(); ++c) row.scores.push_back(parse_score(f[c], where));
    m.rows.push_back(std::move(row));
  }
  try {
    validate_scores(m);
  } catch (const SchemaError& e) {
    throw SchemaError(name + ": " + e.what());
  }
  return m;
}

void write_scores_csv(const ScoreMatrix& m, const fs::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  std::vector<std::string> header{"sample_id", "fold", "true_label"};
  header.insert(header.end(), m.class_names.begin(), m.class_names.end());
  out << csv::join(header) << '\n';
  out.precision(std::numeric_limits<double>::max_digits10);
  for (const auto& row : m.rows) {
    out << csv::quote(row.sample_id) << ',' << row.fold << ',' << csv::quote(row.true_label);
    for (double v : row.scores) {
      out << ',';
      if (std::isnan(v)) {
        out << "NaN";
      } else {
        out << v;
      }
    }
    out << '\n';
  }
  if (!out) throw IoError("write failed for " + path.string());
}

ScoreMatrix sanitize(const ScoreMatrix& m) {
  ScoreMatrix out = m;
  for (auto& row : out.rows) {
    for (double& v : row.scores) {
      if (std::isnan(v)) v = 0.0;
    }
    const bool constant = std::all_of(row.scores.begin(), row.scores.end(),
                                      [&](double v) { return v == row.scores.front(); });
    if (constant) std::fill(row.scores.begin(), row.scores.end(), 0.0);
  }
  return out;
}

ScoreMatrix fuse_sum(const std::vector<ScoreMatrix>& matrices) {
  if (matrices.empty()) throw InvalidArgument("fuse_sum: no score matrices");
  for (const auto& m : matrices) validate_scores(m);

  ScoreMatrix out = sanitize(matrices.front());
  std::unordered_map<std::string, std::size_t> position;
  for (std::size_t i = 0; i < out.rows.size(); ++i) position[out.rows[i].sample_id] = i;

  for (std::size_t k = 1; k < matrices.size(); ++k) {
    const ScoreMatrix next = sanitize(matrices[k]);
    if (next.class_names != out.class_names) {
      throw SchemaError("fuse_sum: class mismatch between '" + matrices.front().classifier_id +
                        "' and '" + next.classifier_id + "'");
    }
    if (next.rows.size() != out.rows.size()) {
      throw SchemaError("fuse_sum: sample-set mismatch for '" + next.classifier_id + "'");
    }
    for (const auto& row : next.rows) {
      const auto it = position.find(row.sample_id);
      if (it == position.end()) {
        throw SchemaError("fuse_sum: sample-set mismatch, '" + row.sample_id + "' only in '" +
                          next.classifier_id + "'");
      }
      auto& target = out.rows[it->second];
      if (target.true_label != row.true_label || target.fold != row.fold) {
        throw SchemaError("fuse_sum: label or fold mismatch for '" + row.sample_id + "' in '" +
                          next.classifier_id + "'");
      }
      for (std::size_t c = 0; c < row.scores.size(); ++c) target.scores[c] += row.scores[c];
    }
    out.classifier_id += "+" + next.classifier_id;
  }
  return out;
}

std::size_t predict(const std::vector<double>& scores) {
  std::size_t best = 0;
  for (std::size_t c = 1; c < scores.size(); ++c) {
    if (scores[c] > scores[best]) best = c;
  }
  return best;
}

RecognitionRate recognition_rate(const ScoreMatrix& m) {
  if (m.rows.empty()) throw InvalidArgument("recognition_rate: empty score matrix");
  validate_scores(m);
  std::map<std::string, std::size_t> class_index;
  for (std::size_t c = 0; c < m.class_names.size(); ++c) class_index[m.class_names[c]] = c;

  std::map<std::size_t, std::pair<std::size_t, std::size_t>> tally;  // fold -> (correct, total)
  std::size_t correct = 0;
  for (const auto& row : m.rows) {
    const bool hit = predict(row.scores) == class_index.at(row.true_label);
    auto& [ok, total] = tally[row.fold];
    ok += hit ? 1 : 0;
    ++total;
    correct += hit ? 1 : 0;
  }

  RecognitionRate out;
  double sum = 0.0;
  for (const auto& [fold, counts] : tally) {
    const double acc = static_cast<double>(counts.first) / static_cast<double>(counts.second);
    out.per_fold.emplace_back(fold, acc);
    sum += acc;
  }
  out.mean = sum / static_cast<double>(out.per_fold.size());
  out.pooled = static_cast<double>(correct) / static_cast<double>(m.rows.size());
  return out;
}

FusionRecipe load_recipe(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SchemaError("cannot open recipe " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  FusionRecipe recipe;
  try {
    const auto j = nlohmann::json::parse(text.str());
    for (const auto& [key, value] : j.items()) {
      if (key != "variant" && key != "scores") {
        throw SchemaError(path.string() + ": unknown key '" + key + "'");
      }
    }
    recipe.variant = j.at("variant").get<std::string>();
    for (const auto& entry : j.at("scores")) {
      fs::path p = entry.get<std::string>();
      if (p.is_relative()) p = path.parent_path() / p;
      recipe.scores.push_back(p);
    }
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(path.string() + ": " + e.what());
  }
  if (recipe.scores.empty()) throw SchemaError(path.string() + ": recipe lists no score files");
  return recipe;
}

std::optional<std::size_t> known_variant_size(const std::string& variant) {
  std::string name = variant;
  if (name.starts_with("Fusion ")) name = name.substr(7);
  static const std::map<std::string, std::size_t> sizes{
      {"No+Si+Sp", 14}, {"Si+Sp", 10}, {"Si+Sp+SSG", 15}};
  const auto it = sizes.find(name);
  if (it == sizes.end()) return std::nullopt;
  return it->second;
}

ScoreMatrix fuse_spec(const FusionRecipe& recipe) {
  if (recipe.scores.empty()) throw SchemaError("recipe '" + recipe.variant + "' lists no score files");
  if (auto expected = known_variant_size(recipe.variant); expected && *expected != recipe.scores.size()) {
    throw SchemaError("recipe '" + recipe.variant + "' needs " + std::to_string(*expected) +
                      " score files, got " + std::to_string(recipe.scores.size()));
  }
  std::vector<ScoreMatrix> matrices;
  for (const auto& path : recipe.scores) {
    if (!fs::exists(path)) throw SchemaError("recipe '" + recipe.variant + "': missing score file " + path.string());
    matrices.push_back(read_scores_csv(path));
  }
  return fuse_sum(matrices);
}

}  // namespace aaug
