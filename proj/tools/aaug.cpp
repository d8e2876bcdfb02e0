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

// aaug: spectrogram conversion, augmentation, fold splitting, score fusion
// and evaluation from the command line.
//
// Exit codes: 0 success, 1 processing failure, 2 usage or config error.

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "aaug/audio.hpp"
#include "aaug/config.hpp"
#include "aaug/dataset.hpp"
#include "aaug/errors.hpp"
#include "aaug/fusion.hpp"
#include "aaug/parallel.hpp"
#include "aaug/spectrogram.hpp"

namespace fs = std::filesystem;
using namespace aaug;

namespace {

constexpr int kOk = 0;
constexpr int kProcessing = 1;
constexpr int kUsage = 2;

// Config errors carry their own exit code through the command bodies.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Config config_or_default(const std::string& path) {
  if (path.empty()) return Config{};
  try {
    return load_config(path);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

bool is_wav(const fs::path& p) {
  std::string ext = p.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
  return ext == ".wav";
}

struct SpectrogramArgs {
  std::string in;
  std::string out;
  std::string config;
  std::size_t jobs = 0;
};

int cmd_spectrogram(const SpectrogramArgs& a) {
  const Config cfg = config_or_default(a.config);
  const std::size_t jobs = a.jobs ? a.jobs : cfg.jobs;
  std::vector<fs::path> inputs;
  if (fs::is_directory(a.in)) {
    for (const auto& entry : fs::directory_iterator(a.in)) {
      if (entry.is_regular_file() && is_wav(entry.path())) inputs.push_back(entry.path());
    }
    std::sort(inputs.begin(), inputs.end());
  } else if (fs::is_regular_file(a.in)) {
    inputs.push_back(a.in);
  } else {
    throw UsageError("--in: no such file or directory: " + a.in);
  }
  if (inputs.empty()) {
    std::cerr << "warning: no .wav files in " << a.in << "\n";
    return kOk;
  }
  fs::create_directories(a.out);

  std::vector<std::string> summary(inputs.size());
  std::vector<std::string> failure(inputs.size());
  parallel_for(inputs.size(), jobs, [&](std::size_t i) {
    try {
      const AudioSignal audio = read_wav(inputs[i]);
      const Spectrogram spec = dgt(audio, cfg.dgt);
      const fs::path stem = fs::path(a.out) / inputs[i].stem();
      save_spec(spec, stem.string() + ".spg");
      write_png(render(spec, cfg.dgt), stem.string() + ".png");
      summary[i] = inputs[i].filename().string() + ": " + std::to_string(spec.rows()) + "x" +
                   std::to_string(spec.cols()) + " -> " + stem.filename().string() + ".spg, .png";
    } catch (const std::exception& e) {
      failure[i] = e.what();
    }
  });

  int status = kOk;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    if (failure[i].empty()) {
      std::cout << summary[i] << "\n";
    } else {
      std::cerr << "error: " << inputs[i].string() << ": " << failure[i] << "\n";
      status = kProcessing;
    }
  }
  return status;
}

struct AugmentArgs {
  std::string manifest;
  std::string protocol;
  std::string folds_file;
  std::size_t test_fold = 0;
  std::optional<std::uint64_t> seed;
  std::string out;
  std::string config;
  std::size_t jobs = 0;
};

int cmd_augment(const AugmentArgs& a) {
  Config cfg = config_or_default(a.config);
  const auto name = parse_protocol(a.protocol);
  if (!name) throw UsageError("--protocol: unknown protocol '" + a.protocol + "'");

  Manifest manifest;
  FoldAssignment folds;
  try {
    manifest = load_manifest(a.manifest);
    folds = load_folds(a.folds_file);
    check_folds_match(manifest, folds);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  if (a.test_fold >= folds.k) {
    throw UsageError("--test-fold " + std::to_string(a.test_fold) + " is not below k = " +
                     std::to_string(folds.k));
  }

  BuildOptions options;
  options.out_dir = a.out.empty() ? cfg.output_dir : fs::path(a.out);
  options.test_fold = a.test_fold;
  options.seed = a.seed.value_or(cfg.seed);
  options.jobs = a.jobs ? a.jobs : cfg.jobs;
  options.protocol = cfg.protocol;
  options.protocol.name = *name;
  options.dgt = cfg.dgt;

  const AugmentedIndex index = build_training_set(manifest, folds, options);
  for (const auto& w : index.warnings) std::cerr << "warning: " << w << "\n";
  std::cout << "fold " << a.test_fold << ": " << index.rows.size() << " training items, "
            << index.test_rows.size() << " test items -> "
            << (options.out_dir / ("fold_" + std::to_string(a.test_fold))).string() << "\n";
  return kOk;
}

struct SplitArgs {
  std::string manifest;
  std::size_t k = 10;
  std::uint64_t seed = 0;
  std::string out;
};

int cmd_split(const SplitArgs& a) {
  if (a.k < 2) throw UsageError("--k must be >= 2");
  Manifest manifest;
  try {
    manifest = load_manifest(a.manifest);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  const FoldAssignment folds = stratified_folds(manifest, a.k, a.seed);
  for (const auto& w : folds.warnings) std::cerr << "warning: " << w << "\n";
  save_folds(folds, a.out);
  const auto sizes = folds.fold_sizes();
  std::cout << "wrote " << a.out << ": " << manifest.entries.size() << " samples in " << a.k
            << " folds (sizes";
  for (auto s : sizes) std::cout << ' ' << s;
  std::cout << ")\n";
  return kOk;
}

int cmd_fuse(const std::string& recipe_path, const std::string& out) {
  ScoreMatrix fused;
  try {
    fused = fuse_spec(load_recipe(recipe_path));
  } catch (const SchemaError& e) {
    throw UsageError(e.what());
  }
  write_scores_csv(fused, out);
  std::cout << "fused " << fused.classifier_id << ": " << fused.rows.size() << " samples -> " << out
            << "\n";
  return kOk;
}

int cmd_eval(const std::string& scores_path) {
  ScoreMatrix scores;
  try {
    scores = read_scores_csv(scores_path);
  } catch (const SchemaError& e) {
    throw UsageError(e.what());
  }
  const RecognitionRate rate = recognition_rate(sanitize(scores));
  char line[128];
  for (const auto& [fold, acc] : rate.per_fold) {
    std::snprintf(line, sizeof line, "fold %zu: %.4f", fold, acc);
    std::cout << line << "\n";
  }
  std::snprintf(line, sizeof line, "mean accuracy: %.4f", rate.mean);
  std::cout << line << "\n";
  std::snprintf(line, sizeof line, "pooled accuracy: %.4f", rate.pooled);
  std::cout << line << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Audio augmentation toolkit: Gabor spectrograms, augmentation protocols, "
               "stratified folds and sum-rule fusion"};
  app.require_subcommand(1);

  SpectrogramArgs spec_args;
  auto* spec_cmd = app.add_subcommand("spectrogram", "Convert WAV files to .spg spectrograms and PNG images");
  spec_cmd->add_option("--in", spec_args.in, "WAV file or directory of WAV files")->required();
  spec_cmd->add_option("--out", spec_args.out, "Output directory")->required();
  spec_cmd->add_option("--config", spec_args.config, "JSON config file");
  spec_cmd->add_option("--jobs", spec_args.jobs, "Worker threads (default: config jobs)");

  AugmentArgs aug_args;
  auto* aug_cmd = app.add_subcommand("augment", "Build a leakage-safe augmented training set for one fold");
  aug_cmd->add_option("--manifest", aug_args.manifest, "Manifest CSV (sample_id,path,label)")->required();
  aug_cmd->add_option("--protocol", aug_args.protocol, "none | std-img | std-sgn | signal | spectro")
      ->required()
      ->check(CLI::IsMember({"none", "std-img", "std-sgn", "signal", "spectro"}));
  aug_cmd->add_option("--folds-file", aug_args.folds_file, "Folds JSON written by 'split'")->required();
  aug_cmd->add_option("--test-fold", aug_args.test_fold, "Fold held out as test set")->required();
  aug_cmd->add_option("--seed", aug_args.seed, "Master seed (default: config seed)");
  aug_cmd->add_option("--out", aug_args.out, "Output directory (default: config output_dir)");
  aug_cmd->add_option("--config", aug_args.config, "JSON config file");
  aug_cmd->add_option("--jobs", aug_args.jobs, "Worker threads (default: config jobs)");

  SplitArgs split_args;
  auto* split_cmd = app.add_subcommand("split", "Write stratified k-fold assignment");
  split_cmd->add_option("--manifest", split_args.manifest, "Manifest CSV")->required();
  split_cmd->add_option("--k", split_args.k, "Number of folds")->capture_default_str();
  split_cmd->add_option("--seed", split_args.seed, "Shuffle seed")->capture_default_str();
  split_cmd->add_option("--out", split_args.out, "Output folds JSON")->required();

  std::string recipe;
  std::string fused_out;
  auto* fuse_cmd = app.add_subcommand("fuse", "Sum-rule fusion of classifier score files");
  fuse_cmd->add_option("--recipe", recipe, "Recipe JSON {\"variant\":..., \"scores\":[...]}")->required();
  fuse_cmd->add_option("--out", fused_out, "Fused score CSV")->required();

  std::string scores;
  auto* eval_cmd = app.add_subcommand("eval", "Recognition rate of a score file");
  eval_cmd->add_option("--scores", scores, "Score CSV")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*spec_cmd) return cmd_spectrogram(spec_args);
    if (*aug_cmd) return cmd_augment(aug_args);
    if (*split_cmd) return cmd_split(split_args);
    if (*fuse_cmd) return cmd_fuse(recipe, fused_out);
    if (*eval_cmd) return cmd_eval(scores);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kProcessing;
  }
  return kUsage;
}
