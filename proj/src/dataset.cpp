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

#include "aaug/dataset.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_map>

#include "json.hpp"

#include "aaug/csv.hpp"
#include "aaug/errors.hpp"
#include "aaug/parallel.hpp"

namespace aaug {

namespace fs = std::filesystem;

std::vector<std::string> Manifest::classes() const {
  std::set<std::string> labels;
  for (const auto& e : entries) labels.insert(e.label);
  return {labels.begin(), labels.end()};
}

const ManifestEntry* Manifest::find(const std::string& sample_id) const {
  for (const auto& e : entries) {
    if (e.sample_id == sample_id) return &e;
  }
  return nullptr;
}

void validate_manifest(const Manifest& m, bool check_files) {
  std::set<std::string> seen;
  for (const auto& e : m.entries) {
    if (e.sample_id.empty() || e.label.empty() || e.path.empty()) {
      throw SchemaError("manifest: empty field for sample '" + e.sample_id + "'");
    }
    if (!seen.insert(e.sample_id).second) {
      throw SchemaError("manifest: duplicate sample_id '" + e.sample_id + "'");
    }
    if (check_files && !fs::exists(e.path)) {
      throw SchemaError("manifest: missing file " + e.path.string() + " for sample '" +
                        e.sample_id + "'");
    }
  }
}

Manifest load_manifest(const fs::path& csv_path, bool check_files) {
  std::vector<csv::Row> rows;
  try {
    rows = csv::read_file(csv_path);
  } catch (const IoError& e) {
    throw SchemaError(std::string("manifest: ") + e.what());
  }
  const std::string name = csv_path.string();
  if (rows.empty()) throw SchemaError(name + ": empty manifest");
  const std::vector<std::string> header{"sample_id", "path", "label"};
  if (rows.front().fields != header) {
    throw SchemaError(name + ":" + std::to_string(rows.front().line) +
                      ": header must be sample_id,path,label");
  }
  Manifest m;
  const fs::path base = csv_path.parent_path();
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& row = rows[i];
    if (row.fields.size() != 3) {
      throw SchemaError(name + ":" + std::to_string(row.line) + ": malformed row, expected 3 fields, got " +
                        std::to_string(row.fields.size()));
    }
    fs::path path = row.fields[1];
    if (path.is_relative()) path = base / path;
    m.entries.push_back({row.fields[0], path, row.fields[2]});
  }
  try {
    validate_manifest(m, check_files);
  } catch (const SchemaError& e) {
    throw SchemaError(name + ": " + e.what());
  }
  return m;
}

std::vector<std::size_t> FoldAssignment::fold_sizes() const {
  std::vector<std::size_t> sizes(k, 0);
  for (const auto& [id, fold] : fold_of) {
    if (fold < k) ++sizes[fold];
  }
  return sizes;
}

FoldAssignment stratified_folds(const Manifest& m, std::size_t k, std::uint64_t seed) {
  if (k < 2) throw InvalidArgument("stratified_folds: k must be >= 2");
  validate_manifest(m, false);
  if (m.entries.empty()) throw InvalidArgument("stratified_folds: empty manifest");

  FoldAssignment out;
  out.k = k;
  out.seed = seed;
  std::map<std::string, std::vector<std::string>> by_class;
  for (const auto& e : m.entries) by_class[e.label].push_back(e.sample_id);

  std::size_t dealt = 0;
  for (auto& [label, ids] : by_class) {
    RngStream rng(derive_seed(seed, "class:" + label, 0));
    for (std::size_t i = ids.size(); i > 1; --i) {
      const auto j = static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(i) - 1));
      std::swap(ids[i - 1], ids[j]);
    }
    for (const auto& id : ids) out.fold_of[id] = dealt++ % k;
    if (ids.size() < k) {
      out.warnings.push_back("class '" + label + "' has " + std::to_string(ids.size()) +
                             " samples, fewer than k = " + std::to_string(k) +
                             "; some folds lack it");
    }
  }
  return out;
}

std::string folds_to_json(const FoldAssignment& folds) {
  nlohmann::json j;
  j["k"] = folds.k;
  j["seed"] = folds.seed;
  j["folds"] = nlohmann::json::object();
  for (const auto& [id, fold] : folds.fold_of) j["folds"][id] = fold;
  return j.dump(2) + "\n";
}

FoldAssignment folds_from_json(const std::string& text) {
  FoldAssignment out;
  try {
    const auto j = nlohmann::json::parse(text);
    for (const auto& [key, value] : j.items()) {
      if (key != "k" && key != "seed" && key != "folds") {
        throw SchemaError("folds file: unknown key '" + key + "'");
      }
    }
    out.k = j.at("k").get<std::size_t>();
    out.seed = j.at("seed").get<std::uint64_t>();
    for (const auto& [id, fold] : j.at("folds").items()) {
      out.fold_of[id] = fold.get<std::size_t>();
    }
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(std::string("folds file: ") + e.what());
  }
  if (out.k < 2) throw SchemaError("folds file: k must be >= 2");
  for (const auto& [id, fold] : out.fold_of) {
    if (fold >= out.k) throw SchemaError("folds file: fold of '" + id + "' is out of range");
  }
  return out;
}

void save_folds(const FoldAssignment& folds, const fs::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << folds_to_json(folds);
  if (!out) throw IoError("write failed for " + path.string());
}

FoldAssignment load_folds(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SchemaError("cannot open folds file " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return folds_from_json(text.str());
}

void check_folds_match(const Manifest& m, const FoldAssignment& folds) {
  for (const auto& e : m.entries) {
    if (!folds.fold_of.contains(e.sample_id)) {
      throw SchemaError("folds file does not assign sample '" + e.sample_id + "'");
    }
  }
  if (folds.fold_of.size() != m.entries.size()) {
    throw SchemaError("folds file lists samples that are not in the manifest");
  }
}

std::string derived_id(const std::string& origin, std::string_view protocol,
                       const std::string& transform, std::size_t n) {
  return origin + "__" + std::string(protocol) + "__" + transform + "__" + std::to_string(n);
}

Spectrogram fit_width(const Spectrogram& spec, std::size_t cols) {
  if (spec.cols() == cols) return spec;
  if (spec.empty() || cols == 0) throw InvalidArgument("fit_width: empty input or target");
  Spectrogram out(spec.rows(), cols, spec.freq_resolution(), spec.time_resolution(),
                  spec.source_sample_rate());
  for (std::size_t r = 0; r < spec.rows(); ++r) {
    for (std::size_t c = 0; c < cols; ++c) out.at(r, c) = spec.at(r, c % spec.cols());
  }
  return out;
}

void write_index_csv(const std::vector<IndexRow>& rows, const fs::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << "derived_id,origin_id,protocol,transform,path\n";
  for (const auto& r : rows) {
    out << csv::join({r.derived_id, r.origin_id, r.protocol, r.transform, r.path}) << '\n';
  }
  if (!out) throw IoError("write failed for " + path.string());
}

std::vector<IndexRow> read_index_csv(const fs::path& path) {
  const auto rows = csv::read_file(path);
  const std::vector<std::string> header{"derived_id", "origin_id", "protocol", "transform", "path"};
  if (rows.empty() || rows.front().fields != header) {
    throw SchemaError(path.string() + ": bad index header");
  }
  std::vector<IndexRow> out;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& f = rows[i].fields;
    if (f.size() != 5) {
      throw SchemaError(path.string() + ":" + std::to_string(rows[i].line) + ": malformed row");
    }
    out.push_back({f[0], f[1], f[2], f[3], f[4]});
  }
  return out;
}

namespace {

const char* extension(Domain domain) {
  switch (domain) {
    case Domain::Spectrogram: return ".spg";
    case Domain::Image: return ".png";
    default: return ".wav";
  }
}

// Converts audio to the representation the protocol works in.
Item to_domain(AudioSignal audio, Domain domain, const DgtParams& dgt_params) {
  switch (domain) {
    case Domain::Spectrogram: return dgt(audio, dgt_params);
    case Domain::Image: return render(dgt(audio, dgt_params), dgt_params);
    default: return audio;
  }
}

void save_item(const Item& item, const fs::path& path) {
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, AudioSignal>) {
          write_wav(v, path);
        } else if constexpr (std::is_same_v<T, Spectrogram>) {
          save_spec(v, path);
        } else {
          write_png(v, path);
        }
      },
      item);
}

bool is_mixing(ProtocolName name) {
  return name == ProtocolName::Signal || name == ProtocolName::Spectro;
}

}  // namespace

PartnerPlan plan_partners(const Manifest& m, const FoldAssignment& folds, std::size_t test_fold,
                          std::uint64_t seed) {
  std::map<std::string, std::vector<std::string>> classmates;
  std::vector<const ManifestEntry*> train;
  for (const auto& e : m.entries) {
    if (folds.fold_of.at(e.sample_id) == test_fold) continue;
    train.push_back(&e);
    classmates[e.label].push_back(e.sample_id);
  }
  PartnerPlan plan;
  for (const ManifestEntry* e : train) {
    std::vector<const std::string*> others;
    for (const auto& id : classmates.at(e->label)) {
      if (id != e->sample_id) others.push_back(&id);
    }
    if (others.empty()) {
      plan.warnings.push_back("sample '" + e->sample_id + "' has no training classmate; mixing with itself");
      plan.partners.push_back({e->sample_id, e->sample_id});
      continue;
    }
    RngStream rng(derive_seed(seed, e->sample_id, 1));
    const auto pick = rng.uniform_int(0, static_cast<std::int64_t>(others.size()) - 1);
    plan.partners.push_back({e->sample_id, *others[static_cast<std::size_t>(pick)]});
  }
  return plan;
}

AugmentedIndex build_training_set(const Manifest& m, const FoldAssignment& folds,
                                  const BuildOptions& options) {
  if (options.test_fold >= folds.k) {
    throw InvalidArgument("build_training_set: test fold " + std::to_string(options.test_fold) +
                          " is not below k = " + std::to_string(folds.k));
  }
  check_folds_match(m, folds);
  validate_dgt_params(options.dgt);

  const ProtocolName name = options.protocol.name;
  const std::string token(protocol_token(name));
  const Domain domain = name == ProtocolName::NoAug ? Domain::Audio : protocol_domain(name);
  const char* ext = extension(domain);

  std::vector<std::size_t> train;
  std::vector<std::size_t> test;
  for (std::size_t i = 0; i < m.entries.size(); ++i) {
    (folds.fold_of.at(m.entries[i].sample_id) == options.test_fold ? test : train).push_back(i);
  }

  const fs::path fold_dir = options.out_dir / ("fold_" + std::to_string(options.test_fold));
  fs::create_directories(fold_dir / "train");
  fs::create_directories(fold_dir / "test");

  AugmentedIndex index;

  // Test items are converted but never augmented.
  index.test_rows.resize(test.size());
  parallel_for(test.size(), options.jobs, [&](std::size_t t) {
    const auto& e = m.entries[test[t]];
    const Item item = to_domain(read_wav(e.path), domain, options.dgt);
    const std::string id = derived_id(e.sample_id, token, "identity", 0);
    const std::string rel = "test/" + id + ext;
    save_item(item, fold_dir / rel);
    index.test_rows[t] = {id, e.sample_id, token, "identity", rel};
  });

  // Training items, loaded up front so classmates can serve as partners.
  std::vector<Item> items(train.size());
  parallel_for(train.size(), options.jobs, [&](std::size_t t) {
    items[t] = to_domain(read_wav(m.entries[train[t]].path), domain, options.dgt);
  });

  std::map<std::string, std::size_t> position;  // sample_id -> index in `train`
  for (std::size_t t = 0; t < train.size(); ++t) position[m.entries[train[t]].sample_id] = t;
  PartnerPlan plan;
  if (is_mixing(name)) plan = plan_partners(m, folds, options.test_fold, options.seed);

  std::vector<std::vector<IndexRow>> results(train.size());
  parallel_for(train.size(), options.jobs, [&](std::size_t t) {
    const auto& e = m.entries[train[t]];
    RngStream rng(derive_seed(options.seed, e.sample_id, 0));

    std::vector<Item> pool;
    if (is_mixing(name)) {
      Item chosen = items[position.at(plan.partners[t].partner_id)];
      if (auto* spec = std::get_if<Spectrogram>(&chosen)) {
        chosen = fit_width(*spec, std::get<Spectrogram>(items[t]).cols());
      }
      pool.push_back(std::move(chosen));
    }

    std::vector<AugmentedItem> produced;
    try {
      produced = apply_protocol(items[t], options.protocol, pool, rng);
    } catch (const Error& err) {
      throw Error("sample '" + e.sample_id + "': " + err.what());
    }
    for (std::size_t n = 0; n < produced.size(); ++n) {
      const std::string id = derived_id(e.sample_id, token, produced[n].transform, n);
      const std::string rel = "train/" + id + ext;
      save_item(produced[n].item, fold_dir / rel);
      results[t].push_back({id, e.sample_id, token, produced[n].transform, rel});
    }
  });

  for (auto& rows : results) {
    for (auto& row : rows) index.rows.push_back(std::move(row));
  }
  index.partners = std::move(plan.partners);
  index.warnings = std::move(plan.warnings);

  write_index_csv(index.rows, fold_dir / "index.csv");
  write_index_csv(index.test_rows, fold_dir / "test_index.csv");
  std::ofstream partners(fold_dir / "partners.csv", std::ios::binary | std::ios::trunc);
  if (!partners) throw IoError("cannot write partners.csv");
  partners << "origin_id,partner_id\n";
  for (const auto& p : index.partners) partners << csv::join({p.origin_id, p.partner_id}) << '\n';
  return index;
}

}  // namespace aaug
