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

#include "aaug/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "aaug/errors.hpp"

namespace aaug {

using nlohmann::json;

namespace {

// Reads keys out of one JSON object and rejects whatever was not consumed.
class Section {
 public:
  Section(const json& obj, std::string name) : obj_(obj), name_(std::move(name)) {
    if (!obj_.is_object()) throw SchemaError("config: '" + name_ + "' must be an object");
  }

  template <typename T>
  void read(const char* key, T& dst) {
    if (!obj_.contains(key)) return;
    used_.insert(key);
    try {
      dst = obj_.at(key).get<T>();
    } catch (const json::exception&) {
      throw SchemaError("config: '" + path(key) + "' has the wrong type");
    }
  }

  void read(const char* key, std::optional<double>& dst) {
    if (!obj_.contains(key)) return;
    used_.insert(key);
    if (obj_.at(key).is_null()) {
      dst.reset();
      return;
    }
    double v = 0.0;
    read(key, v);
    dst = v;
  }

  void read(const char* key, std::filesystem::path& dst) {
    std::string s = dst.string();
    read(key, s);
    dst = s;
  }

  const json* child(const char* key) {
    if (!obj_.contains(key)) return nullptr;
    used_.insert(key);
    return &obj_.at(key);
  }

  void finish() const {
    for (const auto& [key, value] : obj_.items()) {
      if (!used_.contains(key)) throw SchemaError("config: unknown key '" + path(key) + "'");
    }
  }

 private:
  std::string path(const std::string& key) const { return name_.empty() ? key : name_ + "." + key; }

  const json& obj_;
  std::string name_;
  std::set<std::string> used_;
};

void read_dgt(Section& s, DgtParams& p) {
  s.read("window_sigma2", p.window_sigma2);
  s.read("hop", p.hop);
  s.read("channels", p.channels);
  s.read("dynamic_range_db", p.dynamic_range_db);
}

void read_std_img(Section& s, AugmentationProtocol& proto) {
  auto& p = proto.std_img;
  s.read("copies", proto.img_copies);
  s.read("p_reflect_x", p.p_reflect_x);
  s.read("p_reflect_y", p.p_reflect_y);
  s.read("scale_min", p.scale_min);
  s.read("scale_max", p.scale_max);
  s.read("rotation_min_deg", p.rotation_min_deg);
  s.read("rotation_max_deg", p.rotation_max_deg);
  s.read("translation_min_px", p.translation_min_px);
  s.read("translation_max_px", p.translation_max_px);
}

void read_std_sgn(Section& s, StdSgnParams& p) {
  s.read("copies", p.copies);
  s.read("p_apply", p.p_apply);
  s.read("speed_min", p.speed_min);
  s.read("speed_max", p.speed_max);
  s.read("semitones_min", p.semitones_min);
  s.read("semitones_max", p.semitones_max);
  s.read("volume_db_min", p.volume_db_min);
  s.read("volume_db_max", p.volume_db_max);
  s.read("snr_db_min", p.snr_db_min);
  s.read("snr_db_max", p.snr_db_max);
  s.read("shift_seconds_min", p.shift_seconds_min);
  s.read("shift_seconds_max", p.shift_seconds_max);
}

void read_signal(Section& s, SignalProtocolParams& p) {
  s.read("wow_a_m", p.wow.a_m);
  s.read("wow_f_m", p.wow.f_m);
  s.read("noise_snr_db", p.noise.snr_db);
  s.read("speed_percent", p.speed_percent);
  s.read("gain_db", p.gain_db);
  s.read("drc_threshold_db", p.drc.threshold_db);
  s.read("drc_ratio", p.drc.ratio);
  s.read("pitch_semitones", p.pitch_semitones);
  s.read("pitch_window_seconds", p.pitch.window_seconds);
  s.read("pitch_hop_seconds", p.pitch.hop_seconds);
  s.read("pitch_tolerance_seconds", p.pitch.tolerance_seconds);
}

void read_spectro(Section& s, SpectroProtocolParams& p) {
  s.read("shift_max_row_fraction", p.shifts.max_row_fraction);
  s.read("shift_max_col_fraction", p.shifts.max_col_fraction);
  s.read("sum_mean", p.sum_mean);
  s.read("vtln_alpha_min", p.vtln.alpha_min);
  s.read("vtln_alpha_max", p.vtln.alpha_max);
  s.read("vtln_f0", p.vtln.f0);
  s.read("vtln_f_max", p.vtln.f_max);
  s.read("vtln_slices", p.vtln.slices);
  s.read("vtln_crop_fraction", p.vtln.crop_fraction);
  s.read("emda_max_delay", p.emda.max_delay);
  s.read("emda_f0_min", p.emda.f0_min);
  s.read("emda_f0_max", p.emda.f0_max);
  s.read("emda_gain_db_max", p.emda.gain_db_max);
  s.read("emda_q_min", p.emda.q_min);
  s.read("emda_q_max", p.emda.q_max);
  s.read("warp_control_points", p.warp.control_points);
  s.read("warp_max_disp_fraction", p.warp.max_disp_fraction);
  s.read("mask_row_width", p.warp.row_mask_width);
  s.read("mask_col_width", p.warp.col_mask_width);
  s.read("mask_row_count", p.warp.row_mask_count);
  s.read("mask_col_count", p.warp.col_mask_count);
}

void require(bool ok, const std::string& what) {
  if (!ok) throw SchemaError("config: " + what);
}

}  // namespace

void validate_config(const Config& c) {
  require(c.folds >= 2, "folds must be >= 2");
  require(c.jobs >= 1, "jobs must be >= 1");
  try {
    validate_dgt_params(c.dgt);
    validate_affine_params(c.protocol.std_img);
  } catch (const InvalidArgument& e) {
    throw SchemaError(std::string("config: ") + e.what());
  }
  const auto& proto = c.protocol;
  require(proto.img_copies >= 1, "std_img.copies must be >= 1");

  const auto& sg = proto.std_sgn;
  require(sg.copies >= 1, "std_sgn.copies must be >= 1");
  require(sg.p_apply >= 0.0 && sg.p_apply <= 1.0, "std_sgn.p_apply must lie in [0, 1]");
  require(sg.speed_min > 0.0 && sg.speed_min <= sg.speed_max, "std_sgn speed range must be positive and ordered");
  require(sg.semitones_min <= sg.semitones_max, "std_sgn semitone range must be ordered");
  require(sg.volume_db_min <= sg.volume_db_max, "std_sgn volume range must be ordered");
  require(sg.snr_db_min <= sg.snr_db_max, "std_sgn snr range must be ordered");
  require(sg.shift_seconds_min <= sg.shift_seconds_max, "std_sgn shift range must be ordered");

  const auto& si = proto.signal;
  require(si.wow.a_m >= 0.0 && si.wow.f_m > 0.0, "signal.wow_a_m must be >= 0 and wow_f_m > 0");
  require(si.speed_percent > -100.0, "signal.speed_percent must exceed -100");
  require(si.drc.ratio >= 1.0, "signal.drc_ratio must be >= 1");
  require(si.pitch.window_seconds > 0.0 && si.pitch.hop_seconds > 0.0 &&
              si.pitch.hop_seconds <= si.pitch.window_seconds && si.pitch.tolerance_seconds >= 0.0,
          "signal pitch window/hop/tolerance are inconsistent");

  const auto& sp = proto.spectro;
  require(sp.shifts.max_row_fraction >= 0.0 && sp.shifts.max_col_fraction >= 0.0,
          "spectro shift fractions must be non-negative");
  require(sp.vtln.alpha_min > 0.0 && sp.vtln.alpha_min <= sp.vtln.alpha_max,
          "spectro vtln alpha range must be positive and ordered");
  require(sp.vtln.slices >= 1, "spectro.vtln_slices must be >= 1");
  require(sp.vtln.crop_fraction >= 0.0 && sp.vtln.crop_fraction < 1.0,
          "spectro.vtln_crop_fraction must lie in [0, 1)");
  if (sp.vtln.f0 && sp.vtln.f_max) {
    require(*sp.vtln.f0 > 0.0 && *sp.vtln.f0 < *sp.vtln.f_max, "spectro needs 0 < vtln_f0 < vtln_f_max");
  }
  require(sp.emda.f0_min > 0.0 && sp.emda.f0_min <= sp.emda.f0_max, "spectro emda f0 range must be positive and ordered");
  require(sp.emda.gain_db_max >= 0.0, "spectro.emda_gain_db_max must be >= 0");
  require(sp.emda.q_min > 0.0 && sp.emda.q_min <= sp.emda.q_max, "spectro emda Q range must be positive and ordered");
  require(sp.warp.max_disp_fraction >= 0.0, "spectro.warp_max_disp_fraction must be >= 0");
  require(sp.warp.row_mask_width >= 1 && sp.warp.col_mask_width >= 1, "spectro mask widths must be >= 1");
}

Config parse_config(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::exception& e) {
    throw SchemaError(std::string("config: ") + e.what());
  }
  Config c;
  Section top(root, "");
  top.read("seed", c.seed);
  top.read("output_dir", c.output_dir);
  top.read("folds", c.folds);
  top.read("jobs", c.jobs);
  if (const json* j = top.child("dgt")) {
    Section s(*j, "dgt");
    read_dgt(s, c.dgt);
    s.finish();
  }
  if (const json* j = top.child("std_img")) {
    Section s(*j, "std_img");
    read_std_img(s, c.protocol);
    s.finish();
  }
  if (const json* j = top.child("std_sgn")) {
    Section s(*j, "std_sgn");
    read_std_sgn(s, c.protocol.std_sgn);
    s.finish();
  }
  if (const json* j = top.child("signal")) {
    Section s(*j, "signal");
    read_signal(s, c.protocol.signal);
    s.finish();
  }
  if (const json* j = top.child("spectro")) {
    Section s(*j, "spectro");
    read_spectro(s, c.protocol.spectro);
    s.finish();
  }
  top.finish();
  validate_config(c);
  return c;
}

Config load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SchemaError("cannot open config " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  try {
    return parse_config(text.str());
  } catch (const SchemaError& e) {
    throw SchemaError(path.string() + ": " + e.what());
  }
}

std::string config_to_json(const Config& c) {
  const auto& p = c.protocol;
  json j;
  j["seed"] = c.seed;
  j["output_dir"] = c.output_dir.string();
  j["folds"] = c.folds;
  j["jobs"] = c.jobs;
  j["dgt"] = {{"window_sigma2", c.dgt.window_sigma2},
              {"hop", c.dgt.hop},
              {"channels", c.dgt.channels},
              {"dynamic_range_db", c.dgt.dynamic_range_db}};
  j["std_img"] = {{"copies", p.img_copies},
                  {"p_reflect_x", p.std_img.p_reflect_x},
                  {"p_reflect_y", p.std_img.p_reflect_y},
                  {"scale_min", p.std_img.scale_min},
                  {"scale_max", p.std_img.scale_max},
                  {"rotation_min_deg", p.std_img.rotation_min_deg},
                  {"rotation_max_deg", p.std_img.rotation_max_deg},
                  {"translation_min_px", p.std_img.translation_min_px},
                  {"translation_max_px", p.std_img.translation_max_px}};
  const auto& sg = p.std_sgn;
  j["std_sgn"] = {{"copies", sg.copies},
                  {"p_apply", sg.p_apply},
                  {"speed_min", sg.speed_min},
                  {"speed_max", sg.speed_max},
                  {"semitones_min", sg.semitones_min},
                  {"semitones_max", sg.semitones_max},
                  {"volume_db_min", sg.volume_db_min},
                  {"volume_db_max", sg.volume_db_max},
                  {"snr_db_min", sg.snr_db_min},
                  {"snr_db_max", sg.snr_db_max},
                  {"shift_seconds_min", sg.shift_seconds_min},
                  {"shift_seconds_max", sg.shift_seconds_max}};
  const auto& si = p.signal;
  j["signal"] = {{"wow_a_m", si.wow.a_m},
                 {"wow_f_m", si.wow.f_m},
                 {"noise_snr_db", si.noise.snr_db},
                 {"speed_percent", si.speed_percent},
                 {"gain_db", si.gain_db},
                 {"drc_threshold_db", si.drc.threshold_db},
                 {"drc_ratio", si.drc.ratio},
                 {"pitch_semitones", si.pitch_semitones},
                 {"pitch_window_seconds", si.pitch.window_seconds},
                 {"pitch_hop_seconds", si.pitch.hop_seconds},
                 {"pitch_tolerance_seconds", si.pitch.tolerance_seconds}};
  const auto& sp = p.spectro;
  j["spectro"] = {{"shift_max_row_fraction", sp.shifts.max_row_fraction},
                  {"shift_max_col_fraction", sp.shifts.max_col_fraction},
                  {"sum_mean", sp.sum_mean},
                  {"vtln_alpha_min", sp.vtln.alpha_min},
                  {"vtln_alpha_max", sp.vtln.alpha_max},
                  {"vtln_f0", sp.vtln.f0 ? json(*sp.vtln.f0) : json(nullptr)},
                  {"vtln_f_max", sp.vtln.f_max ? json(*sp.vtln.f_max) : json(nullptr)},
                  {"vtln_slices", sp.vtln.slices},
                  {"vtln_crop_fraction", sp.vtln.crop_fraction},
                  {"emda_max_delay", sp.emda.max_delay},
                  {"emda_f0_min", sp.emda.f0_min},
                  {"emda_f0_max", sp.emda.f0_max},
                  {"emda_gain_db_max", sp.emda.gain_db_max},
                  {"emda_q_min", sp.emda.q_min},
                  {"emda_q_max", sp.emda.q_max},
                  {"warp_control_points", sp.warp.control_points},
                  {"warp_max_disp_fraction", sp.warp.max_disp_fraction},
                  {"mask_row_width", sp.warp.row_mask_width},
                  {"mask_col_width", sp.warp.col_mask_width},
                  {"mask_row_count", sp.warp.row_mask_count},
                  {"mask_col_count", sp.warp.col_mask_count}};
  return j.dump(2) + "\n";
}

}  // namespace aaug
