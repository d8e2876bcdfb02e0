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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>

#include "aaug/config.hpp"
#include "aaug/errors.hpp"
#include "oracles.hpp"

using namespace aaug;

TEST_CASE("defaults") {
  const Config c = parse_config("{}");
  CHECK(c.seed == 0);
  CHECK(c.folds == 10);
  CHECK(c.dgt.hop == 128);
  CHECK(c.protocol.std_sgn.copies == 10);
  CHECK(c.protocol.signal.wow.a_m == 3.0);
  CHECK(c.protocol.spectro.warp.col_mask_width == 15);
  CHECK_NOTHROW(validate_config(Config{}));
}

TEST_CASE("values are read") {
  const Config c = parse_config(R"({
    "seed": 42, "output_dir": "runs/a", "folds": 5, "jobs": 2,
    "dgt": {"hop": 64, "channels": 256},
    "std_img": {"copies": 3, "rotation_max_deg": 5},
    "std_sgn": {"p_apply": 0.25},
    "signal": {"gain_db": -6, "drc_ratio": 2},
    "spectro": {"vtln_slices": 4, "vtln_f0": 3000, "mask_col_width": 9}
  })");
  CHECK(c.seed == 42);
  CHECK(c.output_dir == "runs/a");
  CHECK(c.folds == 5);
  CHECK(c.jobs == 2);
  CHECK(c.dgt.hop == 64);
  CHECK(c.dgt.channels == 256);
  CHECK(c.protocol.img_copies == 3);
  CHECK(c.protocol.std_img.rotation_max_deg == 5.0);
  CHECK(c.protocol.std_sgn.p_apply == 0.25);
  CHECK(c.protocol.signal.gain_db == -6.0);
  CHECK(c.protocol.signal.drc.ratio == 2.0);
  CHECK(c.protocol.spectro.vtln.slices == 4);
  CHECK(c.protocol.spectro.vtln.f0 == 3000.0);
  CHECK(c.protocol.spectro.warp.col_mask_width == 9);
}

TEST_CASE("round trip") {
  Config c = parse_config(R"({"seed": 7, "signal": {"pitch_semitones": 3}, "spectro": {"vtln_f_max": 7000}})");
  const Config back = parse_config(config_to_json(c));
  CHECK(config_to_json(back) == config_to_json(c));
  CHECK(back.protocol.signal.pitch_semitones == 3.0);
  CHECK(back.protocol.spectro.vtln.f_max == 7000.0);
}

TEST_CASE("rejections") {
  CHECK_THROWS_WITH_AS(parse_config(R"({"sed": 1})"), doctest::Contains("sed"), SchemaError);
  CHECK_THROWS_WITH_AS(parse_config(R"({"dgt": {"hops": 1}})"), doctest::Contains("hops"), SchemaError);
  CHECK_THROWS_AS(parse_config(R"({"dgt": {"hop": "x"}})"), SchemaError);
  CHECK_THROWS_AS(parse_config(R"({"dgt": {"hop": -3}})"), SchemaError);
  CHECK_THROWS_AS(parse_config(R"({"dgt": {"hop": 1024}})"), SchemaError);
  CHECK_THROWS_AS(parse_config(R"({"folds": 1})"), SchemaError);
  CHECK_THROWS_AS(parse_config(R"({"jobs": 0})"), SchemaError);
  CHECK_THROWS_AS(parse_config(R"({"std_sgn": {"p_apply": 2}})"), SchemaError);
  CHECK_THROWS_AS(parse_config(R"({"signal": {"drc_ratio": 0.5}})"), SchemaError);
  CHECK_THROWS_AS(parse_config(R"({"spectro": {"vtln_alpha_min": 1.2}})"), SchemaError);
  CHECK_THROWS_AS(parse_config(R"({"spectro": {"vtln_f0": 9000, "vtln_f_max": 8000}})"), SchemaError);
  CHECK_THROWS_AS(parse_config("[1, 2]"), SchemaError);
  CHECK_THROWS_AS(parse_config("{"), SchemaError);
}

TEST_CASE("load_config names the file") {
  const auto dir = oracle::temp_dir("config");
  std::ofstream(dir / "bad.json") << R"({"bogus": true})";
  CHECK_THROWS_WITH_AS(load_config(dir / "bad.json"), doctest::Contains("bad.json"), SchemaError);
  CHECK_THROWS_AS(load_config(dir / "absent.json"), SchemaError);
  std::filesystem::remove_all(dir);
}
