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

#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <vector>

#include "aaug/audio.hpp"
#include "aaug/errors.hpp"
#include "aaug/rng.hpp"
#include "oracles.hpp"

using namespace aaug;

namespace {

// Hand-assembled RIFF file, independent of write_wav.
void write_raw_wav(const std::filesystem::path& path, std::uint16_t format, std::uint16_t channels,
                   std::uint32_t rate, std::uint16_t bits, const std::vector<unsigned char>& data) {
  std::vector<unsigned char> b;
  auto u16 = [&](std::uint16_t v) { b.push_back(v & 0xFF); b.push_back(v >> 8); };
  auto u32 = [&](std::uint32_t v) { for (int i = 0; i < 4; ++i) b.push_back((v >> (8 * i)) & 0xFF); };
  auto tag = [&](const char* t) { b.insert(b.end(), t, t + 4); };
  tag("RIFF");
  u32(static_cast<std::uint32_t>(36 + data.size()));
  tag("WAVE");
  tag("fmt ");
  u32(16);
  u16(format);
  u16(channels);
  u32(rate);
  u32(rate * channels * bits / 8);
  u16(static_cast<std::uint16_t>(channels * bits / 8));
  u16(bits);
  tag("LIST");  // unrelated chunk the reader must skip
  u32(3);
  b.insert(b.end(), {'a', 'b', 'c', 0});
  tag("data");
  u32(static_cast<std::uint32_t>(data.size()));
  b.insert(b.end(), data.begin(), data.end());
  std::ofstream(path, std::ios::binary).write(reinterpret_cast<const char*>(b.data()), b.size());
}

std::vector<unsigned char> pcm16(const std::vector<std::int16_t>& v) {
  std::vector<unsigned char> out;
  for (auto s : v) {
    const auto u = static_cast<std::uint16_t>(s);
    out.push_back(u & 0xFF);
    out.push_back(u >> 8);
  }
  return out;
}

std::vector<unsigned char> f32(const std::vector<float>& v) {
  std::vector<unsigned char> out(v.size() * 4);
  std::memcpy(out.data(), v.data(), out.size());
  return out;
}

}  // namespace

TEST_CASE("read_wav scales 16-bit PCM by 1/32768") {
  const auto dir = oracle::temp_dir("wav16");
  write_raw_wav(dir / "a.wav", 1, 1, 8000, 16, pcm16({0, 16384, -16384}));
  const AudioSignal s = read_wav(dir / "a.wav");
  CHECK(s.sample_rate == 8000);
  REQUIRE(s.size() == 3);
  CHECK(s.samples[0] == 0.0);
  CHECK(s.samples[1] == 0.5);
  CHECK(s.samples[2] == -0.5);
}

TEST_CASE("read_wav averages channels to mono") {
  const auto dir = oracle::temp_dir("wavst");
  write_raw_wav(dir / "st.wav", 3, 2, 16000, 32, f32({0.2f, 0.4f}));
  const AudioSignal s = read_wav(dir / "st.wav");
  REQUIRE(s.size() == 1);
  CHECK(s.samples[0] == doctest::Approx(0.3).epsilon(1e-7));
}

TEST_CASE("read_wav errors") {
  const auto dir = oracle::temp_dir("wavbad");
  CHECK_THROWS_AS(read_wav(dir / "missing.wav"), IoError);

  write_raw_wav(dir / "empty.wav", 1, 1, 8000, 16, {});
  CHECK_THROWS_WITH_AS(read_wav(dir / "empty.wav"), doctest::Contains("zero-length"), FormatError);

  write_raw_wav(dir / "pcm8.wav", 1, 1, 8000, 8, {1, 2, 3});
  CHECK_THROWS_WITH_AS(read_wav(dir / "pcm8.wav"), doctest::Contains("unsupported codec"), FormatError);

  std::ofstream(dir / "junk.wav") << "not a wave file at all";
  CHECK_THROWS_AS(read_wav(dir / "junk.wav"), FormatError);
}

TEST_CASE("write_wav round trip is exact for float-representable samples") {
  const auto dir = oracle::temp_dir("wavrt");
  RngStream rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    AudioSignal s{{}, static_cast<int>(rng.uniform_int(8000, 48000))};
    const auto n = rng.uniform_int(1, 2000);
    for (int i = 0; i < n; ++i) s.samples.push_back(static_cast<float>(rng.uniform(-1.5, 1.5)));
    write_wav(s, dir / "rt.wav");
    CHECK(read_wav(dir / "rt.wav") == s);
  }
}

TEST_CASE("write_wav keeps out-of-range samples and rejects invalid signals") {
  const auto dir = oracle::temp_dir("wavw");
  write_wav(AudioSignal{{1.5, -2.0}, 8000}, dir / "loud.wav");
  const auto back = read_wav(dir / "loud.wav");
  CHECK(back.samples[0] == 1.5);
  CHECK(back.samples[1] == -2.0);
  CHECK_THROWS_AS(write_wav(AudioSignal{{0.1}, 0}, dir / "bad.wav"), InvalidArgument);
  CHECK_THROWS_AS(write_wav(AudioSignal{{0.1}, 8000}, dir / "no_such_dir" / "x.wav"), IoError);
}

TEST_CASE("rms") {
  CHECK(rms(std::vector<double>(100, 0.5)) == doctest::Approx(0.5));
  CHECK(rms(std::vector<double>(10, 0.0)) == 0.0);
  // 440 cycles over exactly one second.
  CHECK(rms(oracle::tone(440.0, 1.0, 16000)) == doctest::Approx(0.70711).epsilon(1e-4));
  CHECK_THROWS_AS(rms(std::vector<double>{}), InvalidArgument);
}

TEST_CASE("resample") {
  AudioSignal s{oracle::tone(440.0, 1.0, 16000), 16000};
  CHECK(resample(s, 1.0) == s);

  AudioSignal thousand{std::vector<double>(1000, 0.25), 16000};
  CHECK(resample(thousand, 2.0).size() == 500);

  const AudioSignal fast = resample(s, 1.15);
  CHECK(fast.sample_rate == 16000);
  CHECK(oracle::dominant_frequency(fast.samples, 16000, 300.0, 800.0) ==
        doctest::Approx(506.0).epsilon(5.0 / 506.0));

  CHECK_THROWS_AS(resample(s, 0.0), InvalidArgument);
  CHECK_THROWS_AS(resample(s, -1.0), InvalidArgument);
}

TEST_CASE("resample forth and back keeps length within one sample") {
  RngStream rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const auto n = static_cast<std::size_t>(rng.uniform_int(10, 5000));
    const double f = rng.uniform(0.5, 2.0);
    AudioSignal s{std::vector<double>(n, 0.1), 8000};
    const auto back = resample(resample(s, f), 1.0 / f);
    CHECK(std::llabs(static_cast<long long>(back.size()) - static_cast<long long>(n)) <= 1);
  }
}

TEST_CASE("RngStream is a pure function of the seed") {
  RngStream a(42), b(42), c(43);
  for (int i = 0; i < 100; ++i) {
    const auto x = a.next_u64();
    CHECK(x == b.next_u64());
    CHECK(x != c.next_u64());
  }
  // Frozen first draws guard the documented cross-platform sequence.
  RngStream z(0);
  CHECK(z.next_u64() == 0xE220A8397B1DCDAFULL);
  CHECK(z.next_u64() == 0x6E789E6AA1B965F4ULL);
}

TEST_CASE("RngStream draws stay in range") {
  RngStream rng(3);
  double sum = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const double u = rng.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    const auto k = rng.uniform_int(-3, 3);
    CHECK(k >= -3);
    CHECK(k <= 3);
    sum += rng.normal();
  }
  CHECK(std::abs(sum / 10000.0) < 0.05);
  CHECK(rng.uniform(2.0, 2.0) == 2.0);
  CHECK(derive_seed(1, "a", 0) != derive_seed(1, "b", 0));
  CHECK(derive_seed(1, "a", 0) != derive_seed(1, "a", 1));
  CHECK(derive_seed(1, "a", 0) == derive_seed(1, "a", 0));
}
