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

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <iterator>
#include <vector>

#include "aaug/errors.hpp"
#include "aaug/spectrogram.hpp"

namespace aaug {

namespace {

constexpr char kMagic[8] = {'A', 'A', 'S', 'P', 'G', '0', '0', '1'};
constexpr std::size_t kHeaderBytes = 8 + 8 + 8 + 8 + 8 + 4;

template <typename U>
void put_le(std::vector<unsigned char>& out, U v) {
  for (std::size_t i = 0; i < sizeof(U); ++i) {
    out.push_back(static_cast<unsigned char>((v >> (8 * i)) & 0xFF));
  }
}

template <typename U>
U get_le(const unsigned char* p) {
  U v = 0;
  for (std::size_t i = 0; i < sizeof(U); ++i) v |= static_cast<U>(p[i]) << (8 * i);
  return v;
}

}  // namespace

void save_spec(const Spectrogram& spec, const std::filesystem::path& path) {
  std::vector<unsigned char> out;
  out.reserve(kHeaderBytes + spec.data().size() * 4);
  out.insert(out.end(), kMagic, kMagic + 8);
  put_le<std::uint64_t>(out, spec.rows());
  put_le<std::uint64_t>(out, spec.cols());
  put_le(out, std::bit_cast<std::uint64_t>(spec.freq_resolution()));
  put_le(out, std::bit_cast<std::uint64_t>(spec.time_resolution()));
  put_le(out, static_cast<std::uint32_t>(spec.source_sample_rate()));
  for (double v : spec.data()) put_le(out, std::bit_cast<std::uint32_t>(static_cast<float>(v)));

  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot write " + path.string());
  file.write(reinterpret_cast<const char*>(out.data()), static_cast<std::streamsize>(out.size()));
  if (!file) throw IoError("write failed for " + path.string());
}

Spectrogram load_spec(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  const std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)),
                                         std::istreambuf_iterator<char>());
  const std::string name = path.string();
  if (bytes.size() < 8 || std::memcmp(bytes.data(), kMagic, 8) != 0) {
    throw FormatError(name + ": bad format (magic mismatch)");
  }
  if (bytes.size() < kHeaderBytes) throw FormatError(name + ": truncated header");

  const unsigned char* p = bytes.data() + 8;
  const auto rows = get_le<std::uint64_t>(p);
  const auto cols = get_le<std::uint64_t>(p + 8);
  const double fres = std::bit_cast<double>(get_le<std::uint64_t>(p + 16));
  const double tres = std::bit_cast<double>(get_le<std::uint64_t>(p + 24));
  const auto rate = static_cast<std::int32_t>(get_le<std::uint32_t>(p + 32));

  const std::size_t payload = bytes.size() - kHeaderBytes;
  if (rows != 0 && cols > payload / 4 / rows) {
    throw FormatError(name + ": truncated payload");
  }
  if (rows * cols * 4 != payload) {
    throw FormatError(name + ": payload size does not match header");
  }

  Spectrogram spec(rows, cols, fres, tres, rate);
  const unsigned char* cells = bytes.data() + kHeaderBytes;
  for (std::size_t i = 0; i < rows * cols; ++i) {
    spec.data()[i] = static_cast<double>(std::bit_cast<float>(get_le<std::uint32_t>(cells + 4 * i)));
  }
  return spec;
}

}  // namespace aaug
