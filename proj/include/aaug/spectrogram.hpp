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
#include <vector>

#include "aaug/audio.hpp"
#include "aaug/image.hpp"

namespace aaug {

/// Gabor transform settings.
///
/// The analysis window of a frame centred at sample c is
///   w(n) = exp(-pi * window_sigma2 * (n - c)^2),
/// with n counted in samples, evaluated over `channels` samples around c. The
/// transform output carries the 1 / window_sigma2 prefactor.
struct DgtParams {
  double window_sigma2 = default_sigma2(512);
  std::size_t hop = 128;
  std::size_t channels = 512;
  double dynamic_range_db = 80.0;

  // sigma2 for which the window is at -60 dB `support / 2` samples from its centre.
  static double default_sigma2(std::size_t support);
};

void validate_dgt_params(const DgtParams& params);

/// Magnitude matrix. Row 0 is 0 Hz with frequency ascending; columns are
/// time frames. Stored row-major.
class Spectrogram {
 public:
  Spectrogram() = default;
  Spectrogram(std::size_t rows, std::size_t cols, double freq_resolution,
              double time_resolution, int source_sample_rate);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  double& at(std::size_t row, std::size_t col) { return data_[row * cols_ + col]; }
  double at(std::size_t row, std::size_t col) const { return data_[row * cols_ + col]; }

  std::vector<double>& data() { return data_; }
  const std::vector<double>& data() const { return data_; }

  double freq_resolution() const { return freq_resolution_; }
  double time_resolution() const { return time_resolution_; }
  int source_sample_rate() const { return source_sample_rate_; }

  // Frequency of `row` in Hz.
  double frequency(std::size_t row) const { return static_cast<double>(row) * freq_resolution_; }
  // Frequency of the top row.
  double max_frequency() const { return frequency(rows_ == 0 ? 0 : rows_ - 1); }

  // Copy with the same metadata and every cell set to `fill`.
  Spectrogram like(double fill = 0.0) const;
  bool same_shape(const Spectrogram& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_;
  }

  friend bool operator==(const Spectrogram&, const Spectrogram&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  double freq_resolution_ = 0.0;
  double time_resolution_ = 0.0;
  int source_sample_rate_ = 0;
  std::vector<double> data_;
};

// Throws InvalidArgument on a negative or non-finite cell, or empty shape.
void validate_spectrogram(const Spectrogram& spec, const char* what = "spectrogram");

/// Gaussian-window discrete Gabor transform of `signal`.
///
/// Frame j is centred at sample j * hop + (hop - 1) / 2, so sample k falls
/// nearest the centre of frame floor(k / hop). There are ceil(N / hop) frames
/// and channels / 2 + 1 rows; samples outside the signal count as zero.
Spectrogram dgt(const AudioSignal& signal, const DgtParams& params = {});

/// Log-magnitude rendering. Each cell maps through 20 log10(m + 1e-10) and the
/// band [peak - dynamic_range_db, peak] is stretched linearly onto [0, 255].
/// Low frequencies land at the bottom of the image. All-zero input renders black.
Image render(const Spectrogram& spec, const DgtParams& params = {});

/// `.spg` files: "AASPG001" magic, u64 rows, u64 cols, f64 freq_resolution,
/// f64 time_resolution, i32 sample_rate, then rows * cols float32 cells,
/// row-major. Everything little-endian.
void save_spec(const Spectrogram& spec, const std::filesystem::path& path);
Spectrogram load_spec(const std::filesystem::path& path);

}  // namespace aaug
