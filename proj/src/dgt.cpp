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

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <memory>
#include <mutex>
#include <numbers>
#include <string>

#include "aaug/errors.hpp"
#include "aaug/spectrogram.hpp"

namespace aaug {

namespace {

// FFTW planning is not thread-safe; execution is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

struct FftwFree {
  void operator()(void* p) const { fftw_free(p); }
};

class RealFft {
 public:
  explicit RealFft(std::size_t n)
      : n_(n),
        in_(static_cast<double*>(fftw_malloc(sizeof(double) * n))),
        out_(static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * (n / 2 + 1)))) {
    if (!in_ || !out_) throw std::bad_alloc();
    std::lock_guard lock(planner_mutex());
    plan_ = fftw_plan_dft_r2c_1d(static_cast<int>(n), in_.get(), out_.get(), FFTW_ESTIMATE);
    if (!plan_) throw Error("fftw planning failed");
  }
  ~RealFft() {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(plan_);
  }
  RealFft(const RealFft&) = delete;
  RealFft& operator=(const RealFft&) = delete;

  double* input() { return in_.get(); }
  const fftw_complex* output() const { return out_.get(); }
  void execute() { fftw_execute(plan_); }

 private:
  std::size_t n_;
  std::unique_ptr<double, FftwFree> in_;
  std::unique_ptr<fftw_complex, FftwFree> out_;
  fftw_plan plan_ = nullptr;
};

}  // namespace

double DgtParams::default_sigma2(std::size_t support) {
  const double half = static_cast<double>(support) / 2.0;
  return std::log(1000.0) / (std::numbers::pi * half * half);
}

void validate_dgt_params(const DgtParams& params) {
  if (!(params.window_sigma2 > 0.0) || !std::isfinite(params.window_sigma2)) {
    throw InvalidArgument("dgt: window_sigma2 must be positive");
  }
  if (params.channels < 2) throw InvalidArgument("dgt: channels must be >= 2");
  if (params.hop == 0) throw InvalidArgument("dgt: hop must be positive");
  if (params.hop > params.channels) {
    throw InvalidArgument("dgt: hop must not exceed the window support (channels)");
  }
  if (!(params.dynamic_range_db > 0.0) || !std::isfinite(params.dynamic_range_db)) {
    throw InvalidArgument("dgt: dynamic_range_db must be positive");
  }
}

Spectrogram::Spectrogram(std::size_t rows, std::size_t cols, double freq_resolution,
                         double time_resolution, int source_sample_rate)
    : rows_(rows),
      cols_(cols),
      freq_resolution_(freq_resolution),
      time_resolution_(time_resolution),
      source_sample_rate_(source_sample_rate),
      data_(rows * cols, 0.0) {}

Spectrogram Spectrogram::like(double fill) const {
  Spectrogram out(rows_, cols_, freq_resolution_, time_resolution_, source_sample_rate_);
  std::fill(out.data_.begin(), out.data_.end(), fill);
  return out;
}

void validate_spectrogram(const Spectrogram& spec, const char* what) {
  if (spec.empty()) throw InvalidArgument(std::string(what) + ": empty spectrogram");
  for (double v : spec.data()) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
      throw InvalidArgument(std::string(what) + ": cells must be finite and non-negative");
    }
  }
}

Spectrogram dgt(const AudioSignal& signal, const DgtParams& params) {
  validate_dgt_params(params);
  validate_signal(signal, "dgt");
  const std::size_t n = signal.size();
  if (n < params.hop) throw InvalidArgument("dgt: signal shorter than one hop");

  const std::size_t channels = params.channels;
  const std::size_t rows = channels / 2 + 1;
  const std::size_t cols = (n + params.hop - 1) / params.hop;
  const auto hop = static_cast<std::ptrdiff_t>(params.hop);
  const auto len = static_cast<std::ptrdiff_t>(channels);

  // Offset of the first windowed sample from the frame centre is the same
  // for every frame.
  const double centre_offset = static_cast<double>(hop - 1) / 2.0;
  const std::ptrdiff_t start_offset = hop / 2 - len / 2;
  std::vector<double> window(channels);
  for (std::ptrdiff_t m = 0; m < len; ++m) {
    const double d = static_cast<double>(start_offset + m) - centre_offset;
    window[static_cast<std::size_t>(m)] =
        std::exp(-std::numbers::pi * params.window_sigma2 * d * d);
  }

  Spectrogram out(rows, cols, static_cast<double>(signal.sample_rate) / channels,
                  static_cast<double>(params.hop) / signal.sample_rate, signal.sample_rate);
  const double scale = 1.0 / params.window_sigma2;
  const auto n_signed = static_cast<std::ptrdiff_t>(n);

  RealFft fft(channels);
  double* frame = fft.input();
  for (std::size_t j = 0; j < cols; ++j) {
    const std::ptrdiff_t first = static_cast<std::ptrdiff_t>(j) * hop + start_offset;
    for (std::ptrdiff_t m = 0; m < len; ++m) {
      const std::ptrdiff_t idx = first + m;
      frame[m] = (idx >= 0 && idx < n_signed)
                     ? signal.samples[static_cast<std::size_t>(idx)] * window[static_cast<std::size_t>(m)]
                     : 0.0;
    }
    fft.execute();
    const fftw_complex* bins = fft.output();
    for (std::size_t r = 0; r < rows; ++r) {
      out.at(r, j) = scale * std::hypot(bins[r][0], bins[r][1]);
    }
  }
  return out;
}

Image render(const Spectrogram& spec, const DgtParams& params) {
  if (spec.empty()) throw InvalidArgument("render: empty spectrogram");
  if (!(params.dynamic_range_db > 0.0)) throw InvalidArgument("render: dynamic_range_db must be positive");
  Image image(spec.cols(), spec.rows());
  const double peak = *std::max_element(spec.data().begin(), spec.data().end());
  if (!(peak > 0.0)) return image;

  const double top = 20.0 * std::log10(peak + kLogFloor);
  const double floor_db = top - params.dynamic_range_db;
  for (std::size_t r = 0; r < spec.rows(); ++r) {
    const std::size_t image_row = spec.rows() - 1 - r;
    for (std::size_t c = 0; c < spec.cols(); ++c) {
      const double v = 20.0 * std::log10(spec.at(r, c) + kLogFloor);
      const double level = std::clamp((v - floor_db) / params.dynamic_range_db, 0.0, 1.0);
      image.at(image_row, c) = static_cast<std::uint8_t>(std::lround(255.0 * level));
    }
  }
  return image;
}

}  // namespace aaug
