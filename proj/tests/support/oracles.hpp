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

// Test-only reference computations. Nothing here calls into the code paths it
// is used to check: spectral peaks come from a direct DFT sum, fusion from a
// plain per-cell loop.

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <filesystem>
#include <limits>
#include <map>
#include <numbers>
#include <random>
#include <string>
#include <vector>

namespace oracle {

inline std::vector<double> tone(double freq, double seconds, int rate, double amp = 1.0) {
  const auto n = static_cast<std::size_t>(std::llround(seconds * rate));
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = amp * std::sin(2.0 * std::numbers::pi * freq * static_cast<double>(i) / rate);
  }
  return out;
}

// |sum_n w[n] x[n] e^{-i 2 pi f n / rate}| with a Hann window over [begin, begin + len).
inline double dft_magnitude(const std::vector<double>& x, std::size_t begin, std::size_t len,
                            double freq, int rate) {
  std::complex<double> acc = 0.0;
  const double w0 = 2.0 * std::numbers::pi * freq / rate;
  for (std::size_t n = 0; n < len; ++n) {
    const double hann = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * n / (len - 1));
    acc += hann * x[begin + n] * std::polar(1.0, -w0 * static_cast<double>(n));
  }
  return std::abs(acc);
}

// Frequency of the largest DFT magnitude in [f_lo, f_hi]: coarse scan at
// `step` Hz, then a refinement at step / 20 around the winner.
inline double dominant_frequency(const std::vector<double>& x, std::size_t begin, std::size_t len,
                                 int rate, double f_lo, double f_hi, double step = 1.0) {
  double best_f = f_lo;
  double best = -1.0;
  for (double f = f_lo; f <= f_hi; f += step) {
    const double m = dft_magnitude(x, begin, len, f, rate);
    if (m > best) {
      best = m;
      best_f = f;
    }
  }
  const double centre = best_f;
  for (double f = centre - step; f <= centre + step; f += step / 20.0) {
    const double m = dft_magnitude(x, begin, len, f, rate);
    if (m > best) {
      best = m;
      best_f = f;
    }
  }
  return best_f;
}

inline double dominant_frequency(const std::vector<double>& x, int rate, double f_lo, double f_hi,
                                 double step = 1.0) {
  return dominant_frequency(x, 0, x.size(), rate, f_lo, f_hi, step);
}

// One DGT column by direct summation: frame j centred at j * hop + (hop - 1) / 2,
// channels samples starting at j * hop + hop / 2 - channels / 2.
inline std::vector<double> dgt_column(const std::vector<double>& x, std::size_t j, std::size_t hop,
                                      std::size_t channels, double sigma2) {
  const double centre = static_cast<double>(j * hop) + (static_cast<double>(hop) - 1.0) / 2.0;
  const long long first = static_cast<long long>(j * hop + hop / 2) - static_cast<long long>(channels / 2);
  std::vector<double> mags(channels / 2 + 1);
  for (std::size_t k = 0; k < mags.size(); ++k) {
    std::complex<double> acc = 0.0;
    for (std::size_t m = 0; m < channels; ++m) {
      const long long n = first + static_cast<long long>(m);
      if (n < 0 || n >= static_cast<long long>(x.size())) continue;
      const double d = static_cast<double>(n) - centre;
      const double w = std::exp(-std::numbers::pi * sigma2 * d * d);
      acc += x[static_cast<std::size_t>(n)] * w *
             std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(k * m) / channels);
    }
    mags[k] = std::abs(acc) / sigma2;
  }
  return mags;
}

struct Scores {
  std::vector<std::string> ids;
  std::vector<std::size_t> folds;
  std::vector<std::size_t> labels;          // class index
  std::vector<std::vector<double>> values;  // [sample][class]
};

// Sum rule with the NaN and constant-row rules, in input order.
inline std::vector<std::vector<double>> fuse(const std::vector<Scores>& members) {
  const std::size_t n = members.front().values.size();
  const std::size_t c = members.front().values.front().size();
  std::vector<std::vector<double>> total(n, std::vector<double>(c, 0.0));
  for (const auto& m : members) {
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<double> row = m.values[i];
      for (double& v : row) {
        if (v != v) v = 0.0;
      }
      bool all_same = true;
      for (double v : row) all_same = all_same && v == row[0];
      for (std::size_t k = 0; k < c; ++k) total[i][k] += all_same ? 0.0 : row[k];
    }
  }
  return total;
}

struct Accuracy {
  std::map<std::size_t, double> per_fold;
  double mean = 0.0;
  double pooled = 0.0;
};

inline Accuracy count_accuracy(const std::vector<std::vector<double>>& totals,
                               const std::vector<std::size_t>& labels,
                               const std::vector<std::size_t>& folds) {
  std::map<std::size_t, std::pair<int, int>> tally;
  int hits = 0;
  for (std::size_t i = 0; i < totals.size(); ++i) {
    std::size_t arg = 0;
    for (std::size_t k = 0; k < totals[i].size(); ++k) {
      if (totals[i][k] > totals[i][arg]) arg = k;
    }
    const bool ok = arg == labels[i];
    tally[folds[i]].first += ok;
    tally[folds[i]].second += 1;
    hits += ok;
  }
  Accuracy a;
  double sum = 0.0;
  for (const auto& [fold, t] : tally) {
    a.per_fold[fold] = static_cast<double>(t.first) / t.second;
    sum += a.per_fold[fold];
  }
  a.mean = sum / static_cast<double>(tally.size());
  a.pooled = static_cast<double>(hits) / static_cast<double>(totals.size());
  return a;
}

// Fresh empty directory under the system temp dir.
inline std::filesystem::path temp_dir(const std::string& name) {
  static std::mt19937_64 gen(std::random_device{}());
  auto dir = std::filesystem::temp_directory_path() / ("aaug_" + name + "_" + std::to_string(gen()));
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace oracle
