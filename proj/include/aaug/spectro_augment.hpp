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
#include <optional>
#include <string>
#include <vector>

#include "aaug/rng.hpp"
#include "aaug/spectrogram.hpp"

namespace aaug {

// --- random shifts ---------------------------------------------------------

struct ShiftParams {
  double max_row_fraction = 0.05;  // R = floor(fraction * rows)
  double max_col_fraction = 0.10;  // C = floor(fraction * cols)
};

// Circular shift: cell (r, c) moves to ((r + row_shift) mod R, (c + col_shift) mod C).
Spectrogram shift_spectrogram(const Spectrogram& spec, std::ptrdiff_t row_shift,
                              std::ptrdiff_t col_shift);
Spectrogram spectrogram_random_shifts(const Spectrogram& spec, RngStream& rng,
                                      const ShiftParams& p = {});

// --- same-class sum --------------------------------------------------------

// Elementwise mean of two equally shaped spectrograms (raw sum when !mean).
Spectrogram same_class_sum(const Spectrogram& a, const Spectrogram& b, bool mean = true);

// --- VTLN ------------------------------------------------------------------

struct VtlnParams {
  double alpha_min = 0.9;
  double alpha_max = 1.1;
  // Knee frequency; defaults to 0.8 * f_max.
  std::optional<double> f0;
  // Top frequency; defaults to the spectrogram's top row.
  std::optional<double> f_max;
  std::size_t slices = 10;
  // Up to this fraction of columns is cropped from one random side before the
  // warp, then the width is stretched back. 0 disables cropping.
  double crop_fraction = 0.05;
};

/// Piecewise-linear frequency warp: alpha * f below f0, and the line through
/// (f0, alpha f0) and (f_max, f_max) above it.
double vtln_warp(double f, double alpha, double f0, double f_max);
double vtln_unwarp(double f, double alpha, double f0, double f_max);

// Drop `cropped` columns from the left (or right) and stretch back to the
// original width by linear column interpolation.
Spectrogram crop_and_stretch(const Spectrogram& spec, std::size_t cropped, bool from_left);

/// Warps each slice of columns with its own alpha. `alphas.size()` is the
/// slice count; slice sizes differ by at most one column.
Spectrogram vtln_apply(const Spectrogram& spec, const std::vector<double>& alphas, double f0,
                       double f_max);
Spectrogram vtln(const Spectrogram& spec, const VtlnParams& p, RngStream& rng);

// --- EMDA ------------------------------------------------------------------

struct Equalizer {
  double f0 = 1000.0;  // centre, Hz
  double gain_db = 0.0;
  double q = 1.0;
};

// Bell weight 1 / (1 + ((f - f0) Q / f0)^2); 1 at the centre.
double equalizer_weight(double f, const Equalizer& eq);
// Linear gain 10^(g * weight / 20).
double equalizer_gain(double f, const Equalizer& eq);
Spectrogram equalize(const Spectrogram& spec, const Equalizer& eq);

struct EmdaParams {
  double alpha = 0.5;
  double beta = 0.0;
  std::size_t delay = 0;  // T, in frames
  Equalizer eq1;
  Equalizer eq2;
};

struct EmdaRanges {
  std::size_t max_delay = 50;
  double f0_min = 100.0;
  double f0_max = 6000.0;
  double gain_db_max = 8.0;  // gain drawn from [-gain_db_max, gain_db_max]
  double q_min = 1.0;
  double q_max = 9.0;
};

EmdaParams draw_emda_params(RngStream& rng, const EmdaRanges& ranges = {});
// alpha * eq(s1, eq1) + (1 - alpha) * eq(s2 delayed by round(beta T) frames, eq2).
Spectrogram emda(const Spectrogram& s1, const Spectrogram& s2, const EmdaParams& p);

// --- time shift ------------------------------------------------------------

// Columns [T, W) followed by [0, T); requires 1 <= T <= W.
Spectrogram rand_time_shift_spec(const Spectrogram& spec, std::size_t split);
Spectrogram rand_time_shift_spec(const Spectrogram& spec, RngStream& rng);

// --- warp and mask ---------------------------------------------------------

struct WarpMaskParams {
  std::size_t control_points = 5;
  double max_disp_fraction = 0.05;  // of width
  std::size_t row_mask_width = 5;
  std::size_t col_mask_width = 15;
  std::size_t row_mask_count = 2;
  std::size_t col_mask_count = 1;
};

struct WarpMaskDraw {
  std::vector<double> displacements;  // one per interior control column
  std::vector<std::size_t> row_mask_starts;
  std::vector<std::size_t> col_mask_starts;
};

// Effective band size on an axis of `extent` cells: at most half of it.
std::size_t mask_band(std::size_t width, std::size_t extent);

WarpMaskDraw draw_warp_mask(std::size_t rows, std::size_t cols, const WarpMaskParams& p,
                            RngStream& rng);

/// Horizontal warp through control columns at (k + 1) (W - 1) / (K + 1),
/// each moved by its displacement with the edges pinned, then linear
/// interpolation in between. Rows are untouched.
Spectrogram warp_columns(const Spectrogram& spec, const std::vector<double>& displacements);

Spectrogram apply_warp_mask(const Spectrogram& spec, const WarpMaskDraw& draw,
                            const WarpMaskParams& p);
Spectrogram random_image_warp(const Spectrogram& spec, const WarpMaskParams& p, RngStream& rng);

// --- protocol --------------------------------------------------------------

struct SpectroProtocolParams {
  ShiftParams shifts;
  bool sum_mean = true;
  VtlnParams vtln;
  EmdaRanges emda;
  WarpMaskParams warp;
};

struct NamedSpectrogram {
  std::string transform;
  Spectrogram spec;
};

/// The six-output spectrogram recipe, in order: random_shifts,
/// same_class_sum, vtln, emda, rand_time_shift, random_image_warp.
std::vector<NamedSpectrogram> spectro_protocol(const Spectrogram& spec,
                                               const Spectrogram& classmate, RngStream& rng,
                                               const SpectroProtocolParams& p = {});

inline constexpr std::size_t kSpectroProtocolOutputs = 6;

}  // namespace aaug
