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

#include "aaug/spectro_augment.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "aaug/errors.hpp"

namespace aaug {

namespace {

std::size_t wrap(std::ptrdiff_t i, std::size_t n) {
  const auto m = static_cast<std::ptrdiff_t>(n);
  return static_cast<std::size_t>(((i % m) + m) % m);
}

// Positions within 1e-9 of an integer are read without interpolation so that
// identity warps reproduce their input exactly.
double snap(double pos) {
  const double r = std::round(pos);
  return std::abs(pos - r) < 1e-9 ? r : pos;
}

double row_at(const Spectrogram& spec, double row, std::size_t col) {
  const double last = static_cast<double>(spec.rows() - 1);
  row = std::clamp(snap(row), 0.0, last);
  const auto i = static_cast<std::size_t>(std::floor(row));
  const double t = row - static_cast<double>(i);
  if (t == 0.0) return spec.at(i, col);
  return spec.at(i, col) + t * (spec.at(i + 1, col) - spec.at(i, col));
}

// Copies column `pos` (fractional, linearly interpolated) of `src` into
// column `dst_col` of `dst`.
void copy_column(const Spectrogram& src, double pos, Spectrogram& dst, std::size_t dst_col) {
  const double last = static_cast<double>(src.cols() - 1);
  pos = std::clamp(snap(pos), 0.0, last);
  const auto i = static_cast<std::size_t>(std::floor(pos));
  const double t = pos - static_cast<double>(i);
  for (std::size_t r = 0; r < src.rows(); ++r) {
    dst.at(r, dst_col) =
        t == 0.0 ? src.at(r, i) : src.at(r, i) + t * (src.at(r, i + 1) - src.at(r, i));
  }
}

void require_same_shape(const Spectrogram& a, const Spectrogram& b, const char* what) {
  if (!a.same_shape(b)) {
    throw InvalidArgument(std::string(what) + ": dimension mismatch (" +
                          std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " vs " +
                          std::to_string(b.rows()) + "x" + std::to_string(b.cols()) + ")");
  }
}

}  // namespace

Spectrogram shift_spectrogram(const Spectrogram& spec, std::ptrdiff_t row_shift,
                              std::ptrdiff_t col_shift) {
  validate_spectrogram(spec, "shift_spectrogram");
  Spectrogram out = spec.like();
  for (std::size_t r = 0; r < spec.rows(); ++r) {
    const std::size_t rr = wrap(static_cast<std::ptrdiff_t>(r) + row_shift, spec.rows());
    for (std::size_t c = 0; c < spec.cols(); ++c) {
      out.at(rr, wrap(static_cast<std::ptrdiff_t>(c) + col_shift, spec.cols())) = spec.at(r, c);
    }
  }
  return out;
}

Spectrogram spectrogram_random_shifts(const Spectrogram& spec, RngStream& rng,
                                      const ShiftParams& p) {
  validate_spectrogram(spec, "spectrogram_random_shifts");
  if (!(p.max_row_fraction >= 0.0) || !(p.max_col_fraction >= 0.0)) {
    throw InvalidArgument("spectrogram_random_shifts: fractions must be non-negative");
  }
  const auto max_rows = static_cast<std::int64_t>(std::floor(p.max_row_fraction * spec.rows()));
  const auto max_cols = static_cast<std::int64_t>(std::floor(p.max_col_fraction * spec.cols()));
  const auto r = rng.uniform_int(-max_rows, max_rows);
  const auto c = rng.uniform_int(-max_cols, max_cols);
  return shift_spectrogram(spec, r, c);
}

Spectrogram same_class_sum(const Spectrogram& a, const Spectrogram& b, bool mean) {
  validate_spectrogram(a, "same_class_sum");
  validate_spectrogram(b, "same_class_sum");
  require_same_shape(a, b, "same_class_sum");
  Spectrogram out = a.like();
  const double scale = mean ? 0.5 : 1.0;
  for (std::size_t i = 0; i < out.data().size(); ++i) {
    out.data()[i] = scale * (a.data()[i] + b.data()[i]);
  }
  return out;
}

double vtln_warp(double f, double alpha, double f0, double f_max) {
  if (f < f0) return alpha * f;
  if (f > f_max) return f;
  return (f_max - alpha * f0) / (f_max - f0) * (f - f0) + alpha * f0;
}

double vtln_unwarp(double f, double alpha, double f0, double f_max) {
  const double knee = alpha * f0;
  if (f < knee) return f / alpha;
  if (f > f_max) return f;
  return f0 + (f - knee) * (f_max - f0) / (f_max - knee);
}

Spectrogram crop_and_stretch(const Spectrogram& spec, std::size_t cropped, bool from_left) {
  validate_spectrogram(spec, "crop_and_stretch");
  if (cropped >= spec.cols()) throw InvalidArgument("crop_and_stretch: crop removes every column");
  if (cropped == 0) return spec;
  const std::size_t kept = spec.cols() - cropped;
  const double offset = from_left ? static_cast<double>(cropped) : 0.0;
  const double step =
      spec.cols() > 1 ? static_cast<double>(kept - 1) / static_cast<double>(spec.cols() - 1) : 0.0;
  Spectrogram out = spec.like();
  for (std::size_t c = 0; c < spec.cols(); ++c) {
    copy_column(spec, offset + static_cast<double>(c) * step, out, c);
  }
  return out;
}

Spectrogram vtln_apply(const Spectrogram& spec, const std::vector<double>& alphas, double f0,
                       double f_max) {
  validate_spectrogram(spec, "vtln");
  const std::size_t slices = alphas.size();
  if (slices == 0) throw InvalidArgument("vtln: need at least one slice");
  if (spec.cols() < slices) throw InvalidArgument("vtln: fewer columns than slices");
  if (!(f0 > 0.0 && f0 < f_max)) throw InvalidArgument("vtln: need 0 < f0 < f_max");
  for (double a : alphas) {
    if (!(a > 0.0) || !(a * f0 < f_max)) {
      throw InvalidArgument("vtln: alpha must be positive with alpha * f0 < f_max");
    }
  }

  Spectrogram out = spec.like();
  const double fres = spec.freq_resolution();
  for (std::size_t s = 0; s < slices; ++s) {
    const std::size_t begin = s * spec.cols() / slices;
    const std::size_t end = (s + 1) * spec.cols() / slices;
    for (std::size_t r = 0; r < spec.rows(); ++r) {
      const double source_row = vtln_unwarp(spec.frequency(r), alphas[s], f0, f_max) / fres;
      for (std::size_t c = begin; c < end; ++c) out.at(r, c) = row_at(spec, source_row, c);
    }
  }
  return out;
}

Spectrogram vtln(const Spectrogram& spec, const VtlnParams& p, RngStream& rng) {
  validate_spectrogram(spec, "vtln");
  if (!(p.alpha_min <= p.alpha_max)) throw InvalidArgument("vtln: alpha range is reversed");
  if (p.slices == 0 || spec.cols() < p.slices) {
    throw InvalidArgument("vtln: too few columns for " + std::to_string(p.slices) + " slices");
  }
  if (!(p.crop_fraction >= 0.0 && p.crop_fraction < 1.0)) {
    throw InvalidArgument("vtln: crop_fraction must be in [0, 1)");
  }
  const double f_max = p.f_max.value_or(spec.max_frequency());
  const double f0 = p.f0.value_or(0.8 * f_max);

  const auto max_crop = static_cast<std::int64_t>(std::floor(p.crop_fraction * spec.cols()));
  const auto cropped = static_cast<std::size_t>(rng.uniform_int(0, max_crop));
  const bool from_left = rng.bernoulli(0.5);
  std::vector<double> alphas(p.slices);
  for (double& a : alphas) a = rng.uniform(p.alpha_min, p.alpha_max);

  return vtln_apply(crop_and_stretch(spec, cropped, from_left), alphas, f0, f_max);
}

double equalizer_weight(double f, const Equalizer& eq) {
  const double x = (f - eq.f0) * eq.q / eq.f0;
  return 1.0 / (1.0 + x * x);
}

double equalizer_gain(double f, const Equalizer& eq) {
  return std::pow(10.0, eq.gain_db * equalizer_weight(f, eq) / 20.0);
}

Spectrogram equalize(const Spectrogram& spec, const Equalizer& eq) {
  if (!(eq.f0 > 0.0) || !(eq.q > 0.0) || !std::isfinite(eq.gain_db)) {
    throw InvalidArgument("equalizer: need f0 > 0, Q > 0 and finite gain");
  }
  Spectrogram out = spec;
  if (eq.gain_db == 0.0) return out;
  for (std::size_t r = 0; r < spec.rows(); ++r) {
    const double g = equalizer_gain(spec.frequency(r), eq);
    for (std::size_t c = 0; c < spec.cols(); ++c) out.at(r, c) *= g;
  }
  return out;
}

EmdaParams draw_emda_params(RngStream& rng, const EmdaRanges& ranges) {
  EmdaParams p;
  p.alpha = rng.uniform();
  p.beta = rng.uniform();
  p.delay = static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(ranges.max_delay)));
  for (Equalizer* eq : {&p.eq1, &p.eq2}) {
    eq->f0 = rng.uniform(ranges.f0_min, ranges.f0_max);
    eq->gain_db = rng.uniform(-ranges.gain_db_max, ranges.gain_db_max);
    eq->q = rng.uniform(ranges.q_min, ranges.q_max);
  }
  return p;
}

Spectrogram emda(const Spectrogram& s1, const Spectrogram& s2, const EmdaParams& p) {
  validate_spectrogram(s1, "emda");
  validate_spectrogram(s2, "emda");
  require_same_shape(s1, s2, "emda");
  if (!(p.alpha >= 0.0 && p.alpha <= 1.0) || !(p.beta >= 0.0 && p.beta <= 1.0)) {
    throw InvalidArgument("emda: alpha and beta must lie in [0, 1]");
  }
  const auto delay = static_cast<std::ptrdiff_t>(std::llround(p.beta * static_cast<double>(p.delay)));
  const Spectrogram a = equalize(s1, p.eq1);
  const Spectrogram b = equalize(shift_spectrogram(s2, 0, delay), p.eq2);
  Spectrogram out = s1.like();
  for (std::size_t i = 0; i < out.data().size(); ++i) {
    out.data()[i] = p.alpha * a.data()[i] + (1.0 - p.alpha) * b.data()[i];
  }
  return out;
}

Spectrogram rand_time_shift_spec(const Spectrogram& spec, std::size_t split) {
  validate_spectrogram(spec, "rand_time_shift_spec");
  if (split < 1 || split > spec.cols()) {
    throw InvalidArgument("rand_time_shift_spec: split must be in [1, width]");
  }
  return shift_spectrogram(spec, 0, -static_cast<std::ptrdiff_t>(split));
}

Spectrogram rand_time_shift_spec(const Spectrogram& spec, RngStream& rng) {
  validate_spectrogram(spec, "rand_time_shift_spec");
  const auto split = rng.uniform_int(1, static_cast<std::int64_t>(spec.cols()));
  return rand_time_shift_spec(spec, static_cast<std::size_t>(split));
}

namespace {

void check_warp_fits(std::size_t cols) {
  if (cols < 2) throw InvalidArgument("random_image_warp: need at least two columns");
}

}  // namespace

// Bands never cover more than half of their axis, so small inputs are still
// usable.
std::size_t mask_band(std::size_t width, std::size_t extent) { return std::min(width, extent / 2); }

namespace {

double control_spacing(std::size_t cols, std::size_t control_points) {
  return static_cast<double>(cols - 1) / static_cast<double>(control_points + 1);
}

}  // namespace

WarpMaskDraw draw_warp_mask(std::size_t rows, std::size_t cols, const WarpMaskParams& p,
                            RngStream& rng) {
  check_warp_fits(cols);
  WarpMaskDraw draw;
  // Keep displaced control columns strictly ordered.
  const double limit = std::min(p.max_disp_fraction * static_cast<double>(cols),
                                0.49 * control_spacing(cols, p.control_points));
  for (std::size_t k = 0; k < p.control_points; ++k) {
    draw.displacements.push_back(rng.uniform(-limit, limit));
  }
  for (std::size_t k = 0; k < p.row_mask_count; ++k) {
    const auto last = static_cast<std::int64_t>(rows - mask_band(p.row_mask_width, rows));
    draw.row_mask_starts.push_back(static_cast<std::size_t>(rng.uniform_int(0, last)));
  }
  for (std::size_t k = 0; k < p.col_mask_count; ++k) {
    const auto last = static_cast<std::int64_t>(cols - mask_band(p.col_mask_width, cols));
    draw.col_mask_starts.push_back(static_cast<std::size_t>(rng.uniform_int(0, last)));
  }
  return draw;
}

Spectrogram warp_columns(const Spectrogram& spec, const std::vector<double>& displacements) {
  validate_spectrogram(spec, "warp_columns");
  if (spec.cols() < 2) throw InvalidArgument("warp_columns: need at least two columns");
  const double spacing = control_spacing(spec.cols(), displacements.size());
  const double last = static_cast<double>(spec.cols() - 1);

  std::vector<double> source{0.0};
  std::vector<double> target{0.0};
  for (std::size_t k = 0; k < displacements.size(); ++k) {
    const double anchor = static_cast<double>(k + 1) * spacing;
    source.push_back(anchor);
    target.push_back(anchor + displacements[k]);
  }
  source.push_back(last);
  target.push_back(last);
  for (std::size_t k = 1; k < target.size(); ++k) {
    if (!(target[k] > target[k - 1])) {
      throw InvalidArgument("warp_columns: displacements break control-point ordering");
    }
  }

  Spectrogram out = spec.like();
  std::size_t seg = 0;
  for (std::size_t c = 0; c < spec.cols(); ++c) {
    const auto x = static_cast<double>(c);
    while (seg + 2 < target.size() && x > target[seg + 1]) ++seg;
    const double t = (x - target[seg]) / (target[seg + 1] - target[seg]);
    copy_column(spec, source[seg] + t * (source[seg + 1] - source[seg]), out, c);
  }
  return out;
}

Spectrogram apply_warp_mask(const Spectrogram& spec, const WarpMaskDraw& draw,
                            const WarpMaskParams& p) {
  validate_spectrogram(spec, "random_image_warp");
  check_warp_fits(spec.cols());
  const std::size_t row_band = mask_band(p.row_mask_width, spec.rows());
  const std::size_t col_band = mask_band(p.col_mask_width, spec.cols());
  Spectrogram out = warp_columns(spec, draw.displacements);
  for (std::size_t start : draw.row_mask_starts) {
    if (start + row_band > spec.rows()) throw InvalidArgument("row mask out of range");
    for (std::size_t r = start; r < start + row_band; ++r) {
      for (std::size_t c = 0; c < spec.cols(); ++c) out.at(r, c) = 0.0;
    }
  }
  for (std::size_t start : draw.col_mask_starts) {
    if (start + col_band > spec.cols()) throw InvalidArgument("column mask out of range");
    for (std::size_t r = 0; r < spec.rows(); ++r) {
      for (std::size_t c = start; c < start + col_band; ++c) out.at(r, c) = 0.0;
    }
  }
  return out;
}

Spectrogram random_image_warp(const Spectrogram& spec, const WarpMaskParams& p, RngStream& rng) {
  validate_spectrogram(spec, "random_image_warp");
  return apply_warp_mask(spec, draw_warp_mask(spec.rows(), spec.cols(), p, rng), p);
}

std::vector<NamedSpectrogram> spectro_protocol(const Spectrogram& spec,
                                               const Spectrogram& classmate, RngStream& rng,
                                               const SpectroProtocolParams& p) {
  const RngStream base(rng.next_u64());
  std::vector<NamedSpectrogram> out;
  out.reserve(kSpectroProtocolOutputs);

  auto run = [&](const char* name, const std::function<Spectrogram(RngStream&)>& fn) {
    RngStream child = base.fork(out.size());
    try {
      out.push_back({name, fn(child)});
    } catch (const Error& e) {
      throw TransformError(name, e.what());
    }
  };

  run("random_shifts", [&](RngStream& r) { return spectrogram_random_shifts(spec, r, p.shifts); });
  run("same_class_sum", [&](RngStream&) { return same_class_sum(spec, classmate, p.sum_mean); });
  run("vtln", [&](RngStream& r) { return vtln(spec, p.vtln, r); });
  run("emda", [&](RngStream& r) { return emda(spec, classmate, draw_emda_params(r, p.emda)); });
  run("rand_time_shift", [&](RngStream& r) { return rand_time_shift_spec(spec, r); });
  run("random_image_warp", [&](RngStream& r) { return random_image_warp(spec, p.warp, r); });
  return out;
}

}  // namespace aaug
