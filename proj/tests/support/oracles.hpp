// Copyright 2026 The Squeezebox Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <functional>
#include <random>
#include <vector>

#include "sqz/dsp.hpp"
#include "sqz/image.hpp"
#include "sqz/viz.hpp"

// Independent test oracles: per-position scans, per-pixel loops and
// exhaustive layout enumeration. Deliberately naive; nothing here shares
// code with the implementations under test.

namespace oracles {

struct WindowMin {
    std::vector<sqz::Cost> mins;
    std::vector<std::int32_t> argmins;
};

/// Per-position scan over [j-hi, j-lo] ∩ [0, W).
WindowMin naive_window_min(const std::vector<sqz::Cost>& values, int lo, int hi);

/// Per-pixel double loop.
std::uint64_t naive_window_sum(const sqz::GrayImage& img, int x, int y, int w, int h);

/// Per-pixel neighborhood scan with edge replication.
sqz::GrayImage naive_erode(const sqz::GrayImage& img, int se_w, int se_h);
sqz::GrayImage naive_dilate(const sqz::GrayImage& img, int se_w, int se_h);

/// Per-pixel field-membership classification.
sqz::ClassStats naive_layout_stats(const sqz::GrayImage& img, const sqz::VizLayout& layout);

/// Random DSP instance matching the differential-test distribution:
/// N in [1, n_max], W in [1, w_max], integer costs in [0, 100] with
/// inf_prob of +inf entries, bounds with t_min <= t_max in [-W, W].
struct Instance {
    sqz::CostMatrix costs;
    sqz::DistanceBounds bounds;
};
Instance random_instance(std::mt19937_64& rng, int n_max, int w_max, double inf_prob);

/// All feasible fixed-size layouts of a template (exhaustive, for small
/// instances). Calls fn(layout) for every layout; the row bands and block
/// spans tile the image exactly.
void enumerate_layouts(const sqz::VizTemplate& tpl, const sqz::FixedSizes& sizes, int img_w,
                       int img_h, const std::function<void(const sqz::VizLayout&)>& fn);

sqz::GrayImage random_image(std::mt19937_64& rng, int w, int h);

}  // namespace oracles
