// Copyright 2026 The Squeezebox Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "sqz/image.hpp"
#include "sqz/plate.hpp"
#include "sqz/viz.hpp"

// Deterministic synthetic corpora with exact ground truth. Pseudo-glyphs are
// filled rectangles: the segmentation objectives only see brightness masses,
// so shape realism adds nothing while rectangles keep the truth exact.

namespace sqz {

class CountMismatchError : public Error {
public:
    explicit CountMismatchError(const std::string& what) : Error(what) {}
};

struct SynthSpec {
    std::uint64_t seed = 1;
    int width = 0;
    int height = 0;
    double noise_sigma = 0;
    int glyph_value = 60;
    int background_value = 200;
    int jitter = 0;  // max displacement of truth sizes from template nominal
    // Renders one field with a different glyph value (-1 disables); used to
    // study refinement behavior on unusually bright fields.
    int outlier_field = -1;
    int outlier_value = 0;
};

/// Synthetic text zone plus its exact layout. Deterministic per seed.
struct VizSample {
    GrayImage image;
    VizLayout truth;
};
VizSample gen_viz(const VizTemplate& tpl, const SynthSpec& spec);

/// Synthetic plate plus true symbol boxes (displaced from the template
/// within the elasticity bounds). Deterministic per seed.
struct PlateSample {
    GrayImage image;
    SymbolBoxes truth;
};
PlateSample gen_plate(const PlateTemplate& tpl, const SynthSpec& spec);

/// Mean intersection-over-union over positionally corresponding rectangles.
/// Throws CountMismatchError when the counts differ.
double mean_iou(const std::vector<Rect>& pred, const std::vector<Rect>& truth);

// Deterministic helpers (engine output is pinned by the standard; no
// distribution objects, so corpora are byte-stable across toolchains).

/// Uniform integer in [lo, hi] by rejection.
int uniform_int(std::mt19937_64& rng, int lo, int hi);
/// Gaussian via Box-Muller on 53-bit uniforms.
double gaussian(std::mt19937_64& rng, double sigma);

}  // namespace sqz
