// Copyright 2026 The Squeezebox Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <vector>

#include "sqz/dsp.hpp"
#include "sqz/image.hpp"

// License-plate symbol localization: fixed-size symbol rectangles start at
// their template positions and are moved by alternating per-axis solves of
// the interval-constrained placement problem, minimizing total in-box
// brightness (dark symbols on a bright background).

namespace sqz {

enum class Axis { X, Y };

struct PlateTemplate {
    std::vector<Rect> symbols;  // initial rectangles p0
    double delta = 0.1;         // elasticity of inter-symbol offsets
    bool invert_input = false;  // set for bright-on-dark plate types
    int nominal_w = 0;          // nominal plate extent containing the p0
    int nominal_h = 0;
    // Bound |x[i+1] - x[i]| <= floor(delta * D) directly instead of the
    // default deviation-from-initial-offset reading.
    bool literal_bounds = false;
};

struct SymbolBoxes {
    std::vector<Rect> boxes;
    Cost objective = 0;  // total in-box brightness
};

/// Throws sqz::Error when the template is structurally invalid.
void validate_plate_template(const PlateTemplate& tpl);

/// Link bounds for one axis. Offsets of adjacent boxes may deviate from the
/// initial offset by floor(delta * D), D the initial center distance.
DistanceBounds link_bounds(const PlateTemplate& tpl, Axis axis);

/// Per-symbol placement costs along one axis with the complementary
/// coordinates frozen: window sums at every offset, +inf past the image edge.
CostMatrix axis_costs(const IntegralImage& ii, const SymbolBoxes& boxes, Axis axis);

struct PlateResult {
    SymbolBoxes boxes;
    int iterations = 0;
    std::vector<double> objective_trace;  // initial value, then after each axis pass
    double prepare_ms = 0;  // inversion, autocontrast, integral image
    double solve_ms = 0;    // alternating axis passes
    double total_ms = 0;
};

/// Alternating x/y optimization from the clamped template positions.
/// Stops when a full iteration moves nothing or after max_iters iterations.
PlateResult segment_plate(const GrayImage& img, const PlateTemplate& tpl, int max_iters = 5);

}  // namespace sqz
