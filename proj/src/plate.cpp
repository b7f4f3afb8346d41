// Copyright 2026 The Squeezebox Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0

#include "sqz/plate.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

namespace sqz {

namespace {

Cost total_brightness(const IntegralImage& ii, const std::vector<Rect>& boxes) {
    std::uint64_t sum = 0;
    for (const Rect& b : boxes) sum += ii.window_sum_unchecked(b.x, b.y, b.w, b.h);
    return Cost(sum);
}

}  // namespace

void validate_plate_template(const PlateTemplate& tpl) {
    if (tpl.symbols.empty()) throw Error("plate template: needs at least one symbol");
    if (!(tpl.delta > 0)) throw Error("plate template: delta must be positive");
    for (std::size_t i = 0; i < tpl.symbols.size(); ++i) {
        const Rect& r = tpl.symbols[i];
        if (r.w < 1 || r.h < 1) {
            throw Error("plate template: symbol " + std::to_string(i) + " has empty size");
        }
        if (tpl.nominal_w > 0 && tpl.nominal_h > 0 &&
            (r.x < 0 || r.y < 0 || r.right() > tpl.nominal_w || r.bottom() > tpl.nominal_h)) {
            throw Error("plate template: symbol " + std::to_string(i) +
                        " outside the nominal extent");
        }
    }
}

DistanceBounds link_bounds(const PlateTemplate& tpl, Axis axis) {
    DistanceBounds bounds;
    for (std::size_t i = 0; i + 1 < tpl.symbols.size(); ++i) {
        const Rect& a = tpl.symbols[i];
        const Rect& b = tpl.symbols[i + 1];
        const double dcx = (b.x + b.w / 2.0) - (a.x + a.w / 2.0);
        const double dcy = (b.y + b.h / 2.0) - (a.y + a.h / 2.0);
        const int radius = int(std::floor(tpl.delta * std::hypot(dcx, dcy)));
        const int offset0 =
            tpl.literal_bounds ? 0 : (axis == Axis::X ? b.x - a.x : b.y - a.y);
        bounds.t_min.push_back(offset0 - radius);
        bounds.t_max.push_back(offset0 + radius);
    }
    return bounds;
}

CostMatrix axis_costs(const IntegralImage& ii, const SymbolBoxes& boxes, Axis axis) {
    const int n = int(boxes.boxes.size());
    const int w = axis == Axis::X ? ii.width : ii.height;
    CostMatrix costs(n, w, kInfCost);
    for (int i = 0; i < n; ++i) {
        const Rect& b = boxes.boxes[i];
        Cost* row = costs.row(i);
        if (axis == Axis::X) {
            for (int x = 0; x + b.w <= ii.width; ++x) {
                row[x] = Cost(ii.window_sum_unchecked(x, b.y, b.w, b.h));
            }
        } else {
            for (int y = 0; y + b.h <= ii.height; ++y) {
                row[y] = Cost(ii.window_sum_unchecked(b.x, y, b.w, b.h));
            }
        }
    }
    return costs;
}

PlateResult segment_plate(const GrayImage& img, const PlateTemplate& tpl, int max_iters) {
    validate_plate_template(tpl);
    const auto start = std::chrono::steady_clock::now();
    const auto ms_since = [](std::chrono::steady_clock::time_point t0) {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    };

    GrayImage work = tpl.invert_input ? invert(img) : img;
    work = autocontrast(work);
    const IntegralImage ii = integral(work);

    PlateResult result;
    result.prepare_ms = ms_since(start);
    const auto solve_start = std::chrono::steady_clock::now();
    result.boxes.boxes = tpl.symbols;
    for (Rect& b : result.boxes.boxes) {
        if (b.w > img.width || b.h > img.height) {
            throw InfeasibleError("plate: symbol larger than the image");
        }
        b.x = std::clamp(b.x, 0, img.width - b.w);
        b.y = std::clamp(b.y, 0, img.height - b.h);
    }

    const DistanceBounds bounds_x = link_bounds(tpl, Axis::X);
    const DistanceBounds bounds_y = link_bounds(tpl, Axis::Y);
    result.objective_trace.push_back(double(total_brightness(ii, result.boxes.boxes)));

    for (int it = 1; it <= max_iters; ++it) {
        const std::vector<Rect> before = result.boxes.boxes;

        const Solution sx = solve_dsp(axis_costs(ii, result.boxes, Axis::X), bounds_x).solution;
        if (!sx.feasible()) throw InfeasibleError("plate: x pass infeasible");
        for (std::size_t i = 0; i < result.boxes.boxes.size(); ++i) {
            result.boxes.boxes[i].x = sx.locations[i];
        }
        result.objective_trace.push_back(double(total_brightness(ii, result.boxes.boxes)));

        const Solution sy = solve_dsp(axis_costs(ii, result.boxes, Axis::Y), bounds_y).solution;
        if (!sy.feasible()) throw InfeasibleError("plate: y pass infeasible");
        for (std::size_t i = 0; i < result.boxes.boxes.size(); ++i) {
            result.boxes.boxes[i].y = sy.locations[i];
        }
        result.objective_trace.push_back(double(total_brightness(ii, result.boxes.boxes)));

        result.iterations = it;
        if (result.boxes.boxes == before) break;
    }

    result.boxes.objective = total_brightness(ii, result.boxes.boxes);
    result.solve_ms = ms_since(solve_start);
    result.total_ms = ms_since(start);
    return result;
}

}  // namespace sqz
