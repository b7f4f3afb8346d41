// Copyright 2026 The Squeezebox Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <vector>

#include "sqz/dsp.hpp"
#include "sqz/image.hpp"

// Two-level segmentation of a document text zone into rows and blocks:
// an outer placement of text-row bands over y and, per candidate band
// position, an inner placement of field blocks over x, both solved with the
// interval-constrained sequence solver on window-sum costs. A coordinate-
// descent pass then refines field rectangles by maximizing the signed
// between-class dispersion.
//
// Templates alternate gap/text rows (first and last are gaps) and, inside a
// text row, alternate gap/field blocks (first and last are gaps). Rows tile
// the image height, blocks tile the row width.

namespace sqz {

class AlternationError : public Error {
public:
    explicit AlternationError(const std::string& what) : Error(what) {}
};
class HeightRangeError : public Error {
public:
    explicit HeightRangeError(const std::string& what) : Error(what) {}
};
class WidthRangeError : public Error {
public:
    explicit WidthRangeError(const std::string& what) : Error(what) {}
};

enum class RowKind { Gap, Text };
enum class BlockKind { Gap, Field };

struct BlockSpec {
    BlockKind kind = BlockKind::Gap;
    int w_min = 0;
    int w_max = 0;
};

struct RowSpec {
    RowKind kind = RowKind::Gap;
    int h_min = 0;
    int h_max = 0;
    std::vector<BlockSpec> blocks;  // text rows only
};

struct VizTemplate {
    std::vector<RowSpec> rows;

    std::vector<int> text_row_indices() const;
};

/// Resolved boundaries. Every row keeps its band [top, bottom); blocks of
/// text rows carry [left, right) plus their own vertical extent, which
/// equals the row band until refinement moves field edges.
struct BlockLayout {
    BlockKind kind = BlockKind::Gap;
    int left = 0;
    int right = 0;
    int top = 0;
    int bottom = 0;

    Rect rect() const { return Rect{left, top, right - left, bottom - top}; }
    friend bool operator==(const BlockLayout&, const BlockLayout&) = default;
};

struct RowLayout {
    RowKind kind = RowKind::Gap;
    int top = 0;
    int bottom = 0;
    std::vector<BlockLayout> blocks;

    friend bool operator==(const RowLayout&, const RowLayout&) = default;
};

struct VizLayout {
    std::vector<RowLayout> rows;
    bool refined = false;  // set once refinement moved a field edge

    /// Field rectangles in reading order.
    std::vector<Rect> field_rects() const;

    friend bool operator==(const VizLayout&, const VizLayout&) = default;
};

/// Fixed sizes for the DSP stage: one height per text row, one width per
/// field, gaps stay elastic.
struct FixedSizes {
    std::vector<int> text_heights;               // per text row
    std::vector<std::vector<int>> field_widths;  // per text row, per field
};

/// Structural and interval feasibility of a template against an image size.
/// Throws AlternationError / HeightRangeError / WidthRangeError.
void validate_template(const VizTemplate& tpl, int img_w, int img_h);

/// Midpoint sizes, repaired proportionally to the per-element slack when the
/// elastic gaps cannot absorb the remaining extent.
FixedSizes fix_sizes(const VizTemplate& tpl, int img_w, int img_h);

/// Minimal total field brightness of one text row for every band position y
/// (+inf where no feasible field placement exists).
std::vector<Cost> row_cost_profile(const IntegralImage& ii, const RowSpec& row, int row_height,
                                   const std::vector<int>& field_widths);

struct SegmentFixedResult {
    VizLayout layout;
    Cost s1 = 0;  // minimized total in-field brightness
};

/// Optimal fixed-size layout (exact minimizer of the total in-field
/// brightness). Throws InfeasibleError when no layout satisfies the template.
SegmentFixedResult segment_viz_fixed(const IntegralImage& ii, const VizTemplate& tpl,
                                     const FixedSizes& sizes);

/// Class-1 mass over the field rectangles, class 0 is the rest of the image.
ClassStats layout_class_stats(const IntegralImage& ii, const VizLayout& layout);

struct RefineResult {
    VizLayout layout;
    int iterations = 0;           // full sweeps executed
    std::vector<double> v_trace;  // dispersion after each accepted move, starting value first
};

/// Greedy per-boundary coordinate descent on the signed dispersion. Scans
/// fields in reading order, boundaries left/right/top/bottom; a move needs a
/// strict improvement. Stops after an idle sweep or max_iters sweeps.
RefineResult refine_coordinate_descent(const IntegralImage& ii, const VizLayout& layout,
                                       const VizTemplate& tpl, int max_iters);

struct VizOptions {
    PreprocessParams preprocess;
    int max_iters = 1;
    bool refine = true;
};

struct VizStageTimings {
    double preprocess_ms = 0;
    double integral_ms = 0;
    double dsp_ms = 0;
    double refine_ms = 0;
    double total_ms = 0;
};

struct VizResult {
    VizLayout layout;
    double s1 = 0;  // in-field brightness of the returned layout (preprocessed image)
    double v = 0;   // signed dispersion of the returned layout
    int iterations = 0;
    VizStageTimings timings;
};

/// Full pipeline: preprocess, integral, fixed-size DSP, optional refinement.
VizResult segment_viz(const GrayImage& img, const VizTemplate& tpl, const VizOptions& opts = {});

}  // namespace sqz
