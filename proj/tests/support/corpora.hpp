// Copyright 2026 The Squeezebox Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include "sqz/synth.hpp"
#include "sqz/viz.hpp"

// Frozen synthetic corpora shared by the unit and acceptance suites.

namespace corpora {

using namespace sqz;

/// Three text rows of two fields each on 400x300; quality corpus.
inline VizTemplate viz3_template() {
    VizTemplate tpl;
    auto text_row = [] {
        RowSpec r;
        r.kind = RowKind::Text;
        r.h_min = 13;
        r.h_max = 15;
        r.blocks = {
            {BlockKind::Gap, 4, 40},      {BlockKind::Field, 90, 130},
            {BlockKind::Gap, 32, 56},     {BlockKind::Field, 110, 150},
            {BlockKind::Gap, 4, 40},
        };
        return r;
    };
    tpl.rows.push_back({RowKind::Gap, 20, 60, {}});
    tpl.rows.push_back(text_row());
    tpl.rows.push_back({RowKind::Gap, 24, 96, {}});
    tpl.rows.push_back(text_row());
    tpl.rows.push_back({RowKind::Gap, 24, 96, {}});
    tpl.rows.push_back(text_row());
    tpl.rows.push_back({RowKind::Gap, 20, 60, {}});
    return tpl;
}

inline SynthSpec viz3_spec(std::uint64_t seed) {
    SynthSpec spec;
    spec.seed = seed;
    spec.width = 400;
    spec.height = 300;
    spec.noise_sigma = 8;
    spec.jitter = 4;
    return spec;
}

/// Outlier corpus: one wide field per row on 400x170; the rendered truth
/// (this template) is narrower than the allowance the segmenter is given
/// (outlier_seg_template), so the DSP stage starts from coarse boxes.
inline VizTemplate outlier_gen_template() {
    VizTemplate tpl;
    auto text_row = [] {
        RowSpec r;
        r.kind = RowKind::Text;
        r.h_min = 13;
        r.h_max = 15;
        r.blocks = {
            {BlockKind::Gap, 4, 80},
            {BlockKind::Field, 240, 280},
            {BlockKind::Gap, 4, 80},
        };
        return r;
    };
    tpl.rows.push_back({RowKind::Gap, 10, 40, {}});
    tpl.rows.push_back(text_row());
    tpl.rows.push_back({RowKind::Gap, 10, 40, {}});
    tpl.rows.push_back(text_row());
    tpl.rows.push_back({RowKind::Gap, 10, 40, {}});
    tpl.rows.push_back(text_row());
    tpl.rows.push_back({RowKind::Gap, 10, 40, {}});
    return tpl;
}

inline VizTemplate outlier_seg_template() {
    VizTemplate tpl = outlier_gen_template();
    for (auto& row : tpl.rows) {
        if (row.kind != RowKind::Text) continue;
        row.h_max += 8;
        for (auto& b : row.blocks) {
            if (b.kind == BlockKind::Field) {
                b.w_max += 30;
            } else {
                b.w_min = std::max(0, b.w_min - 30);
            }
        }
    }
    return tpl;
}

inline SynthSpec outlier_spec(std::uint64_t seed) {
    SynthSpec spec;
    spec.seed = seed;
    spec.width = 400;
    spec.height = 170;
    spec.noise_sigma = 8;
    spec.jitter = 4;
    spec.outlier_field = 1;
    spec.outlier_value = 140;
    return spec;
}

/// Eight-symbol plate template (two groups), nominal 220x60.
inline PlateTemplate plate8_template() {
    PlateTemplate tpl;
    tpl.nominal_w = 220;
    tpl.nominal_h = 60;
    tpl.delta = 0.15;
    int x = 10;
    for (int i = 0; i < 8; ++i) {
        tpl.symbols.push_back(Rect{x, 16, 18, 28});
        x += 22;
        if (i == 3) x += 14;  // group separator
    }
    return tpl;
}

inline SynthSpec plate_spec(std::uint64_t seed) {
    SynthSpec spec;
    spec.seed = seed;
    spec.width = 220;
    spec.height = 60;
    spec.noise_sigma = 8;
    spec.jitter = 3;
    spec.glyph_value = 40;
    spec.background_value = 210;
    return spec;
}

}  // namespace corpora
