// Copyright 2026 The Squeezebox Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "sqz/io.hpp"
#include "sqz/parallel.hpp"
#include "sqz/synth.hpp"
#include "sqz/viz.hpp"
#include "support/corpora.hpp"
#include "support/oracles.hpp"

using namespace sqz;

namespace {

VizTemplate rows_template(std::vector<RowSpec> rows) {
    VizTemplate tpl;
    tpl.rows = std::move(rows);
    return tpl;
}

RowSpec gap_row(int lo, int hi) { return RowSpec{RowKind::Gap, lo, hi, {}}; }

RowSpec text_row(int lo, int hi, std::vector<BlockSpec> blocks) {
    return RowSpec{RowKind::Text, lo, hi, std::move(blocks)};
}

// Midpoints of this template tile 80x60 exactly, so a jitter-free sample
// equals the fixed-size layout and the glyphs pin a unique optimum.
VizTemplate exact_template() {
    return rows_template({
        gap_row(8, 12),
        text_row(10, 14,
                 {{BlockKind::Gap, 4, 8},
                  {BlockKind::Field, 30, 34},
                  {BlockKind::Gap, 4, 8},
                  {BlockKind::Field, 30, 38},
                  {BlockKind::Gap, 1, 3}}),
        gap_row(7, 9),
        text_row(10, 14,
                 {{BlockKind::Gap, 4, 8},
                  {BlockKind::Field, 30, 34},
                  {BlockKind::Gap, 4, 8},
                  {BlockKind::Field, 30, 38},
                  {BlockKind::Gap, 1, 3}}),
        gap_row(16, 20),
    });
}

// Small instances for exhaustive comparisons.
VizTemplate tiny_two_row() {
    return rows_template({
        gap_row(1, 4),
        text_row(3, 5,
                 {{BlockKind::Gap, 0, 2},
                  {BlockKind::Field, 3, 5},
                  {BlockKind::Gap, 1, 3},
                  {BlockKind::Field, 2, 4},
                  {BlockKind::Gap, 0, 2}}),
        gap_row(1, 4),
        text_row(2, 4, {{BlockKind::Gap, 0, 3}, {BlockKind::Field, 4, 8}, {BlockKind::Gap, 0, 3}}),
        gap_row(1, 4),
    });
}

VizTemplate tiny_one_row() {
    return rows_template({
        gap_row(1, 3),
        text_row(2, 4, {{BlockKind::Gap, 0, 2}, {BlockKind::Field, 2, 4}, {BlockKind::Gap, 0, 2}}),
        gap_row(2, 4),
    });
}

VizTemplate grid_template() {
    return rows_template({
        gap_row(1, 5),
        text_row(3, 5, {{BlockKind::Gap, 0, 8}, {BlockKind::Field, 6, 10}, {BlockKind::Gap, 0, 8}}),
        gap_row(1, 5),
        text_row(3, 5, {{BlockKind::Gap, 0, 8}, {BlockKind::Field, 6, 10}, {BlockKind::Gap, 0, 8}}),
        gap_row(1, 5),
    });
}

Cost layout_s1(const IntegralImage& ii, const VizLayout& layout) {
    Cost s = 0;
    for (const Rect& r : layout.field_rects()) {
        s += Cost(ii.window_sum_unchecked(r.x, r.y, r.w, r.h));
    }
    return s;
}

void check_layout_invariants(const VizLayout& layout, const VizTemplate& tpl, int img_w,
                             int img_h) {
    REQUIRE(layout.rows.size() == tpl.rows.size());
    REQUIRE(layout.rows.front().top == 0);
    REQUIRE(layout.rows.back().bottom == img_h);
    for (std::size_t i = 0; i < layout.rows.size(); ++i) {
        const RowLayout& r = layout.rows[i];
        REQUIRE(r.kind == tpl.rows[i].kind);
        if (i > 0) REQUIRE(layout.rows[i - 1].bottom == r.top);
        const int h = r.bottom - r.top;
        REQUIRE(h >= tpl.rows[i].h_min);
        REQUIRE(h <= tpl.rows[i].h_max);
        if (r.kind != RowKind::Text) continue;
        REQUIRE(r.blocks.front().left == 0);
        REQUIRE(r.blocks.back().right == img_w);
        for (std::size_t j = 0; j < r.blocks.size(); ++j) {
            const BlockLayout& b = r.blocks[j];
            if (j > 0) REQUIRE(r.blocks[j - 1].right == b.left);
            const int w = b.right - b.left;
            REQUIRE(w >= tpl.rows[i].blocks[j].w_min);
            REQUIRE(w <= tpl.rows[i].blocks[j].w_max);
        }
    }
}

}  // namespace

TEST_CASE("validate_template checks interval feasibility") {
    const VizTemplate tpl = rows_template({
        gap_row(2, 4),
        text_row(5, 9, {{BlockKind::Gap, 0, 6}, {BlockKind::Field, 2, 8}, {BlockKind::Gap, 0, 6}}),
        gap_row(2, 4),
    });
    CHECK_NOTHROW(validate_template(tpl, 8, 12));
    CHECK_THROWS_AS(validate_template(tpl, 8, 8), HeightRangeError);
}

TEST_CASE("validate_template rejects broken alternation") {
    const VizTemplate two_text = rows_template({
        gap_row(1, 2),
        text_row(2, 3, {{BlockKind::Gap, 0, 2}, {BlockKind::Field, 1, 4}, {BlockKind::Gap, 0, 2}}),
        text_row(2, 3, {{BlockKind::Gap, 0, 2}, {BlockKind::Field, 1, 4}, {BlockKind::Gap, 0, 2}}),
        gap_row(1, 2),
    });
    CHECK_THROWS_AS(validate_template(two_text, 6, 10), AlternationError);

    const VizTemplate no_text = rows_template({gap_row(1, 10)});
    CHECK_THROWS_AS(validate_template(no_text, 6, 10), AlternationError);
}

TEST_CASE("fix_sizes picks midpoints when the gaps have slack") {
    const VizTemplate tpl = rows_template({
        gap_row(0, 10),
        text_row(9, 9, {{BlockKind::Gap, 0, 10}, {BlockKind::Field, 6, 10}, {BlockKind::Gap, 0, 10}}),
        gap_row(0, 10),
    });
    const FixedSizes sizes = fix_sizes(tpl, 20, 20);
    CHECK(sizes.text_heights == std::vector<int>{9});  // degenerate range stays 9
    CHECK(sizes.field_widths[0] == std::vector<int>{8});
}

TEST_CASE("fix_sizes repairs infeasible midpoints proportionally") {
    const VizTemplate tpl = rows_template({
        gap_row(0, 10),
        text_row(3, 3,
                 {{BlockKind::Gap, 0, 0},
                  {BlockKind::Field, 6, 10},
                  {BlockKind::Gap, 0, 0},
                  {BlockKind::Field, 6, 10},
                  {BlockKind::Gap, 0, 0}}),
        gap_row(0, 10),
    });
    const FixedSizes sizes = fix_sizes(tpl, 14, 10);
    CHECK(sizes.field_widths[0] == std::vector<int>{7, 7});
}

TEST_CASE("row_cost_profile of a full-width field is the window sum") {
    std::mt19937_64 rng(51);
    const GrayImage img = oracles::random_image(rng, 12, 10);
    const IntegralImage ii = integral(img);
    const RowSpec row = text_row(
        3, 3, {{BlockKind::Gap, 0, 0}, {BlockKind::Field, 12, 12}, {BlockKind::Gap, 0, 0}});
    const auto profile = row_cost_profile(ii, row, 3, {12});
    REQUIRE(profile.size() == 10);
    for (int y = 0; y < 10; ++y) {
        if (y + 3 <= 10) {
            REQUIRE(profile[y] == Cost(window_sum(ii, 0, y, 12, 3)));
        } else {
            REQUIRE(profile[y] == kInfCost);
        }
    }
}

TEST_CASE("row_cost_profile is zero on a black image") {
    const GrayImage img(16, 8, 0);
    const IntegralImage ii = integral(img);
    const RowSpec row = text_row(
        2, 4, {{BlockKind::Gap, 0, 10}, {BlockKind::Field, 4, 6}, {BlockKind::Gap, 0, 10}});
    const auto profile = row_cost_profile(ii, row, 3, {5});
    for (int y = 0; y + 3 <= 8; ++y) REQUIRE(profile[y] == 0);
}

TEST_CASE("row_cost_profile localizes a dark block") {
    GrayImage img(20, 10, 9);
    for (int y = 4; y < 7; ++y) {
        for (int x = 7; x < 12; ++x) img.at(x, y) = 0;
    }
    const IntegralImage ii = integral(img);
    const RowSpec row = text_row(
        3, 3, {{BlockKind::Gap, 0, 15}, {BlockKind::Field, 5, 5}, {BlockKind::Gap, 0, 15}});
    const auto profile = row_cost_profile(ii, row, 3, {5});

    // Independent oracle: exhaustive scan over all (x, y) window positions.
    Cost best = kInfCost;
    int best_y = -1;
    for (int y = 0; y + 3 <= 10; ++y) {
        for (int x = 0; x + 5 <= 20; ++x) {
            const Cost c = Cost(oracles::naive_window_sum(img, x, y, 5, 3));
            if (c < best) {
                best = c;
                best_y = y;
            }
        }
    }
    REQUIRE(best_y == 4);
    const int arg =
        int(std::min_element(profile.begin(), profile.end()) - profile.begin());
    CHECK(arg == 4);
    CHECK(profile[4] == best);
}

TEST_CASE("segment_viz_fixed matches exhaustive enumeration on small instances") {
    std::mt19937_64 rng(53);
    const struct {
        VizTemplate tpl;
        int w, h;
    } cases[] = {
        {tiny_one_row(), 6, 8},
        {tiny_two_row(), 10, 12},
        {grid_template(), 16, 12},
    };
    for (const auto& c : cases) {
        const FixedSizes sizes = fix_sizes(c.tpl, c.w, c.h);
        for (int iter = 0; iter < 10; ++iter) {
            const GrayImage img = oracles::random_image(rng, c.w, c.h);
            const IntegralImage ii = integral(img);

            Cost best = kInfCost;
            int count = 0;
            oracles::enumerate_layouts(c.tpl, sizes, c.w, c.h, [&](const VizLayout& layout) {
                best = std::min(best, layout_s1(ii, layout));
                ++count;
            });
            REQUIRE(count > 0);

            const SegmentFixedResult got = segment_viz_fixed(ii, c.tpl, sizes);
            REQUIRE(got.s1 == best);
            REQUIRE(layout_s1(ii, got.layout) == best);
            check_layout_invariants(got.layout, c.tpl, c.w, c.h);
        }
    }
}

TEST_CASE("segment_viz_fixed breaks blank-image ties to smallest coordinates") {
    const VizTemplate tpl = tiny_two_row();
    const int w = 10, h = 12;
    const FixedSizes sizes = fix_sizes(tpl, w, h);
    const GrayImage img(w, h, 0);
    const IntegralImage ii = integral(img);

    // Expected: the layout whose text-row tops, compared from the last row
    // backwards, then per-row field lefts likewise, are smallest.
    auto key = [](const VizLayout& layout) {
        std::vector<int> k;
        for (auto it = layout.rows.rbegin(); it != layout.rows.rend(); ++it) {
            if (it->kind == RowKind::Text) k.push_back(it->top);
        }
        for (const auto& row : layout.rows) {
            if (row.kind != RowKind::Text) continue;
            std::vector<int> lefts;
            for (const auto& b : row.blocks) {
                if (b.kind == BlockKind::Field) lefts.push_back(b.left);
            }
            k.insert(k.end(), lefts.rbegin(), lefts.rend());
        }
        return k;
    };
    bool have = false;
    std::vector<int> best_key;
    oracles::enumerate_layouts(tpl, sizes, w, h, [&](const VizLayout& layout) {
        const auto k = key(layout);
        if (!have || k < best_key) {
            best_key = k;
            have = true;
        }
    });
    REQUIRE(have);

    const SegmentFixedResult got = segment_viz_fixed(ii, tpl, sizes);
    CHECK(got.s1 == 0);
    CHECK(key(got.layout) == best_key);
}

TEST_CASE("segment_viz_fixed recovers an exactly rendered layout") {
    const VizTemplate tpl = exact_template();
    SynthSpec spec;
    spec.seed = 5;
    spec.width = 80;
    spec.height = 60;
    spec.noise_sigma = 0;
    spec.jitter = 0;

    const VizSample sample = gen_viz(tpl, spec);
    const IntegralImage ii = integral(sample.image);
    const FixedSizes sizes = fix_sizes(tpl, 80, 60);
    const SegmentFixedResult got = segment_viz_fixed(ii, tpl, sizes);
    CHECK(got.layout == sample.truth);
    CHECK(got.s1 == layout_s1(ii, sample.truth));
}

TEST_CASE("a template that forbids the true layout costs strictly more") {
    const VizTemplate tpl = exact_template();
    SynthSpec spec;
    spec.seed = 6;
    spec.width = 80;
    spec.height = 60;
    const VizSample sample = gen_viz(tpl, spec);
    const IntegralImage ii = integral(sample.image);

    VizTemplate shifted = tpl;
    shifted.rows[0].h_min = 15;  // truth places the first text row at y=10
    shifted.rows[0].h_max = 20;
    const FixedSizes sizes = fix_sizes(shifted, 80, 60);
    const SegmentFixedResult got = segment_viz_fixed(ii, shifted, sizes);
    CHECK(got.s1 > layout_s1(ii, sample.truth));
}

TEST_CASE("segment_viz_fixed throws on infeasible masks") {
    // First text row must start in [8, 12] but the whole height is 10 and
    // the bottom gap needs 16; nothing fits.
    const VizTemplate tpl = rows_template({
        gap_row(8, 12),
        text_row(4, 4, {{BlockKind::Gap, 0, 4}, {BlockKind::Field, 4, 8}, {BlockKind::Gap, 0, 4}}),
        gap_row(16, 20),
    });
    const GrayImage img(8, 10, 0);
    const IntegralImage ii = integral(img);
    FixedSizes sizes;
    sizes.text_heights = {4};
    sizes.field_widths = {{6}};
    CHECK_THROWS_AS(segment_viz_fixed(ii, tpl, sizes), InfeasibleError);
}

TEST_CASE("layout_class_stats handles degenerate layouts") {
    const GrayImage img(10, 6, 100);
    const IntegralImage ii = integral(img);

    VizLayout no_fields;
    no_fields.rows = {RowLayout{RowKind::Gap, 0, 6, {}}};
    const ClassStats empty = layout_class_stats(ii, no_fields);
    CHECK(empty.q1 == 0);
    CHECK(empty.s1 == 0);
    CHECK(empty.q0 == 60);
    CHECK(empty.s0 == 6000);

    VizLayout all_field;
    all_field.rows = {RowLayout{
        RowKind::Text, 0, 6, {BlockLayout{BlockKind::Field, 0, 10, 0, 6}}}};
    const ClassStats full = layout_class_stats(ii, all_field);
    CHECK(full.q0 == 0);
    CHECK(full.s0 == 0);
    CHECK(full.q1 == 60);
    CHECK(full.s1 == 6000);
}

TEST_CASE("layout_class_stats equals the per-pixel classification loop") {
    std::mt19937_64 rng(59);
    const VizTemplate tpl = tiny_two_row();
    const FixedSizes sizes = fix_sizes(tpl, 10, 12);
    for (int iter = 0; iter < 10; ++iter) {
        const GrayImage img = oracles::random_image(rng, 10, 12);
        const IntegralImage ii = integral(img);
        const VizLayout layout = segment_viz_fixed(ii, tpl, sizes).layout;
        const ClassStats fast = layout_class_stats(ii, layout);
        const ClassStats slow = oracles::naive_layout_stats(img, layout);
        REQUIRE(fast.q0 == slow.q0);
        REQUIRE(fast.q1 == slow.q1);
        REQUIRE(fast.s0 == slow.s0);
        REQUIRE(fast.s1 == slow.s1);
    }
}

TEST_CASE("ranking layouts by mass equals ranking by dispersion") {
    // With fixed sizes the class volumes are constant, so the dispersion
    // must be a strictly decreasing function of the in-field mass.
    std::mt19937_64 rng(61);
    const VizTemplate tpl = grid_template();
    const int w = 16, h = 12;
    const FixedSizes sizes = fix_sizes(tpl, w, h);
    const GrayImage img = oracles::random_image(rng, w, h);
    const IntegralImage ii = integral(img);

    struct Entry {
        Cost s1;
        double v;
    };
    std::vector<Entry> entries;
    oracles::enumerate_layouts(tpl, sizes, w, h, [&](const VizLayout& layout) {
        const ClassStats st = layout_class_stats(ii, layout);
        REQUIRE(Cost(st.s1) == layout_s1(ii, layout));
        entries.push_back({Cost(st.s1), signed_dispersion(st)});
    });
    REQUIRE(entries.size() > 100);
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        return a.s1 < b.s1;
    });
    for (std::size_t i = 1; i < entries.size(); ++i) {
        if (entries[i].s1 == entries[i - 1].s1) {
            REQUIRE(entries[i].v == entries[i - 1].v);
        } else {
            REQUIRE(entries[i].v < entries[i - 1].v);
        }
    }
}

TEST_CASE("refine with zero iterations is a no-op") {
    const VizTemplate tpl = exact_template();
    SynthSpec spec;
    spec.seed = 9;
    spec.width = 80;
    spec.height = 60;
    const VizSample sample = gen_viz(tpl, spec);
    const IntegralImage ii = integral(sample.image);
    const VizLayout layout = segment_viz_fixed(ii, tpl, fix_sizes(tpl, 80, 60)).layout;

    const RefineResult r = refine_coordinate_descent(ii, layout, tpl, 0);
    CHECK(r.layout == layout);
    CHECK(r.iterations == 0);
    CHECK(!r.layout.refined);
    CHECK(r.v_trace.size() == 1);
}

TEST_CASE("refine is idle when fields already cover the glyphs exactly") {
    const VizTemplate tpl = exact_template();
    SynthSpec spec;
    spec.seed = 10;
    spec.width = 80;
    spec.height = 60;
    spec.noise_sigma = 0;
    spec.jitter = 0;
    const VizSample sample = gen_viz(tpl, spec);
    const IntegralImage ii = integral(sample.image);
    const VizLayout layout = segment_viz_fixed(ii, tpl, fix_sizes(tpl, 80, 60)).layout;
    REQUIRE(layout == sample.truth);

    const RefineResult r = refine_coordinate_descent(ii, layout, tpl, 3);
    CHECK(r.iterations == 1);  // first sweep is idle
    CHECK(r.layout == layout);
    CHECK(!r.layout.refined);
}

TEST_CASE("refinement degrades an elevated-brightness outlier after sweep 1") {
    // Seed 2 of the outlier corpus: the bright field is tightened correctly
    // on the first sweep and misclassified as background afterwards.
    const VizTemplate gen_tpl = corpora::outlier_gen_template();
    const VizTemplate seg_tpl = corpora::outlier_seg_template();
    const VizSample sample = gen_viz(gen_tpl, corpora::outlier_spec(2));

    auto run = [&](int iters) {
        VizOptions opts;
        opts.max_iters = iters;
        const VizResult res = segment_viz(sample.image, seg_tpl, opts);
        return mean_iou(res.layout.field_rects(), sample.truth.field_rects());
    };
    const double iou1 = run(1);
    const double iou2 = run(2);
    CHECK(iou2 < iou1);
}

TEST_CASE("dispersion is non-decreasing along the refinement trace") {
    for (std::uint64_t seed : {1, 2, 3}) {
        const VizSample sample =
            gen_viz(corpora::viz3_template(), corpora::viz3_spec(seed));
        const GrayImage pre = preprocess_viz(sample.image);
        const IntegralImage ii = integral(pre);
        const VizLayout layout =
            segment_viz_fixed(ii, corpora::viz3_template(), fix_sizes(corpora::viz3_template(), 400, 300))
                .layout;
        const RefineResult r = refine_coordinate_descent(ii, layout, corpora::viz3_template(), 3);
        REQUIRE(r.v_trace.size() > 1);
        for (std::size_t i = 1; i < r.v_trace.size(); ++i) {
            REQUIRE(r.v_trace[i] >= r.v_trace[i - 1]);
        }
    }
}

TEST_CASE("refined layouts stay within template ranges, gaps included") {
    const VizTemplate tpl = corpora::viz3_template();
    int field_total = 0;
    for (std::uint64_t seed : {4, 5, 6}) {
        const VizSample sample = gen_viz(tpl, corpora::viz3_spec(seed));
        VizOptions opts;
        opts.max_iters = 3;
        const VizResult res = segment_viz(sample.image, tpl, opts);
        REQUIRE(res.layout.refined);

        for (std::size_t i = 0; i < res.layout.rows.size(); ++i) {
            const RowLayout& row = res.layout.rows[i];
            if (row.kind != RowKind::Text) continue;
            const int above_top = res.layout.rows[i - 1].top;
            const int below_bottom = res.layout.rows[i + 1].bottom;
            int prev_right = 0;
            for (std::size_t j = 0; j < row.blocks.size(); ++j) {
                const BlockLayout& b = row.blocks[j];
                if (b.kind != BlockKind::Field) continue;
                const BlockSpec& fs = tpl.rows[i].blocks[j];
                CHECK(b.right - b.left >= fs.w_min);
                CHECK(b.right - b.left <= fs.w_max);
                CHECK(b.bottom - b.top >= tpl.rows[i].h_min);
                CHECK(b.bottom - b.top <= tpl.rows[i].h_max);
                // Gap to the left neighbor (or the image edge).
                const BlockSpec& lgap = tpl.rows[i].blocks[j - 1];
                CHECK(b.left - prev_right >= lgap.w_min);
                CHECK(b.left - prev_right <= lgap.w_max);
                if (j + 2 >= row.blocks.size()) {  // rightmost field
                    const BlockSpec& rgap = tpl.rows[i].blocks[j + 1];
                    CHECK(400 - b.right >= rgap.w_min);
                    CHECK(400 - b.right <= rgap.w_max);
                }
                // Vertical slack borrowed from the adjacent gap rows.
                CHECK(b.top - above_top >= tpl.rows[i - 1].h_min);
                CHECK(b.top - above_top <= tpl.rows[i - 1].h_max);
                CHECK(below_bottom - b.bottom >= tpl.rows[i + 1].h_min);
                CHECK(below_bottom - b.bottom <= tpl.rows[i + 1].h_max);
                prev_right = b.right;
                ++field_total;
            }
        }
    }
    CHECK(field_total == 18);
}

TEST_CASE("segment_viz meets desk-scale quality on a small corpus") {
    const VizTemplate tpl = corpora::viz3_template();
    double iou_refined = 0, iou_plain = 0;
    const int n = 5;
    for (int seed = 1; seed <= n; ++seed) {
        const VizSample sample = gen_viz(tpl, corpora::viz3_spec(seed));
        VizOptions refined;
        refined.max_iters = 1;
        VizOptions plain;
        plain.refine = false;
        const VizResult a = segment_viz(sample.image, tpl, refined);
        const VizResult b = segment_viz(sample.image, tpl, plain);
        iou_refined += mean_iou(a.layout.field_rects(), sample.truth.field_rects());
        iou_plain += mean_iou(b.layout.field_rects(), sample.truth.field_rects());
        CHECK(a.v >= b.v);  // descent only accepts improvements
    }
    CHECK(iou_refined / n >= 0.90);
    CHECK(iou_plain / n >= 0.80);
}

TEST_CASE("segment_viz rejects an empty template") {
    const GrayImage img(40, 30, 0);
    CHECK_THROWS_AS(segment_viz(img, rows_template({gap_row(0, 40)}), {}), AlternationError);
}

TEST_CASE("segment_viz is deterministic, including under threads") {
    const VizTemplate tpl = corpora::viz3_template();
    const VizSample sample = gen_viz(tpl, corpora::viz3_spec(7));
    VizOptions opts;
    opts.max_iters = 2;

    const VizResult a = segment_viz(sample.image, tpl, opts);
    const VizResult b = segment_viz(sample.image, tpl, opts);
    CHECK(a.layout == b.layout);
    CHECK(layout_to_json(a.layout).dump() == layout_to_json(b.layout).dump());

    set_thread_count(3);
    const VizResult c = segment_viz(sample.image, tpl, opts);
    set_thread_count(1);
    CHECK(a.layout == c.layout);
    CHECK(a.s1 == c.s1);
    CHECK(a.v == c.v);
}

TEST_CASE("max_iters=0 with refinement enabled equals refinement disabled") {
    const VizTemplate tpl = corpora::viz3_template();
    const VizSample sample = gen_viz(tpl, corpora::viz3_spec(8));
    VizOptions zero;
    zero.max_iters = 0;
    VizOptions off;
    off.refine = false;
    const VizResult a = segment_viz(sample.image, tpl, zero);
    const VizResult b = segment_viz(sample.image, tpl, off);
    CHECK(a.layout == b.layout);
    CHECK(a.iterations == 0);
}
