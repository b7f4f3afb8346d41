// Copyright 2026 The Squeezebox Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0

#include "sqz/synth.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace sqz {

int uniform_int(std::mt19937_64& rng, int lo, int hi) {
    if (lo >= hi) return lo;
    const std::uint64_t range = std::uint64_t(hi) - lo + 1;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % range;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return lo + int(x % range);
}

double gaussian(std::mt19937_64& rng, double sigma) {
    // u1 in (0, 1], u2 in [0, 1)
    const double u1 = (double(rng() >> 11) + 1.0) * 0x1p-53;
    const double u2 = double(rng() >> 11) * 0x1p-53;
    return sigma * std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
}

namespace {

void add_noise(GrayImage& img, std::mt19937_64& rng, double sigma) {
    if (sigma <= 0) return;
    for (auto& p : img.pixels) {
        const double v = double(p) + gaussian(rng, sigma);
        p = std::uint8_t(std::clamp(std::lround(v), 0L, 255L));
    }
}

void fill_rect(GrayImage& img, const Rect& r, std::uint8_t value) {
    for (int y = r.y; y < r.bottom(); ++y) {
        std::fill(img.row(y) + r.x, img.row(y) + r.right(), value);
    }
}

// Balances elastic elements to absorb `extent` exactly: midpoints adjusted
// proportionally to slack, remainder units to the largest fractional shares.
std::vector<int> balance_sizes(const std::vector<std::pair<int, int>>& ranges, int extent) {
    const int n = int(ranges.size());
    std::vector<int> sizes(n);
    long long sum = 0;
    for (int i = 0; i < n; ++i) {
        sizes[i] = (ranges[i].first + ranges[i].second + 1) / 2;
        sum += sizes[i];
    }
    const bool grow = extent > sum;
    long long deficit = grow ? extent - sum : sum - extent;
    if (deficit == 0) return sizes;

    std::vector<long long> slack(n);
    long long total_slack = 0;
    for (int i = 0; i < n; ++i) {
        slack[i] = grow ? ranges[i].second - sizes[i] : sizes[i] - ranges[i].first;
        total_slack += slack[i];
    }
    std::vector<long long> adj(n, 0);
    std::vector<std::pair<long long, int>> frac;  // (-remainder, index)
    long long assigned = 0;
    for (int i = 0; i < n; ++i) {
        if (total_slack > 0) {
            adj[i] = deficit * slack[i] / total_slack;
            frac.emplace_back(-(deficit * slack[i] % total_slack), i);
        }
        assigned += adj[i];
    }
    std::sort(frac.begin(), frac.end());
    long long rem = deficit - assigned;
    for (const auto& [neg_r, i] : frac) {
        if (rem <= 0) break;
        if (adj[i] < slack[i]) {
            ++adj[i];
            --rem;
        }
    }
    // Any residue (elements saturated) goes to whoever still has slack.
    for (int i = 0; rem > 0 && i < n; ++i) {
        const long long take = std::min(rem, slack[i] - adj[i]);
        adj[i] += take;
        rem -= take;
    }
    for (int i = 0; i < n; ++i) sizes[i] += int(grow ? adj[i] : -adj[i]);
    return sizes;
}

// Sequentially samples element sizes near their base values so the whole
// sequence still tiles `extent`. The jitter window is dropped when it would
// make the tail infeasible.
std::vector<int> sample_sizes(std::mt19937_64& rng, const std::vector<std::pair<int, int>>& ranges,
                              const std::vector<int>& base, int extent, int jitter) {
    const int n = int(ranges.size());
    std::vector<long long> suffix_min(n + 1, 0), suffix_max(n + 1, 0);
    for (int i = n - 1; i >= 0; --i) {
        suffix_min[i] = suffix_min[i + 1] + ranges[i].first;
        suffix_max[i] = suffix_max[i + 1] + ranges[i].second;
    }
    std::vector<int> sizes(n);
    long long rem = extent;
    for (int i = 0; i < n; ++i) {
        const int lo = int(std::max<long long>(ranges[i].first, rem - suffix_max[i + 1]));
        const int hi = int(std::min<long long>(ranges[i].second, rem - suffix_min[i + 1]));
        int jlo = std::max(lo, base[i] - jitter);
        int jhi = std::min(hi, base[i] + jitter);
        if (jlo > jhi) {
            jlo = lo;
            jhi = hi;
        }
        sizes[i] = uniform_int(rng, jlo, jhi);
        rem -= sizes[i];
    }
    return sizes;
}

// Glyph segments tiling [x0, x1): widths 5..9 with 1..2 px gaps, first
// segment starts at x0 and the last one is stretched to end at x1.
std::vector<std::pair<int, int>> glyph_segments(std::mt19937_64& rng, int x0, int x1) {
    std::vector<std::pair<int, int>> segs;
    int x = x0;
    while (x1 - x >= 5) {
        const int gw = std::min(uniform_int(rng, 5, 9), x1 - x);
        segs.emplace_back(x, x + gw);
        x += gw + uniform_int(rng, 1, 2);
    }
    if (segs.empty()) {
        segs.emplace_back(x0, x1);
    } else {
        segs.back().second = x1;
    }
    return segs;
}

}  // namespace

namespace {

void check_spec(const SynthSpec& spec) {
    if (spec.glyph_value < 0 || spec.glyph_value > 255 || spec.background_value < 0 ||
        spec.background_value > 255 || spec.glyph_value >= spec.background_value) {
        throw Error("synth: glyph_value must be below background_value, both in [0, 255]");
    }
    if (spec.jitter < 0) throw Error("synth: jitter must be nonnegative");
}

}  // namespace

VizSample gen_viz(const VizTemplate& tpl, const SynthSpec& spec) {
    check_spec(spec);
    validate_template(tpl, spec.width, spec.height);
    std::mt19937_64 rng(spec.seed);

    // The nominal tiling mirrors the fixed-size stage: text rows and fields
    // take their fixed sizes, the gaps absorb the rest of the extent.
    const FixedSizes fixed = fix_sizes(tpl, spec.width, spec.height);

    std::vector<std::pair<int, int>> row_ranges;
    for (const RowSpec& r : tpl.rows) row_ranges.emplace_back(r.h_min, r.h_max);
    std::vector<int> row_base;
    {
        std::vector<std::pair<int, int>> gap_ranges;
        int text_sum = 0;
        int t = 0;
        for (const RowSpec& r : tpl.rows) {
            if (r.kind == RowKind::Gap) {
                gap_ranges.emplace_back(r.h_min, r.h_max);
            } else {
                text_sum += fixed.text_heights[t++];
            }
        }
        const std::vector<int> gap_base = balance_sizes(gap_ranges, spec.height - text_sum);
        std::size_t g = 0;
        t = 0;
        for (const RowSpec& r : tpl.rows) {
            row_base.push_back(r.kind == RowKind::Gap ? gap_base[g++]
                                                      : fixed.text_heights[t++]);
        }
    }
    const std::vector<int> heights =
        sample_sizes(rng, row_ranges, row_base, spec.height, spec.jitter);

    VizSample sample;
    VizLayout& truth = sample.truth;
    truth.rows.resize(tpl.rows.size());
    int cursor = 0;
    int text_idx = 0;
    for (int i = 0; i < int(tpl.rows.size()); ++i) {
        RowLayout& rl = truth.rows[i];
        rl.kind = tpl.rows[i].kind;
        rl.top = cursor;
        rl.bottom = cursor + heights[i];
        cursor = rl.bottom;
        if (rl.kind != RowKind::Text) continue;

        std::vector<std::pair<int, int>> block_ranges;
        std::vector<std::pair<int, int>> gap_ranges;
        int field_sum = 0;
        {
            int f = 0;
            for (const BlockSpec& b : tpl.rows[i].blocks) {
                block_ranges.emplace_back(b.w_min, b.w_max);
                if (b.kind == BlockKind::Gap) {
                    gap_ranges.emplace_back(b.w_min, b.w_max);
                } else {
                    field_sum += fixed.field_widths[text_idx][f++];
                }
            }
        }
        std::vector<int> block_base;
        {
            const std::vector<int> gap_base =
                balance_sizes(gap_ranges, spec.width - field_sum);
            std::size_t g = 0;
            int f = 0;
            for (const BlockSpec& b : tpl.rows[i].blocks) {
                block_base.push_back(b.kind == BlockKind::Gap
                                         ? gap_base[g++]
                                         : fixed.field_widths[text_idx][f++]);
            }
        }
        ++text_idx;
        const std::vector<int> widths =
            sample_sizes(rng, block_ranges, block_base, spec.width, spec.jitter);
        rl.blocks.resize(tpl.rows[i].blocks.size());
        int x = 0;
        for (int j = 0; j < int(rl.blocks.size()); ++j) {
            BlockLayout& bl = rl.blocks[j];
            bl.kind = tpl.rows[i].blocks[j].kind;
            bl.left = x;
            bl.right = x + widths[j];
            bl.top = rl.top;
            bl.bottom = rl.bottom;
            x = bl.right;
        }
    }

    sample.image = GrayImage(spec.width, spec.height, std::uint8_t(spec.background_value));
    int field_idx = 0;
    for (const RowLayout& rl : truth.rows) {
        for (const BlockLayout& bl : rl.blocks) {
            if (bl.kind != BlockKind::Field) continue;
            const int value = (field_idx == spec.outlier_field && spec.outlier_value >= 0)
                                  ? spec.outlier_value
                                  : spec.glyph_value;
            for (const auto& [gx0, gx1] : glyph_segments(rng, bl.left, bl.right)) {
                fill_rect(sample.image, Rect{gx0, bl.top, gx1 - gx0, bl.bottom - bl.top},
                          std::uint8_t(value));
            }
            ++field_idx;
        }
    }
    add_noise(sample.image, rng, spec.noise_sigma);
    return sample;
}

PlateSample gen_plate(const PlateTemplate& tpl, const SynthSpec& spec) {
    check_spec(spec);
    validate_plate_template(tpl);
    const int w = spec.width > 0 ? spec.width : tpl.nominal_w;
    const int h = spec.height > 0 ? spec.height : tpl.nominal_h;
    if (w < 1 || h < 1) throw Error("gen_plate: image size not set");
    std::mt19937_64 rng(spec.seed);

    const DistanceBounds bx = link_bounds(tpl, Axis::X);
    const DistanceBounds by = link_bounds(tpl, Axis::Y);
    const int n = int(tpl.symbols.size());

    // Per-symbol displacement chains: consecutive offsets stay within the
    // elasticity radius, every box stays inside the image.
    std::vector<int> dx(n), dy(n);
    for (int i = 0; i < n; ++i) {
        const Rect& r = tpl.symbols[i];
        int lo_x = -spec.jitter, hi_x = spec.jitter;
        int lo_y = -spec.jitter, hi_y = spec.jitter;
        if (i > 0) {
            const int off_x = tpl.symbols[i].x - tpl.symbols[i - 1].x;
            lo_x = std::max(lo_x, dx[i - 1] + (bx.t_min[i - 1] - off_x));
            hi_x = std::min(hi_x, dx[i - 1] + (bx.t_max[i - 1] - off_x));
            const int off_y = tpl.symbols[i].y - tpl.symbols[i - 1].y;
            lo_y = std::max(lo_y, dy[i - 1] + (by.t_min[i - 1] - off_y));
            hi_y = std::min(hi_y, dy[i - 1] + (by.t_max[i - 1] - off_y));
        }
        lo_x = std::max(lo_x, -r.x);
        hi_x = std::min(hi_x, w - r.w - r.x);
        lo_y = std::max(lo_y, -r.y);
        hi_y = std::min(hi_y, h - r.h - r.y);
        if (lo_x > hi_x || lo_y > hi_y) {
            throw Error("gen_plate: jitter window infeasible for symbol " + std::to_string(i));
        }
        dx[i] = uniform_int(rng, lo_x, hi_x);
        dy[i] = uniform_int(rng, lo_y, hi_y);
    }

    PlateSample sample;
    sample.image = GrayImage(w, h, std::uint8_t(spec.background_value));
    for (int i = 0; i < n; ++i) {
        Rect box = tpl.symbols[i];
        box.x += dx[i];
        box.y += dy[i];
        sample.truth.boxes.push_back(box);
        if (box.w > 2 && box.h > 2) {
            fill_rect(sample.image, Rect{box.x + 1, box.y + 1, box.w - 2, box.h - 2},
                      std::uint8_t(spec.glyph_value));
        } else {
            fill_rect(sample.image, box, std::uint8_t(spec.glyph_value));
        }
    }
    add_noise(sample.image, rng, spec.noise_sigma);

    const IntegralImage ii = integral(sample.image);
    std::uint64_t sum = 0;
    for (const Rect& b : sample.truth.boxes) sum += ii.window_sum_unchecked(b.x, b.y, b.w, b.h);
    sample.truth.objective = Cost(sum);
    return sample;
}

double mean_iou(const std::vector<Rect>& pred, const std::vector<Rect>& truth) {
    if (pred.size() != truth.size()) {
        throw CountMismatchError("mean_iou: rectangle counts differ");
    }
    if (pred.empty()) return 1.0;
    double acc = 0;
    for (std::size_t i = 0; i < pred.size(); ++i) {
        const Rect& a = pred[i];
        const Rect& b = truth[i];
        const int ix = std::max(a.x, b.x);
        const int iy = std::max(a.y, b.y);
        const int ix1 = std::min(a.right(), b.right());
        const int iy1 = std::min(a.bottom(), b.bottom());
        const std::int64_t inter =
            std::int64_t(std::max(0, ix1 - ix)) * std::max(0, iy1 - iy);
        const std::int64_t uni = std::max<std::int64_t>(a.area(), 0) +
                                 std::max<std::int64_t>(b.area(), 0) - inter;
        acc += uni == 0 ? 1.0 : double(inter) / double(uni);
    }
    return acc / double(pred.size());
}

}  // namespace sqz
