// Copyright 2026 The Squeezebox Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0

#include "sqz/viz.hpp"

#include <algorithm>
#include <chrono>

#include "sqz/parallel.hpp"

namespace sqz {

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

// Link bounds between consecutive fields: the offset of field m+1 relative
// to field m is its width plus the elastic gap between them.
DistanceBounds row_link_bounds(const RowSpec& row, const std::vector<int>& widths) {
    DistanceBounds bounds;
    int field_idx = 0;
    for (std::size_t bi = 0; bi + 1 < row.blocks.size(); ++bi) {
        if (row.blocks[bi].kind != BlockKind::Field) continue;
        if (field_idx + 1 < int(widths.size())) {
            const BlockSpec& gap = row.blocks[bi + 1];
            bounds.t_min.push_back(widths[field_idx] + gap.w_min);
            bounds.t_max.push_back(widths[field_idx] + gap.w_max);
        }
        ++field_idx;
    }
    return bounds;
}

// Field placement costs for one row band position: window sums per x, with
// the boundary gap ranges encoded as infinite penalties on the first and
// last field rows.
void build_row_costs(const IntegralImage& ii, const RowSpec& row, int row_height,
                     const std::vector<int>& widths, int y, CostMatrix& out) {
    const int w = ii.width;
    const int f = int(widths.size());
    out.n_parts = f;
    out.n_positions = w;
    out.cost.assign(std::size_t(f) * w, kInfCost);

    const BlockSpec& first_gap = row.blocks.front();
    const BlockSpec& last_gap = row.blocks.back();
    for (int m = 0; m < f; ++m) {
        const int fw = widths[m];
        int lo = 0;
        int hi = w - fw;
        if (m == 0) {
            lo = std::max(lo, first_gap.w_min);
            hi = std::min(hi, first_gap.w_max);
        }
        if (m == f - 1) {
            lo = std::max(lo, w - fw - last_gap.w_max);
            hi = std::min(hi, w - fw - last_gap.w_min);
        }
        Cost* cost_row = out.row(m);
        for (int x = lo; x <= hi; ++x) {
            cost_row[x] = Cost(ii.window_sum_unchecked(x, y, fw, row_height));
        }
    }
}

std::vector<int> decode_row_positions(const IntegralImage& ii, const RowSpec& row, int row_height,
                                      const std::vector<int>& widths, int y) {
    CostMatrix costs;
    build_row_costs(ii, row, row_height, widths, y, costs);
    const DistanceBounds bounds = row_link_bounds(row, widths);
    Solution sol = solve_dsp(costs, bounds).solution;
    if (!sol.feasible()) {
        throw InfeasibleError("viz: row decode infeasible at y=" + std::to_string(y));
    }
    return sol.locations;
}

double dispersion_of(std::int64_t q1, std::int64_t s1, std::int64_t q_total,
                     std::int64_t s_total) {
    ClassStats st;
    st.q1 = q1;
    st.s1 = s1;
    st.q0 = q_total - q1;
    st.s0 = s_total - s1;
    return signed_dispersion(st);
}

}  // namespace

std::vector<int> VizTemplate::text_row_indices() const {
    std::vector<int> idx;
    for (int i = 0; i < int(rows.size()); ++i) {
        if (rows[i].kind == RowKind::Text) idx.push_back(i);
    }
    return idx;
}

std::vector<Rect> VizLayout::field_rects() const {
    std::vector<Rect> rects;
    for (const auto& row : rows) {
        for (const auto& b : row.blocks) {
            if (b.kind == BlockKind::Field) rects.push_back(b.rect());
        }
    }
    return rects;
}

void validate_template(const VizTemplate& tpl, int img_w, int img_h) {
    const auto& rows = tpl.rows;
    if (rows.size() < 3 || rows.size() % 2 == 0) {
        throw AlternationError("template: rows must be gap/text/gap/.../gap");
    }
    long long h_min_sum = 0, h_max_sum = 0;
    for (int i = 0; i < int(rows.size()); ++i) {
        const RowSpec& r = rows[i];
        const RowKind expect = (i % 2 == 0) ? RowKind::Gap : RowKind::Text;
        if (r.kind != expect) {
            throw AlternationError("template: row " + std::to_string(i) +
                                   " breaks the gap/text alternation");
        }
        if (r.h_min < 0 || r.h_min > r.h_max) {
            throw HeightRangeError("template: row " + std::to_string(i) + " has invalid h range");
        }
        h_min_sum += r.h_min;
        h_max_sum += r.h_max;
        if (r.kind == RowKind::Gap) {
            if (!r.blocks.empty()) {
                throw AlternationError("template: gap row " + std::to_string(i) + " has blocks");
            }
            continue;
        }
        if (r.blocks.size() < 3 || r.blocks.size() % 2 == 0) {
            throw AlternationError("template: text row " + std::to_string(i) +
                                   " must have gap/field/.../gap blocks");
        }
        long long w_min_sum = 0, w_max_sum = 0;
        for (int j = 0; j < int(r.blocks.size()); ++j) {
            const BlockSpec& b = r.blocks[j];
            const BlockKind expect_b = (j % 2 == 0) ? BlockKind::Gap : BlockKind::Field;
            if (b.kind != expect_b) {
                throw AlternationError("template: row " + std::to_string(i) + " block " +
                                       std::to_string(j) + " breaks the gap/field alternation");
            }
            if (b.w_min < 0 || b.w_min > b.w_max) {
                throw WidthRangeError("template: row " + std::to_string(i) + " block " +
                                      std::to_string(j) + " has invalid w range");
            }
            w_min_sum += b.w_min;
            w_max_sum += b.w_max;
        }
        if (w_min_sum > img_w || w_max_sum < img_w) {
            throw WidthRangeError("template: row " + std::to_string(i) +
                                  " block widths cannot tile image width " +
                                  std::to_string(img_w));
        }
    }
    if (h_min_sum > img_h || h_max_sum < img_h) {
        throw HeightRangeError("template: row heights cannot tile image height " +
                               std::to_string(img_h));
    }
}

namespace {

// Shrinks or grows the fixed sizes proportionally to per-element slack until
// the elastic elements can absorb the remaining extent.
void repair_fixed(std::vector<int>& fixed, const std::vector<int>& mins,
                  const std::vector<int>& maxes, long long flex_min_sum, long long flex_max_sum,
                  int extent) {
    long long cur = 0;
    for (int v : fixed) cur += v;
    const long long high_cap = extent - flex_min_sum;
    const long long low_need = extent - flex_max_sum;

    long long deficit = 0;
    bool shrink = false;
    if (cur > high_cap) {
        deficit = cur - high_cap;
        shrink = true;
    } else if (cur < low_need) {
        deficit = low_need - cur;
    } else {
        return;
    }

    std::vector<long long> slack(fixed.size());
    long long total_slack = 0;
    for (std::size_t i = 0; i < fixed.size(); ++i) {
        slack[i] = shrink ? fixed[i] - mins[i] : maxes[i] - fixed[i];
        total_slack += slack[i];
    }
    // validate_template guarantees total_slack >= deficit
    std::vector<long long> adj(fixed.size(), 0);
    long long assigned = 0;
    for (std::size_t i = 0; i < fixed.size(); ++i) {
        adj[i] = total_slack == 0 ? 0 : deficit * slack[i] / total_slack;
        assigned += adj[i];
    }
    long long rem = deficit - assigned;
    while (rem > 0) {
        for (std::size_t i = 0; i < fixed.size() && rem > 0; ++i) {
            if (adj[i] < slack[i]) {
                ++adj[i];
                --rem;
            }
        }
    }
    for (std::size_t i = 0; i < fixed.size(); ++i) {
        fixed[i] += int(shrink ? -adj[i] : adj[i]);
    }
}

int midpoint(int lo, int hi) { return (lo + hi + 1) / 2; }

}  // namespace

FixedSizes fix_sizes(const VizTemplate& tpl, int img_w, int img_h) {
    validate_template(tpl, img_w, img_h);
    FixedSizes sizes;

    std::vector<int> text_mins, text_maxes;
    long long gap_min_sum = 0, gap_max_sum = 0;
    for (const RowSpec& r : tpl.rows) {
        if (r.kind == RowKind::Text) {
            sizes.text_heights.push_back(midpoint(r.h_min, r.h_max));
            text_mins.push_back(r.h_min);
            text_maxes.push_back(r.h_max);
        } else {
            gap_min_sum += r.h_min;
            gap_max_sum += r.h_max;
        }
    }
    repair_fixed(sizes.text_heights, text_mins, text_maxes, gap_min_sum, gap_max_sum, img_h);

    for (const RowSpec& r : tpl.rows) {
        if (r.kind != RowKind::Text) continue;
        std::vector<int> widths, w_mins, w_maxes;
        long long g_min_sum = 0, g_max_sum = 0;
        for (const BlockSpec& b : r.blocks) {
            if (b.kind == BlockKind::Field) {
                widths.push_back(midpoint(b.w_min, b.w_max));
                w_mins.push_back(b.w_min);
                w_maxes.push_back(b.w_max);
            } else {
                g_min_sum += b.w_min;
                g_max_sum += b.w_max;
            }
        }
        repair_fixed(widths, w_mins, w_maxes, g_min_sum, g_max_sum, img_w);
        sizes.field_widths.push_back(std::move(widths));
    }
    return sizes;
}

std::vector<Cost> row_cost_profile(const IntegralImage& ii, const RowSpec& row, int row_height,
                                   const std::vector<int>& field_widths) {
    const int h = ii.height;
    std::vector<Cost> profile(h, kInfCost);
    if (row_height > h) return profile;

    const DistanceBounds bounds = row_link_bounds(row, field_widths);
    parallel_for_chunks(h - row_height + 1, [&](std::int64_t begin, std::int64_t end) {
        CostMatrix costs;
        for (std::int64_t y = begin; y < end; ++y) {
            build_row_costs(ii, row, row_height, field_widths, int(y), costs);
            profile[y] = dsp_objective(costs, bounds);
        }
    });
    return profile;
}

SegmentFixedResult segment_viz_fixed(const IntegralImage& ii, const VizTemplate& tpl,
                                     const FixedSizes& sizes) {
    const int h = ii.height;
    const std::vector<int> text_idx = tpl.text_row_indices();
    const int k = int(text_idx.size());

    CostMatrix outer(k, h, kInfCost);
    for (int t = 0; t < k; ++t) {
        const RowSpec& row = tpl.rows[text_idx[t]];
        const std::vector<Cost> profile =
            row_cost_profile(ii, row, sizes.text_heights[t], sizes.field_widths[t]);
        std::copy(profile.begin(), profile.end(), outer.row(t));
    }

    // First and last text rows are pinned through the boundary gap ranges.
    {
        const RowSpec& top_gap = tpl.rows.front();
        Cost* first = outer.row(0);
        for (int y = 0; y < h; ++y) {
            if (y < top_gap.h_min || y > top_gap.h_max) first[y] = kInfCost;
        }
        const RowSpec& bottom_gap = tpl.rows.back();
        const int hk = sizes.text_heights[k - 1];
        Cost* last = outer.row(k - 1);
        for (int y = 0; y < h; ++y) {
            const int bottom = y + hk;
            if (bottom < h - bottom_gap.h_max || bottom > h - bottom_gap.h_min) {
                last[y] = kInfCost;
            }
        }
    }

    DistanceBounds outer_bounds;
    for (int t = 0; t + 1 < k; ++t) {
        const RowSpec& gap = tpl.rows[text_idx[t] + 1];
        outer_bounds.t_min.push_back(sizes.text_heights[t] + gap.h_min);
        outer_bounds.t_max.push_back(sizes.text_heights[t] + gap.h_max);
    }

    const Solution outer_sol = solve_dsp(outer, outer_bounds).solution;
    if (!outer_sol.feasible()) {
        throw InfeasibleError("viz: no layout satisfies the template");
    }

    SegmentFixedResult result;
    result.s1 = outer_sol.objective;
    VizLayout& layout = result.layout;
    layout.rows.resize(tpl.rows.size());

    int cursor = 0;
    for (int i = 0; i < int(tpl.rows.size()); ++i) {
        RowLayout& rl = layout.rows[i];
        rl.kind = tpl.rows[i].kind;
        rl.top = cursor;
        if (tpl.rows[i].kind == RowKind::Gap) {
            const bool last = i + 1 == int(tpl.rows.size());
            const int t = int(std::lower_bound(text_idx.begin(), text_idx.end(), i) -
                              text_idx.begin());
            rl.bottom = last ? h : outer_sol.locations[t];
            cursor = rl.bottom;
            continue;
        }
        const int t = int(std::lower_bound(text_idx.begin(), text_idx.end(), i) -
                          text_idx.begin());
        rl.top = outer_sol.locations[t];
        rl.bottom = rl.top + sizes.text_heights[t];
        cursor = rl.bottom;

        const std::vector<int> xs = decode_row_positions(ii, tpl.rows[i], sizes.text_heights[t],
                                                         sizes.field_widths[t], rl.top);
        rl.blocks.resize(tpl.rows[i].blocks.size());
        int xcursor = 0;
        int field = 0;
        for (int j = 0; j < int(tpl.rows[i].blocks.size()); ++j) {
            BlockLayout& bl = rl.blocks[j];
            bl.kind = tpl.rows[i].blocks[j].kind;
            bl.top = rl.top;
            bl.bottom = rl.bottom;
            bl.left = xcursor;
            if (bl.kind == BlockKind::Gap) {
                const bool last_b = j + 1 == int(tpl.rows[i].blocks.size());
                bl.right = last_b ? ii.width : xs[field];
            } else {
                bl.left = xs[field];
                bl.right = xs[field] + sizes.field_widths[t][field];
                ++field;
            }
            xcursor = bl.right;
        }
    }
    return result;
}

ClassStats layout_class_stats(const IntegralImage& ii, const VizLayout& layout) {
    ClassStats st;
    for (const Rect& r : layout.field_rects()) {
        st.q1 += r.area();
        st.s1 += std::int64_t(ii.window_sum_unchecked(r.x, r.y, r.w, r.h));
    }
    st.q0 = std::int64_t(ii.width) * ii.height - st.q1;
    st.s0 = std::int64_t(ii.total()) - st.s1;
    return st;
}

namespace {

struct Refiner {
    const IntegralImage& ii;
    const VizTemplate& tpl;
    VizLayout& layout;
    std::int64_t q_total;
    std::int64_t s_total;
    std::int64_t q1;
    std::int64_t s1;
    double v;
    std::vector<double>& trace;
    bool moved_any = false;

    double eval(std::int64_t q1_new, std::int64_t s1_new) const {
        return dispersion_of(q1_new, s1_new, q_total, s_total);
    }

    std::int64_t strip_sum(int x, int y, int w, int h) const {
        return std::int64_t(ii.window_sum_unchecked(x, y, w, h));
    }

    // Moves one edge of `f` to the best coordinate in [lo, hi]. `delta`
    // maps a candidate to the (dq, ds) change of the class-1 mass.
    template <typename DeltaFn>
    bool move_edge(int& edge, int lo, int hi, DeltaFn delta) {
        const int cur = edge;
        double best_v = v;
        int best_c = cur;
        std::int64_t best_dq = 0, best_ds = 0;
        for (int c = lo; c <= hi; ++c) {
            if (c == cur) continue;
            const auto [dq, ds] = delta(c);
            const double cand = eval(q1 + dq, s1 + ds);
            if (cand > best_v) {
                best_v = cand;
                best_c = c;
                best_dq = dq;
                best_ds = ds;
            }
        }
        if (best_c == cur) return false;
        edge = best_c;
        q1 += best_dq;
        s1 += best_ds;
        v = best_v;
        trace.push_back(v);
        moved_any = true;
        return true;
    }

    bool sweep() {
        bool changed = false;
        for (int ri = 0; ri < int(tpl.rows.size()); ++ri) {
            if (tpl.rows[ri].kind != RowKind::Text) continue;
            const RowSpec& rs = tpl.rows[ri];
            const RowSpec& gap_above = tpl.rows[ri - 1];
            const RowSpec& gap_below = tpl.rows[ri + 1];
            RowLayout& row = layout.rows[ri];
            const int above_top = layout.rows[ri - 1].top;
            const int below_bottom = layout.rows[ri + 1].bottom;

            for (int bi = 0; bi < int(row.blocks.size()); ++bi) {
                if (row.blocks[bi].kind != BlockKind::Field) continue;
                BlockLayout& f = row.blocks[bi];
                const BlockSpec& fs = rs.blocks[bi];
                const BlockSpec& lgap = rs.blocks[bi - 1];
                const BlockSpec& rgap = rs.blocks[bi + 1];
                const int ln = bi >= 2 ? row.blocks[bi - 2].right : 0;
                const int rn = bi + 2 < int(row.blocks.size()) ? row.blocks[bi + 2].left
                                                               : ii.width;

                {  // left edge
                    const int lo = std::max(ln + lgap.w_min, f.right - fs.w_max);
                    const int hi = std::min(ln + lgap.w_max, f.right - fs.w_min);
                    const int fh = f.bottom - f.top;
                    changed |= move_edge(f.left, lo, hi, [&](int c) {
                        const int x0 = f.left;
                        if (c < x0) {
                            return std::pair<std::int64_t, std::int64_t>(
                                std::int64_t(x0 - c) * fh, strip_sum(c, f.top, x0 - c, fh));
                        }
                        return std::pair<std::int64_t, std::int64_t>(
                            -std::int64_t(c - x0) * fh, -strip_sum(x0, f.top, c - x0, fh));
                    });
                }
                {  // right edge
                    const int lo = std::max(rn - rgap.w_max, f.left + fs.w_min);
                    const int hi = std::min(rn - rgap.w_min, f.left + fs.w_max);
                    const int fh = f.bottom - f.top;
                    changed |= move_edge(f.right, lo, hi, [&](int c) {
                        const int x1 = f.right;
                        if (c > x1) {
                            return std::pair<std::int64_t, std::int64_t>(
                                std::int64_t(c - x1) * fh, strip_sum(x1, f.top, c - x1, fh));
                        }
                        return std::pair<std::int64_t, std::int64_t>(
                            -std::int64_t(x1 - c) * fh, -strip_sum(c, f.top, x1 - c, fh));
                    });
                }
                {  // top edge
                    const int lo = std::max(above_top + gap_above.h_min, f.bottom - rs.h_max);
                    const int hi = std::min(above_top + gap_above.h_max, f.bottom - rs.h_min);
                    const int fw = f.right - f.left;
                    changed |= move_edge(f.top, lo, hi, [&](int c) {
                        const int y0 = f.top;
                        if (c < y0) {
                            return std::pair<std::int64_t, std::int64_t>(
                                std::int64_t(y0 - c) * fw, strip_sum(f.left, c, fw, y0 - c));
                        }
                        return std::pair<std::int64_t, std::int64_t>(
                            -std::int64_t(c - y0) * fw, -strip_sum(f.left, y0, fw, c - y0));
                    });
                }
                {  // bottom edge
                    const int lo = std::max(below_bottom - gap_below.h_max, f.top + rs.h_min);
                    const int hi = std::min(below_bottom - gap_below.h_min, f.top + rs.h_max);
                    const int fw = f.right - f.left;
                    changed |= move_edge(f.bottom, lo, hi, [&](int c) {
                        const int y1 = f.bottom;
                        if (c > y1) {
                            return std::pair<std::int64_t, std::int64_t>(
                                std::int64_t(c - y1) * fw, strip_sum(f.left, y1, fw, c - y1));
                        }
                        return std::pair<std::int64_t, std::int64_t>(
                            -std::int64_t(y1 - c) * fw, -strip_sum(f.left, c, fw, y1 - c));
                    });
                }
            }
        }
        return changed;
    }
};

}  // namespace

RefineResult refine_coordinate_descent(const IntegralImage& ii, const VizLayout& layout,
                                       const VizTemplate& tpl, int max_iters) {
    if (layout.rows.size() != tpl.rows.size()) {
        throw Error("refine: layout does not match template");
    }
    RefineResult result;
    result.layout = layout;

    const ClassStats st = layout_class_stats(ii, layout);
    Refiner refiner{ii,
                    tpl,
                    result.layout,
                    std::int64_t(ii.width) * ii.height,
                    std::int64_t(ii.total()),
                    st.q1,
                    st.s1,
                    signed_dispersion(st),
                    result.v_trace};
    result.v_trace.push_back(refiner.v);

    for (int it = 1; it <= max_iters; ++it) {
        const bool changed = refiner.sweep();
        result.iterations = it;
        if (!changed) break;
    }
    result.layout.refined = refiner.moved_any;
    return result;
}

VizResult segment_viz(const GrayImage& img, const VizTemplate& tpl, const VizOptions& opts) {
    validate_template(tpl, img.width, img.height);
    const auto start = std::chrono::steady_clock::now();

    auto t0 = std::chrono::steady_clock::now();
    const GrayImage pre = preprocess_viz(img, opts.preprocess);
    VizResult result;
    result.timings.preprocess_ms = ms_since(t0);

    t0 = std::chrono::steady_clock::now();
    const IntegralImage ii = integral(pre);
    result.timings.integral_ms = ms_since(t0);

    t0 = std::chrono::steady_clock::now();
    const FixedSizes sizes = fix_sizes(tpl, img.width, img.height);
    SegmentFixedResult fixed = segment_viz_fixed(ii, tpl, sizes);
    result.timings.dsp_ms = ms_since(t0);

    result.layout = std::move(fixed.layout);
    if (opts.refine && opts.max_iters > 0) {
        t0 = std::chrono::steady_clock::now();
        RefineResult refined = refine_coordinate_descent(ii, result.layout, tpl, opts.max_iters);
        result.layout = std::move(refined.layout);
        result.iterations = refined.iterations;
        result.timings.refine_ms = ms_since(t0);
    }

    const ClassStats st = layout_class_stats(ii, result.layout);
    result.s1 = double(st.s1);
    result.v = signed_dispersion(st);
    result.timings.total_ms = ms_since(start);
    return result;
}

}  // namespace sqz
