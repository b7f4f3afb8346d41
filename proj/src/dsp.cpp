// Copyright 2026 The Squeezebox Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0

#include "sqz/dsp.hpp"

#include <algorithm>
#include <cstdint>

namespace sqz {

namespace {

void check_shapes(const CostMatrix& costs, const DistanceBounds& bounds) {
    if (costs.n_parts < 1 || costs.n_positions < 1) {
        throw Error("dsp: cost matrix must have N >= 1 parts and W >= 1 positions");
    }
    if (costs.cost.size() != std::size_t(costs.n_parts) * costs.n_positions) {
        throw Error("dsp: cost storage does not match N x W");
    }
    if (bounds.size() != costs.n_parts - 1 || bounds.t_max.size() != bounds.t_min.size()) {
        throw Error("dsp: bounds length must be N - 1");
    }
    for (int i = 0; i < bounds.size(); ++i) {
        if (bounds.t_min[i] > bounds.t_max[i]) {
            throw Error("dsp: t_min exceeds t_max at link " + std::to_string(i));
        }
    }
}

// Block prefix/suffix minima scratch for the van Herk/Gil-Werman pass.
struct WindowScratch {
    std::vector<Cost> pmin, smin;
    std::vector<std::int32_t> parg, sarg;

    void resize(int w) {
        pmin.resize(w);
        smin.resize(w);
        parg.resize(w);
        sarg.resize(w);
    }
};

// Window minima of `v` over [j-hi, j-lo] ∩ [0, W) for every j, leftmost
// argmin on ties. Blocks have the window length; every in-range window
// touches at most two adjacent blocks, clipped windows end on a block edge.
void window_min_into(const Cost* v, int w, int lo, int hi, Cost* mins, std::int32_t* args,
                     WindowScratch& ws) {
    const std::int64_t k = std::int64_t(hi) - lo + 1;
    ws.resize(w);

    for (std::int64_t bs = 0; bs < w; bs += k) {
        const std::int64_t be = std::min<std::int64_t>(bs + k, w);
        ws.pmin[bs] = v[bs];
        ws.parg[bs] = std::int32_t(bs);
        for (std::int64_t i = bs + 1; i < be; ++i) {
            if (v[i] < ws.pmin[i - 1]) {
                ws.pmin[i] = v[i];
                ws.parg[i] = std::int32_t(i);
            } else {
                ws.pmin[i] = ws.pmin[i - 1];
                ws.parg[i] = ws.parg[i - 1];
            }
        }
        ws.smin[be - 1] = v[be - 1];
        ws.sarg[be - 1] = std::int32_t(be - 1);
        for (std::int64_t i = be - 2; i >= bs; --i) {
            if (v[i] <= ws.smin[i + 1]) {
                ws.smin[i] = v[i];
                ws.sarg[i] = std::int32_t(i);
            } else {
                ws.smin[i] = ws.smin[i + 1];
                ws.sarg[i] = ws.sarg[i + 1];
            }
        }
    }

    for (int j = 0; j < w; ++j) {
        const std::int64_t s = std::int64_t(j) - hi;
        const std::int64_t e = std::int64_t(j) - lo;
        const std::int64_t s1 = std::max<std::int64_t>(s, 0);
        const std::int64_t e1 = std::min<std::int64_t>(e, w - 1);
        if (s1 > e1) {
            mins[j] = kInfCost;
            args[j] = kInvalidIndex;
            continue;
        }
        if (s1 / k == e1 / k) {
            // One block: a window starting mid-block always ends on the
            // block edge (right-clipped), one starting on the edge is
            // covered by the prefix array.
            if (s1 % k == 0) {
                mins[j] = ws.pmin[e1];
                args[j] = ws.parg[e1];
            } else {
                mins[j] = ws.smin[s1];
                args[j] = ws.sarg[s1];
            }
        } else if (ws.smin[s1] <= ws.pmin[e1]) {  // suffix side holds smaller indices
            mins[j] = ws.smin[s1];
            args[j] = ws.sarg[s1];
        } else {
            mins[j] = ws.pmin[e1];
            args[j] = ws.parg[e1];
        }
    }
}

// Direct per-position scan, leftmost argmin.
void window_min_naive_into(const Cost* v, int w, int lo, int hi, Cost* mins,
                           std::int32_t* args) {
    for (int j = 0; j < w; ++j) {
        const std::int64_t s = std::max<std::int64_t>(std::int64_t(j) - hi, 0);
        const std::int64_t e = std::min<std::int64_t>(std::int64_t(j) - lo, w - 1);
        Cost best = kInfCost;
        std::int32_t arg = kInvalidIndex;
        for (std::int64_t i = s; i <= e; ++i) {
            if (v[i] < best || arg == kInvalidIndex) {
                best = v[i];
                arg = std::int32_t(i);
            }
        }
        mins[j] = arg == kInvalidIndex ? kInfCost : best;
        args[j] = arg;
    }
}

template <typename WindowFn>
void solve_with(const CostMatrix& costs, const DistanceBounds& bounds, WindowFn window,
                DspResult& r) {
    check_shapes(costs, bounds);
    const int n = costs.n_parts;
    const int w = costs.n_positions;

    r.solution.locations.clear();
    r.solution.objective = kInfCost;
    r.tables.n_parts = n;
    r.tables.n_positions = w;
    r.tables.cum_table.resize(std::size_t(n) * w);
    r.tables.arg_table.resize(std::size_t(std::max(n - 1, 0)) * w);

    std::copy(costs.row(0), costs.row(0) + w, r.tables.cum_table.begin());

    std::vector<Cost> mins(w);
    for (int i = 0; i + 1 < n; ++i) {
        const Cost* prev = r.tables.cum_table.data() + std::size_t(i) * w;
        Cost* next = r.tables.cum_table.data() + std::size_t(i + 1) * w;
        std::int32_t* args = r.tables.arg_table.data() + std::size_t(i) * w;
        window(prev, w, bounds.t_min[i], bounds.t_max[i], mins.data(), args);
        const Cost* m = costs.row(i + 1);
        for (int j = 0; j < w; ++j) next[j] = mins[j] + m[j];
    }

    const Cost* last = r.tables.cum_table.data() + std::size_t(n - 1) * w;
    int best = 0;
    for (int j = 1; j < w; ++j) {
        if (last[j] < last[best]) best = j;
    }
    if (!cost_is_finite(last[best])) {
        return;  // infeasible: empty locations, objective stays +inf
    }

    r.solution.objective = last[best];
    r.solution.locations.assign(n, 0);
    r.solution.locations[n - 1] = best;
    for (int i = n - 2; i >= 0; --i) {
        best = r.tables.arg(i, best);
        r.solution.locations[i] = best;
    }
}

}  // namespace

WindowMinResult sliding_window_min(std::span<const Cost> values, int lo, int hi) {
    if (lo > hi) throw Error("sliding_window_min: lo > hi");
    WindowMinResult r;
    const int w = int(values.size());
    r.mins.resize(w);
    r.argmins.resize(w);
    if (w == 0) return r;
    WindowScratch ws;
    window_min_into(values.data(), w, lo, hi, r.mins.data(), r.argmins.data(), ws);
    return r;
}

void solve_dsp(const CostMatrix& costs, const DistanceBounds& bounds, DspResult& out) {
    WindowScratch ws;
    solve_with(costs, bounds,
               [&ws](const Cost* v, int w, int lo, int hi, Cost* mins, std::int32_t* args) {
                   window_min_into(v, w, lo, hi, mins, args, ws);
               },
               out);
}

DspResult solve_dsp(const CostMatrix& costs, const DistanceBounds& bounds) {
    DspResult r;
    solve_dsp(costs, bounds, r);
    return r;
}

void solve_dsp_naive(const CostMatrix& costs, const DistanceBounds& bounds, DspResult& out) {
    solve_with(costs, bounds, &window_min_naive_into, out);
}

Solution solve_dsp_naive(const CostMatrix& costs, const DistanceBounds& bounds) {
    DspResult r;
    solve_dsp_naive(costs, bounds, r);
    return std::move(r.solution);
}

Cost dsp_objective(const CostMatrix& costs, const DistanceBounds& bounds) {
    check_shapes(costs, bounds);
    const int n = costs.n_parts;
    const int w = costs.n_positions;

    WindowScratch ws;
    std::vector<Cost> cur(costs.row(0), costs.row(0) + w);
    std::vector<Cost> mins(w);
    std::vector<std::int32_t> args(w);
    for (int i = 0; i + 1 < n; ++i) {
        window_min_into(cur.data(), w, bounds.t_min[i], bounds.t_max[i], mins.data(), args.data(),
                        ws);
        const Cost* m = costs.row(i + 1);
        for (int j = 0; j < w; ++j) cur[j] = mins[j] + m[j];
    }
    return *std::min_element(cur.begin(), cur.end());
}

Solution solve_brute_force(const CostMatrix& costs, const DistanceBounds& bounds) {
    check_shapes(costs, bounds);
    const int n = costs.n_parts;
    const int w = costs.n_positions;
    if (n > 6 || w > 40) {
        throw InstanceTooLargeError("solve_brute_force: guard is N <= 6 and W <= 40");
    }

    Solution best;
    std::vector<int> cur(n);

    // Smaller objective wins; on ties the tuple that is lexicographically
    // smaller read from the last part backwards (matching the DP decode).
    auto better = [&](Cost obj) {
        if (obj < best.objective) return true;
        if (obj > best.objective) return false;
        for (int i = n - 1; i >= 0; --i) {
            if (cur[i] != best.locations[i]) return cur[i] < best.locations[i];
        }
        return false;
    };

    auto dfs = [&](auto&& self, int part, Cost acc) -> void {
        if (acc > best.objective) return;  // ties must continue for the tie-break
        if (part == n) {
            if (best.locations.empty() || better(acc)) {
                best.objective = acc;
                best.locations = cur;
            }
            return;
        }
        int lo = 0, hi = w - 1;
        if (part > 0) {
            const std::int64_t p = cur[part - 1];
            lo = int(std::max<std::int64_t>(p + bounds.t_min[part - 1], 0));
            hi = int(std::min<std::int64_t>(p + bounds.t_max[part - 1], w - 1));
        }
        for (int j = lo; j <= hi; ++j) {
            const Cost c = costs.at(part, j);
            if (!cost_is_finite(c)) continue;
            cur[part] = j;
            self(self, part + 1, acc + c);
        }
    };
    dfs(dfs, 0, 0);
    return best;
}

}  // namespace sqz
