// Copyright 2026 The Squeezebox Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <span>
#include <vector>

#include "sqz/common.hpp"

// Constrained sequence placement: put N parts at integer positions
// 0..W-1 minimizing the summed per-part placement costs subject to
// per-link interval constraints  t_min(i) <= l[i+1] - l[i] <= t_max(i).
//
// solve_dsp runs in O(NW) using sliding-window minima; solve_dsp_naive is
// the O(NW^2) direct-scan reference and solve_brute_force the enumeration
// oracle. All three share one deterministic tie-break: smallest last
// position first, then the smallest predecessor at every back-traverse step.

namespace sqz {

/// Per-part, per-position placement costs. Entries are finite values >= 0
/// or kInfCost for forbidden positions.
struct CostMatrix {
    int n_parts = 0;      // N >= 1
    int n_positions = 0;  // W >= 1
    std::vector<Cost> cost;  // row-major N x W

    CostMatrix() = default;
    CostMatrix(int n, int w, Cost fill = 0)
        : n_parts(n), n_positions(w), cost(std::size_t(n) * w, fill) {}

    Cost at(int part, int pos) const { return cost[std::size_t(part) * n_positions + pos]; }
    Cost& at(int part, int pos) { return cost[std::size_t(part) * n_positions + pos]; }
    const Cost* row(int part) const { return cost.data() + std::size_t(part) * n_positions; }
    Cost* row(int part) { return cost.data() + std::size_t(part) * n_positions; }
};

/// Interval distance thresholds for the N-1 links (signed, in positions).
struct DistanceBounds {
    std::vector<int> t_min;
    std::vector<int> t_max;

    int size() const { return int(t_min.size()); }
};

struct Solution {
    std::vector<int> locations;  // empty when infeasible
    Cost objective = kInfCost;

    bool feasible() const { return cost_is_finite(objective); }

    friend bool operator==(const Solution& a, const Solution& b) = default;
};

/// DP tables, exposed for inspection and tests. arg_table row i holds the
/// optimal position of part i given part i+1 at each position (a
/// predecessor table; the would-be row for part 0 has no predecessor and
/// is dropped).
struct DpTables {
    int n_parts = 0;
    int n_positions = 0;
    std::vector<std::int32_t> arg_table;  // (N-1) x W, kInvalidIndex where empty
    std::vector<Cost> cum_table;          // N x W

    std::int32_t arg(int link, int pos) const {
        return arg_table[std::size_t(link) * n_positions + pos];
    }
    Cost cum(int part, int pos) const {
        return cum_table[std::size_t(part) * n_positions + pos];
    }
};

struct DspResult {
    Solution solution;
    DpTables tables;
};

struct WindowMinResult {
    std::vector<Cost> mins;
    std::vector<std::int32_t> argmins;  // kInvalidIndex where the range is empty
};

/// For each j in [0, W): minimum of values over j' in [j-hi, j-lo] ∩ [0, W),
/// and the smallest j' attaining it. Empty ranges yield kInfCost /
/// kInvalidIndex. O(W) total, independent of the window width.
WindowMinResult sliding_window_min(std::span<const Cost> values, int lo, int hi);

/// O(NW) solver. Ties: smallest global-minimum position in the last row,
/// then leftmost range minima on back-traverse.
DspResult solve_dsp(const CostMatrix& costs, const DistanceBounds& bounds);

/// Same solver writing into `out`, reusing its buffer capacity; for callers
/// that solve many instances of one size.
void solve_dsp(const CostMatrix& costs, const DistanceBounds& bounds, DspResult& out);

/// O(NW^2) reference with identical contract and tie-breaking.
Solution solve_dsp_naive(const CostMatrix& costs, const DistanceBounds& bounds);
void solve_dsp_naive(const CostMatrix& costs, const DistanceBounds& bounds, DspResult& out);

/// Exhaustive enumeration oracle. Guarded: requires N <= 6 and W <= 40,
/// otherwise throws InstanceTooLargeError.
Solution solve_brute_force(const CostMatrix& costs, const DistanceBounds& bounds);

/// Objective-only solve with O(W) working memory (no tables, no decode).
Cost dsp_objective(const CostMatrix& costs, const DistanceBounds& bounds);

}  // namespace sqz
