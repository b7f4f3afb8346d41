// Copyright 2026 The Squeezebox Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "sqz/dsp.hpp"

namespace sqz {

struct BenchInstance {
    CostMatrix costs;
    DistanceBounds bounds;
};

/// Random instance: integer costs in [0, 100], symmetric link window of the
/// given width. Deterministic per seed.
BenchInstance make_bench_instance(int n, int w, int window, std::uint64_t seed);

struct BenchStats {
    double mean_ms = 0;
    double stddev_ms = 0;
    double min_ms = 0;  // least-contaminated sample
};

struct BenchResult {
    int n = 0;
    int w = 0;
    int window = 0;
    BenchStats dsp;
    BenchStats naive;     // zeros when naive timing was skipped
    double speedup = 0;   // naive mean / dsp mean, 0 when skipped
};

/// Times solve_dsp (and optionally solve_dsp_naive) on one instance size.
/// Each sample repeats the solve until `min_sample_ms` elapsed and divides.
BenchResult bench_size(int n, int w, int window, int runs, double min_sample_ms,
                       bool with_naive);

}  // namespace sqz
