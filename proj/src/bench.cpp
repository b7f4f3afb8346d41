// Copyright 2026 The Squeezebox Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0

#include "sqz/bench.hpp"

#include <chrono>
#include <cmath>
#include <random>

#include "sqz/synth.hpp"

namespace sqz {

namespace {

using Clock = std::chrono::steady_clock;

template <typename Fn>
BenchStats time_fn(Fn&& fn, int runs, double min_sample_ms) {
    // Calibrate the repeat count so one sample is long enough to time.
    int reps = 1;
    for (;;) {
        const auto t0 = Clock::now();
        for (int i = 0; i < reps; ++i) fn();
        const double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
        if (ms >= min_sample_ms || reps >= 1 << 20) break;
        reps *= 2;
    }
    std::vector<double> samples(runs);
    for (int r = 0; r < runs; ++r) {
        const auto t0 = Clock::now();
        for (int i = 0; i < reps; ++i) fn();
        samples[r] =
            std::chrono::duration<double, std::milli>(Clock::now() - t0).count() / reps;
    }
    BenchStats st;
    st.min_ms = samples[0];
    for (double s : samples) {
        st.mean_ms += s;
        st.min_ms = std::min(st.min_ms, s);
    }
    st.mean_ms /= runs;
    for (double s : samples) st.stddev_ms += (s - st.mean_ms) * (s - st.mean_ms);
    st.stddev_ms = std::sqrt(st.stddev_ms / runs);
    return st;
}

}  // namespace

BenchInstance make_bench_instance(int n, int w, int window, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    BenchInstance inst;
    inst.costs = CostMatrix(n, w);
    for (Cost& c : inst.costs.cost) c = Cost(uniform_int(rng, 0, 100));
    const int half = std::max(window / 2, 0);
    for (int i = 0; i + 1 < n; ++i) {
        inst.bounds.t_min.push_back(-half);
        inst.bounds.t_max.push_back(std::max(window - 1 - half, -half));
    }
    return inst;
}

BenchResult bench_size(int n, int w, int window, int runs, double min_sample_ms,
                       bool with_naive) {
    const BenchInstance inst = make_bench_instance(n, w, window, 0x5eedULL + w);
    BenchResult r;
    r.n = n;
    r.w = w;
    r.window = window;

    volatile double sink = 0;  // keep the solves observable
    DspResult reuse;
    r.dsp = time_fn([&] {
        solve_dsp(inst.costs, inst.bounds, reuse);
        sink = reuse.solution.objective;
    }, runs, min_sample_ms);
    if (with_naive) {
        r.naive = time_fn([&] {
            solve_dsp_naive(inst.costs, inst.bounds, reuse);
            sink = reuse.solution.objective;
        }, runs, min_sample_ms);
        if (r.dsp.mean_ms > 0) r.speedup = r.naive.mean_ms / r.dsp.mean_ms;
    }
    (void)sink;
    return r;
}

}  // namespace sqz
