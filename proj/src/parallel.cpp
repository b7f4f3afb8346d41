// Copyright 2026 The Squeezebox Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0

#include "sqz/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

namespace sqz {

namespace {
std::atomic<int> g_threads{1};
}

void set_thread_count(int n) { g_threads.store(n < 0 ? 1 : n); }

int thread_count() {
    int n = g_threads.load();
    if (n == 0) {
        unsigned hw = std::thread::hardware_concurrency();
        n = hw == 0 ? 1 : int(hw);
    }
    return n;
}

void parallel_for_chunks(std::int64_t n, const std::function<void(std::int64_t, std::int64_t)>& fn) {
    if (n <= 0) return;
    const int workers = std::min<std::int64_t>(thread_count(), n);
    if (workers <= 1) {
        fn(0, n);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    const std::int64_t chunk = (n + workers - 1) / workers;
    for (int t = 1; t < workers; ++t) {
        const std::int64_t b = t * chunk;
        const std::int64_t e = std::min<std::int64_t>(b + chunk, n);
        if (b >= e) break;
        pool.emplace_back([&fn, b, e] { fn(b, e); });
    }
    fn(0, std::min<std::int64_t>(chunk, n));
    for (auto& th : pool) th.join();
}

}  // namespace sqz
