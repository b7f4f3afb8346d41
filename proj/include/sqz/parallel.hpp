// Copyright 2026 The Squeezebox Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cstdint>
#include <functional>

namespace sqz {

/// Worker count used by parallel_for_chunks. 0 selects the hardware
/// concurrency; 1 (the default) runs everything on the calling thread.
/// Results are identical at any setting.
void set_thread_count(int n);
int thread_count();

/// Splits [0, n) into contiguous chunks and runs fn(begin, end) on each,
/// possibly on worker threads. fn must only write to per-index slots.
void parallel_for_chunks(std::int64_t n, const std::function<void(std::int64_t, std::int64_t)>& fn);

}  // namespace sqz
