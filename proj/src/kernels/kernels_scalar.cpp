// Copyright 2026 The Squeezebox Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0

#include "sqz/kernels.hpp"

#include <algorithm>

// Reference kernels. The SIMD variants must match these bit for bit.

namespace sqz::kernels::scalar {

void vmin_u8(const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* dst, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = std::min(a[i], b[i]);
}

void vmax_u8(const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* dst, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = std::max(a[i], b[i]);
}

void sub_sat_u8(const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* dst, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = std::uint8_t(a[i] > b[i] ? a[i] - b[i] : 0);
}

void invert_u8(const std::uint8_t* src, std::uint8_t* dst, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = std::uint8_t(255 - src[i]);
}

void minmax_u8(const std::uint8_t* src, std::size_t n, std::uint8_t* mn, std::uint8_t* mx) {
    std::uint8_t lo = src[0];
    std::uint8_t hi = src[0];
    for (std::size_t i = 1; i < n; ++i) {
        lo = std::min(lo, src[i]);
        hi = std::max(hi, src[i]);
    }
    *mn = lo;
    *mx = hi;
}

void add_u64(const std::uint64_t* a, const std::uint64_t* b, std::uint64_t* dst, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] + b[i];
}

}  // namespace sqz::kernels::scalar
