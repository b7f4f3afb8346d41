// Copyright 2026 The Squeezebox Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0

#include "sqz/kernels.hpp"

#if SQZ_ARCH_NEON

#include <arm_neon.h>

#include <algorithm>

namespace sqz::kernels::neon {

void vmin_u8(const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* dst, std::size_t n) {
    std::size_t i = 0;
    for (; i + 16 <= n; i += 16) {
        vst1q_u8(dst + i, vminq_u8(vld1q_u8(a + i), vld1q_u8(b + i)));
    }
    for (; i < n; ++i) dst[i] = std::min(a[i], b[i]);
}

void vmax_u8(const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* dst, std::size_t n) {
    std::size_t i = 0;
    for (; i + 16 <= n; i += 16) {
        vst1q_u8(dst + i, vmaxq_u8(vld1q_u8(a + i), vld1q_u8(b + i)));
    }
    for (; i < n; ++i) dst[i] = std::max(a[i], b[i]);
}

void sub_sat_u8(const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* dst, std::size_t n) {
    std::size_t i = 0;
    for (; i + 16 <= n; i += 16) {
        vst1q_u8(dst + i, vqsubq_u8(vld1q_u8(a + i), vld1q_u8(b + i)));
    }
    for (; i < n; ++i) dst[i] = std::uint8_t(a[i] > b[i] ? a[i] - b[i] : 0);
}

void invert_u8(const std::uint8_t* src, std::uint8_t* dst, std::size_t n) {
    std::size_t i = 0;
    for (; i + 16 <= n; i += 16) {
        vst1q_u8(dst + i, vmvnq_u8(vld1q_u8(src + i)));
    }
    for (; i < n; ++i) dst[i] = std::uint8_t(255 - src[i]);
}

void minmax_u8(const std::uint8_t* src, std::size_t n, std::uint8_t* mn, std::uint8_t* mx) {
    std::uint8_t lo = src[0];
    std::uint8_t hi = src[0];
    std::size_t i = 0;
    if (n >= 16) {
        uint8x16_t vlo = vld1q_u8(src);
        uint8x16_t vhi = vlo;
        for (i = 16; i + 16 <= n; i += 16) {
            uint8x16_t v = vld1q_u8(src + i);
            vlo = vminq_u8(vlo, v);
            vhi = vmaxq_u8(vhi, v);
        }
        lo = std::min(lo, vminvq_u8(vlo));
        hi = std::max(hi, vmaxvq_u8(vhi));
    }
    for (; i < n; ++i) {
        lo = std::min(lo, src[i]);
        hi = std::max(hi, src[i]);
    }
    *mn = lo;
    *mx = hi;
}

void add_u64(const std::uint64_t* a, const std::uint64_t* b, std::uint64_t* dst, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        vst1q_u64(dst + i, vaddq_u64(vld1q_u64(a + i), vld1q_u64(b + i)));
    }
    for (; i < n; ++i) dst[i] = a[i] + b[i];
}

}  // namespace sqz::kernels::neon

#endif  // SQZ_ARCH_NEON
