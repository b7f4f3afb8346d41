// Copyright 2026 The Squeezebox Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0

// This translation unit is compiled with -mavx2. Callers must check
// cpu_has_avx2() before routing through these entry points.

#include "sqz/kernels.hpp"

#if SQZ_ARCH_X86

#include <immintrin.h>

#include <algorithm>

namespace sqz::kernels::avx2 {

namespace {
constexpr std::size_t kBytes = 32;  // one __m256i of u8
}

void vmin_u8(const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* dst, std::size_t n) {
    std::size_t i = 0;
    for (; i + kBytes <= n; i += kBytes) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_min_epu8(va, vb));
    }
    for (; i < n; ++i) dst[i] = std::min(a[i], b[i]);
}

void vmax_u8(const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* dst, std::size_t n) {
    std::size_t i = 0;
    for (; i + kBytes <= n; i += kBytes) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_max_epu8(va, vb));
    }
    for (; i < n; ++i) dst[i] = std::max(a[i], b[i]);
}

void sub_sat_u8(const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* dst, std::size_t n) {
    std::size_t i = 0;
    for (; i + kBytes <= n; i += kBytes) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_subs_epu8(va, vb));
    }
    for (; i < n; ++i) dst[i] = std::uint8_t(a[i] > b[i] ? a[i] - b[i] : 0);
}

void invert_u8(const std::uint8_t* src, std::uint8_t* dst, std::size_t n) {
    const __m256i ones = _mm256_set1_epi8(-1);
    std::size_t i = 0;
    for (; i + kBytes <= n; i += kBytes) {
        __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_xor_si256(v, ones));
    }
    for (; i < n; ++i) dst[i] = std::uint8_t(255 - src[i]);
}

void minmax_u8(const std::uint8_t* src, std::size_t n, std::uint8_t* mn, std::uint8_t* mx) {
    std::uint8_t lo = src[0];
    std::uint8_t hi = src[0];
    std::size_t i = 0;
    if (n >= kBytes) {
        __m256i vlo = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src));
        __m256i vhi = vlo;
        for (i = kBytes; i + kBytes <= n; i += kBytes) {
            __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
            vlo = _mm256_min_epu8(vlo, v);
            vhi = _mm256_max_epu8(vhi, v);
        }
        alignas(32) std::uint8_t tmp_lo[kBytes];
        alignas(32) std::uint8_t tmp_hi[kBytes];
        _mm256_store_si256(reinterpret_cast<__m256i*>(tmp_lo), vlo);
        _mm256_store_si256(reinterpret_cast<__m256i*>(tmp_hi), vhi);
        for (std::size_t j = 0; j < kBytes; ++j) {
            lo = std::min(lo, tmp_lo[j]);
            hi = std::max(hi, tmp_hi[j]);
        }
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
    for (; i + 4 <= n; i += 4) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_add_epi64(va, vb));
    }
    for (; i < n; ++i) dst[i] = a[i] + b[i];
}

}  // namespace sqz::kernels::avx2

#endif  // SQZ_ARCH_X86
