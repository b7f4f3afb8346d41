// Copyright 2026 The Squeezebox Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cstddef>
#include <cstdint>

// Data-parallel byte/word kernels behind the imaging operations.
//
// Every kernel exists as a scalar reference implementation plus SIMD
// variants (AVX2 on x86-64, NEON on aarch64). The active variant is picked
// at runtime from CPU capabilities and can be overridden with set_backend();
// all variants are bit-exact equivalents of the scalar reference.

#if defined(__x86_64__) || defined(_M_X64) || defined(__i386__)
#define SQZ_ARCH_X86 1
#else
#define SQZ_ARCH_X86 0
#endif

#if defined(__aarch64__) && defined(__ARM_NEON)
#define SQZ_ARCH_NEON 1
#else
#define SQZ_ARCH_NEON 0
#endif

namespace sqz::kernels {

enum class Backend {
    Auto,    // resolve from CPU features
    Scalar,
    Avx2,
    Neon,
};

/// Dispatch table. All pointers are always valid.
struct Ops {
    // dst[i] = min(a[i], b[i])
    void (*vmin_u8)(const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* dst, std::size_t n);
    // dst[i] = max(a[i], b[i])
    void (*vmax_u8)(const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* dst, std::size_t n);
    // dst[i] = saturating a[i] - b[i] (clamped at 0)
    void (*sub_sat_u8)(const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* dst, std::size_t n);
    // dst[i] = 255 - src[i]
    void (*invert_u8)(const std::uint8_t* src, std::uint8_t* dst, std::size_t n);
    // *mn / *mx = min / max over src[0..n); requires n >= 1
    void (*minmax_u8)(const std::uint8_t* src, std::size_t n, std::uint8_t* mn, std::uint8_t* mx);
    // dst[i] = a[i] + b[i]
    void (*add_u64)(const std::uint64_t* a, const std::uint64_t* b, std::uint64_t* dst, std::size_t n);
    const char* name;
};

/// Currently active dispatch table.
const Ops& active();

/// Force a backend. Auto re-resolves from the CPU. Throws sqz::Error when the
/// requested backend is not supported on this machine.
void set_backend(Backend b);
Backend active_backend();
const char* backend_name(Backend b);

bool cpu_has_avx2();
bool cpu_has_neon();

namespace scalar {
void vmin_u8(const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* dst, std::size_t n);
void vmax_u8(const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* dst, std::size_t n);
void sub_sat_u8(const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* dst, std::size_t n);
void invert_u8(const std::uint8_t* src, std::uint8_t* dst, std::size_t n);
void minmax_u8(const std::uint8_t* src, std::size_t n, std::uint8_t* mn, std::uint8_t* mx);
void add_u64(const std::uint64_t* a, const std::uint64_t* b, std::uint64_t* dst, std::size_t n);
}  // namespace scalar

#if SQZ_ARCH_X86
namespace avx2 {
void vmin_u8(const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* dst, std::size_t n);
void vmax_u8(const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* dst, std::size_t n);
void sub_sat_u8(const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* dst, std::size_t n);
void invert_u8(const std::uint8_t* src, std::uint8_t* dst, std::size_t n);
void minmax_u8(const std::uint8_t* src, std::size_t n, std::uint8_t* mn, std::uint8_t* mx);
void add_u64(const std::uint64_t* a, const std::uint64_t* b, std::uint64_t* dst, std::size_t n);
}  // namespace avx2
#endif

#if SQZ_ARCH_NEON
namespace neon {
void vmin_u8(const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* dst, std::size_t n);
void vmax_u8(const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* dst, std::size_t n);
void sub_sat_u8(const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* dst, std::size_t n);
void invert_u8(const std::uint8_t* src, std::uint8_t* dst, std::size_t n);
void minmax_u8(const std::uint8_t* src, std::size_t n, std::uint8_t* mn, std::uint8_t* mx);
void add_u64(const std::uint64_t* a, const std::uint64_t* b, std::uint64_t* dst, std::size_t n);
}  // namespace neon
#endif

}  // namespace sqz::kernels
