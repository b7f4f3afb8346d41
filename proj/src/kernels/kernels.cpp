// Copyright 2026 The Squeezebox Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0

#include "sqz/kernels.hpp"

#include <atomic>

#include "sqz/common.hpp"

namespace sqz::kernels {

namespace {

constexpr Ops kScalarOps = {
    &scalar::vmin_u8, &scalar::vmax_u8, &scalar::sub_sat_u8,
    &scalar::invert_u8, &scalar::minmax_u8, &scalar::add_u64,
    "scalar",
};

#if SQZ_ARCH_X86
constexpr Ops kAvx2Ops = {
    &avx2::vmin_u8, &avx2::vmax_u8, &avx2::sub_sat_u8,
    &avx2::invert_u8, &avx2::minmax_u8, &avx2::add_u64,
    "avx2",
};
#endif

#if SQZ_ARCH_NEON
constexpr Ops kNeonOps = {
    &neon::vmin_u8, &neon::vmax_u8, &neon::sub_sat_u8,
    &neon::invert_u8, &neon::minmax_u8, &neon::add_u64,
    "neon",
};
#endif

const Ops* resolve_auto() {
#if SQZ_ARCH_NEON
    return &kNeonOps;
#elif SQZ_ARCH_X86
    if (cpu_has_avx2()) return &kAvx2Ops;
    return &kScalarOps;
#else
    return &kScalarOps;
#endif
}

std::atomic<const Ops*> g_active{nullptr};
std::atomic<Backend> g_backend{Backend::Auto};

}  // namespace

bool cpu_has_avx2() {
#if SQZ_ARCH_X86 && defined(__GNUC__)
    return __builtin_cpu_supports("avx2") != 0;
#else
    return false;
#endif
}

bool cpu_has_neon() {
#if SQZ_ARCH_NEON
    return true;
#else
    return false;
#endif
}

const Ops& active() {
    const Ops* ops = g_active.load(std::memory_order_acquire);
    if (!ops) {
        ops = resolve_auto();
        g_active.store(ops, std::memory_order_release);
    }
    return *ops;
}

void set_backend(Backend b) {
    switch (b) {
        case Backend::Auto:
            g_active.store(resolve_auto(), std::memory_order_release);
            break;
        case Backend::Scalar:
            g_active.store(&kScalarOps, std::memory_order_release);
            break;
        case Backend::Avx2:
#if SQZ_ARCH_X86
            if (cpu_has_avx2()) {
                g_active.store(&kAvx2Ops, std::memory_order_release);
                break;
            }
#endif
            throw Error("kernels: AVX2 backend not supported on this CPU");
        case Backend::Neon:
#if SQZ_ARCH_NEON
            g_active.store(&kNeonOps, std::memory_order_release);
            break;
#else
            throw Error("kernels: NEON backend not supported on this CPU");
#endif
    }
    g_backend.store(b, std::memory_order_release);
}

Backend active_backend() { return g_backend.load(std::memory_order_acquire); }

const char* backend_name(Backend b) {
    switch (b) {
        case Backend::Auto: return "auto";
        case Backend::Scalar: return "scalar";
        case Backend::Avx2: return "avx2";
        case Backend::Neon: return "neon";
    }
    return "?";
}

}  // namespace sqz::kernels
