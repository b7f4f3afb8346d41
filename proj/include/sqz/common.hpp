// Copyright 2026 The Squeezebox Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace sqz {

/// Extended-real placement cost. Infinity marks forbidden positions and is
/// absorbing under addition; integer-valued costs up to 2^53 stay exact.
using Cost = double;

inline constexpr Cost kInfCost = std::numeric_limits<Cost>::infinity();
inline constexpr int kInvalidIndex = -1;

inline bool cost_is_finite(Cost c) { return c < kInfCost; }

/// Base error for all library failures.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input data (file formats, JSON schemas).
class FormatError : public Error {
public:
    explicit FormatError(const std::string& what) : Error(what) {}
};

/// No placement satisfies the constraints.
class InfeasibleError : public Error {
public:
    explicit InfeasibleError(const std::string& what) : Error(what) {}
};

/// Exhaustive enumeration refused (guard exceeded).
class InstanceTooLargeError : public Error {
public:
    explicit InstanceTooLargeError(const std::string& what) : Error(what) {}
};

/// Axis-aligned rectangle, half-open: [x, x+w) x [y, y+h).
struct Rect {
    int x = 0;
    int y = 0;
    int w = 0;
    int h = 0;

    std::int64_t area() const { return std::int64_t(w) * h; }
    bool empty() const { return w <= 0 || h <= 0; }
    int right() const { return x + w; }
    int bottom() const { return y + h; }

    friend bool operator==(const Rect& a, const Rect& b) = default;
};

}  // namespace sqz
