// Copyright 2026 The Squeezebox Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "sqz/common.hpp"

namespace sqz {

/// 8-bit grayscale raster, row-major.
struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;

    GrayImage() = default;
    GrayImage(int w, int h, std::uint8_t fill = 0)
        : width(w), height(h), pixels(std::size_t(w) * h, fill) {}

    std::uint8_t at(int x, int y) const { return pixels[std::size_t(y) * width + x]; }
    std::uint8_t& at(int x, int y) { return pixels[std::size_t(y) * width + x]; }
    const std::uint8_t* row(int y) const { return pixels.data() + std::size_t(y) * width; }
    std::uint8_t* row(int y) { return pixels.data() + std::size_t(y) * width; }
    std::size_t size() const { return pixels.size(); }

    friend bool operator==(const GrayImage& a, const GrayImage& b) = default;
};

// --- PGM (binary "P5", maxval 255) ------------------------------------------

GrayImage load_pgm(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> save_pgm(const GrayImage& img);
GrayImage load_pgm_file(const std::filesystem::path& path);
void save_pgm_file(const GrayImage& img, const std::filesystem::path& path);

// --- Summed-area table -------------------------------------------------------

/// (H+1) x (W+1) cumulative sums; sums(y, x) is the total over [0,x) x [0,y).
/// Exact 64-bit integers, no overflow for any 255-valued image of sane size.
struct IntegralImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint64_t> sums;  // (height+1) x (width+1)

    std::uint64_t sum_at(int x, int y) const {
        return sums[std::size_t(y) * (width + 1) + x];
    }
    /// Total brightness over [x, x+w) x [y, y+h); O(1). No bounds check.
    std::uint64_t window_sum_unchecked(int x, int y, int w, int h) const {
        const std::size_t stride = std::size_t(width) + 1;
        const std::uint64_t* top = sums.data() + std::size_t(y) * stride;
        const std::uint64_t* bot = sums.data() + std::size_t(y + h) * stride;
        return bot[x + w] - bot[x] - top[x + w] + top[x];
    }
    std::uint64_t total() const { return window_sum_unchecked(0, 0, width, height); }
};

IntegralImage integral(const GrayImage& img);

/// Checked window sum; throws sqz::Error when the window leaves the image.
std::uint64_t window_sum(const IntegralImage& ii, int x, int y, int w, int h);

// --- Pixel ops ----------------------------------------------------------------

/// clamp(a - b, 0, 255) per pixel; dimensions must match.
GrayImage subtract(const GrayImage& a, const GrayImage& b);
/// 255 - p per pixel.
GrayImage invert(const GrayImage& img);
/// Linear min-max stretch to [0, 255]; identity when the image is constant.
GrayImage autocontrast(const GrayImage& img);

// --- Grayscale morphology (rectangular structuring element) -------------------

/// Min / max filter over a centered se_w x se_h window, edge replication.
/// Separable, O(1) amortized per pixel. Sizes must be odd and positive.
GrayImage erode(const GrayImage& img, int se_w, int se_h);
GrayImage dilate(const GrayImage& img, int se_w, int se_h);
GrayImage closing(const GrayImage& img, int se_w, int se_h);  // erode(dilate(img))
GrayImage opening(const GrayImage& img, int se_w, int se_h);  // dilate(erode(img))

// --- VIZ preprocessing chain ---------------------------------------------------

struct PreprocessParams {
    int close1_w = 11, close1_h = 11;  // first closing, square
    int open_w = 31, open_h = 1;       // opening, horizontal
    int close2_w = 1, close2_h = 7;    // second closing, vertical
};

/// Contrast-enhancing chain for document text zones. Output has dark text on
/// a bright background; downstream code treats low brightness as text.
GrayImage preprocess_viz(const GrayImage& img, const PreprocessParams& params = {});

// --- Two-class brightness statistics -------------------------------------------

/// Pixel counts and total brightness of class 0 (background/gaps) and
/// class 1 (fields).
struct ClassStats {
    std::int64_t q0 = 0;
    std::int64_t q1 = 0;
    std::int64_t s0 = 0;
    std::int64_t s1 = 0;
};

/// Between-class dispersion multiplied by the sign of (mu0 - mu1):
/// w0*w1*(mu0-mu1)*|mu0-mu1|. Zero when either class is empty.
double signed_dispersion(const ClassStats& stats);

}  // namespace sqz
