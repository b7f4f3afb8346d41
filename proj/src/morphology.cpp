// Copyright 2026 The Squeezebox Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0

#include <algorithm>
#include <vector>

#include "sqz/image.hpp"
#include "sqz/kernels.hpp"

// Separable running min/max filters with edge replication. For min/max a
// replicated border equals clipping the window to the image, so both passes
// work on clipped windows directly. Each pass uses block prefix/suffix
// extrema (van Herk/Gil-Werman): any in-range window touches at most two
// adjacent blocks and clipped windows always end on a block edge.

namespace sqz {

namespace {

template <bool kMin>
inline std::uint8_t extreme(std::uint8_t a, std::uint8_t b) {
    return kMin ? std::min(a, b) : std::max(a, b);
}

// One row, window radius r (window length k = 2r+1).
template <bool kMin>
void hpass_row(const std::uint8_t* src, int w, int r, std::uint8_t* dst, std::uint8_t* pre,
               std::uint8_t* suf) {
    const int k = 2 * r + 1;
    for (int bs = 0; bs < w; bs += k) {
        const int be = std::min(bs + k, w);
        pre[bs] = src[bs];
        for (int i = bs + 1; i < be; ++i) pre[i] = extreme<kMin>(pre[i - 1], src[i]);
        suf[be - 1] = src[be - 1];
        for (int i = be - 2; i >= bs; --i) suf[i] = extreme<kMin>(src[i], suf[i + 1]);
    }
    for (int x = 0; x < w; ++x) {
        const int s = std::max(x - r, 0);
        const int e = std::min(x + r, w - 1);
        if (s / k == e / k) {
            dst[x] = (s % k == 0) ? pre[e] : suf[s];
        } else {
            dst[x] = extreme<kMin>(suf[s], pre[e]);
        }
    }
}

template <bool kMin>
GrayImage hpass(const GrayImage& img, int r) {
    GrayImage out(img.width, img.height);
    std::vector<std::uint8_t> pre(img.width), suf(img.width);
    for (int y = 0; y < img.height; ++y) {
        hpass_row<kMin>(img.row(y), img.width, r, out.row(y), pre.data(), suf.data());
    }
    return out;
}

// Vertical pass: the same block scheme at row granularity, with whole rows
// combined through the elementwise SIMD kernels.
template <bool kMin>
GrayImage vpass(const GrayImage& img, int r) {
    const int w = img.width;
    const int h = img.height;
    const int k = 2 * r + 1;
    const auto& ops = kernels::active();
    auto combine = kMin ? ops.vmin_u8 : ops.vmax_u8;

    GrayImage pre(w, h), suf(w, h), out(w, h);
    for (int bs = 0; bs < h; bs += k) {
        const int be = std::min(bs + k, h);
        std::copy(img.row(bs), img.row(bs) + w, pre.row(bs));
        for (int y = bs + 1; y < be; ++y) combine(pre.row(y - 1), img.row(y), pre.row(y), w);
        std::copy(img.row(be - 1), img.row(be - 1) + w, suf.row(be - 1));
        for (int y = be - 2; y >= bs; --y) combine(img.row(y), suf.row(y + 1), suf.row(y), w);
    }
    for (int y = 0; y < h; ++y) {
        const int s = std::max(y - r, 0);
        const int e = std::min(y + r, h - 1);
        if (s / k == e / k) {
            const std::uint8_t* src = (s % k == 0) ? pre.row(e) : suf.row(s);
            std::copy(src, src + w, out.row(y));
        } else {
            combine(suf.row(s), pre.row(e), out.row(y), w);
        }
    }
    return out;
}

template <bool kMin>
GrayImage rect_filter(const GrayImage& img, int se_w, int se_h) {
    if (se_w < 1 || se_h < 1 || se_w % 2 == 0 || se_h % 2 == 0) {
        throw Error("morphology: structuring element sides must be odd positive");
    }
    if (img.size() == 0) return img;
    GrayImage cur = img;
    if (se_w > 1) cur = hpass<kMin>(cur, se_w / 2);
    if (se_h > 1) cur = vpass<kMin>(cur, se_h / 2);
    return cur;
}

}  // namespace

GrayImage erode(const GrayImage& img, int se_w, int se_h) {
    return rect_filter<true>(img, se_w, se_h);
}

GrayImage dilate(const GrayImage& img, int se_w, int se_h) {
    return rect_filter<false>(img, se_w, se_h);
}

GrayImage closing(const GrayImage& img, int se_w, int se_h) {
    return erode(dilate(img, se_w, se_h), se_w, se_h);
}

GrayImage opening(const GrayImage& img, int se_w, int se_h) {
    return dilate(erode(img, se_w, se_h), se_w, se_h);
}

GrayImage preprocess_viz(const GrayImage& img, const PreprocessParams& p) {
    const GrayImage closed = closing(img, p.close1_w, p.close1_h);
    const GrayImage detail = subtract(closed, img);
    const GrayImage opened = opening(invert(detail), p.open_w, p.open_h);
    const GrayImage merged = closing(opened, p.close2_w, p.close2_h);
    return autocontrast(merged);
}

}  // namespace sqz
