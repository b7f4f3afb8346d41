// Copyright 2026 The Squeezebox Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0

#include "sqz/image.hpp"

#include <cmath>
#include <cstring>
#include <fstream>
#include <string>

#include "sqz/kernels.hpp"

namespace sqz {

// --- PGM ----------------------------------------------------------------------

namespace {

struct ByteCursor {
    std::span<const std::uint8_t> data;
    std::size_t pos = 0;

    bool eof() const { return pos >= data.size(); }
    std::uint8_t peek() const { return data[pos]; }

    // Skips whitespace and '#' comments (to end of line).
    void skip_separators() {
        while (!eof()) {
            const std::uint8_t c = peek();
            if (c == '#') {
                while (!eof() && peek() != '\n') ++pos;
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                ++pos;
            } else {
                break;
            }
        }
    }

    int read_uint(const char* field) {
        skip_separators();
        if (eof() || peek() < '0' || peek() > '9') {
            throw FormatError(std::string("pgm: malformed header, expected ") + field);
        }
        long v = 0;
        while (!eof() && peek() >= '0' && peek() <= '9') {
            v = v * 10 + (peek() - '0');
            if (v > 1 << 30) throw FormatError(std::string("pgm: ") + field + " out of range");
            ++pos;
        }
        return int(v);
    }
};

}  // namespace

GrayImage load_pgm(std::span<const std::uint8_t> bytes) {
    ByteCursor c{bytes};
    if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != '5') {
        throw FormatError("pgm: malformed header, expected magic \"P5\"");
    }
    c.pos = 2;
    const int w = c.read_uint("width");
    const int h = c.read_uint("height");
    const int maxval = c.read_uint("maxval");
    if (w < 1 || h < 1) throw FormatError("pgm: malformed header, zero dimensions");
    if (maxval != 255) {
        throw FormatError("pgm: unsupported maxval " + std::to_string(maxval) + ", expected 255");
    }
    if (c.eof()) throw FormatError("pgm: truncated data, missing raster");
    const std::uint8_t sep = c.peek();
    if (sep != '\n' && sep != ' ' && sep != '\t' && sep != '\r') {
        throw FormatError("pgm: malformed header, expected whitespace before raster");
    }
    ++c.pos;  // exactly one whitespace byte separates header and raster
    const std::size_t need = std::size_t(w) * h;
    if (bytes.size() - c.pos < need) throw FormatError("pgm: truncated data");
    GrayImage img(w, h);
    std::memcpy(img.pixels.data(), bytes.data() + c.pos, need);
    return img;
}

std::vector<std::uint8_t> save_pgm(const GrayImage& img) {
    const std::string header =
        "P5\n" + std::to_string(img.width) + " " + std::to_string(img.height) + "\n255\n";
    std::vector<std::uint8_t> out(header.begin(), header.end());
    out.insert(out.end(), img.pixels.begin(), img.pixels.end());
    return out;
}

GrayImage load_pgm_file(const std::filesystem::path& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw Error("cannot open " + path.string());
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(f)),
                                    std::istreambuf_iterator<char>());
    return load_pgm(bytes);
}

void save_pgm_file(const GrayImage& img, const std::filesystem::path& path) {
    const auto bytes = save_pgm(img);
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error("cannot open " + path.string() + " for writing");
    f.write(reinterpret_cast<const char*>(bytes.data()), std::streamsize(bytes.size()));
    if (!f) throw Error("short write to " + path.string());
}

// --- Integral image -------------------------------------------------------------

IntegralImage integral(const GrayImage& img) {
    IntegralImage ii;
    ii.width = img.width;
    ii.height = img.height;
    const std::size_t stride = std::size_t(img.width) + 1;
    ii.sums.assign(stride * (img.height + 1), 0);
    const auto& ops = kernels::active();
    for (int y = 0; y < img.height; ++y) {
        const std::uint8_t* src = img.row(y);
        const std::uint64_t* prev = ii.sums.data() + std::size_t(y) * stride;
        std::uint64_t* dst = ii.sums.data() + std::size_t(y + 1) * stride;
        std::uint64_t run = 0;
        dst[0] = 0;
        for (int x = 0; x < img.width; ++x) {
            run += src[x];
            dst[x + 1] = run;
        }
        ops.add_u64(dst, prev, dst, stride);
    }
    return ii;
}

std::uint64_t window_sum(const IntegralImage& ii, int x, int y, int w, int h) {
    if (w < 0 || h < 0 || x < 0 || y < 0 || x + w > ii.width || y + h > ii.height) {
        throw Error("window_sum: window out of bounds");
    }
    if (w == 0 || h == 0) return 0;
    return ii.window_sum_unchecked(x, y, w, h);
}

// --- Pixel ops -------------------------------------------------------------------

GrayImage subtract(const GrayImage& a, const GrayImage& b) {
    if (a.width != b.width || a.height != b.height) {
        throw Error("subtract: dimension mismatch");
    }
    GrayImage out(a.width, a.height);
    kernels::active().sub_sat_u8(a.pixels.data(), b.pixels.data(), out.pixels.data(), a.size());
    return out;
}

GrayImage invert(const GrayImage& img) {
    GrayImage out(img.width, img.height);
    kernels::active().invert_u8(img.pixels.data(), out.pixels.data(), img.size());
    return out;
}

GrayImage autocontrast(const GrayImage& img) {
    if (img.size() == 0) return img;
    std::uint8_t mn = 0, mx = 0;
    kernels::active().minmax_u8(img.pixels.data(), img.size(), &mn, &mx);
    if (mn == mx) return img;
    const int d = mx - mn;
    std::uint8_t lut[256];
    for (int p = mn; p <= mx; ++p) {
        lut[p] = std::uint8_t((255 * (p - mn) + d / 2) / d);
    }
    GrayImage out(img.width, img.height);
    for (std::size_t i = 0; i < img.size(); ++i) out.pixels[i] = lut[img.pixels[i]];
    return out;
}

// --- Class statistics ---------------------------------------------------------------

double signed_dispersion(const ClassStats& st) {
    if (st.q0 == 0 || st.q1 == 0) return 0.0;
    const double q = double(st.q0) + double(st.q1);
    const double w0 = double(st.q0) / q;
    const double w1 = double(st.q1) / q;
    const double mu0 = double(st.s0) / double(st.q0);
    const double mu1 = double(st.s1) / double(st.q1);
    const double diff = mu0 - mu1;
    return w0 * w1 * diff * std::fabs(diff);
}

}  // namespace sqz
