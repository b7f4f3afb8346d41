// Copyright 2026 The Squeezebox Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0

#include "sqz/io.hpp"

#include <cmath>
#include <fstream>

namespace sqz {

namespace {

const Json& require(const Json& j, const char* key, const char* ctx) {
    const auto it = j.find(key);
    if (it == j.end()) {
        throw FormatError(std::string(ctx) + ": missing field \"" + key + "\"");
    }
    return *it;
}

int require_int(const Json& j, const char* key, const char* ctx) {
    const Json& v = require(j, key, ctx);
    if (!v.is_number_integer()) {
        throw FormatError(std::string(ctx) + ": field \"" + key + "\" must be an integer");
    }
    return v.get<int>();
}

std::pair<int, int> parse_range(const Json& v, const std::string& field) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() ||
        !v[1].is_number_integer()) {
        throw FormatError("field \"" + field + "\" must be [min, max]");
    }
    return {v[0].get<int>(), v[1].get<int>()};
}

Cost parse_cost(const Json& v, const std::string& field) {
    if (v.is_string()) {
        if (v.get<std::string>() == "inf") return kInfCost;
        throw FormatError("field \"" + field + "\": only \"inf\" is accepted as a string");
    }
    if (!v.is_number()) {
        throw FormatError("field \"" + field + "\" must be a number or \"inf\"");
    }
    const double d = v.get<double>();
    if (d < 0) throw FormatError("field \"" + field + "\" must be nonnegative");
    return d;
}

}  // namespace

Json load_json_file(const std::filesystem::path& path) {
    std::ifstream f(path);
    if (!f) throw Error("cannot open " + path.string());
    try {
        return Json::parse(f);
    } catch (const Json::parse_error& e) {
        throw FormatError(path.string() + ": " + e.what());
    }
}

void save_json_file(const Json& j, const std::filesystem::path& path) {
    std::ofstream f(path);
    if (!f) throw Error("cannot open " + path.string() + " for writing");
    f << j.dump(2) << "\n";
}

std::pair<CostMatrix, DistanceBounds> parse_problem(const Json& j) {
    const Json& costs = require(j, "costs", "problem");
    if (!costs.is_array() || costs.empty()) {
        throw FormatError("problem: field \"costs\" must be a nonempty array of rows");
    }
    const int n = int(costs.size());
    if (!costs[0].is_array() || costs[0].empty()) {
        throw FormatError("problem: field \"costs[0]\" must be a nonempty array");
    }
    const int w = int(costs[0].size());
    CostMatrix m(n, w);
    for (int i = 0; i < n; ++i) {
        if (!costs[i].is_array() || int(costs[i].size()) != w) {
            throw FormatError("problem: field \"costs[" + std::to_string(i) +
                              "]\" must have the same length as the first row");
        }
        for (int x = 0; x < w; ++x) {
            m.at(i, x) = parse_cost(costs[i][x], "costs[" + std::to_string(i) + "][" +
                                                     std::to_string(x) + "]");
        }
    }

    DistanceBounds b;
    for (const char* key : {"t_min", "t_max"}) {
        const Json& arr = require(j, key, "problem");
        if (!arr.is_array() || int(arr.size()) != n - 1) {
            throw FormatError(std::string("problem: field \"") + key + "\" must have length N-1");
        }
        auto& dst = std::string(key) == "t_min" ? b.t_min : b.t_max;
        for (std::size_t i = 0; i < arr.size(); ++i) {
            if (!arr[i].is_number_integer()) {
                throw FormatError(std::string("problem: field \"") + key + "[" +
                                  std::to_string(i) + "]\" must be an integer");
            }
            dst.push_back(arr[i].get<int>());
        }
    }
    for (int i = 0; i + 1 < n; ++i) {
        if (b.t_min[i] > b.t_max[i]) {
            throw FormatError("problem: t_min[" + std::to_string(i) + "] exceeds t_max[" +
                              std::to_string(i) + "]");
        }
    }
    return {std::move(m), std::move(b)};
}

namespace {

Json cost_to_json(Cost c) {
    if (!cost_is_finite(c)) return "inf";
    // Integral costs (the common case) serialize without a fraction.
    if (c == std::floor(c) && std::abs(c) < 9.0e15) return std::int64_t(c);
    return c;
}

}  // namespace

Json solution_to_json(const Solution& sol) {
    Json j;
    j["locations"] = sol.locations;
    j["objective"] = cost_to_json(sol.objective);
    return j;
}

VizTemplate parse_viz_template(const Json& j) {
    const Json& rows = require(j, "rows", "template");
    if (!rows.is_array()) throw FormatError("template: field \"rows\" must be an array");
    VizTemplate tpl;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const std::string ctx = "rows[" + std::to_string(i) + "]";
        const Json& row = rows[i];
        RowSpec spec;
        const std::string kind = require(row, "kind", ctx.c_str()).get<std::string>();
        if (kind == "gap") {
            spec.kind = RowKind::Gap;
        } else if (kind == "text") {
            spec.kind = RowKind::Text;
        } else {
            throw FormatError("template: " + ctx + ".kind must be \"gap\" or \"text\"");
        }
        std::tie(spec.h_min, spec.h_max) = parse_range(require(row, "h", ctx.c_str()), ctx + ".h");
        if (spec.kind == RowKind::Text) {
            const Json& blocks = require(row, "blocks", ctx.c_str());
            if (!blocks.is_array()) throw FormatError("template: " + ctx + ".blocks missing");
            for (std::size_t bj = 0; bj < blocks.size(); ++bj) {
                const std::string bctx = ctx + ".blocks[" + std::to_string(bj) + "]";
                BlockSpec bs;
                const std::string bkind =
                    require(blocks[bj], "kind", bctx.c_str()).get<std::string>();
                if (bkind == "gap") {
                    bs.kind = BlockKind::Gap;
                } else if (bkind == "field") {
                    bs.kind = BlockKind::Field;
                } else {
                    throw FormatError("template: " + bctx + ".kind must be \"gap\" or \"field\"");
                }
                std::tie(bs.w_min, bs.w_max) =
                    parse_range(require(blocks[bj], "w", bctx.c_str()), bctx + ".w");
                spec.blocks.push_back(bs);
            }
        }
        tpl.rows.push_back(std::move(spec));
    }
    return tpl;
}

Json layout_to_json(const VizLayout& layout) {
    Json j;
    j["refined"] = layout.refined;
    j["rows"] = Json::array();
    for (const RowLayout& row : layout.rows) {
        if (row.kind != RowKind::Text) continue;
        Json r;
        r["t"] = row.top;
        r["b"] = row.bottom;
        r["fields"] = Json::array();
        for (const BlockLayout& b : row.blocks) {
            if (b.kind != BlockKind::Field) continue;
            r["fields"].push_back({{"l", b.left}, {"r", b.right}, {"t", b.top}, {"b", b.bottom}});
        }
        j["rows"].push_back(std::move(r));
    }
    return j;
}

Json viz_result_to_json(const VizResult& result) {
    Json j = layout_to_json(result.layout);
    j["objective_s1"] = cost_to_json(result.s1);
    j["objective_v"] = result.v;
    j["iterations"] = result.iterations;
    return j;
}

std::vector<Rect> field_rects_from_json(const Json& j) {
    std::vector<Rect> rects;
    const Json& rows = require(j, "rows", "layout");
    for (const Json& row : rows) {
        for (const Json& f : require(row, "fields", "layout row")) {
            const int l = require_int(f, "l", "field");
            const int r = require_int(f, "r", "field");
            const int t = require_int(f, "t", "field");
            const int b = require_int(f, "b", "field");
            rects.push_back(Rect{l, t, r - l, b - t});
        }
    }
    return rects;
}

PlateTemplate parse_plate_template(const Json& j) {
    PlateTemplate tpl;
    const Json& nominal = require(j, "nominal", "plate template");
    if (!nominal.is_array() || nominal.size() != 2) {
        throw FormatError("plate template: field \"nominal\" must be [width, height]");
    }
    tpl.nominal_w = nominal[0].get<int>();
    tpl.nominal_h = nominal[1].get<int>();
    const Json& delta = require(j, "delta", "plate template");
    if (!delta.is_number()) throw FormatError("plate template: field \"delta\" must be a number");
    tpl.delta = delta.get<double>();
    tpl.invert_input = j.value("invert", false);
    tpl.literal_bounds = j.value("literal_bounds", false);
    const Json& symbols = require(j, "symbols", "plate template");
    if (!symbols.is_array() || symbols.empty()) {
        throw FormatError("plate template: field \"symbols\" must be a nonempty array");
    }
    for (std::size_t i = 0; i < symbols.size(); ++i) {
        const std::string ctx = "symbols[" + std::to_string(i) + "]";
        tpl.symbols.push_back(Rect{require_int(symbols[i], "x", ctx.c_str()),
                                   require_int(symbols[i], "y", ctx.c_str()),
                                   require_int(symbols[i], "w", ctx.c_str()),
                                   require_int(symbols[i], "h", ctx.c_str())});
    }
    validate_plate_template(tpl);
    return tpl;
}

Json boxes_to_json(const SymbolBoxes& boxes) {
    Json j;
    j["boxes"] = Json::array();
    for (const Rect& b : boxes.boxes) {
        j["boxes"].push_back({{"x", b.x}, {"y", b.y}, {"w", b.w}, {"h", b.h}});
    }
    j["objective"] = cost_to_json(boxes.objective);
    return j;
}

std::vector<Rect> rects_from_boxes_json(const Json& j) {
    std::vector<Rect> rects;
    for (const Json& b : require(j, "boxes", "boxes")) {
        rects.push_back(Rect{require_int(b, "x", "box"), require_int(b, "y", "box"),
                             require_int(b, "w", "box"), require_int(b, "h", "box")});
    }
    return rects;
}

PreprocessParams parse_preprocess_params(const Json& j) {
    PreprocessParams p;
    if (j.contains("close1")) {
        std::tie(p.close1_w, p.close1_h) = parse_range(j["close1"], "close1");
    }
    if (j.contains("open")) std::tie(p.open_w, p.open_h) = parse_range(j["open"], "open");
    if (j.contains("close2")) std::tie(p.close2_w, p.close2_h) = parse_range(j["close2"], "close2");
    return p;
}

}  // namespace sqz
