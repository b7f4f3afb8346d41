// Copyright 2026 The Squeezebox Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <filesystem>
#include <string>
#include <utility>

#include <json.hpp>

#include "sqz/dsp.hpp"
#include "sqz/plate.hpp"
#include "sqz/viz.hpp"

// JSON schemas of the command-line interface. Positions and coordinates are
// 0-based on this boundary. The string "inf" stands for the infinite cost.

namespace sqz {

using Json = nlohmann::json;

Json load_json_file(const std::filesystem::path& path);
void save_json_file(const Json& j, const std::filesystem::path& path);

/// {"costs": [[...]], "t_min": [...], "t_max": [...]}; cost entries are
/// nonnegative numbers or "inf". Throws FormatError naming the bad field.
std::pair<CostMatrix, DistanceBounds> parse_problem(const Json& j);

/// {"locations": [...], "objective": number | "inf"}
Json solution_to_json(const Solution& sol);

/// {"rows":[{"kind":"gap","h":[lo,hi]},
///          {"kind":"text","h":[lo,hi],"blocks":[{"kind":"field","w":[lo,hi]},...]},...]}
VizTemplate parse_viz_template(const Json& j);

/// {"refined":..., "rows":[{"t","b","fields":[{"l","r","t","b"},...]},...]}
/// (text rows only).
Json layout_to_json(const VizLayout& layout);
Json viz_result_to_json(const VizResult& result);
std::vector<Rect> field_rects_from_json(const Json& j);

/// {"nominal":[w,h], "delta":..., "invert":..., "symbols":[{"x","y","w","h"},...],
///  "literal_bounds": optional}
PlateTemplate parse_plate_template(const Json& j);

/// {"boxes":[{"x","y","w","h"},...], "objective":...}
Json boxes_to_json(const SymbolBoxes& boxes);
std::vector<Rect> rects_from_boxes_json(const Json& j);

/// {"close1":[w,h], "open":[w,h], "close2":[w,h]}; missing keys keep defaults.
PreprocessParams parse_preprocess_params(const Json& j);

}  // namespace sqz
