// Copyright 2026 The Squeezebox Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0

// Command-line front end: constrained sequence solving, document text-zone
// and plate segmentation, synthetic corpus generation, benchmarking.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sqz/bench.hpp"
#include "sqz/io.hpp"
#include "sqz/kernels.hpp"
#include "sqz/parallel.hpp"
#include "sqz/synth.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitInfeasible = 2;

using sqz::Json;

void emit_json(const Json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        sqz::save_json_file(j, out_path);
    }
}

void draw_border(sqz::GrayImage& img, const sqz::Rect& r) {
    const int x0 = std::max(r.x, 0);
    const int y0 = std::max(r.y, 0);
    const int x1 = std::min(r.right(), img.width);
    const int y1 = std::min(r.bottom(), img.height);
    if (x0 >= x1 || y0 >= y1) return;
    for (int x = x0; x < x1; ++x) {
        img.at(x, y0) = 0;
        img.at(x, y1 - 1) = 0;
    }
    for (int y = y0; y < y1; ++y) {
        img.at(x0, y) = 0;
        img.at(x1 - 1, y) = 0;
    }
}

void write_overlay(const sqz::GrayImage& input, const std::vector<sqz::Rect>& rects,
                   const std::string& path) {
    sqz::GrayImage overlay = input;
    for (const sqz::Rect& r : rects) draw_border(overlay, r);
    sqz::save_pgm_file(overlay, path);
}

struct SolveArgs {
    std::string problem_path;
    std::string out_path;
};

int cmd_solve(const SolveArgs& args) {
    const auto [costs, bounds] = sqz::parse_problem(sqz::load_json_file(args.problem_path));
    const sqz::Solution sol = sqz::solve_dsp(costs, bounds).solution;
    emit_json(sqz::solution_to_json(sol), args.out_path);
    return sol.feasible() ? kExitOk : kExitInfeasible;
}

struct SegmentVizArgs {
    std::string image_path;
    std::string template_path;
    int max_iters = 1;
    bool no_refine = false;
    std::string overlay_path;
    std::string report_path;
    std::string out_path;
    std::string preprocess_json;
};

int cmd_segment_viz(const SegmentVizArgs& args) {
    const sqz::GrayImage img = sqz::load_pgm_file(args.image_path);
    const Json tpl_json = sqz::load_json_file(args.template_path);
    const sqz::VizTemplate tpl = sqz::parse_viz_template(tpl_json);

    sqz::VizOptions opts;
    opts.max_iters = args.max_iters;
    opts.refine = !args.no_refine && args.max_iters > 0;
    if (!args.preprocess_json.empty()) {
        opts.preprocess = sqz::parse_preprocess_params(Json::parse(args.preprocess_json));
    } else if (tpl_json.contains("preprocess")) {
        opts.preprocess = sqz::parse_preprocess_params(tpl_json["preprocess"]);
    }

    const sqz::VizResult result = sqz::segment_viz(img, tpl, opts);
    emit_json(sqz::viz_result_to_json(result), args.out_path);

    if (!args.overlay_path.empty()) {
        write_overlay(img, result.layout.field_rects(), args.overlay_path);
    }
    if (!args.report_path.empty()) {
        Json report;
        report["input"] = args.image_path;
        report["template"] = args.template_path;
        report["timings_ms"] = {{"preprocess", result.timings.preprocess_ms},
                                {"integral", result.timings.integral_ms},
                                {"dsp", result.timings.dsp_ms},
                                {"refine", result.timings.refine_ms},
                                {"total", result.timings.total_ms}};
        report["objective_s1"] = result.s1;
        report["objective_v"] = result.v;
        report["iterations"] = result.iterations;
        report["layout"] = sqz::layout_to_json(result.layout);
        sqz::save_json_file(report, args.report_path);
    }
    return kExitOk;
}

struct SegmentPlateArgs {
    std::string image_path;
    std::string template_path;
    int max_iters = 5;
    std::string overlay_path;
    std::string report_path;
    std::string out_path;
};

int cmd_segment_plate(const SegmentPlateArgs& args) {
    const sqz::GrayImage img = sqz::load_pgm_file(args.image_path);
    const sqz::PlateTemplate tpl =
        sqz::parse_plate_template(sqz::load_json_file(args.template_path));

    const sqz::PlateResult result = sqz::segment_plate(img, tpl, args.max_iters);
    Json out = sqz::boxes_to_json(result.boxes);
    out["iterations"] = result.iterations;
    emit_json(out, args.out_path);

    if (!args.overlay_path.empty()) {
        write_overlay(img, result.boxes.boxes, args.overlay_path);
    }
    if (!args.report_path.empty()) {
        Json report;
        report["input"] = args.image_path;
        report["template"] = args.template_path;
        report["timings_ms"] = {{"prepare", result.prepare_ms},
                                {"solve", result.solve_ms},
                                {"total", result.total_ms}};
        report["objective"] = result.boxes.objective;
        report["trace"] = result.objective_trace;
        report["iterations"] = result.iterations;
        report["boxes"] = sqz::boxes_to_json(result.boxes);
        sqz::save_json_file(report, args.report_path);
    }
    return kExitOk;
}

struct SynthVizArgs {
    std::string template_path;
    std::uint64_t seed = 1;
    int width = 400;
    int height = 300;
    double noise_sigma = 0;
    int jitter = 0;
    int glyph = 60;
    int background = 200;
    int outlier_field = -1;
    int outlier_value = 0;
    std::string out_path = "synth.pgm";
    std::string truth_path;
};

int cmd_synth_viz(const SynthVizArgs& args) {
    const sqz::VizTemplate tpl =
        sqz::parse_viz_template(sqz::load_json_file(args.template_path));
    sqz::SynthSpec spec;
    spec.seed = args.seed;
    spec.width = args.width;
    spec.height = args.height;
    spec.noise_sigma = args.noise_sigma;
    spec.jitter = args.jitter;
    spec.glyph_value = args.glyph;
    spec.background_value = args.background;
    spec.outlier_field = args.outlier_field;
    spec.outlier_value = args.outlier_value;

    const sqz::VizSample sample = sqz::gen_viz(tpl, spec);
    sqz::save_pgm_file(sample.image, args.out_path);
    if (!args.truth_path.empty()) {
        sqz::save_json_file(sqz::layout_to_json(sample.truth), args.truth_path);
    }
    return kExitOk;
}

struct SynthPlateArgs {
    std::string template_path;
    std::uint64_t seed = 1;
    int width = 0;
    int height = 0;
    double noise_sigma = 0;
    int jitter = 0;
    int glyph = 40;
    int background = 210;
    std::string out_path = "plate.pgm";
    std::string truth_path;
};

int cmd_synth_plate(const SynthPlateArgs& args) {
    const sqz::PlateTemplate tpl =
        sqz::parse_plate_template(sqz::load_json_file(args.template_path));
    sqz::SynthSpec spec;
    spec.seed = args.seed;
    spec.width = args.width;
    spec.height = args.height;
    spec.noise_sigma = args.noise_sigma;
    spec.jitter = args.jitter;
    spec.glyph_value = args.glyph;
    spec.background_value = args.background;

    const sqz::PlateSample sample = sqz::gen_plate(tpl, spec);
    sqz::save_pgm_file(sample.image, args.out_path);
    if (!args.truth_path.empty()) {
        sqz::save_json_file(sqz::boxes_to_json(sample.truth), args.truth_path);
    }
    return kExitOk;
}

struct BenchArgs {
    std::vector<std::string> sizes;  // "N:W" pairs
    int window_div = 8;
    int runs = 10;
    double min_sample_ms = 20;
    bool no_naive = false;
    std::string json_path;
};

int cmd_bench(const BenchArgs& args) {
    std::vector<std::pair<int, int>> sizes;
    for (const std::string& s : args.sizes) {
        const auto colon = s.find(':');
        if (colon == std::string::npos) {
            throw sqz::FormatError("bench: size must be N:W, got \"" + s + "\"");
        }
        sizes.emplace_back(std::stoi(s.substr(0, colon)), std::stoi(s.substr(colon + 1)));
    }
    if (sizes.empty()) {
        sizes = {{8, 1 << 10}, {8, 1 << 12}, {8, 1 << 14}};
    }

    Json out = Json::array();
    std::printf("%6s %8s %8s %14s %14s %10s\n", "N", "W", "window", "dsp ms", "naive ms",
                "speedup");
    for (const auto& [n, w] : sizes) {
        const int window = std::max(w / args.window_div, 1);
        const sqz::BenchResult r =
            sqz::bench_size(n, w, window, args.runs, args.min_sample_ms, !args.no_naive);
        std::printf("%6d %8d %8d %7.3f±%5.3f %7.3f±%5.3f %9.1fx\n", r.n, r.w, r.window,
                    r.dsp.mean_ms, r.dsp.stddev_ms, r.naive.mean_ms, r.naive.stddev_ms,
                    r.speedup);
        out.push_back({{"n", r.n},
                       {"w", r.w},
                       {"window", r.window},
                       {"dsp_ms_mean", r.dsp.mean_ms},
                       {"dsp_ms_std", r.dsp.stddev_ms},
                       {"naive_ms_mean", r.naive.mean_ms},
                       {"naive_ms_std", r.naive.stddev_ms},
                       {"speedup", r.speedup}});
    }
    if (!args.json_path.empty()) sqz::save_json_file(out, args.json_path);
    return kExitOk;
}

void apply_env() {
    if (const char* threads = std::getenv("SQZBOX_THREADS")) {
        sqz::set_thread_count(std::atoi(threads));
    }
    if (const char* simd = std::getenv("SQZBOX_SIMD")) {
        const std::string s = simd;
        using sqz::kernels::Backend;
        if (s == "scalar") sqz::kernels::set_backend(Backend::Scalar);
        else if (s == "avx2") sqz::kernels::set_backend(Backend::Avx2);
        else if (s == "neon") sqz::kernels::set_backend(Backend::Neon);
        else if (s == "auto") sqz::kernels::set_backend(Backend::Auto);
        else throw sqz::Error("SQZBOX_SIMD must be scalar|avx2|neon|auto");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Interval-constrained sequence placement and OCR segmentation"};
    app.require_subcommand(1);

    SolveArgs solve_args;
    auto* solve = app.add_subcommand("solve", "Solve a cost-matrix placement problem");
    solve->add_option("problem", solve_args.problem_path, "problem JSON file")->required();
    solve->add_option("-o,--out", solve_args.out_path, "write the solution JSON here");

    SegmentVizArgs viz_args;
    auto* sviz = app.add_subcommand("segment-viz", "Segment a document text zone");
    sviz->add_option("image", viz_args.image_path, "input PGM")->required();
    sviz->add_option("template", viz_args.template_path, "template JSON")->required();
    sviz->add_option("--max-iters", viz_args.max_iters, "refinement sweeps (default 1)");
    sviz->add_flag("--no-refine", viz_args.no_refine, "skip coordinate-descent refinement");
    sviz->add_option("--overlay", viz_args.overlay_path, "write field borders over the input");
    sviz->add_option("--report", viz_args.report_path, "write a run report JSON");
    sviz->add_option("--preprocess", viz_args.preprocess_json,
                     "preprocessing sizes as JSON, e.g. {\"close1\":[11,11]}");
    sviz->add_option("-o,--out", viz_args.out_path, "write the layout JSON here");

    SegmentPlateArgs plate_args;
    auto* splate = app.add_subcommand("segment-plate", "Segment plate symbols");
    splate->add_option("image", plate_args.image_path, "input PGM")->required();
    splate->add_option("template", plate_args.template_path, "template JSON")->required();
    splate->add_option("--max-iters", plate_args.max_iters, "iteration cap (default 5)");
    splate->add_option("--overlay", plate_args.overlay_path, "write box borders over the input");
    splate->add_option("--report", plate_args.report_path, "write a run report JSON");
    splate->add_option("-o,--out", plate_args.out_path, "write the boxes JSON here");

    SynthVizArgs synth_viz_args;
    auto* synthviz = app.add_subcommand("synth-viz", "Generate a synthetic text zone");
    synthviz->add_option("template", synth_viz_args.template_path, "template JSON")->required();
    synthviz->add_option("--seed", synth_viz_args.seed, "RNG seed");
    synthviz->add_option("--width", synth_viz_args.width, "image width");
    synthviz->add_option("--height", synth_viz_args.height, "image height");
    synthviz->add_option("--noise-sigma", synth_viz_args.noise_sigma, "Gaussian noise sigma");
    synthviz->add_option("--jitter", synth_viz_args.jitter, "truth jitter around nominal");
    synthviz->add_option("--glyph", synth_viz_args.glyph, "glyph intensity");
    synthviz->add_option("--background", synth_viz_args.background, "background intensity");
    synthviz->add_option("--outlier-field", synth_viz_args.outlier_field,
                         "index of a field rendered with --outlier-value");
    synthviz->add_option("--outlier-value", synth_viz_args.outlier_value,
                         "glyph intensity of the outlier field");
    synthviz->add_option("-o,--out", synth_viz_args.out_path, "output PGM path");
    synthviz->add_option("--truth", synth_viz_args.truth_path, "ground-truth JSON sidecar");

    SynthPlateArgs synth_plate_args;
    auto* synthplate = app.add_subcommand("synth-plate", "Generate a synthetic plate");
    synthplate->add_option("template", synth_plate_args.template_path, "template JSON")
        ->required();
    synthplate->add_option("--seed", synth_plate_args.seed, "RNG seed");
    synthplate->add_option("--width", synth_plate_args.width, "image width (default nominal)");
    synthplate->add_option("--height", synth_plate_args.height, "image height (default nominal)");
    synthplate->add_option("--noise-sigma", synth_plate_args.noise_sigma, "Gaussian noise sigma");
    synthplate->add_option("--jitter", synth_plate_args.jitter, "truth displacement bound");
    synthplate->add_option("--glyph", synth_plate_args.glyph, "glyph intensity");
    synthplate->add_option("--background", synth_plate_args.background, "background intensity");
    synthplate->add_option("-o,--out", synth_plate_args.out_path, "output PGM path");
    synthplate->add_option("--truth", synth_plate_args.truth_path, "ground-truth JSON sidecar");

    BenchArgs bench_args;
    auto* bench = app.add_subcommand("bench", "Time the solver against the naive reference");
    bench->add_option("--sizes", bench_args.sizes, "size list as N:W pairs");
    bench->add_option("--window-div", bench_args.window_div, "window = W / this (default 8)");
    bench->add_option("--runs", bench_args.runs, "samples per size (default 10)");
    bench->add_option("--min-sample-ms", bench_args.min_sample_ms,
                      "repeat each sample to at least this long");
    bench->add_flag("--no-naive", bench_args.no_naive, "skip the naive solver");
    bench->add_option("--json", bench_args.json_path, "write results JSON here");

    CLI11_PARSE(app, argc, argv);

    try {
        apply_env();
        if (solve->parsed()) return cmd_solve(solve_args);
        if (sviz->parsed()) return cmd_segment_viz(viz_args);
        if (splate->parsed()) return cmd_segment_plate(plate_args);
        if (synthviz->parsed()) return cmd_synth_viz(synth_viz_args);
        if (synthplate->parsed()) return cmd_synth_plate(synth_plate_args);
        if (bench->parsed()) return cmd_bench(bench_args);
    } catch (const sqz::InfeasibleError& e) {
        std::cerr << "infeasible: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const sqz::HeightRangeError& e) {
        std::cerr << "infeasible: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const sqz::WidthRangeError& e) {
        std::cerr << "infeasible: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
