#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "reebdeco/decorate.hpp"
#include "reebdeco/synthetic.hpp"

namespace reebdeco {

enum class FieldKind { height, eccentricity, pagerank };

struct PipelineConfig {
    // Input: a CSV path or a synthetic shape.
    std::string input_csv;
    std::optional<Shape> synth_shape;
    int synth_n = 1000;
    double synth_noise = 0.0;

    // Graph construction: exactly one of knn / radius.
    int knn = 0;
    double radius = 0.0;

    FieldKind field = FieldKind::height;
    int height_axis = 2;
    double ecc_p = 2.0;
    double pagerank_damping = 0.85;
    double pagerank_tol = 1e-12;

    std::optional<double> round_step;
    double epsilon = 0.0;

    SliceSchedule schedule;
    int homology_dim = 1;
    double r_max = 0.0;   // 0: metric diameter
    int vr_sample = 0;    // 0: use all nodes in decoration complexes
    std::optional<ImageSpec> image;

    std::string out_dir;
    bool write_svg = false;
    std::uint64_t seed = 0;
};

struct PipelineResult {
    FunctionGraph graph;  // with field values applied (pre-rounding)
    DecoratedReebGraph drg;
    DecorateReport decorate_report;
    int bar_count = 0;  // total intervals across barcode decorations
    std::vector<double> stage_ms;
    std::vector<std::string> stage_names;
};

// build graph -> field -> quotient (with rounding) -> decorate -> serialize.
// Writes drg.json (and graph.svg / drg.svg when requested) under out_dir if
// set; file artifacts are bitwise-deterministic for a fixed config and seed.
PipelineResult run_pipeline(const PipelineConfig& config);

std::string pipeline_report_text(const PipelineResult& result);

}  // namespace reebdeco
