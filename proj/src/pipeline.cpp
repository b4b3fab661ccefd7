#include "reebdeco/pipeline.hpp"

#include <chrono>
#include <filesystem>
#include <sstream>

#include "reebdeco/io.hpp"
#include "reebdeco/reeb_quotient.hpp"
#include "reebdeco/render.hpp"

namespace reebdeco {

namespace {

struct StageClock {
    PipelineResult& result;
    std::chrono::steady_clock::time_point last = std::chrono::steady_clock::now();

    void mark(const std::string& name) {
        auto now = std::chrono::steady_clock::now();
        result.stage_names.push_back(name);
        result.stage_ms.push_back(std::chrono::duration<double, std::milli>(now - last).count());
        last = now;
    }
};

}  // namespace

PipelineResult run_pipeline(const PipelineConfig& config) {
    PipelineResult result;
    StageClock clock{result};

    PointCloud cloud;
    if (config.synth_shape) {
        auto set = generate_synthetic(*config.synth_shape, config.synth_n, config.synth_noise,
                                      config.seed);
        if (set.clouds.size() != 1)
            throw SchemaError("pipeline takes a single-cloud shape; run set generators separately");
        cloud = std::move(set.clouds.front());
    } else if (!config.input_csv.empty()) {
        cloud = load_cloud_csv(read_file(config.input_csv));
    } else {
        throw SchemaError("pipeline needs an input CSV or a synthetic shape");
    }
    clock.mark("input");

    if ((config.knn > 0) == (config.radius > 0))
        throw SchemaError("choose exactly one of knn / radius");
    FunctionGraph graph =
        config.knn > 0 ? knn_graph(cloud, config.knn) : radius_graph(cloud, config.radius);
    clock.mark("graph");

    switch (config.field) {
        case FieldKind::height:
            graph.assign_scalar_values(height_field(cloud, config.height_axis));
            break;
        case FieldKind::eccentricity:
            graph.assign_scalar_values(eccentricity_field(*graph.node_metric, config.ecc_p));
            break;
        case FieldKind::pagerank:
            graph.assign_scalar_values(
                pagerank_field(graph, config.pagerank_damping, config.pagerank_tol));
            break;
    }
    clock.mark("field");

    FunctionGraph working = graph;
    if (config.round_step) working = round_values(graph, *config.round_step);
    auto rho = reeb_radius_matrix(working);
    clock.mark("radius");

    DecoratedReebGraph drg = smooth_quotient_with_matrix(working, config.epsilon, rho);
    drg.params.round_step = config.round_step;
    clock.mark("quotient");

    DecorateOptions options;
    options.schedule = config.schedule;
    options.homology_dim = config.homology_dim;
    options.r_max = config.r_max;
    options.image = config.image;
    if (config.vr_sample > 0 && config.vr_sample < working.n)
        options.sample = farthest_point_sample(*working.node_metric, config.vr_sample);
    result.decorate_report = decorate_all(working, drg, options);
    clock.mark("decorate");

    for (const auto& deco : drg.decorations) {
        if (!deco) continue;
        if (const Barcode* bc = std::get_if<Barcode>(&*deco))
            result.bar_count += int(bc->intervals.size());
    }

    if (!config.out_dir.empty()) {
        std::filesystem::create_directories(config.out_dir);
        write_file(config.out_dir + "/drg.json", save_drg(drg));
        if (config.write_svg) {
            write_file(config.out_dir + "/graph.svg", render_graph_svg(working, config.seed));
            write_file(config.out_dir + "/drg.svg", render_drg_svg(drg, working, config.seed));
        }
    }
    clock.mark("serialize");

    result.graph = std::move(graph);
    result.drg = std::move(drg);
    return result;
}

std::string pipeline_report_text(const PipelineResult& result) {
    std::ostringstream out;
    out << "classes: " << result.drg.class_count << "\n";
    int decorated = 0;
    for (const auto& d : result.drg.decorations)
        if (d) ++decorated;
    out << "decorated: " << decorated << "\n";
    out << "bars: " << result.bar_count << "\n";
    if (!result.decorate_report.capacity_skipped.empty()) {
        out << "capacity-skipped classes:";
        for (int c : result.decorate_report.capacity_skipped) out << " " << c;
        out << "\n";
    }
    out << "r_max: " << result.decorate_report.r_max_used << "\n";
    for (std::size_t i = 0; i < result.stage_names.size(); ++i)
        out << "stage " << result.stage_names[i] << ": " << result.stage_ms[i] << " ms\n";
    return out.str();
}

}  // namespace reebdeco
