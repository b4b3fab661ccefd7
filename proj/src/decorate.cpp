#include "reebdeco/decorate.hpp"

#include <algorithm>
#include <cmath>

#include "reebdeco/parallel.hpp"

namespace reebdeco {

FiltrationDecoration filtration_decoration(const FunctionGraph& graph,
                                           const DecoratedReebGraph& drg, int cls) {
    if (cls < 0 || cls >= drg.class_count) throw SchemaError("class index out of range");
    auto field = reeb_radius_from(graph, drg.representative[cls]);
    return {cls, std::move(field.rho)};
}

namespace {

// Restrict a metric and a rho field to a node subset (ascending indices).
struct Restriction {
    SymMatrix metric;
    ReebRadiusField rho;
};

Restriction restrict_to_sample(const SymMatrix& metric, const ReebRadiusField& rho,
                               const std::vector<int>& sample) {
    Restriction r;
    int m = int(sample.size());
    r.metric = SymMatrix(m);
    r.rho.source = 0;
    r.rho.rho.resize(m);
    for (int i = 0; i < m; ++i) {
        r.rho.rho[i] = rho.rho[sample[i]];
        for (int j = i + 1; j < m; ++j) r.metric.set(i, j, metric.at(sample[i], sample[j]));
    }
    return r;
}

Barcode decoration_from_rho(const SymMatrix& metric, const ReebRadiusField& rho,
                            const SliceSchedule& schedule, int k, double r_max,
                            const std::vector<int>& sample, std::size_t capacity) {
    if (sample.empty()) {
        auto fc = constrained_vr_filtration(metric, rho, schedule, r_max, k + 1, capacity);
        return reduce_and_extract(fc, k);
    }
    Restriction r = restrict_to_sample(metric, rho, sample);
    auto fc = constrained_vr_filtration(r.metric, r.rho, schedule, r_max, k + 1, capacity);
    return reduce_and_extract(fc, k);
}

}  // namespace

Barcode barcode_decoration(const FunctionGraph& graph, const DecoratedReebGraph& drg, int cls,
                           const SliceSchedule& schedule, int k, double r_max,
                           const std::vector<int>& sample, std::size_t capacity) {
    if (!graph.node_metric) throw SchemaError("barcode decorations require a node metric");
    if (cls < 0 || cls >= drg.class_count) throw SchemaError("class index out of range");
    auto field = reeb_radius_from(graph, drg.representative[cls]);
    return decoration_from_rho(*graph.node_metric, field, schedule, k, r_max, sample, capacity);
}

DecorateReport decorate_all(const FunctionGraph& graph, DecoratedReebGraph& drg,
                            const DecorateOptions& options) {
    if (!graph.node_metric) throw SchemaError("barcode decorations require a node metric");
    DecorateReport report;
    double r_max = options.r_max > 0 ? options.r_max : graph.node_metric->max_entry();
    report.r_max_used = r_max;

    int k = options.homology_dim;
    std::vector<std::optional<Barcode>> barcodes(drg.class_count);
    parallel_for(std::size_t(drg.class_count), [&](std::size_t cls) {
        auto field = reeb_radius_from(graph, drg.representative[cls]);
        try {
            barcodes[cls] = decoration_from_rho(*graph.node_metric, field, options.schedule, k,
                                                r_max, options.sample, options.capacity);
        } catch (const CapacityError&) {
            barcodes[cls] = std::nullopt;
        }
    });
    for (int cls = 0; cls < drg.class_count; ++cls)
        if (!barcodes[cls]) report.capacity_skipped.push_back(cls);

    drg.decorations.assign(drg.class_count, std::nullopt);
    if (!options.image) {
        for (int cls = 0; cls < drg.class_count; ++cls)
            if (barcodes[cls]) drg.decorations[cls] = std::move(*barcodes[cls]);
    } else {
        ImageSpec spec = *options.image;
        // Dataset-driven defaults: shared ranges and weight cap across classes.
        double max_birth = 0.0, max_pers = 0.0;
        for (const auto& bc : barcodes) {
            if (!bc) continue;
            for (const auto& iv : bc->intervals) {
                double death = iv.open ? r_max : iv.death;
                max_birth = std::max(max_birth, iv.birth);
                max_pers = std::max(max_pers, death - iv.birth);
            }
        }
        if (max_pers <= 0) max_pers = 1.0;
        auto birth_range = spec.birth_range.value_or(std::make_pair(0.0, std::max(max_birth, 1e-12)));
        auto pers_range = spec.pers_range.value_or(std::make_pair(0.0, max_pers));
        double pers_cap = spec.pers_cap > 0 ? spec.pers_cap : max_pers;
        double sigma = spec.sigma > 0 ? spec.sigma : (pers_range.second - pers_range.first) / 20.0;
        report.pers_cap_used = pers_cap;
        for (int cls = 0; cls < drg.class_count; ++cls)
            if (barcodes[cls])
                drg.decorations[cls] = persistence_image(*barcodes[cls], spec.rows, spec.cols, sigma,
                                                         birth_range, pers_range, pers_cap, r_max);
    }

    drg.params.lambda = options.schedule.lambda;
    drg.params.c = options.schedule.c;
    drg.params.homology_dim = k;
    drg.params.r_max = r_max;
    return report;
}

PersistenceImage persistence_image(const Barcode& barcode, int rows, int cols, double sigma,
                                   std::pair<double, double> birth_range,
                                   std::pair<double, double> pers_range, double pers_cap,
                                   double r_max_clip) {
    if (rows <= 0 || cols <= 0) throw SchemaError("image resolution must be positive");
    if (!(sigma > 0)) throw SchemaError("sigma must be positive");
    PersistenceImage img;
    img.rows = rows;
    img.cols = cols;
    img.birth_min = birth_range.first;
    img.birth_max = birth_range.second;
    img.pers_min = pers_range.first;
    img.pers_max = pers_range.second;
    img.sigma = sigma;
    img.pixels.assign(std::size_t(rows) * cols, 0.0);

    double col_step = (img.birth_max - img.birth_min) / cols;
    double row_step = (img.pers_max - img.pers_min) / rows;
    double inv = 1.0 / (sigma * std::sqrt(2.0));

    // Separable Gaussian: exact per-axis integrals, outer product per bar.
    std::vector<double> col_mass(cols), row_mass(rows);
    for (const auto& iv : barcode.intervals) {
        double death = iv.open ? r_max_clip : iv.death;
        double pers = death - iv.birth;
        if (pers <= 0) continue;
        double weight = pers_cap > 0 ? std::min(pers / pers_cap, 1.0) : 1.0;
        for (int jc = 0; jc < cols; ++jc) {
            double x0 = img.birth_min + jc * col_step;
            double x1 = x0 + col_step;
            col_mass[jc] = 0.5 * (std::erf((x1 - iv.birth) * inv) - std::erf((x0 - iv.birth) * inv));
        }
        for (int ir = 0; ir < rows; ++ir) {
            double y0 = img.pers_min + ir * row_step;
            double y1 = y0 + row_step;
            row_mass[ir] = 0.5 * (std::erf((y1 - pers) * inv) - std::erf((y0 - pers) * inv));
        }
        for (int ir = 0; ir < rows; ++ir)
            for (int jc = 0; jc < cols; ++jc)
                img.pixels[std::size_t(ir) * cols + jc] += weight * row_mass[ir] * col_mass[jc];
    }
    return img;
}

}  // namespace reebdeco
