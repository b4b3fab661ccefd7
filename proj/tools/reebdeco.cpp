// reebdeco: decorated Reeb graphs for point clouds and attributed graphs.
//
// Subcommand per pipeline stage plus `pipeline` for the end-to-end run; all
// stages compose through files (JSON graphs/DRGs, CSV clouds/matrices).
// Exit codes: 0 ok, 2 schema, 3 disconnected, 4 capacity, 5 nonconvergence,
// 1 anything else.

#include <filesystem>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "reebdeco/compare.hpp"
#include "reebdeco/io.hpp"
#include "reebdeco/pipeline.hpp"
#include "reebdeco/reeb_quotient.hpp"
#include "reebdeco/render.hpp"

namespace rd = reebdeco;

namespace {

rd::FunctionGraph load_graph_file(const std::string& path) {
    return rd::load_function_graph(rd::read_file(path));
}

rd::SymMatrix matrix_from_rows(const std::vector<std::vector<double>>& rows) {
    int n = int(rows.size());
    rd::SymMatrix m(n);
    for (int i = 0; i < n; ++i) {
        if (int(rows[i].size()) != n) throw rd::SchemaError("matrix CSV must be square");
        for (int j = i + 1; j < n; ++j) {
            if (std::abs(rows[i][j] - rows[j][i]) > 1e-9)
                throw rd::SchemaError("matrix CSV must be symmetric");
            m.set(i, j, rows[i][j]);
        }
    }
    return m;
}

struct CliState {
    // synth
    std::string shape = "cycle";
    int n = 1000;
    double noise = 0.0;
    std::uint64_t seed = 0;
    int samples = 10;
    std::string out;
    // graph build
    std::string input;
    int knn = 0;
    double radius_param = 0.0;
    // field
    std::string graph_path;
    int axis = 2;
    double ecc_p = 2.0;
    double damping = 0.85;
    double tol = 1e-12;
    // radius
    int source = -1;
    std::string matrix_out;
    // quotient
    double epsilon = 0.0;
    double round_step = 0.0;
    // persistence / decorate
    std::string cloud_path;
    std::string drg_path;
    int dim = 1;
    double rmax = 0.0;
    double lambda = 1.0;
    double c = 0.0;
    std::string image;  // "25x25"
    double sigma = 0.0;
    int sample = 0;
    // compare / embed
    std::string drgs_dir;
    double alpha = 0.5;
    double ot_eps = 1e-2;
    std::string a_path, b_path;
    std::string dist_path;
    int dims = 2;
    // render
    std::string barcode_path;
    std::string base_path;
    // pipeline
    std::string synth_shape;
    std::string field_kind = "height";
    bool svg = false;
    int vr_sample = 0;
};

rd::ImageSpec parse_image_spec(const std::string& text, double sigma) {
    rd::ImageSpec spec;
    auto x = text.find('x');
    if (x == std::string::npos) throw rd::SchemaError("--image expects ROWSxCOLS, e.g. 25x25");
    spec.rows = std::stoi(text.substr(0, x));
    spec.cols = std::stoi(text.substr(x + 1));
    spec.sigma = sigma;
    return spec;
}

int run(int argc, char** argv) {
    CLI::App app{"decorated Reeb graph toolkit"};
    app.require_subcommand(1);
    CliState st;

    auto* synth = app.add_subcommand("synth", "generate a synthetic point cloud (CSV)");
    synth->add_option("--shape", st.shape,
                      "torus_wedge_circle | sphere | torus | cycle | four_class_set");
    synth->add_option("--n", st.n, "points per cloud");
    synth->add_option("--noise", st.noise, "Gaussian sigma");
    synth->add_option("--seed", st.seed, "64-bit seed");
    synth->add_option("--samples", st.samples, "samples per class (four_class_set)");
    synth->add_option("--out", st.out, "output CSV, or directory for four_class_set")->required();

    auto* graph = app.add_subcommand("graph", "graph construction");
    auto* build = graph->add_subcommand("build", "build a graph from a point cloud");
    build->fallthrough();
    build->add_option("--input", st.input, "cloud CSV")->required();
    build->add_option("--knn", st.knn, "k-nearest-neighbor graph");
    build->add_option("--radius", st.radius_param, "radius graph");
    build->add_option("--out", st.out, "output graph JSON")->required();
    graph->require_subcommand(1);

    auto* field = app.add_subcommand("field", "attach node values to a graph");
    field->add_option("--graph", st.graph_path)->required();
    field->add_option("--out", st.out)->required();
    auto* fh = field->add_subcommand("height", "coordinate projection (uses stored positions)");
    fh->fallthrough();
    fh->add_option("--axis", st.axis);
    auto* fe = field->add_subcommand("ecc", "p-eccentricity of the node metric");
    fe->fallthrough();
    fe->add_option("--p", st.ecc_p);
    auto* fp = field->add_subcommand("pagerank", "undirected PageRank with uniform teleport");
    fp->fallthrough();
    fp->add_option("--damping", st.damping);
    fp->add_option("--tol", st.tol);
    field->require_subcommand(1);

    auto* radius = app.add_subcommand("radius", "Reeb radius from a source, or the full matrix");
    radius->add_option("--graph", st.graph_path)->required();
    radius->add_option("--source", st.source, "print rho(source, .) as CSV row");
    radius->add_option("--matrix", st.matrix_out, "write the full matrix CSV here");

    auto* quotient = app.add_subcommand("quotient", "epsilon-smoothed Reeb quotient");
    quotient->add_option("--graph", st.graph_path)->required();
    quotient->add_option("--epsilon", st.epsilon)->required();
    quotient->add_option("--round", st.round_step, "round values to multiples of theta first");
    quotient->add_option("--out", st.out)->required();

    auto* persistence = app.add_subcommand("persistence", "Vietoris-Rips barcode of a cloud");
    persistence->add_option("--cloud", st.cloud_path)->required();
    persistence->add_option("--dim", st.dim, "homology degree");
    persistence->add_option("--rmax", st.rmax, "truncation scale (0: diameter)");
    persistence->add_option("--out", st.out, "write barcode JSON here (default: stdout)");

    auto* decorate = app.add_subcommand("decorate", "attach barcode / image decorations");
    decorate->add_option("--graph", st.graph_path)->required();
    decorate->add_option("--drg", st.drg_path)->required();
    decorate->add_option("--lambda", st.lambda);
    decorate->add_option("--c", st.c);
    decorate->add_option("--dim", st.dim);
    decorate->add_option("--rmax", st.rmax);
    decorate->add_option("--image", st.image, "vectorize to ROWSxCOLS persistence images");
    decorate->add_option("--sigma", st.sigma, "image kernel width (0: pers range / 20)");
    decorate->add_option("--sample", st.sample, "farthest-point subsample size for VR inputs");
    decorate->add_option("--out", st.out)->required();

    auto* compare = app.add_subcommand("compare", "distances between artifacts");
    auto* fgw_cmd = compare->add_subcommand("fgw", "pairwise FGW matrix over a directory of DRGs");
    fgw_cmd->fallthrough();
    fgw_cmd->add_option("--drgs", st.drgs_dir)->required();
    fgw_cmd->add_option("--alpha", st.alpha);
    fgw_cmd->add_option("--ot-eps", st.ot_eps);
    fgw_cmd->add_option("--out", st.out)->required();
    auto* bn_cmd = compare->add_subcommand("bottleneck", "bottleneck distance of two barcodes");
    bn_cmd->fallthrough();
    bn_cmd->add_option("--a", st.a_path)->required();
    bn_cmd->add_option("--b", st.b_path)->required();
    bn_cmd->add_option("--dim", st.dim);
    compare->require_subcommand(1);

    auto* embed = app.add_subcommand("embed", "classical MDS of a distance matrix");
    embed->add_option("--dist", st.dist_path)->required();
    embed->add_option("--dims", st.dims);
    embed->add_option("--out", st.out)->required();

    auto* render = app.add_subcommand("render", "SVG rendering");
    render->add_option("--graph", st.graph_path);
    render->add_option("--drg", st.drg_path);
    render->add_option("--base", st.base_path, "base graph for DRG layout");
    render->add_option("--barcode", st.barcode_path);
    render->add_option("--dist", st.dist_path);
    render->add_option("--seed", st.seed, "layout seed");
    render->add_option("--out", st.out)->required();

    auto* pipeline = app.add_subcommand("pipeline", "end-to-end: build, field, quotient, decorate");
    pipeline->add_option("--input", st.input, "cloud CSV");
    pipeline->add_option("--shape", st.synth_shape, "synthetic shape instead of --input");
    pipeline->add_option("--n", st.n);
    pipeline->add_option("--noise", st.noise);
    pipeline->add_option("--seed", st.seed);
    pipeline->add_option("--knn", st.knn);
    pipeline->add_option("--radius", st.radius_param);
    pipeline->add_option("--field", st.field_kind, "height | ecc | pagerank");
    pipeline->add_option("--axis", st.axis);
    pipeline->add_option("--p", st.ecc_p);
    pipeline->add_option("--damping", st.damping);
    pipeline->add_option("--round", st.round_step);
    pipeline->add_option("--epsilon", st.epsilon);
    pipeline->add_option("--lambda", st.lambda);
    pipeline->add_option("--c", st.c);
    pipeline->add_option("--dim", st.dim);
    pipeline->add_option("--rmax", st.rmax);
    pipeline->add_option("--image", st.image);
    pipeline->add_option("--sigma", st.sigma);
    pipeline->add_option("--vr-sample", st.vr_sample);
    pipeline->add_flag("--svg", st.svg, "also render graph.svg and drg.svg");
    pipeline->add_option("--out", st.out, "output directory")->required();

    CLI11_PARSE(app, argc, argv);

    if (synth->parsed()) {
        rd::Shape shape = rd::shape_from_string(st.shape);
        auto set = rd::generate_synthetic(shape, st.n, st.noise, st.seed, st.samples);
        if (set.clouds.size() == 1) {
            rd::write_file(st.out, rd::save_cloud_csv(set.clouds.front()));
        } else {
            std::filesystem::create_directories(st.out);
            for (std::size_t i = 0; i < set.clouds.size(); ++i) {
                char name[64];
                std::snprintf(name, sizeof name, "/cloud_c%d_s%02d.csv", set.labels[i],
                              int(i) % st.samples);
                rd::write_file(st.out + name, rd::save_cloud_csv(set.clouds[i]));
            }
        }
        return 0;
    }

    if (build->parsed()) {
        auto cloud = rd::load_cloud_csv(rd::read_file(st.input));
        if ((st.knn > 0) == (st.radius_param > 0))
            throw rd::SchemaError("choose exactly one of --knn / --radius");
        auto g = st.knn > 0 ? rd::knn_graph(cloud, st.knn) : rd::radius_graph(cloud, st.radius_param);
        rd::write_file(st.out, rd::save_function_graph(g));
        return 0;
    }

    if (field->parsed()) {
        auto g = load_graph_file(st.graph_path);
        if (fh->parsed()) {
            if (!g.positions) throw rd::SchemaError("height field needs stored positions");
            rd::PointCloud cloud{*g.positions};
            g.assign_scalar_values(rd::height_field(cloud, st.axis));
        } else if (fe->parsed()) {
            if (!g.node_metric) throw rd::SchemaError("eccentricity needs a node metric");
            g.assign_scalar_values(rd::eccentricity_field(*g.node_metric, st.ecc_p));
        } else {
            g.assign_scalar_values(rd::pagerank_field(g, st.damping, st.tol));
        }
        rd::write_file(st.out, rd::save_function_graph(g));
        return 0;
    }

    if (radius->parsed()) {
        auto g = load_graph_file(st.graph_path);
        if (st.source >= 0) {
            auto field_out = rd::reeb_radius_from(g, st.source);
            std::cout << rd::save_matrix_csv({field_out.rho});
        } else if (!st.matrix_out.empty()) {
            rd::write_file(st.matrix_out, rd::save_matrix_csv(rd::reeb_radius_matrix(g)));
        } else {
            throw rd::SchemaError("radius needs --source or --matrix");
        }
        return 0;
    }

    if (quotient->parsed()) {
        auto g = load_graph_file(st.graph_path);
        rd::QuotientSpec spec;
        spec.epsilon = st.epsilon;
        if (st.round_step > 0) spec.round_step = st.round_step;
        rd::write_file(st.out, rd::save_drg(rd::smooth_quotient(g, spec)));
        return 0;
    }

    if (persistence->parsed()) {
        auto cloud = rd::load_cloud_csv(rd::read_file(st.cloud_path));
        auto metric = rd::pairwise_distances(cloud);
        double r_max = st.rmax > 0 ? st.rmax : metric.max_entry();
        auto fc = rd::vr_filtration(metric, r_max, st.dim + 1);
        auto bc = rd::reduce_and_extract(fc, st.dim);
        if (st.out.empty())
            std::cout << rd::save_barcode(bc) << "\n";
        else
            rd::write_file(st.out, rd::save_barcode(bc));
        return 0;
    }

    if (decorate->parsed()) {
        auto g = load_graph_file(st.graph_path);
        auto drg = rd::load_drg(rd::read_file(st.drg_path));
        rd::DecorateOptions options;
        options.schedule = {st.lambda, st.c};
        options.homology_dim = st.dim;
        options.r_max = st.rmax;
        if (!st.image.empty()) options.image = parse_image_spec(st.image, st.sigma);
        if (st.sample > 0 && g.node_metric)
            options.sample = rd::farthest_point_sample(*g.node_metric, st.sample);
        auto report = rd::decorate_all(g, drg, options);
        for (int cls : report.capacity_skipped)
            std::cerr << "capacity exceeded for class " << cls << "; decoration absent\n";
        rd::write_file(st.out, rd::save_drg(drg));
        return 0;
    }

    if (fgw_cmd->parsed()) {
        std::vector<std::string> files;
        for (const auto& entry : std::filesystem::directory_iterator(st.drgs_dir))
            if (entry.path().extension() == ".json") files.push_back(entry.path().string());
        std::sort(files.begin(), files.end());
        if (files.empty()) throw rd::SchemaError("no .json DRGs in " + st.drgs_dir);
        std::vector<rd::DecoratedReebGraph> drgs;
        for (const auto& f : files) drgs.push_back(rd::load_drg(rd::read_file(f)));
        int n = int(drgs.size());
        std::vector<std::vector<double>> dist(n, std::vector<double>(n, 0.0));
        rd::FgwOptions options;
        options.alpha = st.alpha;
        options.ot_eps = st.ot_eps;
        bool all_converged = true;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                auto result = rd::fgw(drgs[i], drgs[j], options);
                dist[i][j] = dist[j][i] = result.value;
                all_converged = all_converged && result.converged;
            }
        rd::write_file(st.out, rd::save_matrix_csv(dist));
        if (!all_converged) {
            std::cerr << "warning: some pairs hit the outer-iteration cap\n";
            return int(rd::errc::nonconvergence);
        }
        return 0;
    }

    if (bn_cmd->parsed()) {
        auto a = rd::load_barcode(rd::read_file(st.a_path));
        auto b = rd::load_barcode(rd::read_file(st.b_path));
        std::cout << rd::save_matrix_csv({{rd::bottleneck(a, b, st.dim)}});
        return 0;
    }

    if (embed->parsed()) {
        auto dist = matrix_from_rows(rd::load_matrix_csv(rd::read_file(st.dist_path)));
        rd::write_file(st.out, rd::save_matrix_csv(rd::mds_embed(dist, st.dims)));
        return 0;
    }

    if (render->parsed()) {
        std::string svg;
        if (!st.graph_path.empty() && st.drg_path.empty()) {
            svg = rd::render_graph_svg(load_graph_file(st.graph_path), st.seed);
        } else if (!st.drg_path.empty()) {
            auto drg = rd::load_drg(rd::read_file(st.drg_path));
            auto base = load_graph_file(st.base_path.empty() ? st.graph_path : st.base_path);
            svg = rd::render_drg_svg(drg, base, st.seed);
        } else if (!st.barcode_path.empty()) {
            svg = rd::render_barcode_svg(rd::load_barcode(rd::read_file(st.barcode_path)));
        } else if (!st.dist_path.empty()) {
            svg = rd::render_matrix_svg(rd::load_matrix_csv(rd::read_file(st.dist_path)));
        } else {
            throw rd::SchemaError("render needs one of --graph / --drg / --barcode / --dist");
        }
        rd::write_file(st.out, svg);
        return 0;
    }

    if (pipeline->parsed()) {
        rd::PipelineConfig config;
        config.input_csv = st.input;
        if (!st.synth_shape.empty()) config.synth_shape = rd::shape_from_string(st.synth_shape);
        config.synth_n = st.n;
        config.synth_noise = st.noise;
        config.seed = st.seed;
        config.knn = st.knn;
        config.radius = st.radius_param;
        if (st.field_kind == "height")
            config.field = rd::FieldKind::height;
        else if (st.field_kind == "ecc")
            config.field = rd::FieldKind::eccentricity;
        else if (st.field_kind == "pagerank")
            config.field = rd::FieldKind::pagerank;
        else
            throw rd::SchemaError("unknown field kind: " + st.field_kind);
        config.height_axis = st.axis;
        config.ecc_p = st.ecc_p;
        config.pagerank_damping = st.damping;
        if (st.round_step > 0) config.round_step = st.round_step;
        config.epsilon = st.epsilon;
        config.schedule = {st.lambda, st.c};
        config.homology_dim = st.dim;
        config.r_max = st.rmax;
        config.vr_sample = st.vr_sample;
        if (!st.image.empty()) config.image = parse_image_spec(st.image, st.sigma);
        config.out_dir = st.out;
        config.write_svg = st.svg;
        auto result = rd::run_pipeline(config);
        std::cout << rd::pipeline_report_text(result);
        return 0;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const rd::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return int(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
