#include "reebdeco/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace reebdeco {

using nlohmann::json;

namespace {

json parse(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw SchemaError("invalid JSON");
    return doc;
}

double as_finite_double(const json& j, const char* what) {
    if (!j.is_number()) throw SchemaError(std::string("expected number for ") + what);
    double v = j.get<double>();
    if (!std::isfinite(v)) throw SchemaError(std::string("non-finite ") + what);
    return v;
}

std::vector<std::pair<int, int>> read_edges(const json& j, const char* what) {
    if (!j.is_array()) throw SchemaError(std::string(what) + " must be an array");
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            throw SchemaError(std::string(what) + " entries must be index pairs");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return edges;
}

json dump_edges(const std::vector<std::pair<int, int>>& edges) {
    json out = json::array();
    for (auto [a, b] : edges) out.push_back(json::array({a, b}));
    return out;
}

json dump_interval(const Interval& iv) {
    json j;
    j["dim"] = iv.dim;
    j["birth"] = iv.birth;
    if (iv.open)
        j["death"] = json{{"open_at", iv.death}};
    else
        j["death"] = iv.death;
    return j;
}

Interval read_interval(const json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("birth") || !j.contains("death"))
        throw SchemaError("barcode interval must have dim/birth/death");
    Interval iv;
    iv.dim = j.at("dim").get<int>();
    iv.birth = as_finite_double(j.at("birth"), "birth");
    const auto& death = j.at("death");
    if (death.is_object()) {
        if (!death.contains("open_at")) throw SchemaError("open death must carry open_at");
        iv.death = as_finite_double(death.at("open_at"), "open_at");
        iv.open = true;
    } else {
        iv.death = as_finite_double(death, "death");
    }
    if (iv.dim < 0 || iv.birth < 0 || iv.death < iv.birth)
        throw SchemaError("interval violates 0 <= birth <= death");
    return iv;
}

json dump_barcode_array(const Barcode& bc) {
    json arr = json::array();
    for (const auto& iv : bc.intervals) arr.push_back(dump_interval(iv));
    return arr;
}

Barcode read_barcode_array(const json& arr) {
    if (!arr.is_array()) throw SchemaError("barcode must be an array");
    Barcode bc;
    for (const auto& j : arr) bc.intervals.push_back(read_interval(j));
    return bc;
}

json dump_image(const PersistenceImage& img) {
    json j;
    j["resolution"] = json::array({img.rows, img.cols});
    j["birth_range"] = json::array({img.birth_min, img.birth_max});
    j["pers_range"] = json::array({img.pers_min, img.pers_max});
    j["sigma"] = img.sigma;
    j["pixels"] = img.pixels;
    return j;
}

PersistenceImage read_image(const json& j) {
    PersistenceImage img;
    img.rows = j.at("resolution").at(0).get<int>();
    img.cols = j.at("resolution").at(1).get<int>();
    img.birth_min = as_finite_double(j.at("birth_range").at(0), "birth_range");
    img.birth_max = as_finite_double(j.at("birth_range").at(1), "birth_range");
    img.pers_min = as_finite_double(j.at("pers_range").at(0), "pers_range");
    img.pers_max = as_finite_double(j.at("pers_range").at(1), "pers_range");
    img.sigma = as_finite_double(j.at("sigma"), "sigma");
    img.pixels = j.at("pixels").get<std::vector<double>>();
    if (img.rows <= 0 || img.cols <= 0 ||
        img.pixels.size() != std::size_t(img.rows) * std::size_t(img.cols))
        throw SchemaError("image resolution / pixel count mismatch");
    for (double p : img.pixels)
        if (!std::isfinite(p) || p < 0) throw SchemaError("image pixels must be nonnegative");
    return img;
}

}  // namespace

FunctionGraph load_function_graph(const std::string& json_text) {
    json doc = parse(json_text);
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges") || !doc.contains("values"))
        throw SchemaError("graph document needs n, edges, values");
    FunctionGraph g;
    if (!doc.at("n").is_number_integer()) throw SchemaError("n must be an integer");
    g.n = doc.at("n").get<int>();
    if (g.n <= 0) throw SchemaError("n must be positive");

    auto raw_edges = read_edges(doc.at("edges"), "edges");
    for (auto& [a, b] : raw_edges) {
        if (a < 0 || b < 0 || a >= g.n || b >= g.n) throw SchemaError("edge index out of range");
        if (a == b) throw NonSimpleError("loop edge");
        if (a > b) std::swap(a, b);
    }
    std::sort(raw_edges.begin(), raw_edges.end());
    for (std::size_t i = 1; i < raw_edges.size(); ++i)
        if (raw_edges[i] == raw_edges[i - 1]) throw NonSimpleError("duplicate edge");
    g.edges = std::move(raw_edges);

    const auto& values = doc.at("values");
    if (!values.is_null()) {
        if (!values.is_array() || int(values.size()) != g.n)
            throw SchemaError("values must list one vector per node");
        for (int v = 0; v < g.n; ++v) {
            const auto& row = values.at(v);
            if (!row.is_array() || row.empty()) throw SchemaError("value rows must be nonempty arrays");
            if (v == 0) g.value_dim = int(row.size());
            if (int(row.size()) != g.value_dim) throw SchemaError("inconsistent value dimension");
            for (const auto& x : row) g.values.push_back(as_finite_double(x, "value"));
        }
    }

    if (doc.contains("metric") && !doc.at("metric").is_null()) {
        const auto& m = doc.at("metric");
        if (!m.is_array() || int(m.size()) != g.n) throw SchemaError("metric must be an n x n array");
        SymMatrix metric(g.n);
        for (int i = 0; i < g.n; ++i) {
            const auto& row = m.at(i);
            if (!row.is_array() || int(row.size()) != g.n) throw SchemaError("metric row length mismatch");
            for (int j = 0; j < g.n; ++j)
                if (j > i) metric.set(i, j, as_finite_double(row.at(j), "metric"));
        }
        // Verify the lower triangle agrees before discarding it.
        for (int i = 0; i < g.n; ++i)
            for (int j = 0; j < g.n; ++j) {
                double given = as_finite_double(m.at(i).at(j), "metric");
                if (std::abs(given - metric.at(i, j)) > 1e-9) throw SchemaError("metric not symmetric");
            }
        g.node_metric = std::move(metric);
    }

    if (doc.contains("positions") && !doc.at("positions").is_null()) {
        const auto& p = doc.at("positions");
        if (!p.is_array() || int(p.size()) != g.n) throw SchemaError("positions must list one row per node");
        std::vector<std::vector<double>> pos(g.n);
        for (int i = 0; i < g.n; ++i)
            for (const auto& x : p.at(i)) pos[i].push_back(as_finite_double(x, "position"));
        g.positions = std::move(pos);
    }

    g.validate();
    return g;
}

std::string save_function_graph(const FunctionGraph& graph) {
    json doc;
    doc["n"] = graph.n;
    doc["edges"] = dump_edges(graph.edges);
    if (graph.has_values()) {
        json values = json::array();
        for (int v = 0; v < graph.n; ++v) {
            auto row = graph.value(v);
            values.push_back(json(std::vector<double>(row.begin(), row.end())));
        }
        doc["values"] = values;
    } else {
        doc["values"] = nullptr;
    }
    if (graph.node_metric) {
        json m = json::array();
        for (int i = 0; i < graph.n; ++i) {
            json row = json::array();
            for (int j = 0; j < graph.n; ++j) row.push_back(graph.node_metric->at(i, j));
            m.push_back(row);
        }
        doc["metric"] = m;
    } else {
        doc["metric"] = nullptr;
    }
    doc["positions"] = graph.positions ? json(*graph.positions) : json(nullptr);
    return doc.dump(2);
}

DecoratedReebGraph load_drg(const std::string& json_text) {
    json doc = parse(json_text);
    for (const char* key : {"classes", "representative", "class_of", "edges", "metric",
                            "decorations", "params"})
        if (!doc.is_object() || !doc.contains(key))
            throw SchemaError(std::string("drg document needs ") + key);

    DecoratedReebGraph drg;
    drg.class_count = doc.at("classes").get<int>();
    if (drg.class_count <= 0) throw SchemaError("classes must be positive");
    drg.representative = doc.at("representative").get<std::vector<int>>();
    drg.class_of = doc.at("class_of").get<std::vector<int>>();
    drg.edges = read_edges(doc.at("edges"), "edges");

    const auto& metric = doc.at("metric");
    std::size_t expect = std::size_t(drg.class_count) * (drg.class_count - 1) / 2;
    if (!metric.is_array() || metric.size() != expect)
        throw SchemaError("metric must be the condensed upper triangle");
    drg.quotient_metric = SymMatrix(drg.class_count);
    std::size_t pos = 0;
    for (int i = 0; i < drg.class_count; ++i)
        for (int j = i + 1; j < drg.class_count; ++j)
            drg.quotient_metric.set(i, j, as_finite_double(metric.at(pos++), "metric"));

    const auto& decos = doc.at("decorations");
    if (!decos.is_array() || int(decos.size()) != drg.class_count)
        throw SchemaError("decorations must list one entry per class");
    for (const auto& d : decos) {
        if (d.is_null())
            drg.decorations.emplace_back(std::nullopt);
        else if (d.is_object() && d.contains("barcode"))
            drg.decorations.emplace_back(read_barcode_array(d.at("barcode")));
        else if (d.is_object() && d.contains("image"))
            drg.decorations.emplace_back(read_image(d.at("image")));
        else
            throw SchemaError("decoration must be null, barcode or image");
    }

    const auto& params = doc.at("params");
    if (!params.is_object() || !params.contains("epsilon")) throw SchemaError("params needs epsilon");
    drg.params.epsilon = as_finite_double(params.at("epsilon"), "epsilon");
    auto opt_double = [&](const char* key) -> std::optional<double> {
        if (!params.contains(key) || params.at(key).is_null()) return std::nullopt;
        return as_finite_double(params.at(key), key);
    };
    drg.params.round_step = opt_double("round_step");
    drg.params.lambda = opt_double("lambda");
    drg.params.c = opt_double("c");
    drg.params.r_max = opt_double("r_max");
    if (params.contains("k") && !params.at("k").is_null())
        drg.params.homology_dim = params.at("k").get<int>();

    drg.validate();
    return drg;
}

std::string save_drg(const DecoratedReebGraph& drg) {
    json doc;
    doc["classes"] = drg.class_count;
    doc["representative"] = drg.representative;
    doc["class_of"] = drg.class_of;
    doc["edges"] = dump_edges(drg.edges);
    json metric = json::array();
    for (int i = 0; i < drg.class_count; ++i)
        for (int j = i + 1; j < drg.class_count; ++j) metric.push_back(drg.quotient_metric.at(i, j));
    doc["metric"] = metric;

    json decos = json::array();
    for (int cls = 0; cls < drg.class_count; ++cls) {
        if (drg.decorations.empty() || !drg.decorations[cls]) {
            decos.push_back(nullptr);
        } else if (const Barcode* bc = std::get_if<Barcode>(&*drg.decorations[cls])) {
            decos.push_back(json{{"barcode", dump_barcode_array(*bc)}});
        } else {
            decos.push_back(json{{"image", dump_image(std::get<PersistenceImage>(*drg.decorations[cls]))}});
        }
    }
    doc["decorations"] = decos;

    json params;
    params["epsilon"] = drg.params.epsilon;
    params["round_step"] = drg.params.round_step ? json(*drg.params.round_step) : json(nullptr);
    params["lambda"] = drg.params.lambda ? json(*drg.params.lambda) : json(nullptr);
    params["c"] = drg.params.c ? json(*drg.params.c) : json(nullptr);
    params["k"] = drg.params.homology_dim ? json(*drg.params.homology_dim) : json(nullptr);
    params["r_max"] = drg.params.r_max ? json(*drg.params.r_max) : json(nullptr);
    doc["params"] = params;
    return doc.dump(2);
}

Barcode load_barcode(const std::string& json_text) { return read_barcode_array(parse(json_text)); }

std::string save_barcode(const Barcode& barcode) { return dump_barcode_array(barcode).dump(2); }

namespace {

bool numeric_row(const std::string& line) {
    char* end = nullptr;
    std::strtod(line.c_str(), &end);
    return end != line.c_str();
}

std::vector<double> parse_csv_row(const std::string& line, int line_no) {
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
        char* end = nullptr;
        double v = std::strtod(cell.c_str(), &end);
        if (end == cell.c_str() || !std::isfinite(v))
            throw SchemaError("bad CSV number at line " + std::to_string(line_no));
        row.push_back(v);
    }
    return row;
}

}  // namespace

PointCloud load_cloud_csv(const std::string& text) {
    PointCloud cloud;
    std::stringstream ss(text);
    std::string line;
    int line_no = 0;
    while (std::getline(ss, line)) {
        ++line_no;
        if (line.empty() || line == "\r") continue;
        if (line_no == 1 && !numeric_row(line)) continue;  // header
        cloud.points.push_back(parse_csv_row(line, line_no));
    }
    cloud.validate();
    return cloud;
}

namespace {

// Shortest decimal that parses back to the same double.
std::string format_double(double v) {
    char buf[40];
    for (int prec = 1; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof buf, "%.*g", prec, v);
        if (std::strtod(buf, nullptr) == v) return buf;
    }
    return buf;
}

}  // namespace

std::string save_cloud_csv(const PointCloud& cloud) {
    std::string out;
    for (const auto& p : cloud.points) {
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (i) out += ',';
            out += format_double(p[i]);
        }
        out += '\n';
    }
    return out;
}

std::vector<std::vector<double>> load_matrix_csv(const std::string& text) {
    auto cloud_like = load_cloud_csv(text);
    return cloud_like.points;
}

std::string save_matrix_csv(const std::vector<std::vector<double>>& rows) {
    PointCloud c;
    c.points = rows;
    return save_cloud_csv(c);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SchemaError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(errc::other, "cannot write " + path);
    out << content;
}

}  // namespace reebdeco
