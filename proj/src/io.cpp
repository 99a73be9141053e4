// SPDX-License-Identifier: Apache-2.0

#include "lfs/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace lfs {

namespace {

using nlohmann::json;

std::string replace_all(std::string s, const std::string& from,
                        const std::string& to) {
    std::size_t pos = 0;
    while ((pos = s.find(from, pos)) != std::string::npos) {
        s.replace(pos, from.size(), to);
        pos += to.size();
    }
    return s;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& data) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error("cannot write " + path.string());
    out << data;
}

std::string format_double(double v) {
    std::ostringstream ss;
    ss.precision(6);
    ss << std::fixed << v;
    return ss.str();
}

} // namespace

// ---- dataset ----

std::filesystem::path DatasetConfig::path_for(ViewIndex idx) const {
    std::string name = file_template;
    if (name.find("{i}") != std::string::npos) {
        const int i = row_major ? idx.u * cols + idx.v : idx.v * rows + idx.u;
        name = replace_all(name, "{i}", std::to_string(i));
    } else {
        name = replace_all(name, "{u}", std::to_string(idx.u));
        name = replace_all(name, "{v}", std::to_string(idx.v));
    }
    return root / name;
}

void DatasetConfig::validate() const {
    if (rows < 2 || cols < 2)
        throw Error("DatasetConfig: grid must be at least 2x2");
    const bool running = file_template.find("{i}") != std::string::npos;
    const bool per_axis = file_template.find("{u}") != std::string::npos &&
                          file_template.find("{v}") != std::string::npos;
    if (!running && !per_axis)
        throw Error("DatasetConfig: template needs {u} and {v}, or {i}");
    if (path_for({0, 0}) == path_for({0, 1}))
        throw Error("DatasetConfig: template does not produce unique files");
    if (crop && (crop->width <= 0 || crop->height <= 0))
        throw Error("DatasetConfig: invalid crop");
}

DatasetConfig load_dataset_config(const std::filesystem::path& json_path) {
    json j;
    try {
        j = json::parse(read_file(json_path));
    } catch (const json::parse_error& e) {
        throw Error("dataset config: " + std::string(e.what()));
    }
    DatasetConfig c;
    c.root = j.value("root", std::string("."));
    if (c.root.is_relative())
        c.root = json_path.parent_path() / c.root;
    c.rows = j.at("rows").get<int>();
    c.cols = j.at("cols").get<int>();
    c.file_template = j.value("template", std::string("v{u}_{v}.png"));
    c.row_major = j.value("order", std::string("row-major")) != "column-major";
    if (j.contains("crop") && !j["crop"].is_null())
        c.crop = CropSpec{j["crop"].at("w").get<int>(),
                          j["crop"].at("h").get<int>()};
    c.validate();
    return c;
}

void save_dataset_config(const DatasetConfig& config,
                         const std::filesystem::path& json_path) {
    json j{{"root", config.root.string()},
           {"rows", config.rows},
           {"cols", config.cols},
           {"template", config.file_template},
           {"order", config.row_major ? "row-major" : "column-major"}};
    if (config.crop)
        j["crop"] = {{"w", config.crop->width}, {"h", config.crop->height}};
    write_file(json_path, j.dump(2) + "\n");
}

LightField load_lightfield(const DatasetConfig& config) {
    config.validate();
    LightField lf(config.rows, config.cols);
    for (int u = 0; u < config.rows; ++u) {
        for (int v = 0; v < config.cols; ++v) {
            const auto path = config.path_for({u, v});
            if (!std::filesystem::exists(path))
                throw Error("load_lightfield: missing view (" +
                            std::to_string(u) + "," + std::to_string(v) +
                            "): " + path.string());
            ViewImage img = read_png(path);
            if (config.crop)
                img = img.center_crop(config.crop->width, config.crop->height);
            lf.set_view({u, v}, std::move(img));
        }
    }
    return lf;
}

namespace {
void save_views(const LightField& lf, const std::filesystem::path& root,
                const std::string& file_template, bool require_complete) {
    DatasetConfig c;
    c.root = root;
    c.rows = lf.rows();
    c.cols = lf.cols();
    c.file_template = file_template;
    c.validate();
    if (require_complete && !lf.complete()) {
        std::string msg = "save_lightfield: empty slots:";
        for (ViewIndex idx : lf.empty_slots())
            msg += " (" + std::to_string(idx.u) + "," + std::to_string(idx.v) + ")";
        throw Error(msg);
    }
    std::filesystem::create_directories(root);
    for (int u = 0; u < lf.rows(); ++u)
        for (int v = 0; v < lf.cols(); ++v)
            if (lf.has_view({u, v}))
                write_png(c.path_for({u, v}), lf.view({u, v}));
}
} // namespace

void save_lightfield(const LightField& lf, const std::filesystem::path& root,
                     const std::string& file_template) {
    save_views(lf, root, file_template, true);
}

void save_lightfield_sparse(const LightField& lf,
                            const std::filesystem::path& root,
                            const std::string& file_template) {
    save_views(lf, root, file_template, false);
}

// ---- mask ----

std::string mask_to_text(const ViewMask& mask) {
    std::ostringstream ss;
    ss << mask.rows() << " " << mask.cols() << "\n";
    for (int u = 0; u < mask.rows(); ++u) {
        for (int v = 0; v < mask.cols(); ++v) {
            switch (mask.role({u, v})) {
            case ViewRole::Input:  ss << 'I'; break;
            case ViewRole::Output: ss << 'O'; break;
            case ViewRole::Unused: ss << 'U'; break;
            }
        }
        ss << "\n";
    }
    return ss.str();
}

ViewMask mask_from_text(const std::string& text) {
    std::istringstream in(text);
    int rows = 0, cols = 0;
    std::string header;
    if (!std::getline(in, header))
        throw Error("mask parse error at line 1: empty input");
    {
        std::istringstream hs(header);
        if (!(hs >> rows >> cols) || rows < 1 || cols < 1)
            throw Error("mask parse error at line 1: expected \"rows cols\"");
    }
    ViewMask mask(rows, cols);
    for (int u = 0; u < rows; ++u) {
        std::string line;
        if (!std::getline(in, line))
            throw Error("mask parse error at line " + std::to_string(u + 2) +
                        ": missing row");
        if (static_cast<int>(line.size()) != cols)
            throw Error("mask parse error at line " + std::to_string(u + 2) +
                        ": expected " + std::to_string(cols) + " characters");
        for (int v = 0; v < cols; ++v) {
            switch (line[v]) {
            case 'I': mask.set_role({u, v}, ViewRole::Input); break;
            case 'O': mask.set_role({u, v}, ViewRole::Output); break;
            case 'U': mask.set_role({u, v}, ViewRole::Unused); break;
            default:
                throw Error("mask parse error at line " + std::to_string(u + 2) +
                            ": bad role character '" + line[v] + "'");
            }
        }
    }
    if (mask.count(ViewRole::Input) < 2)
        throw Error("mask parse error: fewer than 2 Input views");
    return mask;
}

void save_mask(const ViewMask& mask, const std::filesystem::path& path) {
    write_file(path, mask_to_text(mask));
}

ViewMask load_mask(const std::filesystem::path& path) {
    return mask_from_text(read_file(path));
}

// ---- plan ----

namespace {
InterpMode mode_from_name(const std::string& name, int line) {
    for (InterpMode m :
         {InterpMode::PairHorizontal, InterpMode::PairVertical,
          InterpMode::PairDiagonalTLBR, InterpMode::PairDiagonalTRBL,
          InterpMode::Quad})
        if (name == interp_mode_name(m)) return m;
    throw Error("plan parse error at line " + std::to_string(line) +
                ": unknown mode '" + name + "'");
}
} // namespace

std::string plan_to_text(const ReconstructionPlan& plan) {
    std::ostringstream ss;
    for (std::size_t si = 0; si < plan.stages.size(); ++si) {
        for (const SynthesisStep& step : plan.stages[si].steps) {
            ss << si << " " << step.target.u << " " << step.target.v << " "
               << interp_mode_name(step.mode);
            for (ViewIndex src : step.sources)
                ss << " " << src.u << " " << src.v;
            ss << "\n";
        }
    }
    return ss.str();
}

ReconstructionPlan plan_from_text(const std::string& text, const ViewMask& mask,
                                  const std::string& strategy_id) {
    ReconstructionPlan plan{strategy_id, mask, {}, 0};
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ls(line);
        int stage = 0;
        SynthesisStep step;
        std::string mode;
        if (!(ls >> stage >> step.target.u >> step.target.v >> mode))
            throw Error("plan parse error at line " + std::to_string(lineno));
        step.mode = mode_from_name(mode, lineno);
        ViewIndex src;
        while (ls >> src.u >> src.v)
            step.sources.push_back(src);
        const std::size_t want = step.mode == InterpMode::Quad ? 4u : 2u;
        if (step.sources.size() != want)
            throw Error("plan parse error at line " + std::to_string(lineno) +
                        ": wrong source count");
        if (stage < 0)
            throw Error("plan parse error at line " + std::to_string(lineno) +
                        ": negative stage");
        if (static_cast<std::size_t>(stage) >= plan.stages.size())
            plan.stages.resize(stage + 1);
        plan.stages[stage].steps.push_back(std::move(step));
    }
    return plan;
}

// ---- report ----

std::string report_csv_rows(const MetricsReport& report) {
    std::ostringstream ss;
    for (const ViewScore& s : report.scores) {
        ss << report.strategy << "," << report.interpolator << ","
           << report.level << "," << s.view.u << "," << s.view.v << ","
           << (s.psnr_infinite ? std::string("inf") : format_double(s.psnr_db))
           << "," << format_double(s.ssim) << "\n";
    }
    return ss.str();
}

std::string report_summary_json(const MetricsReport& report) {
    const Aggregate& a = report.aggregate;
    json j{{"strategy", report.strategy},
           {"interpolator", report.interpolator},
           {"level", report.level},
           {"mode", eval_mode_name(report.mode)},
           {"view_count", a.view_count},
           {"mean_psnr_db",
            a.psnr_infinite ? json("inf") : json(a.mean_psnr_db)},
           {"psnr_excluded", a.psnr_excluded},
           {"mean_ssim", a.mean_ssim}};
    return j.dump(2) + "\n";
}

void save_report(const MetricsReport& report,
                 const std::filesystem::path& csv_path,
                 const std::filesystem::path& json_path) {
    write_file(csv_path,
               std::string(kReportCsvHeader) + "\n" + report_csv_rows(report));
    write_file(json_path, report_summary_json(report));
}

// ---- scene spec ----

namespace {

std::array<std::uint8_t, 3> color_from(const json& j) {
    if (!j.is_array() || j.size() != 3)
        throw Error("scene spec: color must be [r,g,b]");
    return {j[0].get<std::uint8_t>(), j[1].get<std::uint8_t>(),
            j[2].get<std::uint8_t>()};
}

TextureSpec texture_from(const json& j) {
    TextureSpec t;
    const std::string kind = j.value("kind", std::string("solid"));
    if (kind == "solid")        t.kind = TextureSpec::Kind::Solid;
    else if (kind == "stripes") t.kind = TextureSpec::Kind::Stripes;
    else if (kind == "checker") t.kind = TextureSpec::Kind::Checker;
    else if (kind == "sine")    t.kind = TextureSpec::Kind::SineMix;
    else if (kind == "noise")   t.kind = TextureSpec::Kind::Noise;
    else throw Error("scene spec: unknown texture kind '" + kind + "'");
    t.period = j.value("period", 16);
    if (t.period < 2)
        throw Error("scene spec: texture period must be >= 2");
    if (j.contains("color_a")) t.color_a = color_from(j["color_a"]);
    if (j.contains("color_b")) t.color_b = color_from(j["color_b"]);
    t.seed = j.value("seed", 0u);
    return t;
}

RegionSpec region_from(const json& j) {
    RegionSpec r;
    const std::string kind = j.value("kind", std::string("full"));
    if (kind == "full") {
        r.kind = RegionSpec::Kind::Full;
    } else if (kind == "rect") {
        r.kind = RegionSpec::Kind::Rect;
        r.x = j.at("x").get<double>();
        r.y = j.at("y").get<double>();
        r.w = j.at("w").get<double>();
        r.h = j.at("h").get<double>();
    } else if (kind == "disc") {
        r.kind = RegionSpec::Kind::Disc;
        r.x = j.at("x").get<double>();
        r.y = j.at("y").get<double>();
        r.radius = j.at("radius").get<double>();
    } else {
        throw Error("scene spec: unknown region kind '" + kind + "'");
    }
    return r;
}

} // namespace

SyntheticSceneSpec load_scene_spec(const std::filesystem::path& json_path) {
    json j;
    try {
        j = json::parse(read_file(json_path));
    } catch (const json::parse_error& e) {
        throw Error("scene spec: " + std::string(e.what()));
    }
    SyntheticSceneSpec spec;
    if (j.contains("background"))
        spec.background = color_from(j["background"]);
    for (const json& lj : j.value("layers", json::array())) {
        LayerSpec layer;
        layer.disparity = lj.value("disparity", 0.0);
        if (lj.contains("texture")) layer.texture = texture_from(lj["texture"]);
        if (lj.contains("region")) layer.region = region_from(lj["region"]);
        spec.layers.push_back(layer);
    }
    return spec;
}

} // namespace lfs
