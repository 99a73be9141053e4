// SPDX-License-Identifier: Apache-2.0
//
// Command-line harness: synthetic generation, subsampling, plan inspection,
// reconstruction, evaluation, and the full experiment sweep.

#include <CLI11.hpp>
#include <json.hpp>

#include <future>
#include <iostream>

#include "lfs/interpolate.hpp"
#include "lfs/io.hpp"
#include "lfs/metrics.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace lfs;

namespace {

PatternKind parse_pattern(const std::string& name) {
    if (name == "row") return PatternKind::row_wise();
    if (name == "col") return PatternKind::column_wise();
    if (name == "checker") return PatternKind::checkerboard();
    if (name == "level1") return PatternKind::grid_level(1);
    if (name == "level2") return PatternKind::grid_level(2);
    if (name == "level3") return PatternKind::grid_level(3);
    throw Error("unknown pattern '" + name +
                "' (expected row|col|checker|level1|level2|level3)");
}

CornerStrategy parse_corner_strategy(const std::string& name) {
    if (name == "hv") return CornerStrategy::HV;
    if (name == "vh") return CornerStrategy::VH;
    if (name == "omni") return CornerStrategy::Omni;
    if (name == "diag4") return CornerStrategy::Diag4;
    if (name == "ldiag") return CornerStrategy::LeftDiag;
    if (name == "rdiag") return CornerStrategy::RightDiag;
    throw Error("unknown strategy '" + name +
                "' (expected hv|vh|omni|diag4|ldiag|rdiag)");
}

InterpolatorSpec parse_interp(const std::string& text) {
    if (text == "linear") return InterpolatorSpec::linear();
    if (text == "shift") return InterpolatorSpec::shift();
    if (text.rfind("shift:", 0) == 0) {
        int bs = 16, r = 8;
        if (std::sscanf(text.c_str(), "shift:%d:%d", &bs, &r) != 2)
            throw Error("bad shift spec '" + text + "' (want shift:BLOCK:RADIUS)");
        return InterpolatorSpec::shift(bs, r);
    }
    if (text.rfind("ext:", 0) == 0)
        return InterpolatorSpec::external(text.substr(4));
    throw Error("unknown interpolator '" + text +
                "' (expected linear|shift|shift:B:R|ext:CMD)");
}

EvalMode parse_mode(const std::string& name) {
    if (name == "synth") return EvalMode::SynthesizedOnly;
    if (name == "all") return EvalMode::AllViews;
    if (name == "central") return EvalMode::CentralOnly;
    throw Error("unknown mode '" + name + "' (expected synth|all|central)");
}

ReconstructionPlan plan_for(PatternKind pattern, CornerStrategy strategy,
                            const ViewMask& mask) {
    if (pattern.tag == PatternKind::Tag::GridLevel) {
        ReconstructionPlan plan = build_recursive_plan(
            pattern.level, strategy, mask.rows(), mask.cols());
        if (!(plan.mask == mask))
            throw Error("mask file does not match the requested grid level");
        return plan;
    }
    return build_basic_plan(pattern, mask);
}

std::string interp_label(const InterpolatorSpec& spec) {
    switch (spec.kind) {
    case InterpolatorSpec::Kind::Linear: return "linear";
    case InterpolatorSpec::Kind::ShiftCompensated:
        return "shift(" + std::to_string(spec.block_size) + "," +
               std::to_string(spec.search_radius) + ")";
    case InterpolatorSpec::Kind::External: return "external";
    }
    return "?";
}

// ---- subcommand bodies ----

void cmd_generate(const fs::path& scene_path, int rows, int cols, int width,
                  int height, const fs::path& out) {
    const SyntheticSceneSpec spec = load_scene_spec(scene_path);
    const LightField lf = generate_synthetic_lf(spec, rows, cols, width, height);
    save_lightfield(lf, out, "v{u}_{v}.png");
    DatasetConfig config;
    config.root = ".";  // relative to dataset.json
    config.rows = rows;
    config.cols = cols;
    save_dataset_config(config, out / "dataset.json");
    std::cout << "wrote " << rows * cols << " views to " << out.string() << "\n";
}

void cmd_sample(const fs::path& dataset_path, const std::string& pattern_name,
                const fs::path& out) {
    const PatternKind pattern = parse_pattern(pattern_name);
    const DatasetConfig config = load_dataset_config(dataset_path);
    const LightField lf = load_lightfield(config);
    const ViewMask mask = generate_pattern(pattern, lf.rows(), lf.cols());
    const LightField sparse = subsample(lf, mask);

    save_lightfield_sparse(sparse, out, "v{u}_{v}.png");
    save_mask(mask, out / "mask.txt");
    DatasetConfig sparse_config;
    sparse_config.root = ".";
    sparse_config.rows = lf.rows();
    sparse_config.cols = lf.cols();
    save_dataset_config(sparse_config, out / "dataset.json");

    std::cout << "pattern " << pattern_name << ": " << mask.count(ViewRole::Input)
              << " input views, IR = " << compute_input_ratio(mask) * 100.0
              << "%\n";
}

void cmd_plan(const std::string& pattern_name, const std::string& strategy_name,
              const fs::path& mask_path, int rows, int cols) {
    const PatternKind pattern = parse_pattern(pattern_name);
    const CornerStrategy strategy = parse_corner_strategy(strategy_name);
    ViewMask mask = mask_path.empty()
                        ? generate_pattern(pattern, rows, cols)
                        : load_mask(mask_path);
    const ReconstructionPlan plan = plan_for(pattern, strategy, mask);
    const auto violations = validate_plan(plan);
    if (!violations.empty()) {
        for (const std::string& v : violations)
            std::cerr << "violation: " << v << "\n";
        throw Error("plan validation failed");
    }
    std::cout << plan_to_text(plan);
}

void cmd_reconstruct(const fs::path& dataset_path, const fs::path& mask_path,
                     const std::string& pattern_name,
                     const std::string& strategy_name,
                     const std::string& interp_name, const fs::path& out) {
    const DatasetConfig config = load_dataset_config(dataset_path);
    const ViewMask mask = load_mask(mask_path);
    const ReconstructionPlan plan = plan_for(
        parse_pattern(pattern_name), parse_corner_strategy(strategy_name), mask);

    LightField sparse(config.rows, config.cols);
    for (ViewIndex in : mask.positions(ViewRole::Input)) {
        ViewImage img = read_png(config.path_for(in));
        if (config.crop)
            img = img.center_crop(config.crop->width, config.crop->height);
        sparse.set_view(in, std::move(img));
    }

    const Interpolator interp{parse_interp(interp_name)};
    const LightField rec = execute_plan(sparse, plan, interp);
    save_lightfield(rec, out, "v{u}_{v}.png");
    DatasetConfig rec_config;
    rec_config.root = ".";
    rec_config.rows = rec.rows();
    rec_config.cols = rec.cols();
    save_dataset_config(rec_config, out / "dataset.json");
    std::cout << "reconstructed " << plan.step_count() << " views ("
              << plan.strategy_id << ", " << interp_name << ")\n";
}

void cmd_evaluate(const fs::path& rec_path, const fs::path& truth_path,
                  const fs::path& mask_path, const std::string& mode_name,
                  const fs::path& out) {
    const LightField rec = load_lightfield(load_dataset_config(rec_path));
    const LightField truth = load_lightfield(load_dataset_config(truth_path));
    const ViewMask mask = load_mask(mask_path);
    MetricsReport report =
        score_reconstruction(rec, truth, mask, parse_mode(mode_name));
    fs::create_directories(out);
    save_report(report, out / "report.csv", out / "summary.json");
    if (report.aggregate.psnr_infinite)
        std::cout << "mean PSNR: inf";
    else
        std::cout << "mean PSNR: " << report.aggregate.mean_psnr_db << " dB";
    std::cout << ", mean SSIM: " << report.aggregate.mean_ssim << "\n";
}

// ---- sweep ----

struct SweepCombination {
    std::string dataset_path;
    std::string strategy;  // row|col|checker|hv|vh|omni|diag4|ldiag|rdiag
    int level = 0;         // 0 for basic strategies
};

struct SweepResult {
    SweepCombination combo;
    bool skipped = false;
    std::string skip_reason;
    MetricsReport report;
};

bool is_basic(const std::string& s) {
    return s == "row" || s == "col" || s == "checker";
}

SweepResult run_combination(const SweepCombination& combo,
                            const InterpolatorSpec& interp_spec,
                            EvalMode mode) {
    SweepResult result;
    result.combo = combo;

    const DatasetConfig config = load_dataset_config(combo.dataset_path);
    const LightField truth = load_lightfield(config);

    ReconstructionPlan plan{{}, ViewMask(1, 1), {}, 0};
    try {
        if (is_basic(combo.strategy)) {
            const PatternKind kind = parse_pattern(combo.strategy);
            plan = build_basic_plan(
                kind, generate_pattern(kind, truth.rows(), truth.cols()));
        } else {
            plan = build_recursive_plan(combo.level,
                                        parse_corner_strategy(combo.strategy),
                                        truth.rows(), truth.cols());
        }
    } catch (const Error& e) {
        result.skipped = true;
        result.skip_reason = e.what();
        return result;
    }

    const LightField sparse = subsample(truth, plan.mask);
    const LightField rec =
        execute_plan(sparse, plan, Interpolator{interp_spec});
    result.report = score_reconstruction(rec, truth, plan.mask, mode);
    result.report.strategy = plan.strategy_id;
    result.report.interpolator = interp_label(interp_spec);
    result.report.level = combo.level;
    return result;
}

void cmd_sweep(const fs::path& spec_path, const fs::path& out, int jobs) {
    json j;
    {
        std::ifstream in(spec_path);
        if (!in)
            throw Error("cannot open sweep spec " + spec_path.string());
        try {
            in >> j;
        } catch (const json::parse_error& e) {
            throw Error("sweep spec: " + std::string(e.what()));
        }
    }

    std::vector<std::string> datasets;
    if (j.contains("dataset"))
        datasets.push_back(j["dataset"].get<std::string>());
    for (const json& d : j.value("datasets", json::array()))
        datasets.push_back(d.get<std::string>());
    if (datasets.empty())
        throw Error("sweep spec: no datasets");
    // relative dataset paths resolve against the spec file
    for (std::string& d : datasets) {
        fs::path p = d;
        if (p.is_relative()) d = (spec_path.parent_path() / p).string();
    }

    const auto strategies =
        j.value("strategies", std::vector<std::string>{"row", "col", "checker"});
    const auto levels = j.value("levels", std::vector<int>{1});
    const InterpolatorSpec interp_spec =
        parse_interp(j.value("interpolator", std::string("linear")));
    const EvalMode mode = parse_mode(j.value("mode", std::string("synth")));

    std::vector<SweepCombination> combos;
    for (const std::string& dataset : datasets) {
        for (const std::string& strategy : strategies) {
            if (is_basic(strategy)) {
                combos.push_back({dataset, strategy, 0});
            } else {
                for (int level : levels)
                    combos.push_back({dataset, strategy, level});
            }
        }
    }

    // run up to `jobs` combinations concurrently; merge in fixed order
    std::vector<SweepResult> results(combos.size());
    if (jobs < 1) jobs = 1;
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= combos.size()) return;
            try {
                results[i] = run_combination(combos[i], interp_spec, mode);
            } catch (const Error& e) {
                results[i].combo = combos[i];
                results[i].skipped = true;
                results[i].skip_reason = e.what();
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < std::min<int>(jobs, static_cast<int>(combos.size())); ++t)
        pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();

    fs::create_directories(out);
    std::ofstream csv(out / "sweep.csv");
    csv << kReportCsvHeader << "\n";
    json summary = json::array();
    std::ofstream plot(out / "psnr_vs_level.csv");
    plot << "dataset,strategy,level,mean_psnr_db\n";

    for (const SweepResult& r : results) {
        if (r.skipped) {
            summary.push_back({{"dataset", r.combo.dataset_path},
                               {"strategy", r.combo.strategy},
                               {"level", r.combo.level},
                               {"skipped", true},
                               {"reason", r.skip_reason}});
            std::cerr << "skipped " << r.combo.strategy << " level "
                      << r.combo.level << ": " << r.skip_reason << "\n";
            continue;
        }
        csv << report_csv_rows(r.report);
        const Aggregate& a = r.report.aggregate;
        summary.push_back(
            {{"dataset", r.combo.dataset_path},
             {"strategy", r.report.strategy},
             {"interpolator", r.report.interpolator},
             {"level", r.report.level},
             {"mode", eval_mode_name(r.report.mode)},
             {"view_count", a.view_count},
             {"mean_psnr_db", a.psnr_infinite ? json("inf") : json(a.mean_psnr_db)},
             {"psnr_excluded", a.psnr_excluded},
             {"mean_ssim", a.mean_ssim}});
        if (r.combo.level > 0)
            plot << r.combo.dataset_path << "," << r.report.strategy << ","
                 << r.combo.level << ","
                 << (a.psnr_infinite ? std::string("inf")
                                     : std::to_string(a.mean_psnr_db))
                 << "\n";
    }
    std::ofstream(out / "summary.json") << summary.dump(2) << "\n";
    std::cout << "sweep: " << results.size() << " combinations -> "
              << (out / "sweep.csv").string() << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Light field subsampling / reconstruction toolkit"};
    app.require_subcommand(1);

    // generate
    auto* generate = app.add_subcommand("generate", "Render a synthetic light field");
    std::string scene, out;
    int rows = 9, cols = 9, width = 128, height = 128;
    generate->add_option("--scene", scene, "scene spec JSON")->required();
    generate->add_option("--rows", rows);
    generate->add_option("--cols", cols);
    generate->add_option("--width", width);
    generate->add_option("--height", height);
    generate->add_option("--out", out, "output directory")->required();

    // sample
    auto* sample = app.add_subcommand("sample", "Subsample a dataset by pattern");
    std::string dataset, pattern = "level1";
    sample->add_option("--dataset", dataset, "dataset JSON")->required();
    sample->add_option("--pattern", pattern,
                       "row|col|checker|level1|level2|level3");
    sample->add_option("--out", out)->required();

    // plan
    auto* plan = app.add_subcommand("plan", "Print and validate a plan");
    std::string strategy = "hv", mask_file;
    plan->add_option("--pattern", pattern)->required();
    plan->add_option("--strategy", strategy, "hv|vh|omni|diag4|ldiag|rdiag");
    plan->add_option("--mask", mask_file, "mask file (else generated)");
    plan->add_option("--rows", rows);
    plan->add_option("--cols", cols);

    // reconstruct
    auto* reconstruct = app.add_subcommand("reconstruct", "Complete a sparse dataset");
    std::string interp = "linear";
    reconstruct->add_option("--dataset", dataset, "sparse dataset JSON")->required();
    reconstruct->add_option("--mask", mask_file)->required();
    reconstruct->add_option("--pattern", pattern)->required();
    reconstruct->add_option("--strategy", strategy);
    reconstruct->add_option("--interp", interp, "linear|shift|shift:B:R|ext:CMD");
    reconstruct->add_option("--out", out)->required();

    // evaluate
    auto* evaluate = app.add_subcommand("evaluate", "Score a reconstruction");
    std::string truth, mode = "synth";
    evaluate->add_option("--reconstructed", dataset)->required();
    evaluate->add_option("--truth", truth)->required();
    evaluate->add_option("--mask", mask_file)->required();
    evaluate->add_option("--mode", mode, "synth|all|central");
    evaluate->add_option("--out", out)->required();

    // sweep
    auto* sweep = app.add_subcommand("sweep", "Run a strategy/level cross product");
    std::string sweep_spec;
    int jobs = static_cast<int>(std::thread::hardware_concurrency());
    sweep->add_option("--spec", sweep_spec, "sweep spec JSON")->required();
    sweep->add_option("--jobs", jobs, "parallel combinations");
    sweep->add_option("--out", out)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*generate)
            cmd_generate(scene, rows, cols, width, height, out);
        else if (*sample)
            cmd_sample(dataset, pattern, out);
        else if (*plan)
            cmd_plan(pattern, strategy, mask_file, rows, cols);
        else if (*reconstruct)
            cmd_reconstruct(dataset, mask_file, pattern, strategy, interp, out);
        else if (*evaluate)
            cmd_evaluate(dataset, truth, mask_file, mode, out);
        else if (*sweep)
            cmd_sweep(sweep_spec, out, jobs);
    } catch (const std::exception& e) {
        std::cerr << json{{"error", e.what()}}.dump() << "\n";
        return 1;
    }
    return 0;
}
